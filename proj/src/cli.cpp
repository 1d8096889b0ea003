#include "ecd/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ecd/ecd_core.hpp"
#include "ecd/grid.hpp"
#include "ecd/majorization.hpp"
#include "ecd/montecarlo.hpp"
#include "ecd/ordering.hpp"
#include "ecd/scenarios.hpp"
#include "ecd/systems.hpp"

namespace ecd::cli {

namespace {

using nlohmann::json;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// All numeric output goes through this: nine significant digits, locale-free.
std::string fmt9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return std::string(buf);
}

// ---------------------------------------------------------------------------
// config json <-> RunConfig

[[noreturn]] void bad_config(const std::string& msg) {
    throw std::invalid_argument("config: " + msg);
}

void reject_unknown(const json& j, std::initializer_list<const char*> allowed,
                    const char* where) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* k : allowed) {
            if (it.key() == k) {
                known = true;
                break;
            }
        }
        if (!known)
            bad_config("unknown field \"" + it.key() + "\" in " + where);
    }
}

double as_number(const json& j, const std::string& name) {
    if (!j.is_number()) bad_config("field \"" + name + "\" must be a number");
    return j.get<double>();
}

std::vector<double> as_number_list(const json& j, const std::string& name) {
    std::vector<double> v;
    if (j.is_number()) {
        v.push_back(j.get<double>());
        return v;
    }
    if (!j.is_array()) bad_config("field \"" + name + "\" must be a number or an array of numbers");
    for (const auto& e : j) {
        if (!e.is_number()) bad_config("field \"" + name + "\" must contain only numbers");
        v.push_back(e.get<double>());
    }
    return v;
}

std::string as_string(const json& j, const std::string& name) {
    if (!j.is_string()) bad_config("field \"" + name + "\" must be a string");
    return j.get<std::string>();
}

SystemConfig system_config_from_json(const json& j, const char* where) {
    if (!j.is_object()) bad_config(std::string(where) + " must be an object");
    reject_unknown(j, {"alpha", "beta", "lambda"}, where);
    SystemConfig s;
    if (j.contains("alpha")) s.alpha = as_number_list(j.at("alpha"), "alpha");
    if (j.contains("beta")) s.beta = as_number_list(j.at("beta"), "beta");
    if (j.contains("lambda")) s.lambda = as_number_list(j.at("lambda"), "lambda");
    return s;
}

GridConfig grid_config_from_json(const json& j) {
    if (!j.is_object()) bad_config("\"grid\" must be an object");
    reject_unknown(j, {"min", "max", "count", "spacing"}, "grid");
    GridConfig g;
    if (j.contains("min")) g.min = as_number(j.at("min"), "grid.min");
    if (j.contains("max")) g.max = as_number(j.at("max"), "grid.max");
    if (j.contains("count")) {
        if (!j.at("count").is_number_integer())
            bad_config("field \"grid.count\" must be an integer");
        const auto c = j.at("count").get<long long>();
        if (c < 2) bad_config("grid.count must be at least 2");
        g.count = static_cast<std::size_t>(c);
    }
    if (j.contains("spacing")) {
        g.spacing = as_string(j.at("spacing"), "grid.spacing");
        if (g.spacing != "log" && g.spacing != "linear")
            bad_config("grid.spacing must be \"log\" or \"linear\"");
    }
    return g;
}

}  // namespace

RunConfig config_from_json(const json& j) {
    if (!j.is_object()) bad_config("top level must be an object");
    reject_unknown(j,
                   {"command", "alpha", "beta", "lambda", "x", "relation", "kind",
                    "a", "b", "grid", "which", "target", "vector", "n", "format",
                    "out_dir", "seed"},
                   "top level");
    RunConfig c;
    if (j.contains("command")) c.command = as_string(j.at("command"), "command");
    if (j.contains("alpha")) c.alpha = as_number(j.at("alpha"), "alpha");
    if (j.contains("beta")) c.beta = as_number(j.at("beta"), "beta");
    if (j.contains("lambda")) c.lambda = as_number(j.at("lambda"), "lambda");
    if (j.contains("x")) c.xs = as_number_list(j.at("x"), "x");
    if (j.contains("relation")) c.relation = as_string(j.at("relation"), "relation");
    if (j.contains("kind")) c.kind = as_string(j.at("kind"), "kind");
    if (j.contains("a")) c.a = system_config_from_json(j.at("a"), "\"a\"");
    if (j.contains("b")) c.b = system_config_from_json(j.at("b"), "\"b\"");
    if (j.contains("grid")) c.grid = grid_config_from_json(j.at("grid"));
    if (j.contains("which")) c.which = as_string(j.at("which"), "which");
    if (j.contains("target")) c.target = as_string(j.at("target"), "target");
    if (j.contains("vector")) c.vec = as_number_list(j.at("vector"), "vector");
    if (j.contains("n")) {
        if (!j.at("n").is_number_integer()) bad_config("field \"n\" must be an integer");
        const auto n = j.at("n").get<long long>();
        if (n < 1) bad_config("n must be positive");
        c.mc_n = static_cast<std::size_t>(n);
    }
    if (j.contains("format")) {
        c.format = as_string(j.at("format"), "format");
        if (c.format != "table" && c.format != "csv" && c.format != "json")
            bad_config("format must be \"table\", \"csv\" or \"json\"");
    }
    if (j.contains("out_dir")) c.out_dir = as_string(j.at("out_dir"), "out_dir");
    if (j.contains("seed")) {
        if (!j.at("seed").is_number_integer()) bad_config("field \"seed\" must be an integer");
        c.seed = j.at("seed").get<std::uint64_t>();
    }
    return c;
}

json config_to_json(const RunConfig& c) {
    json j;
    j["command"] = c.command;
    j["format"] = c.format;
    if (!c.out_dir.empty()) j["out_dir"] = c.out_dir;
    j["seed"] = c.seed;

    auto system_json = [](const SystemConfig& s) {
        json js;
        if (!s.alpha.empty()) js["alpha"] = s.alpha;
        if (!s.beta.empty()) js["beta"] = s.beta;
        if (!s.lambda.empty()) js["lambda"] = s.lambda;
        return js;
    };
    auto grid_json = [&]() {
        json jg;
        jg["min"] = c.grid->min;
        jg["max"] = c.grid->max;
        jg["count"] = static_cast<long long>(c.grid->count);
        jg["spacing"] = c.grid->spacing;
        return jg;
    };

    if (c.command == "dist") {
        j["alpha"] = c.alpha;
        j["beta"] = c.beta;
        j["lambda"] = c.lambda;
        j["x"] = c.xs;
    } else if (c.command == "order-check" || c.command == "mc-verify") {
        j["relation"] = c.relation;
        j["kind"] = c.kind;
        j["a"] = system_json(c.a);
        j["b"] = system_json(c.b);
        if (c.grid) j["grid"] = grid_json();
        if (c.command == "mc-verify") j["n"] = static_cast<long long>(c.mc_n);
    } else if (c.command == "examples") {
        j["which"] = c.which;
    } else if (c.command == "schur-scan") {
        j["target"] = c.target;
        j["vector"] = c.vec;
        j["alpha"] = c.alpha;
        j["beta"] = c.beta;
        j["lambda"] = c.lambda;
        if (c.grid) j["grid"] = grid_json();
    }
    return j;
}

namespace {

// ---------------------------------------------------------------------------
// shared command plumbing

ComponentSet build_components(const SystemConfig& sc, const char* label) {
    const std::size_t n =
        std::max({sc.alpha.size(), sc.beta.size(), sc.lambda.size()});
    if (n == 0)
        throw std::invalid_argument(std::string("system ") + label +
                                    ": no parameters given");
    auto pick = [&](const std::vector<double>& v, std::size_t i,
                    const char* pname) -> double {
        if (v.empty())
            throw std::invalid_argument(std::string("system ") + label +
                                        ": missing " + pname);
        if (v.size() == 1) return v[0];
        if (v.size() != n)
            throw std::invalid_argument(std::string("system ") + label + ": " +
                                        pname + " has " + std::to_string(v.size()) +
                                        " entries but another parameter has " +
                                        std::to_string(n));
        return v[i];
    };
    std::vector<ECDParams> comps;
    comps.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        comps.emplace_back(pick(sc.alpha, i, "alpha"), pick(sc.beta, i, "beta"),
                           pick(sc.lambda, i, "lambda"));
    return ComponentSet(comps);
}

SystemKind parse_kind(const std::string& s) {
    if (s == "series") return SystemKind::Series;
    if (s == "parallel") return SystemKind::Parallel;
    throw std::invalid_argument("kind must be \"series\" or \"parallel\", got \"" +
                                s + "\"");
}

Relation parse_relation(const std::string& s) {
    if (s == "st") return Relation::ST;
    if (s == "hr") return Relation::HR;
    if (s == "rh") return Relation::RH;
    if (s == "lr") return Relation::LR;
    throw std::invalid_argument(
        "relation must be one of \"st\", \"hr\", \"rh\", \"lr\", got \"" + s + "\"");
}

const char* relation_name(Relation r) {
    switch (r) {
        case Relation::ST: return "st";
        case Relation::HR: return "hr";
        case Relation::RH: return "rh";
        case Relation::LR: return "lr";
    }
    return "?";
}

const char* direction_name(Direction d) {
    switch (d) {
        case Direction::A_le_B: return "A_le_B";
        case Direction::B_le_A: return "B_le_A";
        case Direction::Neither: return "Neither";
    }
    return "?";
}

Grid grid_from_config(const GridConfig& gc) {
    if (!(gc.min > 0.0) || !(gc.max > gc.min))
        throw std::invalid_argument("grid: need 0 < min < max");
    if (gc.spacing == "linear") return linspace_grid(gc.min, gc.max, gc.count);
    return logspace_grid(gc.min, gc.max, gc.count);
}

Grid resolve_grid(const std::optional<GridConfig>& gc, const SystemSpec& a,
                  const SystemSpec& b, std::size_t default_count) {
    if (!gc) return default_grid(a, b, default_count);
    return grid_from_config(*gc);
}

std::string out_path(const RunConfig& cfg, const std::string& name) {
    std::string dir = cfg.out_dir;
    if (dir.empty()) {
        if (const char* env = std::getenv("ECD_OUT_DIR")) dir = env;
    }
    if (dir.empty()) dir = ".";
    std::filesystem::create_directories(dir);
    if (dir.back() != '/') dir += '/';
    return dir + name;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << content;
    if (!f) throw std::runtime_error("failed while writing " + path);
}

json point_witnesses_json(const std::vector<PointWitness>& ws) {
    json arr = json::array();
    for (const auto& w : ws)
        arr.push_back({{"x", w.x}, {"value_a", w.value_a}, {"value_b", w.value_b}});
    return arr;
}

json triple_witnesses_json(const std::vector<TripleWitness>& ws) {
    json arr = json::array();
    for (const auto& w : ws)
        arr.push_back({{"x1", w.x1},
                       {"x2", w.x2},
                       {"x3", w.x3},
                       {"r1", w.r1},
                       {"r2", w.r2},
                       {"r3", w.r3}});
    return arr;
}

// ---------------------------------------------------------------------------
// dist

int cmd_dist(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.xs.empty())
        throw std::invalid_argument("dist: at least one --x value is required");
    const ECDParams p(cfg.alpha, cfg.beta, cfg.lambda);

    struct Row {
        double x, F, S, f, h, rh;
    };
    std::vector<Row> rows;
    rows.reserve(cfg.xs.size());
    bool hazard_overflowed = false;
    for (double x : cfg.xs) {
        Row r{x, kNaN, kNaN, kNaN, kNaN, kNaN};
        r.F = cdf(p, x);
        r.S = sf(p, x);
        if (x > 0.0) {
            r.f = pdf(p, x);
            r.rh = reversed_hazard(p, x);
            try {
                r.h = hazard(p, x);
            } catch (const std::overflow_error&) {
                hazard_overflowed = true;  // survival underflowed; ratio meaningless
            }
        }
        rows.push_back(r);
    }
    if (hazard_overflowed)
        err << "warning: hazard omitted where the survival function underflows\n";

    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& r : rows)
            arr.push_back({{"x", r.x},
                           {"cdf", r.F},
                           {"sf", r.S},
                           {"pdf", r.f},
                           {"hazard", r.h},
                           {"rev_hazard", r.rh}});
        json doc;
        doc["config"] = config_to_json(cfg);
        doc["rows"] = arr;
        out << doc.dump(2) << "\n";
        return 0;
    }
    if (cfg.format == "csv") {
        out << "x,cdf,sf,pdf,hazard,rev_hazard\n";
        for (const auto& r : rows)
            out << fmt9(r.x) << ',' << fmt9(r.F) << ',' << fmt9(r.S) << ','
                << fmt9(r.f) << ',' << fmt9(r.h) << ',' << fmt9(r.rh) << "\n";
        return 0;
    }
    out << "ECD(alpha=" << fmt9(cfg.alpha) << ", beta=" << fmt9(cfg.beta)
        << ", lambda=" << fmt9(cfg.lambda) << ")\n";
    const char* head = "x            cdf          sf           pdf          "
                       "hazard       rev_hazard";
    out << head << "\n";
    for (const auto& r : rows) {
        char line[160];
        std::snprintf(line, sizeof line, "%-12.6g %-12.6g %-12.6g %-12.6g %-12.6g %-12.6g",
                      r.x, r.F, r.S, r.f, r.h, r.rh);
        out << line << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// order-check

void require_equal_counts(const ComponentSet& a, const ComponentSet& b) {
    if (a.components.size() != b.components.size())
        throw std::invalid_argument(
            "systems must have the same number of components (got " +
            std::to_string(a.components.size()) + " and " +
            std::to_string(b.components.size()) + ")");
}

OrderingVerdict run_order_check(Relation rel, const SystemSpec& a,
                                const SystemSpec& b, const Grid& grid) {
    switch (rel) {
        case Relation::ST: return check_st(a, b, grid);
        case Relation::HR: return check_hr(a, b, grid);
        case Relation::RH: return check_rh(a, b, grid);
        case Relation::LR: return check_lr(a, b, grid);
    }
    throw std::logic_error("unreachable");
}

void print_verdict_human(const OrderingVerdict& v, const Grid& grid,
                         std::ostream& out) {
    out << "relation:  " << relation_name(v.relation) << "\n";
    out << "direction: " << direction_name(v.direction);
    if (v.degenerate_equal) out << "  (both directions hold: curves coincide)";
    out << "\n";
    out << "grid:      " << grid.points.size() << " points on ["
        << fmt9(grid.points.front()) << ", " << fmt9(grid.points.back())
        << "]\n";
    if (!v.saturated_points.empty())
        out << "excluded:  " << v.saturated_points.size()
            << " saturated points (both tails below floating-point range)\n";
    for (const auto& w : v.point_witnesses)
        out << "witness:   x=" << fmt9(w.x) << "  value_a=" << fmt9(w.value_a)
            << "  value_b=" << fmt9(w.value_b) << "\n";
    for (const auto& w : v.triple_witnesses)
        out << "witness:   ratio at x=(" << fmt9(w.x1) << ", " << fmt9(w.x2)
            << ", " << fmt9(w.x3) << ") = (" << fmt9(w.r1) << ", " << fmt9(w.r2)
            << ", " << fmt9(w.r3) << ")\n";
}

int cmd_order_check(const RunConfig& cfg, std::ostream& out) {
    const ComponentSet ca = build_components(cfg.a, "a");
    const ComponentSet cb = build_components(cfg.b, "b");
    require_equal_counts(ca, cb);
    const SystemKind kind = parse_kind(cfg.kind);
    const SystemSpec sa{ca, kind}, sb{cb, kind};
    const Relation rel = parse_relation(cfg.relation);
    const Grid grid = resolve_grid(cfg.grid, sa, sb, 400);

    const OrderingVerdict v = run_order_check(rel, sa, sb, grid);

    if (cfg.format == "json") {
        json doc;
        doc["config"] = config_to_json(cfg);
        doc["relation"] = relation_name(v.relation);
        doc["direction"] = direction_name(v.direction);
        doc["degenerate_equal"] = v.degenerate_equal;
        doc["point_witnesses"] = point_witnesses_json(v.point_witnesses);
        doc["triple_witnesses"] = triple_witnesses_json(v.triple_witnesses);
        doc["saturated_points"] = v.saturated_points;
        out << doc.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        // one row per grid point with the curves being compared
        const bool use_sf = (rel == Relation::ST || rel == Relation::HR);
        out << "x,value_a,value_b\n";
        for (double x : grid.points) {
            double va, vb;
            if (rel == Relation::LR) {
                va = std::exp(system_log_pdf(sa, x));
                vb = std::exp(system_log_pdf(sb, x));
            } else {
                const SystemLogs la = system_logs(sa, x), lb = system_logs(sb, x);
                va = use_sf ? std::exp(la.log_sf) : std::exp(la.log_cdf);
                vb = use_sf ? std::exp(lb.log_sf) : std::exp(lb.log_cdf);
            }
            out << fmt9(x) << ',' << fmt9(va) << ',' << fmt9(vb) << "\n";
        }
    } else {
        print_verdict_human(v, grid, out);
    }
    return v.direction == Direction::Neither ? 2 : 0;
}

// ---------------------------------------------------------------------------
// schur-scan

SchurTarget parse_target(const std::string& s) {
    if (s == "series-sf-lambda") return SchurTarget::SeriesSF_lambda;
    if (s == "parallel-cdf-lambda") return SchurTarget::ParallelCDF_lambda;
    if (s == "parallel-cdf-beta") return SchurTarget::ParallelCDF_beta;
    if (s == "series-sf-alpha") return SchurTarget::SeriesSF_alpha;
    throw std::invalid_argument(
        "target must be one of series-sf-lambda, parallel-cdf-lambda, "
        "parallel-cdf-beta, series-sf-alpha; got \"" +
        s + "\"");
}

const char* schur_verdict_name(SchurVerdict v) {
    switch (v) {
        case SchurVerdict::SchurConvex: return "SchurConvex";
        case SchurVerdict::SchurConcave: return "SchurConcave";
        case SchurVerdict::Indeterminate: return "Indeterminate";
    }
    return "?";
}

int cmd_schur_scan(const RunConfig& cfg, std::ostream& out) {
    if (cfg.vec.size() < 2)
        throw std::invalid_argument(
            "schur-scan: --vector needs at least two entries");
    const SchurTarget target = parse_target(cfg.target);
    const ParamVector pv(cfg.vec);
    const SchurFixed fixed{cfg.alpha, cfg.beta, cfg.lambda};
    const Grid grid =
        cfg.grid ? grid_from_config(*cfg.grid) : linspace_grid(0.1, 3.0, 30);

    const SchurReport rep = schur_scan(target, fixed, pv, grid);

    if (cfg.format == "json") {
        json doc;
        doc["config"] = config_to_json(cfg);
        doc["verdict"] = schur_verdict_name(rep.verdict);
        if (rep.worst_violation) {
            doc["worst_violation"] = {{"i", rep.worst_violation->i},
                                      {"j", rep.worst_violation->j},
                                      {"x", rep.worst_violation->x},
                                      {"delta", rep.worst_violation->delta}};
        } else {
            doc["worst_violation"] = nullptr;
        }
        out << doc.dump(2) << "\n";
    } else {
        out << "target:  " << cfg.target << "\n";
        out << "vector:  (";
        for (std::size_t i = 0; i < cfg.vec.size(); ++i)
            out << (i ? ", " : "") << fmt9(cfg.vec[i]);
        out << ")\n";
        out << "verdict: " << schur_verdict_name(rep.verdict) << "\n";
        if (rep.worst_violation) {
            const auto& w = *rep.worst_violation;
            out << "worst minority-sign pair: (i=" << w.i << ", j=" << w.j
                << ") at x=" << fmt9(w.x) << ", delta=" << fmt9(w.delta) << "\n";
        } else if (rep.verdict == SchurVerdict::Indeterminate) {
            out << "note: every coordinate pair is tied; the criterion is "
                   "uninformative here\n";
        }
    }
    return rep.verdict == SchurVerdict::Indeterminate ? 2 : 0;
}

// ---------------------------------------------------------------------------
// mc-verify

int cmd_mc_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    constexpr std::size_t kMinDraws = 10000;
    const ComponentSet ca = build_components(cfg.a, "a");
    const ComponentSet cb = build_components(cfg.b, "b");
    require_equal_counts(ca, cb);
    const SystemKind kind = parse_kind(cfg.kind);
    const SystemSpec sa{ca, kind}, sb{cb, kind};

    std::size_t n = cfg.mc_n;
    if (n < kMinDraws) {
        err << "warning: n=" << n << " is below the minimum of " << kMinDraws
            << "; using " << kMinDraws << "\n";
        n = kMinDraws;
    }
    const Grid grid = resolve_grid(cfg.grid, sa, sb, 10);

    const OrderingVerdict rep = empirical_st_check(sa, sb, grid, n, cfg.seed);

    // the same batches the check used (identical seeds give identical draws),
    // tabulated against the analytic survival curves
    const SampleBatch da = sample_system(sa, n, cfg.seed);
    const SampleBatch db = sample_system(sb, n, cfg.seed + 1);
    const double dn = static_cast<double>(n);
    auto empirical_sf = [dn](const SampleBatch& batch, double x) {
        const auto c = std::count_if(batch.draws.begin(), batch.draws.end(),
                                     [x](double d) { return d > x; });
        return static_cast<double>(c) / dn;
    };

    std::size_t agree = 0;
    json rows = json::array();
    std::ostringstream table;
    table << "x            sf_a(exact)  sf_a(mc)     sf_b(exact)  sf_b(mc)     "
             "band         ok\n";
    for (double x : grid.points) {
        const double ea = std::exp(system_logs(sa, x).log_sf);
        const double eb = std::exp(system_logs(sb, x).log_sf);
        const double ma = empirical_sf(da, x);
        const double mb = empirical_sf(db, x);
        const double band_a = 3.0 * std::sqrt(std::max(ma * (1.0 - ma), 1.0 / dn) / dn);
        const double band_b = 3.0 * std::sqrt(std::max(mb * (1.0 - mb), 1.0 / dn) / dn);
        const bool ok = std::abs(ma - ea) <= band_a && std::abs(mb - eb) <= band_b;
        if (ok) ++agree;
        char line[200];
        std::snprintf(line, sizeof line,
                      "%-12.6g %-12.6g %-12.6g %-12.6g %-12.6g %-12.6g %s", x, ea,
                      ma, eb, mb, std::max(band_a, band_b), ok ? "yes" : "NO");
        table << line << "\n";
        rows.push_back({{"x", x},
                        {"sf_a_exact", ea},
                        {"sf_a_mc", ma},
                        {"sf_b_exact", eb},
                        {"sf_b_mc", mb},
                        {"band_a", band_a},
                        {"band_b", band_b},
                        {"agree", ok}});
    }

    if (cfg.format == "json") {
        json doc;
        doc["config"] = config_to_json(cfg);
        doc["n"] = static_cast<long long>(n);
        doc["direction"] = direction_name(rep.direction);
        doc["degenerate_equal"] = rep.degenerate_equal;
        doc["agree_points"] = static_cast<long long>(agree);
        doc["total_points"] = static_cast<long long>(grid.points.size());
        doc["point_witnesses"] = point_witnesses_json(rep.point_witnesses);
        doc["rows"] = rows;
        out << doc.dump(2) << "\n";
    } else {
        out << "draws per system: " << n << "  (seed " << cfg.seed << ")\n";
        out << table.str();
        out << "empirical direction: " << direction_name(rep.direction);
        if (rep.degenerate_equal) out << "  (no separation beyond 3-sigma anywhere)";
        out << "\n";
        out << "analytic agreement: " << agree << "/" << grid.points.size()
            << " points inside the 3-sigma band\n";
        for (const auto& w : rep.point_witnesses)
            out << "separated witness: x=" << fmt9(w.x) << "  sf_a=" << fmt9(w.value_a)
                << "  sf_b=" << fmt9(w.value_b) << "\n";
    }
    return rep.direction == Direction::Neither ? 2 : 0;
}

// ---------------------------------------------------------------------------
// examples: the published scenarios, written as CSV curves + JSON summaries

struct ValueCheck {
    std::string label;
    double x = 0.0;
    double reference = 0.0;
    double computed = 0.0;
};

json value_checks_json(const std::vector<ValueCheck>& checks) {
    json arr = json::array();
    for (const auto& c : checks) {
        const double abs_dev = std::abs(c.computed - c.reference);
        arr.push_back({{"label", c.label},
                       {"x", c.x},
                       {"reference", c.reference},
                       {"computed", c.computed},
                       {"abs_dev", abs_dev},
                       {"rel_dev", abs_dev / std::abs(c.reference)}});
    }
    return arr;
}

// survival ratio sf_b / sf_a at x, in log space
double sf_ratio(const SystemSpec& a, const SystemSpec& b, double x) {
    return std::exp(system_logs(b, x).log_sf - system_logs(a, x).log_sf);
}

double cdf_ratio(const SystemSpec& a, const SystemSpec& b, double x) {
    return std::exp(system_logs(b, x).log_cdf - system_logs(a, x).log_cdf);
}

// count sign changes of consecutive differences, ignoring sub-tolerance wiggle
std::vector<double> direction_change_points(const std::vector<double>& xs,
                                            const std::vector<double>& ys) {
    std::vector<double> changes;
    int last_sign = 0;
    for (std::size_t i = 1; i < ys.size(); ++i) {
        const double d = ys[i] - ys[i - 1];
        const double tol = 1e-9 * std::max(std::abs(ys[i]), std::abs(ys[i - 1]));
        if (std::abs(d) <= tol) continue;
        const int sign = d > 0 ? 1 : -1;
        if (last_sign != 0 && sign != last_sign) changes.push_back(xs[i]);
        last_sign = sign;
    }
    return changes;
}

int write_example(const RunConfig& cfg, std::ostream& out) {
    using namespace ecd::scenarios;
    const std::string which = cfg.which;
    json summary;
    summary["config"] = config_to_json(cfg);
    std::string csv_name, summary_name;
    std::string csv;

    if (which == "1") {
        // two heterogeneous series systems; ratio of survival functions,
        // scanned for alpha = 0.7 and alpha = 1.5
        csv_name = "example1.csv";
        summary_name = "example1_summary.json";
        const Grid g = linspace_grid(0.05, 3.0, 200);
        csv = "x,ratio_alpha_0.7,ratio_alpha_1.5\n";
        std::vector<double> r07, r15;
        for (double x : g.points) {
            const double a07 = sf_ratio(s1_x(0.7), s1_y(0.7), x);
            const double a15 = sf_ratio(s1_x(1.5), s1_y(1.5), x);
            r07.push_back(a07);
            r15.push_back(a15);
            csv += fmt9(x) + "," + fmt9(a07) + "," + fmt9(a15) + "\n";
        }
        std::vector<ValueCheck> checks;
        for (const auto& ref : kF1Refs) {
            checks.push_back({"ratio(alpha=" + fmt9(ref.alpha) + ")", ref.x,
                              ref.reference,
                              sf_ratio(s1_x(ref.alpha), s1_y(ref.alpha), ref.x)});
        }
        summary["values"] = value_checks_json(checks);
        // the ordering verdicts on the default (quantile-bounded) grid; past
        // that range both survival curves underflow to indistinguishable tails
        const OrderingVerdict st07 =
            check_st(s1_x(0.7), s1_y(0.7), default_grid(s1_x(0.7), s1_y(0.7)));
        const OrderingVerdict st15 =
            check_st(s1_x(1.5), s1_y(1.5), default_grid(s1_x(1.5), s1_y(1.5)));
        summary["st_direction_alpha_0.7"] = direction_name(st07.direction);
        summary["st_direction_alpha_1.5"] = direction_name(st15.direction);
        summary["notes"] = json::array(
            {"ratio = sf of the second series system over sf of the first",
             "A_le_B means the first system is stochastically smaller, i.e. the "
             "ratio stays >= 1",
             "reference values are quoted to the precision they were published at"});
    } else if (which == "2") {
        csv_name = "example2.csv";
        summary_name = "example2_summary.json";
        const Grid g = linspace_grid(0.05, 3.0, 200);
        csv = "x,ratio_alpha_0.7,ratio_alpha_1.5\n";
        for (double x : g.points)
            csv += fmt9(x) + "," + fmt9(sf_ratio(s2_x(0.7), s2_y(0.7), x)) + "," +
                   fmt9(sf_ratio(s2_x(1.5), s2_y(1.5), x)) + "\n";
        std::vector<ValueCheck> checks;
        for (const auto& ref : kF2Refs)
            checks.push_back({"ratio(alpha=" + fmt9(ref.alpha) + ")", ref.x,
                              ref.reference,
                              sf_ratio(s2_x(ref.alpha), s2_y(ref.alpha), ref.x)});
        summary["values"] = value_checks_json(checks);
        // scan a fine grid around the quoted points and record monotonicity
        const Grid fine = linspace_grid(1.94, 1.96, 401);
        std::vector<double> ys;
        for (double x : fine.points) ys.push_back(sf_ratio(s2_x(0.7), s2_y(0.7), x));
        summary["direction_changes_near_quoted_points"] =
            direction_change_points(fine.points, ys);
        summary["notes"] = json::array(
            {"the survival ratio here reaches ~6e5; tiny relative wiggles in the "
             "quoted digits are below the achievable cancellation error of "
             "double-precision evaluation",
             "computed values use log-space evaluation throughout"});
    } else if (which == "3") {
        csv_name = "example3.csv";
        summary_name = "example3_summary.json";
        const Grid g = logspace_grid(0.005, 14.0, 500);
        csv = "x,cdf_ratio,sf_ratio\n";
        std::vector<double> xs, f3s, f4s;
        for (double x : g.points) {
            const double f3 = cdf_ratio(s3_x(), s3_y(), x);
            const double f4 = sf_ratio(s3_x(), s3_y(), x);
            xs.push_back(x);
            f3s.push_back(f3);
            f4s.push_back(f4);
            csv += fmt9(x) + "," + fmt9(f3) + "," + fmt9(f4) + "\n";
        }
        std::vector<ValueCheck> checks;
        for (const auto& ref : kF3Refs)
            checks.push_back(
                {"cdf_ratio", ref.x, ref.reference, cdf_ratio(s3_x(), s3_y(), ref.x)});
        for (const auto& ref : kF4Refs)
            checks.push_back(
                {"sf_ratio", ref.x, ref.reference, sf_ratio(s3_x(), s3_y(), ref.x)});
        summary["values"] = value_checks_json(checks);
        summary["cdf_ratio_direction_changes"] = direction_change_points(xs, f3s);
        summary["sf_ratio_direction_changes"] = direction_change_points(xs, f4s);
        summary["notes"] = json::array(
            {"both ratios change direction inside (0, 14): neither distribution "
             "nor survival ordering holds between these parallel systems",
             "computed values use log-space evaluation throughout"});
    } else if (which == "4" || which == "fig2") {
        csv_name = which == "4" ? "example4.csv" : "fig2.csv";
        summary_name = which == "4" ? "example4_summary.json" : "fig2_summary.json";
        const SystemSpec sx = s4_x(), sy = s4_y();
        const Grid g = default_grid(sx, sy, 400);
        csv = "x,sf_a,sf_b,diff\n";
        double max_diff = -std::numeric_limits<double>::infinity();
        double min_diff = std::numeric_limits<double>::infinity();
        for (double x : g.points) {
            const double sfx = std::exp(system_logs(sx, x).log_sf);
            const double sfy = std::exp(system_logs(sy, x).log_sf);
            const double diff = sfx - sfy;
            max_diff = std::max(max_diff, diff);
            min_diff = std::min(min_diff, diff);
            csv += fmt9(x) + "," + fmt9(sfx) + "," + fmt9(sfy) + "," + fmt9(diff) +
                   "\n";
        }
        summary["max_diff"] = max_diff;
        summary["min_diff"] = min_diff;
        summary["sf_a_never_exceeds_sf_b_within_1e-12"] = (max_diff <= 1e-12);
        summary["notes"] = json::array(
            {"series systems with shape vectors (0.4, 1.0, 2.2) and "
             "(0.2, 1.0, 2.4), common beta=3, lambda=2",
             "diff = sf_a - sf_b; nonpositive diff means the first system is "
             "stochastically smaller"});
    } else if (which == "fig1") {
        csv_name = "fig1.csv";
        summary_name = "fig1_summary.json";
        const Grid g = linspace_grid(0.01, 2.0, 200);
        csv = "x,cdf_ratio_alpha_0.7,cdf_ratio_alpha_1.5\n";
        std::vector<double> xs, r07, r15;
        for (double x : g.points) {
            const double a07 = cdf_ratio(s2_x(0.7), s2_y(0.7), x);
            const double a15 = cdf_ratio(s2_x(1.5), s2_y(1.5), x);
            xs.push_back(x);
            r07.push_back(a07);
            r15.push_back(a15);
            csv += fmt9(x) + "," + fmt9(a07) + "," + fmt9(a15) + "\n";
        }
        auto nondecreasing = [](const std::vector<double>& v) {
            for (std::size_t i = 1; i < v.size(); ++i) {
                const double tol = 1e-9 * std::max(std::abs(v[i]), std::abs(v[i - 1]));
                if (v[i] < v[i - 1] - tol) return false;
            }
            return true;
        };
        summary["nondecreasing_alpha_0.7"] = nondecreasing(r07);
        summary["nondecreasing_alpha_1.5"] = nondecreasing(r15);
        summary["notes"] = json::array(
            {"ratio of the parallel-system distribution functions from the "
             "second scenario, scanned over (0, 2]"});
    } else {
        throw std::invalid_argument(
            "examples: which must be one of 1, 2, 3, 4, fig1, fig2; got \"" +
            which + "\"");
    }

    const std::string csv_path = out_path(cfg, csv_name);
    const std::string summary_path = out_path(cfg, summary_name);
    write_text_file(csv_path, csv);
    write_text_file(summary_path, summary.dump(2) + "\n");
    out << "wrote " << csv_path << "\n";
    out << "wrote " << summary_path << "\n";
    return 0;
}

int cmd_examples(const RunConfig& cfg, std::ostream& out) {
    if (cfg.which == "all") {
        for (const char* w : {"1", "2", "3", "4", "fig1", "fig2"}) {
            RunConfig sub = cfg;
            sub.which = w;
            write_example(sub, out);
        }
        return 0;
    }
    return write_example(cfg, out);
}

}  // namespace

// ---------------------------------------------------------------------------

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
    try {
        RunConfig cfg;

        // pass 1: locate --config so flags parsed afterwards override the file
        for (int i = 1; i < argc; ++i) {
            const std::string arg = argv[i];
            std::string path;
            if (arg == "--config" && i + 1 < argc)
                path = argv[i + 1];
            else if (arg.rfind("--config=", 0) == 0)
                path = arg.substr(9);
            if (path.empty()) continue;
            std::ifstream f(path);
            if (!f) throw std::runtime_error("config: cannot open " + path);
            json j = json::parse(f);
            // summary files embed their effective config; accept them directly
            if (j.is_object() && j.contains("config") && !j.contains("command"))
                j = j.at("config");
            cfg = config_from_json(j);
        }

        CLI::App app{"exponentiated-Chen system lifetimes: distributions, "
                     "orderings, majorization scans"};
        app.fallthrough(true);
        std::string config_path;
        app.add_option("--config", config_path, "JSON config file; flags override it");
        app.add_option("--format", cfg.format, "output format: table, csv or json")
            ->check(CLI::IsMember({"table", "csv", "json"}));
        app.add_option("--out-dir", cfg.out_dir,
                       "directory for generated files (default: $ECD_OUT_DIR or .)");
        app.add_option("--seed", cfg.seed, "seed for the deterministic generator");

        // Every option below is registered both on its subcommand and on the
        // top-level app, bound to the same RunConfig field: a run driven by
        // --config alone (command in the file) can still override any value
        // with plain flags.
        GridConfig gflags;
        bool gmin_set = false, gmax_set = false, gcount_set = false,
             gspacing_set = false;
        auto add_grid_flags = [&](CLI::App* a) {
            a->add_option("--grid-min", gflags.min, "grid lower endpoint")
                ->each([&](const std::string&) { gmin_set = true; });
            a->add_option("--grid-max", gflags.max, "grid upper endpoint")
                ->each([&](const std::string&) { gmax_set = true; });
            a->add_option("--grid-count", gflags.count, "number of grid points")
                ->each([&](const std::string&) { gcount_set = true; });
            a->add_option("--grid-spacing", gflags.spacing, "log or linear")
                ->check(CLI::IsMember({"log", "linear"}))
                ->each([&](const std::string&) { gspacing_set = true; });
        };
        auto add_system_flags = [&](CLI::App* a) {
            a->add_option("--kind", cfg.kind, "series or parallel")
                ->check(CLI::IsMember({"series", "parallel"}));
            a->add_option("--a-alpha", cfg.a.alpha, "first system alpha values")->delimiter(',');
            a->add_option("--a-beta", cfg.a.beta, "first system beta values")->delimiter(',');
            a->add_option("--a-lambda", cfg.a.lambda, "first system lambda values")->delimiter(',');
            a->add_option("--b-alpha", cfg.b.alpha, "second system alpha values")->delimiter(',');
            a->add_option("--b-beta", cfg.b.beta, "second system beta values")->delimiter(',');
            a->add_option("--b-lambda", cfg.b.lambda, "second system lambda values")->delimiter(',');
        };
        auto add_dist_flags = [&](CLI::App* a) {
            a->add_option("--alpha", cfg.alpha, "shape alpha > 0");
            a->add_option("--beta", cfg.beta, "shape beta > 0");
            a->add_option("--lambda", cfg.lambda, "rate lambda > 0");
            a->add_option("--x", cfg.xs, "evaluation points (repeatable)")->delimiter(',');
        };
        auto add_relation_flag = [&](CLI::App* a) {
            a->add_option("--relation", cfg.relation, "st, hr, rh or lr")
                ->check(CLI::IsMember({"st", "hr", "rh", "lr"}));
        };
        auto add_schur_flags = [&](CLI::App* a) {
            a->add_option("--target", cfg.target,
                          "series-sf-lambda, parallel-cdf-lambda, "
                          "parallel-cdf-beta or series-sf-alpha");
            a->add_option("--vector", cfg.vec, "parameter vector to perturb")->delimiter(',');
        };
        auto add_mc_flags = [&](CLI::App* a) {
            a->add_option("--n", cfg.mc_n, "draws per system (minimum 10000)");
        };

        CLI::App* dist = app.add_subcommand("dist", "evaluate one component distribution");
        dist->fallthrough(true);
        add_dist_flags(dist);

        CLI::App* order = app.add_subcommand(
            "order-check", "compare two systems under a stochastic order");
        order->fallthrough(true);
        add_relation_flag(order);
        add_system_flags(order);
        add_grid_flags(order);

        CLI::App* ex = app.add_subcommand(
            "examples", "reproduce the published scenarios and figure data");
        ex->fallthrough(true);
        ex->add_option("which", cfg.which, "1, 2, 3, 4, fig1, fig2 or all");

        CLI::App* schur = app.add_subcommand(
            "schur-scan", "numerical Schur-convexity scan of a system functional");
        schur->fallthrough(true);
        add_schur_flags(schur);
        add_dist_flags(schur);  // alpha/beta/lambda act as the fixed parameters
        add_grid_flags(schur);

        CLI::App* mc = app.add_subcommand(
            "mc-verify", "Monte Carlo check of the usual stochastic order");
        mc->fallthrough(true);
        add_mc_flags(mc);
        add_system_flags(mc);
        add_grid_flags(mc);

        // top-level copies for config-driven runs (no subcommand on the argv)
        add_dist_flags(&app);
        add_relation_flag(&app);
        add_system_flags(&app);
        add_grid_flags(&app);
        add_schur_flags(&app);
        add_mc_flags(&app);
        app.add_option("--which", cfg.which, "examples selector (with --config)");

        try {
            app.parse(argc, argv);
        } catch (const CLI::CallForHelp&) {
            out << app.help();
            return 0;
        } catch (const CLI::ParseError& e) {
            err << "error: " << e.what() << "\n";
            return 1;
        }

        for (CLI::App* sub : {dist, order, ex, schur, mc})
            if (sub->parsed()) cfg.command = sub->get_name();

        if (gmin_set || gmax_set || gcount_set || gspacing_set) {
            GridConfig g = cfg.grid.value_or(GridConfig{});
            if (gmin_set) g.min = gflags.min;
            if (gmax_set) g.max = gflags.max;
            if (gcount_set) g.count = gflags.count;
            if (gspacing_set) g.spacing = gflags.spacing;
            cfg.grid = g;
        }

        if (cfg.command.empty()) {
            err << "error: no command given; see --help\n";
            return 1;
        }
        if (cfg.command == "dist") return cmd_dist(cfg, out, err);
        if (cfg.command == "order-check") return cmd_order_check(cfg, out);
        if (cfg.command == "examples") return cmd_examples(cfg, out);
        if (cfg.command == "schur-scan") return cmd_schur_scan(cfg, out);
        if (cfg.command == "mc-verify") return cmd_mc_verify(cfg, out, err);
        err << "error: unknown command \"" << cfg.command << "\"\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace ecd::cli
