#include "hhset/config.hpp"

#include "hhset/errors.hpp"
#include "json_io.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace hhset {

using detail::json;

namespace {

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where)
{
    for (const auto& [key, value] : obj.items()) {
        if (!allowed.contains(key)) {
            throw ConfigError("unknown field '" + key + "' in " + where);
        }
    }
}

const json& require_object(const json& j, const std::string& where)
{
    if (!j.is_object()) {
        throw ConfigError(where + " must be an object");
    }
    return j;
}

double read_number(const json& obj, const char* key, double fallback, const std::string& where)
{
    if (!obj.contains(key)) {
        return fallback;
    }
    const auto& v = obj.at(key);
    if (!v.is_number()) {
        throw ConfigError(where + "." + key + " must be a number");
    }
    return v.get<double>();
}

std::uint64_t read_count(const json& obj, const char* key, std::uint64_t fallback,
                         const std::string& where)
{
    if (!obj.contains(key)) {
        return fallback;
    }
    const auto& v = obj.at(key);
    if (!v.is_number_unsigned()) {
        throw ConfigError(where + "." + key + " must be a non-negative integer");
    }
    return v.get<std::uint64_t>();
}

std::string read_string(const json& obj, const char* key, const std::string& fallback,
                        const std::string& where)
{
    if (!obj.contains(key)) {
        return fallback;
    }
    const auto& v = obj.at(key);
    if (!v.is_string()) {
        throw ConfigError(where + "." + key + " must be a string");
    }
    return v.get<std::string>();
}

Vec2 read_vec2(const json& obj, const char* key, Vec2 fallback, const std::string& where)
{
    if (!obj.contains(key)) {
        return fallback;
    }
    const auto& v = obj.at(key);
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
        throw ConfigError(where + "." + key + " must be a pair of numbers");
    }
    return {v[0].get<double>(), v[1].get<double>()};
}

Range read_range(const json& obj, const char* key, Range fallback, const std::string& where)
{
    if (!obj.contains(key)) {
        return fallback;
    }
    const auto& v = obj.at(key);
    if (v.is_number()) {
        return {v.get<double>(), v.get<double>()};
    }
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
        throw ConfigError(where + "." + key + " must be a number or [min, max]");
    }
    return {v[0].get<double>(), v[1].get<double>()};
}

FamilySpec parse_family(const json& j, const std::string& where)
{
    require_object(j, where);
    reject_unknown(j, {"family", "alpha", "beta", "K", "v", "w", "a", "b", "grid_size"}, where);
    if (!j.contains("family")) {
        throw ConfigError(where + ".family is required");
    }
    FamilySpec f;
    f.family = parse_family_kind(read_string(j, "family", "", where));
    f.alpha = read_number(j, "alpha", f.alpha, where);
    f.beta = read_number(j, "beta", f.beta, where);
    f.K = read_number(j, "K", f.K, where);
    f.v = read_vec2(j, "v", f.v, where);
    f.w = read_vec2(j, "w", f.w, where);
    if (j.contains("a")) {
        f.a = read_number(j, "a", 0.0, where);
    }
    if (j.contains("b")) {
        f.b = read_number(j, "b", 0.0, where);
    }
    f.grid_size = read_count(j, "grid_size", f.grid_size, where);
    return f;
}

json family_json(const FamilySpec& f)
{
    json j;
    j["family"] = to_string(f.family);
    j["alpha"] = f.alpha;
    j["beta"] = f.beta;
    j["K"] = f.K;
    j["v"] = {f.v[0], f.v[1]};
    j["w"] = {f.w[0], f.w[1]};
    if (f.a) {
        j["a"] = *f.a;
    }
    if (f.b) {
        j["b"] = *f.b;
    }
    j["grid_size"] = f.grid_size;
    return j;
}

ConvexityGrid parse_grid(const json& j)
{
    const std::string where = "grid";
    require_object(j, where);
    reject_unknown(j, {"axis_points", "random_pairs", "t_values", "sampling"}, where);
    ConvexityGrid g;
    g.axis_points = read_count(j, "axis_points", g.axis_points, where);
    g.random_pairs = read_count(j, "random_pairs", g.random_pairs, where);
    const auto sampling = read_string(j, "sampling", "stratified", where);
    if (sampling == "stratified") {
        g.sampling = GridSampling::stratified;
    } else if (sampling == "seeded-random") {
        g.sampling = GridSampling::seeded_random;
    } else {
        throw ConfigError("grid.sampling must be \"stratified\" or \"seeded-random\"");
    }
    if (j.contains("t_values")) {
        const auto& t = j.at("t_values");
        if (!t.is_array()) {
            throw ConfigError("grid.t_values must be a list of numbers");
        }
        g.t_values.clear();
        for (const auto& e : t) {
            if (!e.is_number()) {
                throw ConfigError("grid.t_values must be a list of numbers");
            }
            g.t_values.push_back(e.get<double>());
        }
    }
    return g;
}

json grid_json(const ConvexityGrid& g)
{
    json j;
    j["axis_points"] = g.axis_points;
    j["random_pairs"] = g.random_pairs;
    j["t_values"] = g.t_values;
    j["sampling"] = g.sampling == GridSampling::stratified ? "stratified" : "seeded-random";
    return j;
}

QuadratureSpec parse_quadrature(const json& j)
{
    const std::string where = "quadrature";
    require_object(j, where);
    reject_unknown(j, {"rule", "order", "substitution"}, where);
    QuadratureSpec q;
    try {
        q.rule = parse_quadrature_rule(read_string(j, "rule", to_string(q.rule), where));
    } catch (const QuadratureError& e) {
        throw ConfigError(e.what());
    }
    q.order = static_cast<int>(read_count(j, "order", static_cast<std::uint64_t>(q.order), where));
    if (j.contains("substitution")) {
        if (!j.at("substitution").is_boolean()) {
            throw ConfigError("quadrature.substitution must be true or false");
        }
        q.substitution = j.at("substitution").get<bool>();
    }
    return q;
}

SearchSection parse_search(const json& j)
{
    const std::string where = "search";
    require_object(j, where);
    reject_unknown(j,
                   {"family", "alpha", "beta", "K", "vx", "vy", "wx", "wy", "a", "b", "c",
                    "certified_only", "grid_size", "budget", "counterexample_prefix"},
                   where);
    SearchSection s;
    auto& sp = s.space;
    sp.family = parse_family_kind(read_string(j, "family", to_string(sp.family), where));
    sp.alpha = read_range(j, "alpha", sp.alpha, where);
    sp.beta = read_range(j, "beta", sp.beta, where);
    sp.K = read_range(j, "K", sp.K, where);
    sp.vx = read_range(j, "vx", sp.vx, where);
    sp.vy = read_range(j, "vy", sp.vy, where);
    sp.wx = read_range(j, "wx", sp.wx, where);
    sp.wy = read_range(j, "wy", sp.wy, where);
    sp.a = read_range(j, "a", sp.a, where);
    sp.b = read_range(j, "b", sp.b, where);
    sp.c = read_range(j, "c", sp.c, where);
    if (j.contains("certified_only")) {
        if (!j.at("certified_only").is_boolean()) {
            throw ConfigError("search.certified_only must be true or false");
        }
        sp.certified_only = j.at("certified_only").get<bool>();
    }
    sp.grid_size = read_count(j, "grid_size", sp.grid_size, where);
    s.budget = read_count(j, "budget", s.budget, where);
    if (j.contains("counterexample_prefix")) {
        s.counterexample_prefix = read_string(j, "counterexample_prefix", "", where);
    }
    return s;
}

json range_json(const Range& r) { return json::array({r.lo, r.hi}); }

json search_json(const SearchSection& s)
{
    const auto& sp = s.space;
    json j;
    j["family"] = to_string(sp.family);
    j["alpha"] = range_json(sp.alpha);
    j["beta"] = range_json(sp.beta);
    j["K"] = range_json(sp.K);
    j["vx"] = range_json(sp.vx);
    j["vy"] = range_json(sp.vy);
    j["wx"] = range_json(sp.wx);
    j["wy"] = range_json(sp.wy);
    j["a"] = range_json(sp.a);
    j["b"] = range_json(sp.b);
    j["c"] = range_json(sp.c);
    j["certified_only"] = sp.certified_only;
    j["grid_size"] = sp.grid_size;
    j["budget"] = s.budget;
    if (s.counterexample_prefix) {
        j["counterexample_prefix"] = *s.counterexample_prefix;
    }
    return j;
}

bool finite(double x) { return std::isfinite(x); }

} // namespace

std::string to_string(RunMode mode)
{
    switch (mode) {
    case RunMode::verify: return "verify";
    case RunMode::search: return "search";
    case RunMode::baseline: return "baseline";
    }
    return "verify";
}

RunMode parse_run_mode(const std::string& name)
{
    for (auto m : {RunMode::verify, RunMode::search, RunMode::baseline}) {
        if (to_string(m) == name) {
            return m;
        }
    }
    throw ConfigError("mode must be verify, search or baseline (got '" + name + "')");
}

void validate(const RunConfig& cfg)
{
    if (!cfg.domain) {
        throw ConfigError("domain {a, b} is required");
    }
    if (!(cfg.domain->a > 0.0 && cfg.domain->a < cfg.domain->b && finite(cfg.domain->b))) {
        throw ConfigError("domain needs 0 < a < b");
    }
    if (cfg.mode != RunMode::search && cfg.families.empty()) {
        throw ConfigError(to_string(cfg.mode) + " mode needs at least one family");
    }
    if (cfg.mode == RunMode::search && !cfg.search) {
        throw ConfigError("search mode needs a search section");
    }
    if (cfg.search) {
        try {
            cfg.search->space.validate();
        } catch (const Error& e) {
            throw ConfigError(std::string("search: ") + e.what());
        }
        if (cfg.search->budget == 0) {
            throw ConfigError("search.budget must be >= 1");
        }
    }
    if (!(cfg.c >= 0.0) || !finite(cfg.c)) {
        throw ConfigError("c must be a finite value >= 0");
    }
    if (!(cfg.tolerance >= 0.0) || !finite(cfg.tolerance)) {
        throw ConfigError("tolerance must be a finite value >= 0");
    }
    if (cfg.threads == 0) {
        throw ConfigError("threads must be >= 1");
    }
    if (cfg.format != "json" && cfg.format != "text") {
        throw ConfigError("format must be json or text");
    }
    for (const auto& f : cfg.families) {
        const double a = f.a.value_or(cfg.domain->a);
        const double b = f.b.value_or(cfg.domain->b);
        if (!(a > 0.0 && a < b && finite(b))) {
            throw ConfigError("family domain needs 0 < a < b");
        }
        if (f.family == FamilyKind::disc && f.grid_size == 0) {
            throw ConfigError("disc family grid_size must be >= 1");
        }
    }
    for (const auto& p : cfg.pairs) {
        if (p[0] >= cfg.families.size() || p[1] >= cfg.families.size()) {
            throw ConfigError("pairs refer to a family index out of range");
        }
    }
    try {
        cfg.grid.validate();
        cfg.quadrature.validate();
    } catch (const Error& e) {
        throw ConfigError(e.what());
    }
}

RunConfig parse_config(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    require_object(j, "config");
    reject_unknown(j,
                   {"mode", "families", "domain", "c", "grid", "quadrature", "theorems",
                    "tolerance", "output", "format", "seed", "threads", "pairs", "search"},
                   "config");
    const std::string where = "config";
    RunConfig cfg;
    cfg.mode = parse_run_mode(read_string(j, "mode", "verify", where));
    if (j.contains("families")) {
        const auto& fams = j.at("families");
        if (!fams.is_array()) {
            throw ConfigError("families must be a list");
        }
        for (std::size_t i = 0; i < fams.size(); ++i) {
            cfg.families.push_back(parse_family(fams[i], "families[" + std::to_string(i) + "]"));
        }
    }
    if (j.contains("domain")) {
        const auto& d = require_object(j.at("domain"), "domain");
        reject_unknown(d, {"a", "b"}, "domain");
        if (!d.contains("a") || !d.contains("b")) {
            throw ConfigError("domain needs both a and b");
        }
        cfg.domain = DomainSpec{read_number(d, "a", 0.0, "domain"), read_number(d, "b", 0.0, "domain")};
    }
    cfg.c = read_number(j, "c", cfg.c, where);
    if (j.contains("grid")) {
        cfg.grid = parse_grid(j.at("grid"));
    }
    if (j.contains("quadrature")) {
        cfg.quadrature = parse_quadrature(j.at("quadrature"));
    }
    if (j.contains("theorems")) {
        const auto& t = j.at("theorems");
        if (t.is_string() && t.get<std::string>() == "all") {
            cfg.theorems.clear();
        } else if (t.is_array()) {
            for (const auto& e : t) {
                if (!e.is_string()) {
                    throw ConfigError("theorems must be \"all\" or a list of theorem ids");
                }
                cfg.theorems.push_back(parse_theorem_id(e.get<std::string>()));
            }
            if (cfg.theorems.empty()) {
                throw ConfigError("theorems list is empty");
            }
        } else {
            throw ConfigError("theorems must be \"all\" or a list of theorem ids");
        }
    }
    cfg.tolerance = read_number(j, "tolerance", cfg.tolerance, where);
    if (j.contains("output")) {
        cfg.output = read_string(j, "output", "", where);
    }
    cfg.format = read_string(j, "format", cfg.format, where);
    cfg.seed = read_count(j, "seed", cfg.seed, where);
    cfg.grid.seed = cfg.seed;
    cfg.threads = static_cast<unsigned>(read_count(j, "threads", cfg.threads, where));
    if (j.contains("pairs")) {
        const auto& p = j.at("pairs");
        if (!p.is_array()) {
            throw ConfigError("pairs must be a list of [F, G] index pairs");
        }
        for (const auto& e : p) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
                !e[1].is_number_unsigned()) {
                throw ConfigError("pairs must be a list of [F, G] index pairs");
            }
            cfg.pairs.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>()});
        }
    }
    if (j.contains("search")) {
        cfg.search = parse_search(j.at("search"));
    }
    validate(cfg);
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read config " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string render_config(const RunConfig& cfg)
{
    json j;
    j["mode"] = to_string(cfg.mode);
    j["families"] = json::array();
    for (const auto& f : cfg.families) {
        j["families"].push_back(family_json(f));
    }
    if (cfg.domain) {
        j["domain"] = {{"a", cfg.domain->a}, {"b", cfg.domain->b}};
    }
    j["c"] = cfg.c;
    j["grid"] = grid_json(cfg.grid);
    j["quadrature"] = {{"rule", to_string(cfg.quadrature.rule)},
                       {"order", cfg.quadrature.order},
                       {"substitution", cfg.quadrature.substitution}};
    if (cfg.theorems.empty()) {
        j["theorems"] = "all";
    } else {
        j["theorems"] = json::array();
        for (auto id : cfg.theorems) {
            j["theorems"].push_back(std::string(to_string(id)));
        }
    }
    j["tolerance"] = cfg.tolerance;
    if (cfg.output) {
        j["output"] = *cfg.output;
    }
    j["format"] = cfg.format;
    j["seed"] = cfg.seed;
    j["threads"] = cfg.threads;
    if (!cfg.pairs.empty()) {
        j["pairs"] = json::array();
        for (const auto& p : cfg.pairs) {
            j["pairs"].push_back({p[0], p[1]});
        }
    }
    if (cfg.search) {
        j["search"] = search_json(*cfg.search);
    }
    return detail::dump(j) + "\n";
}

HarmonicDomain family_domain(const RunConfig& cfg, const FamilySpec& spec)
{
    if (!cfg.domain) {
        throw ConfigError("domain {a, b} is required");
    }
    return HarmonicDomain(spec.a.value_or(cfg.domain->a), spec.b.value_or(cfg.domain->b));
}

SetValuedFn build_family(const RunConfig& cfg, const FamilySpec& spec)
{
    const auto dom = family_domain(cfg, spec);
    Candidate cand;
    cand.family = spec.family;
    cand.alpha = spec.alpha;
    cand.beta = spec.beta;
    cand.K = spec.K;
    cand.v = spec.v;
    cand.w = spec.w;
    cand.a = dom.a();
    cand.b = dom.b();
    cand.c = cfg.c;
    return build_family(cand, spec.grid_size);
}

CheckRequest check_request(const RunConfig& cfg)
{
    CheckRequest req;
    req.c = cfg.c;
    req.grid = cfg.grid;
    req.grid.seed = cfg.seed;
    req.quadrature = cfg.quadrature;
    req.options.tol = cfg.tolerance;
    req.options.threads = cfg.threads;
    return req;
}

RunConfig replay_config(const Candidate& cand, TheoremId id, const CheckRequest& req,
                        std::size_t grid_size)
{
    RunConfig cfg;
    cfg.mode = RunMode::verify;
    FamilySpec f;
    f.family = cand.family;
    f.alpha = cand.alpha;
    f.beta = cand.beta;
    f.K = cand.K;
    f.v = cand.v;
    f.w = cand.w;
    f.grid_size = grid_size;
    cfg.families = {f};
    cfg.domain = DomainSpec{cand.a, cand.b};
    cfg.c = cand.c;
    cfg.grid = req.grid;
    cfg.quadrature = req.quadrature;
    cfg.theorems = {id};
    cfg.tolerance = req.options.tol;
    cfg.seed = req.grid.seed;
    cfg.threads = req.options.threads;
    return cfg;
}

} // namespace hhset
