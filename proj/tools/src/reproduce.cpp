#include "reproduce.hpp"

#include "kronecker/kronecker_cone.hpp"
#include "kronecker/tableaux.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

namespace kronecker::cli {

bool ReproReport::pass() const {
    return !metrics.empty() && std::all_of(metrics.begin(), metrics.end(), [](const MetricResult& m) { return m.match; });
}

Json ReproReport::to_json() const {
    Json ms = Json::array();
    for (const auto& m : metrics) {
        ms.push_back(Json{{"name", m.name}, {"expected", m.expected}, {"computed", m.computed}, {"match", m.match}});
    }
    Json st = Json::array();
    for (const auto& s : stages) st.push_back(Json{{"stage", s.stage}, {"seconds", s.seconds}});
    return Json{{"example", example},
                {"expected_table_version", kExpectedTableVersion},
                {"metrics", ms},
                {"stages", st},
                {"cache_hits", cache_hits},
                {"pass", pass()}};
}

std::string ReproReport::text() const {
    std::ostringstream os;
    for (const auto& m : metrics) {
        os << (m.match ? "  ok    " : "  FAIL  ") << m.name << ": " << m.computed;
        if (!m.match) os << " (expected " << m.expected << ")";
        os << '\n';
    }
    for (const auto& s : stages) os << "  [" << s.stage << " " << s.seconds << " s]\n";
    os << example << ": " << (pass() ? "PASS" : "FAIL") << '\n';
    return os.str();
}

namespace {

using Metrics = std::map<std::string, std::string>;

std::string b(bool x) { return x ? "true" : "false"; }

std::string opt_str(const Json& j) {
    if (j.is_null()) return "n/a";
    if (j.is_boolean()) return b(j.get<bool>());
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

std::string heights_str(const Json& hilbert) {
    const auto counts = hilbert.at("count_by_height").get<std::vector<std::size_t>>();
    std::string s;
    for (std::size_t t = 1; t < counts.size(); ++t) {
        if (t > 1) s += '/';
        s += std::to_string(counts[t]);
    }
    return s;
}

void toric_metrics(const Json& t, Metrics& m) {
    for (const char* k : {"fano", "gorenstein", "terminal", "fano_index", "spanning_vertices", "spanning_lattice_points"}) {
        m[k] = opt_str(t.at(k));
    }
}

class Timer {
public:
    Timer(std::vector<StageTime>& out, std::string name)
        : out_(out), name_(std::move(name)), start_(std::chrono::steady_clock::now()) {}
    ~Timer() {
        out_.push_back({name_, std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count()});
    }

private:
    std::vector<StageTime>& out_;
    std::string name_;
    std::chrono::steady_clock::time_point start_;
};

void gc_metrics(const ExpectedExample& ex, Stages& st, const ReproOptions& o, ReproReport& rep, Metrics& m) {
    Json gens;
    {
        Timer t(rep.stages, "generators");
        gens = st.generators();
    }
    const Json& h = gens.at("data").at("hilbert");
    m["generators"] = std::to_string(h.at("generators").size());
    m["generators_by_height"] = heights_str(h);
    std::vector<std::string> tabs;
    std::vector<LinkedPair> top;
    for (std::size_t g = 0; g < h.at("heights").size(); ++g) {
        if (h.at("heights")[g].get<std::int64_t>() != 3) continue;
        const auto v = ExponentVector(to_int64(int_vector_from_json(h.at("generators")[g])));
        const auto p = pair_from_exponent(v, ex.spec);
        if (!p || !p->semistandard) {
            tabs.push_back("<no semi-standard pair>");
            continue;
        }
        tabs.push_back(format_tableau(p->pair.plus));
        top.push_back(p->pair);
    }
    std::sort(tabs.begin(), tabs.end());
    for (std::size_t t = 0; t < tabs.size(); ++t) m["height3_tableau[" + std::to_string(t + 1) + "]"] = tabs[t];
    {
        Timer t(rep.stages, "polytope");
        m["slice_vertices"] = std::to_string(st.polytope().at("data").at("polytope").at("vertices").size());
    }
    {
        Timer t(rep.stages, "fan");
        m["fan_rays"] = std::to_string(st.fan().at("data").at("fan").at("rays").size());
    }
    {
        Timer t(rep.stages, "classify");
        toric_metrics(st.classify().at("data").at("toric"), m);
    }
    if (o.slow) {
        Timer t(rep.stages, "height-3 expansions");
        const Grading c0 = grading_c0(ex.spec);
        ExpandOptions eo;
        eo.factorized = true;
        std::size_t ok = 0;
        for (const auto& p : top) ok += verify_lm(p, ex.spec, c0, eo);
        m["height3_leading_monomials_verified"] = std::to_string(ok);
    }
}

void mf_metrics(Stages& st, const ReproOptions& o, ReproReport& rep, Metrics& m) {
    Json sagbi;
    {
        Timer t(rep.stages, "verify-sagbi");
        sagbi = st.sagbi();
    }
    const Json& d = sagbi.at("data");
    if (!d.contains("hilbert")) return;  // incoherent grading; every metric reports missing
    m["generators"] = std::to_string(d.at("generators").size());
    m["generators_by_height"] = heights_str(d.at("hilbert"));
    std::size_t verified = 0, fallback = 0, idx = 0;
    for (const auto& g : d.at("generators")) {
        verified += g.at("lm_verified").get<bool>();
        fallback += g.at("fallback_used").get<bool>();
        ++idx;
        if (g.contains("plus")) {
            m["canonical_pair[" + std::to_string(idx) + "]"] =
                format_tableau(tableau_from_json(g.at("plus"))) + " :: " + format_tableau(tableau_from_json(g.at("minus")));
        }
    }
    m["leading_monomials_verified"] = std::to_string(verified);
    m["fallback_used"] = std::to_string(fallback);
    m["polytope_vertices"] = std::to_string(d.at("polytope").at("vertices").size());
    m["polytope_lattice_points"] = std::to_string(d.at("polytope_lattice_points").get<std::size_t>());
    m["polytope_vertices_integral"] = b(d.at("polytope_vertices_integral").get<bool>());
    m["fan_rays"] = std::to_string(d.at("fan").at("rays").size());
    toric_metrics(d.at("toric"), m);

    JobConfig cfg = st.config();
    Json mirror;
    {
        Timer t(rep.stages, "mirror");
        mirror = mirror_from(sagbi, cfg);
    }
    const Json& md = mirror.at("data");
    if (md.at("polynomial").is_null()) return;
    m["mirror_vertices"] = std::to_string(md.at("newton").at("vertices").get<std::size_t>());
    m["mirror_lattice_points"] = std::to_string(md.at("newton").at("lattice_points").get<std::size_t>());
    m["mirror_reflexive"] = b(md.at("newton").at("reflexive").get<bool>());

    const bool small = md.at("polynomial").at("dim").get<std::size_t>() <= 6;
    if (small || o.slow) {
        Timer t(rep.stages, "period");
        const std::size_t terms = small ? 21 : 9;
        const auto period = period_from_json(period_from(mirror, terms).at("data").at("period"));
        std::string s;
        for (std::size_t k = 0; k < period.size(); ++k) s += (k ? "," : "") + period[k].str();
        m["period"] = s;
        const Json& idx_json = d.at("toric").at("fano_index");
        if (!idx_json.is_null()) {
            const Integer index = integer_from_json(idx_json);
            bool zero_off = true;
            for (std::size_t k = 0; k < period.size(); ++k) {
                if (Integer(k) % index != 0 && period[k] != 0) zero_off = false;
            }
            m["period_vanishes_off_multiples_of_fano_index"] = b(zero_off);
        }
    }
}

}  // namespace

ReproReport reproduce(std::string_view example, const ReproOptions& options) {
    const ExpectedExample* ex = find_expected(example);
    if (!ex) {
        std::string ids;
        for (const auto& e : expected_table()) ids += " " + e.id;
        throw UsageError("unknown example '" + std::string(example) + "'; known:" + ids);
    }
    JobConfig cfg;
    cfg.spec = ex->spec;
    cfg.grading = ex->grading;
    cfg.use_cache = options.use_cache;
    cfg.limits = options.limits;
    Stages st(cfg);

    ReproReport rep;
    rep.example = ex->id;
    Metrics m;
    if (ex->grading == "gc") {
        gc_metrics(*ex, st, options, rep, m);
    } else {
        mf_metrics(st, options, rep, m);
    }
    auto add = [&](const MetricList& list) {
        for (const auto& [name, expected] : list) {
            auto it = m.find(name);
            const std::string computed = it == m.end() ? "<missing>" : it->second;
            rep.metrics.push_back({name, expected, computed, computed == expected});
        }
    };
    add(ex->metrics);
    if (options.slow) add(ex->slow_metrics);
    rep.cache_hits = st.cache_hits();
    return rep;
}

}  // namespace kronecker::cli
