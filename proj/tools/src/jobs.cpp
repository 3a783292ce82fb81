#include "jobs.hpp"

#include "kronecker/kronecker_cone.hpp"

#include <fstream>
#include <sstream>

namespace kronecker::cli {

Json config_json(const JobConfig& cfg) {
    Json j{{"spec", to_json(cfg.spec)},
           {"max_degree", cfg.max_degree},
           {"certify_window", cfg.certify_window},
           {"max_points", cfg.limits.max_points},
           {"max_nodes", cfg.limits.max_nodes},
           {"max_orbit", cfg.max_orbit}};
    const auto g = resolve_grading(cfg);
    j["grading"] = g ? to_json(*g) : Json("gc");
    return j;
}

std::optional<Grading> resolve_grading(const JobConfig& cfg) {
    if (cfg.grading == "gc") return std::nullopt;
    try {
        if (cfg.grading == "c0") return grading_c0(cfg.spec);
        if (cfg.grading == "c2") return grading_c2(cfg.spec);
    } catch (const UnsupportedError& e) {
        throw UsageError(e.what());
    }
    const Json a = read_artifact(cfg.grading);
    Grading g = grading_from_json(artifact_data(a, "grading"));
    if (!(g.spec == cfg.spec)) throw UsageError("grading file is for " + g.spec.name() + ", not " + cfg.spec.name());
    return g;
}

Json read_artifact(const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) throw UsageError("cannot read artifact " + p.string());
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded()) throw UsageError("artifact " + p.string() + " is not valid JSON");
    return j;
}

void write_artifact(const std::filesystem::path& p, const Json& artifact) {
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::trunc);
    if (!out) throw UsageError("cannot write " + p.string());
    out << artifact.dump(1) << '\n';
}

namespace {

const Json& data_of(const Json& a, const std::string& kind) {
    try {
        return artifact_data(a, kind);
    } catch (const SchemaError& e) {
        throw UsageError(e.what());
    }
}

Json fan_json_of(const Json& a) {
    if (a.value("kind", std::string()) == "sagbi") {
        const Json& d = data_of(a, "sagbi");
        if (!d.contains("fan")) throw UsageError("verify-sagbi artifact has no fan (pipeline stopped early)");
        return d.at("fan");
    }
    return data_of(a, "fan").at("fan");
}

bool integral(const RatMatrix& m) {
    for (const auto& v : m) {
        for (const auto& q : v) {
            if (denominator(q) != 1) return false;
        }
    }
    return true;
}

}  // namespace

Json generators_from(const Json& cone_artifact, const JobConfig& cfg) {
    const Json& d = data_of(cone_artifact, "cone");
    const QuiverSpec spec = quiver_from_json(d.at("spec"));
    HilbertOptions o;
    o.max_degree = cfg.max_degree;
    o.certify_window = cfg.certify_window;
    o.limits = cfg.limits;
    const HilbertBasis hb = hilbert_basis(cone_from_json(d.at("cone")), kronecker_height(spec), o);
    return make_artifact("generators", Json{{"spec", d.at("spec")},
                                            {"grading", d.at("grading")},
                                            {"max_degree", cfg.max_degree},
                                            {"certify_window", cfg.certify_window},
                                            {"hilbert", to_json(hb)}});
}

Json polytope_from(const Json& cone_artifact, const JobConfig& cfg) {
    const Json& d = data_of(cone_artifact, "cone");
    const QuiverSpec spec = quiver_from_json(d.at("spec"));
    const Cone c = cone_from_json(d.at("cone"));
    const HeightFunction height = kronecker_height(spec);
    const Polytope p = slice_polytope(c, height, 1);
    const std::size_t lp =
        for_each_lattice_point_at_height(c, 1, height, [](const std::vector<std::int64_t>&) {}, cfg.limits);
    return make_artifact("polytope", Json{{"spec", d.at("spec")},
                                          {"grading", d.at("grading")},
                                          {"polytope", to_json(p)},
                                          {"vertices_integral", integral(p.vertices)},
                                          {"lattice_points", lp}});
}

Json fan_from(const Json& polytope_artifact) {
    const Json& d = data_of(polytope_artifact, "polytope");
    const FanRays f = normal_fan_rays(polytope_from_json(d.at("polytope")));
    return make_artifact("fan", Json{{"spec", d.at("spec")}, {"grading", d.at("grading")}, {"fan", to_json(f)}});
}

Json classify_from(const Json& a, const JobConfig& cfg) {
    const FanRays f = fan_from_json(fan_json_of(a));
    return make_artifact("toric", Json{{"toric", to_json(classify_toric(f, cfg.limits))}, {"rays", f.rays.size()}});
}

Json mirror_from(const Json& a, const JobConfig& cfg) {
    const FanRays f = fan_from_json(fan_json_of(a));
    if (!fan_complete(f)) throw MismatchError("fan is not complete; no mirror polynomial");
    const MirrorResult m = laurent_from_rays(f, cfg.limits);
    Json d{{"unsupported", m.unsupported}};
    if (m.polynomial) {
        d["polynomial"] = to_json(*m.polynomial);
        d["newton"] = to_json(newton_invariants(*m.polynomial, cfg.limits));
    } else {
        d["polynomial"] = nullptr;
    }
    return make_artifact("mirror", d);
}

Json period_from(const Json& mirror_artifact, std::size_t terms) {
    if (terms == 0) throw UsageError("--terms must be positive");
    const Json& d = data_of(mirror_artifact, "mirror");
    if (d.at("polynomial").is_null()) throw UsageError("mirror artifact has no polynomial: " + d.value("unsupported", std::string()));
    const LaurentPolynomial f = laurent_from_json(d.at("polynomial"));
    return make_artifact("period", Json{{"terms", terms}, {"period", period_to_json(classical_period(f, terms))}});
}

Stages::Stages(JobConfig cfg) : cfg_(std::move(cfg)) {
    if (cfg_.use_cache) cache_ = ArtifactCache::from_environment();
}

Json Stages::cached(const std::string& kind, Json extra, const std::function<Json()>& produce) {
    if (!cache_) return produce();
    const std::string key = ArtifactCache::key(Json{{"config", config_json(cfg_)}, {"stage", kind}, {"extra", extra}});
    if (auto hit = cache_->load(key)) {
        ++hits_;
        return *hit;
    }
    Json a = produce();
    cache_->store(key, a);
    return a;
}

Json Stages::cone() {
    return cached("cone", nullptr, [&] {
        const auto g = resolve_grading(cfg_);
        Cone c;
        if (g) {
            auto mc = matching_field_cone(cfg_.spec, *g);
            if (!mc) throw MismatchError("grading induces no matching field on one of the Grassmannians");
            c = std::move(*mc);
        } else {
            c = double_description(kronecker_halfspaces(cfg_.spec));
        }
        const Certificate cert = certify(c);
        return make_artifact("cone", Json{{"spec", to_json(cfg_.spec)},
                                          {"grading", g ? to_json(*g) : Json("gc")},
                                          {"cone", to_json(c)},
                                          {"dimension", c.dimension()},
                                          {"certified", cert.ok()}});
    });
}

Json Stages::generators() {
    return cached("generators", nullptr, [&] { return generators_from(cone(), cfg_); });
}

Json Stages::polytope() {
    return cached("polytope", nullptr, [&] { return polytope_from(cone(), cfg_); });
}

Json Stages::fan() {
    return cached("fan", nullptr, [&] { return fan_from(polytope()); });
}

Json Stages::classify() {
    return cached("toric", nullptr, [&] { return classify_from(fan(), cfg_); });
}

Json Stages::mirror() {
    return cached("mirror", nullptr, [&] { return mirror_from(fan(), cfg_); });
}

Json Stages::period(std::size_t terms) {
    return cached("period", terms, [&] { return period_from(mirror(), terms); });
}

Json Stages::sagbi(std::int64_t verify_max_degree) {
    return cached("sagbi", verify_max_degree, [&] {
        const auto g = resolve_grading(cfg_);
        if (!g) throw UsageError("verify-sagbi needs --grading c0, c2 or a grading file");
        PipelineOptions o;
        o.hilbert.max_degree = cfg_.max_degree;
        o.hilbert.certify_window = cfg_.certify_window;
        o.hilbert.limits = cfg_.limits;
        o.limits = cfg_.limits;
        o.expand.max_orbit = cfg_.max_orbit;
        o.verify_max_degree = verify_max_degree;
        return make_artifact("sagbi", to_json(sagbi_pipeline(cfg_.spec, *g, o)));
    });
}

namespace {

std::string yes(const Json& b) { return b.is_null() ? "n/a" : (b.get<bool>() ? "yes" : "no"); }

}  // namespace

std::string summarize(const Json& a) {
    const std::string kind = a.value("kind", std::string());
    const Json& d = a.at("data");
    std::ostringstream os;
    if (kind == "cone") {
        const Json& c = d.at("cone");
        os << quiver_from_json(d.at("spec")).name() << " cone: dimension " << d.at("dimension") << ", "
           << c.at("rays").size() << " rays, " << c.at("inequalities").size() << " facets, "
           << c.at("equations").size() << " equations, certified " << yes(d.at("certified"));
    } else if (kind == "generators") {
        const Json& h = d.at("hilbert");
        os << h.at("generators").size() << " generators; by height";
        const auto counts = h.at("count_by_height").get<std::vector<std::size_t>>();
        for (std::size_t t = 1; t < counts.size(); ++t) os << ' ' << t << ':' << counts[t];
        os << "; certified up to height " << h.at("certified_up_to") << ", window clean "
           << yes(h.at("window_clean"));
    } else if (kind == "polytope") {
        os << "slice polytope: " << d.at("polytope").at("vertices").size() << " vertices, dimension "
           << d.at("polytope").at("dimension") << ", " << d.at("lattice_points") << " lattice points, integral vertices "
           << yes(d.at("vertices_integral"));
    } else if (kind == "fan") {
        os << "normal fan: " << d.at("fan").at("rays").size() << " rays in dimension " << d.at("fan").at("dim");
    } else if (kind == "toric") {
        const Json& t = d.at("toric");
        os << "complete " << yes(t.at("complete")) << ", fano " << yes(t.at("fano")) << ", gorenstein "
           << yes(t.at("gorenstein")) << ", terminal " << yes(t.at("terminal")) << ", reflexive "
           << yes(t.at("reflexive"));
        if (!t.at("fano_index").is_null()) os << ", fano index " << t.at("fano_index").get<std::string>();
        if (!t.at("spanning_vertices").is_null()) {
            os << "; conv(rays) has " << t.at("spanning_vertices") << " vertices and "
               << t.at("spanning_lattice_points") << " lattice points";
        }
    } else if (kind == "mirror") {
        if (d.at("polynomial").is_null()) {
            os << "no mirror polynomial: " << d.at("unsupported").get<std::string>();
        } else {
            const Json& n = d.at("newton");
            os << d.at("polynomial").at("terms").size() << " terms in " << d.at("polynomial").at("dim")
               << " variables; Newton polytope " << n.at("vertices") << " vertices, " << n.at("lattice_points")
               << " lattice points, reflexive " << yes(n.at("reflexive")) << ", terminal " << yes(n.at("terminal"));
        }
    } else if (kind == "period") {
        os << "period:";
        for (const auto& x : d.at("period")) os << ' ' << x.get<std::string>();
    } else if (kind == "sagbi") {
        std::size_t verified = 0, fallback = 0;
        for (const auto& g : d.at("generators")) {
            verified += g.at("lm_verified").get<bool>();
            fallback += g.at("fallback_used").get<bool>();
        }
        os << d.at("generators").size() << " generators, " << verified << " with verified leading monomial, "
           << fallback << " needed the fallback; " << (d.at("failures").empty() ? "no failures" : "FAILURES:");
        for (const auto& f : d.at("failures")) os << "\n  " << f.get<std::string>();
    } else {
        os << kind << " artifact";
    }
    return os.str();
}

}  // namespace kronecker::cli
