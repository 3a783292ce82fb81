#include "kronecker/io.hpp"

#include <cctype>
#include <sstream>

namespace kronecker {

std::string code_version() { return "kronecker-0.1.0"; }

Json make_artifact(const std::string& kind, Json data) {
    return Json{{"schema_version", kSchemaVersion},
                {"code_version", code_version()},
                {"kind", kind},
                {"data", std::move(data)}};
}

const Json& artifact_data(const Json& artifact, const std::string& kind) {
    if (!artifact.is_object() || !artifact.contains("schema_version") || !artifact.contains("data")) {
        throw SchemaError("not an artifact");
    }
    if (artifact.at("schema_version").get<int>() != kSchemaVersion) {
        throw SchemaError("unsupported schema version " + artifact.at("schema_version").dump());
    }
    if (artifact.value("kind", std::string()) != kind) {
        throw SchemaError("expected a '" + kind + "' artifact, got '" + artifact.value("kind", std::string()) + "'");
    }
    return artifact.at("data");
}

Json to_json(const Integer& x) { return x.str(); }
Json to_json(const Rational& x) { return to_string(x); }

Json to_json(const IntVector& v) {
    Json j = Json::array();
    for (const auto& x : v) j.push_back(x.str());
    return j;
}

Json to_json(const RatVector& v) {
    Json j = Json::array();
    for (const auto& x : v) j.push_back(to_string(x));
    return j;
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (!j.is_string()) throw SchemaError("expected an integer string");
    try {
        return Integer(j.get<std::string>());
    } catch (const std::exception&) {
        throw SchemaError("bad integer '" + j.get<std::string>() + "'");
    }
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (!j.is_string()) throw SchemaError("expected a rational string");
    const auto s = j.get<std::string>();
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        const Integer den(s.substr(slash + 1));
        if (den == 0) throw SchemaError("zero denominator");
        return Rational(Integer(s.substr(0, slash)), den);
    } catch (const SchemaError&) {
        throw;
    } catch (const std::exception&) {
        throw SchemaError("bad rational '" + s + "'");
    }
}

IntVector int_vector_from_json(const Json& j) {
    IntVector v;
    for (const auto& x : j) v.push_back(integer_from_json(x));
    return v;
}

RatVector rat_vector_from_json(const Json& j) {
    RatVector v;
    for (const auto& x : j) v.push_back(rational_from_json(x));
    return v;
}

namespace {

Json matrix_json(const IntMatrix& m) {
    Json j = Json::array();
    for (const auto& r : m) j.push_back(to_json(r));
    return j;
}

IntMatrix matrix_from_json(const Json& j) {
    IntMatrix m;
    for (const auto& r : j) m.push_back(int_vector_from_json(r));
    return m;
}

Json rat_matrix_json(const RatMatrix& m) {
    Json j = Json::array();
    for (const auto& r : m) j.push_back(to_json(r));
    return j;
}

RatMatrix rat_matrix_from_json(const Json& j) {
    RatMatrix m;
    for (const auto& r : j) m.push_back(rat_vector_from_json(r));
    return m;
}

template <class T>
void put_optional(Json& j, const char* key, const std::optional<T>& v) {
    if (!v) {
        j[key] = nullptr;
    } else if constexpr (std::is_same_v<T, Integer>) {
        j[key] = v->str();
    } else {
        j[key] = *v;
    }
}

}  // namespace

Json to_json(const QuiverSpec& s) { return Json{{"n", s.n}, {"r1", s.r1}, {"r2", s.r2}}; }

QuiverSpec quiver_from_json(const Json& j) {
    return QuiverSpec(j.at("n").get<int>(), j.at("r1").get<int>(), j.at("r2").get<int>());
}

Json to_json(const Cone& c) {
    Json j{{"ambient_dim", c.ambient_dim()}};
    if (c.has_hrep()) {
        Json eq = Json::array(), ineq = Json::array();
        for (const auto& h : c.hrep()) {
            (h.kind == Halfspace::Kind::equation ? eq : ineq).push_back(to_json(h.normal));
        }
        j["equations"] = eq;
        j["inequalities"] = ineq;
    }
    if (c.has_vrep()) {
        j["rays"] = matrix_json(c.rays());
        j["lineality"] = matrix_json(c.lineality());
    }
    return j;
}

Cone cone_from_json(const Json& j) {
    Cone c(j.at("ambient_dim").get<std::size_t>());
    if (j.contains("inequalities")) {
        std::vector<Halfspace> h;
        for (const auto& e : j.at("equations")) h.push_back(Halfspace::equation(int_vector_from_json(e)));
        for (const auto& e : j.at("inequalities")) h.push_back(Halfspace::inequality(int_vector_from_json(e)));
        c.set_hrep(std::move(h));
    }
    if (j.contains("rays")) c.set_vrep(matrix_from_json(j.at("rays")), matrix_from_json(j.at("lineality")));
    return c;
}

Json to_json(const HilbertBasis& hb) {
    Json counts = Json::array();
    for (auto n : hb.count_by_height()) counts.push_back(n);
    return Json{{"generators", matrix_json(hb.generators)},
                {"heights", hb.heights},
                {"count_by_height", counts},
                {"certified_up_to", hb.certified_up_to},
                {"window_clean", hb.window_clean}};
}

HilbertBasis hilbert_from_json(const Json& j) {
    HilbertBasis hb;
    hb.generators = matrix_from_json(j.at("generators"));
    hb.heights = j.at("heights").get<std::vector<std::int64_t>>();
    hb.certified_up_to = j.at("certified_up_to").get<int>();
    hb.window_clean = j.at("window_clean").get<bool>();
    if (hb.heights.size() != hb.generators.size()) throw SchemaError("heights and generators differ in length");
    return hb;
}

Json to_json(const Polytope& p) {
    return Json{{"ambient_dim", p.ambient_dim},
                {"dimension", p.dimension()},
                {"vertices", rat_matrix_json(p.vertices)},
                {"hull_point", to_json(p.affine_hull.point)},
                {"hull_basis", matrix_json(p.affine_hull.basis)}};
}

Polytope polytope_from_json(const Json& j) {
    Polytope p;
    p.ambient_dim = j.at("ambient_dim").get<std::size_t>();
    p.vertices = rat_matrix_from_json(j.at("vertices"));
    p.affine_hull.point = rat_vector_from_json(j.at("hull_point"));
    p.affine_hull.basis = matrix_from_json(j.at("hull_basis"));
    return p;
}

Json to_json(const FanRays& f) {
    return Json{{"dim", f.dim}, {"rays", matrix_json(f.rays)}, {"maximal_cones", f.maximal_cones}};
}

FanRays fan_from_json(const Json& j) {
    FanRays f;
    f.dim = j.at("dim").get<std::size_t>();
    f.rays = matrix_from_json(j.at("rays"));
    f.maximal_cones = j.at("maximal_cones").get<std::vector<std::vector<std::size_t>>>();
    for (const auto& r : f.rays) {
        if (r.size() != f.dim) throw SchemaError("ray of the wrong length");
    }
    return f;
}

Json to_json(const ToricReport& t) {
    Json j{{"complete", t.complete}};
    put_optional(j, "fano", t.fano);
    put_optional(j, "gorenstein", t.gorenstein);
    put_optional(j, "terminal", t.terminal);
    put_optional(j, "reflexive", t.reflexive);
    put_optional(j, "fano_index", t.fano_index);
    put_optional(j, "spanning_vertices", t.spanning_vertices);
    put_optional(j, "spanning_lattice_points", t.spanning_lattice_points);
    if (t.class_group) {
        Json tors = Json::array();
        for (const auto& x : t.class_group->torsion) tors.push_back(x.str());
        j["class_group"] = Json{{"free_rank", t.class_group->free_rank}, {"torsion", tors}};
    } else {
        j["class_group"] = nullptr;
    }
    return j;
}

Json to_json(const LaurentPolynomial& f) {
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms) terms.push_back(Json::array({e, c.str()}));
    return Json{{"dim", f.dim}, {"terms", terms}};
}

LaurentPolynomial laurent_from_json(const Json& j) {
    LaurentPolynomial f;
    f.dim = j.at("dim").get<std::size_t>();
    for (const auto& t : j.at("terms")) {
        auto e = t.at(0).get<std::vector<std::int64_t>>();
        if (e.size() != f.dim) throw SchemaError("exponent of the wrong length");
        const Integer c = integer_from_json(t.at(1));
        if (c == 0) continue;
        f.terms[e] += c;
    }
    return f;
}

Json period_to_json(const std::vector<Integer>& period) {
    Json j = Json::array();
    for (const auto& x : period) j.push_back(x.str());
    return j;
}

std::vector<Integer> period_from_json(const Json& j) {
    std::vector<Integer> out;
    for (const auto& x : j) out.push_back(integer_from_json(x));
    return out;
}

Json to_json(const NewtonInvariants& inv) {
    Json j{{"dim", inv.dim},
           {"vertices", inv.vertices},
           {"lattice_points", inv.lattice_points},
           {"degenerate", inv.degenerate},
           {"reflexive", inv.reflexive},
           {"terminal", inv.terminal}};
    j["normalized_volume"] = inv.normalized_volume ? Json(to_string(*inv.normalized_volume)) : Json(nullptr);
    return j;
}

Json to_json(const Grading& g) { return Json{{"spec", to_json(g.spec)}, {"c", to_json(g.c)}}; }

Grading grading_from_json(const Json& j) {
    Grading g{quiver_from_json(j.at("spec")), int_vector_from_json(j.at("c"))};
    if (g.c.size() != g.spec.ambient_dim()) throw SchemaError("grading has the wrong length");
    return g;
}

Json to_json(const SemiInvariant& f) {
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms) terms.push_back(Json::array({e.values, c.str()}));
    return Json{{"spec", to_json(f.spec)}, {"degree", f.degree}, {"terms", terms}};
}

Json to_json(const Tableau& t) {
    Json rows = Json::array();
    for (const auto& r : t.rows()) {
        Json row = Json::array();
        for (const auto& l : r) row.push_back(Json::array({l.first, l.second}));
        rows.push_back(std::move(row));
    }
    return rows;
}

Tableau tableau_from_json(const Json& j) {
    std::vector<std::vector<Label>> rows;
    for (const auto& r : j) {
        std::vector<Label> row;
        for (const auto& l : r) row.push_back(Label{l.at(0).get<int>(), l.at(1).get<int>()});
        rows.push_back(std::move(row));
    }
    return Tableau(std::move(rows));
}

Json to_json(const PipelineReport& r) {
    Json gens = Json::array();
    for (const auto& g : r.generators) {
        Json e{{"exponent", g.exponent.values},
               {"degree", g.degree},
               {"checked", g.checked},
               {"lm_verified", g.lm_verified},
               {"fallback_used", g.fallback_used}};
        if (g.pair) {
            e["plus"] = to_json(g.pair->plus);
            e["minus"] = to_json(g.pair->minus);
        }
        gens.push_back(std::move(e));
    }
    Json j{{"spec", to_json(r.spec)},
           {"coherent_minus", r.coherent_minus},
           {"coherent_plus", r.coherent_plus},
           {"generators", gens},
           {"polytope_vertices_integral", r.polytope_vertices_integral},
           {"polytope_lattice_points", r.polytope_lattice_points},
           {"degree_two_evidence_minus", r.degree_two_evidence_minus},
           {"degree_two_evidence_plus", r.degree_two_evidence_plus},
           {"assumptions", r.assumptions},
           {"failures", r.failures},
           {"all_verified", r.all_verified()}};
    if (r.cone) j["cone"] = to_json(*r.cone);
    if (r.hilbert) j["hilbert"] = to_json(*r.hilbert);
    if (r.polytope) j["polytope"] = to_json(*r.polytope);
    if (r.fan) j["fan"] = to_json(*r.fan);
    if (r.toric) j["toric"] = to_json(*r.toric);
    return j;
}

std::string format_tableau(const Tableau& t) {
    std::ostringstream os;
    for (std::size_t r = 0; r < t.row_count(); ++r) {
        if (r) os << " | ";
        for (std::size_t c = 0; c < t.col_count(); ++c) {
            if (c) os << ' ';
            const Label& l = t.at(r, c);
            if (l.first < 10 && l.second < 10) {
                os << l.first << l.second;
            } else {
                os << l.first << ',' << l.second;
            }
        }
    }
    return os.str();
}

Tableau parse_tableau(std::string_view text) {
    std::vector<std::vector<Label>> rows(1);
    std::istringstream is{std::string(text)};
    std::string tok;
    while (is >> tok) {
        if (tok == "|") {
            rows.emplace_back();
            continue;
        }
        Label l;
        const auto comma = tok.find(',');
        try {
            if (comma != std::string::npos) {
                l = {std::stoi(tok.substr(0, comma)), std::stoi(tok.substr(comma + 1))};
            } else if (tok.size() == 2 && std::isdigit(static_cast<unsigned char>(tok[0])) &&
                       std::isdigit(static_cast<unsigned char>(tok[1]))) {
                l = {tok[0] - '0', tok[1] - '0'};
            } else {
                throw std::invalid_argument(tok);
            }
        } catch (const std::exception&) {
            throw LabelError("bad tableau cell '" + tok + "'");
        }
        rows.back().push_back(l);
    }
    if (rows.size() == 1 && rows[0].empty()) return Tableau();
    return Tableau(std::move(rows));
}

}  // namespace kronecker
