#include "kronecker/matching_field.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <unordered_set>

namespace kronecker {

namespace {

Integer power(Integer base, int e) {
    Integer out = 1;
    for (int t = 0; t < e; ++t) out *= base;
    return out;
}

Label ground_label(const GrassmannianSpec& g, int e) {
    const int block = g.orientation == GrassmannianSpec::Orientation::minus_side ? g.ambient.r2 : g.ambient.r1;
    return Label{(e - 1) / block + 1, (e - 1) % block + 1};
}

std::vector<Permutation> permutations(int r) {
    Permutation p(static_cast<std::size_t>(r));
    std::iota(p.begin(), p.end(), 1);
    std::vector<Permutation> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace

Grading grading_c0(const QuiverSpec& spec) {
    Grading g{spec, IntVector(spec.ambient_dim())};
    for (int i = 1; i <= spec.n; ++i) {
        const Integer base = power(spec.r2 + 1, i - 1);
        for (int j = 1; j <= spec.r2; ++j) {
            for (int k = 1; k <= spec.r1; ++k) g.c[spec.index(i, j, k)] = base * j * k;
        }
    }
    return g;
}

Grading replace_first_rows(Grading g) {
    const QuiverSpec& spec = g.spec;
    if (spec.r1 != 2) throw UnsupportedError("the C_2 grading needs r1 = 2");
    if (spec.r2 < 2) throw UnsupportedError("the C_2 grading needs r2 >= 2");
    const Integer top = power(spec.r2 + 1, spec.n);
    for (int k = 1; k <= spec.r1; ++k) {
        g.c[spec.index(1, 1, k)] = top * k;
        g.c[spec.index(1, 2, k)] = top * 2 * k;
    }
    return g;
}

Grading grading_c2(const QuiverSpec& spec) { return replace_first_rows(grading_c0(spec)); }

std::vector<Subset> subsets(int N, int r) {
    std::vector<Subset> out;
    if (r < 0 || r > N) return out;
    Subset s(static_cast<std::size_t>(r));
    std::iota(s.begin(), s.end(), 1);
    while (true) {
        out.push_back(s);
        int t = r - 1;
        while (t >= 0 && s[static_cast<std::size_t>(t)] == N - r + t + 1) --t;
        if (t < 0) break;
        ++s[static_cast<std::size_t>(t)];
        for (int u = t + 1; u < r; ++u) s[static_cast<std::size_t>(u)] = s[static_cast<std::size_t>(u - 1)] + 1;
    }
    return out;
}

MatchingField block_diagonal_mf(int b, int r, int N) {
    if (b < 0 || b > N || r < 1 || r > N) throw PreconditionError("block_diagonal_mf needs 0 <= b <= N, 1 <= r <= N");
    MatchingField mf{r, N, {}};
    for (const auto& j : subsets(N, r)) {
        Permutation p(static_cast<std::size_t>(r));
        std::iota(p.begin(), p.end(), 1);
        const auto hits = std::count_if(j.begin(), j.end(), [b](int x) { return x <= b; });
        if (hits == 1 && r >= 2) std::swap(p[0], p[1]);
        mf.assignment.emplace(j, std::move(p));
    }
    return mf;
}

InducedField induced_matching_field(const Grading& c, const GrassmannianSpec& g) {
    if (c.c.size() != g.ambient.ambient_dim()) throw ShapeError("grading does not match the quiver");
    InducedField out;
    MatchingField mf{g.r(), g.N(), {}};
    const auto perms = permutations(g.r());
    for (const auto& j : subsets(g.N(), g.r())) {
        Integer best;
        const Permutation* arg = nullptr;
        bool tie = false;
        for (const auto& p : perms) {
            Integer w = 0;
            for (std::size_t t = 0; t < j.size(); ++t) w += c.c[g.ambient_index(p[t], j[t])];
            if (!arg || w > best) {
                best = w;
                arg = &p;
                tie = false;
            } else if (w == best) {
                tie = true;
            }
        }
        if (tie) out.ties.push_back(j);
        mf.assignment.emplace(j, *arg);
    }
    if (out.ties.empty()) out.field = std::move(mf);
    return out;
}

ExponentVector chosen_monomial(const MatchingField& mf, const GrassmannianSpec& g, const Subset& j) {
    const Permutation& p = mf.assignment.at(j);
    ExponentVector e(g.ambient.ambient_dim());
    for (std::size_t t = 0; t < j.size(); ++t) ++e[g.ambient_index(p[t], j[t])];
    return e;
}

Polytope mf_polytope(const MatchingField& mf, const GrassmannianSpec& g) {
    RatMatrix pts;
    for (const auto& [j, p] : mf.assignment) {
        RatVector v;
        for (auto x : chosen_monomial(mf, g, j).values) v.emplace_back(x);
        pts.push_back(std::move(v));
    }
    return convex_hull(pts);
}

Cone mf_cone(const MatchingField& mf, const GrassmannianSpec& g) {
    IntMatrix rays;
    for (const auto& [j, p] : mf.assignment) rays.push_back(to_integer(chosen_monomial(mf, g, j).values));
    return double_description(Cone::from_rays(g.ambient.ambient_dim(), std::move(rays)));
}

ColumnCatalog column_catalog(const MatchingField& mf, const GrassmannianSpec& g) {
    ColumnCatalog cat{g, {}};
    for (const auto& [j, p] : mf.assignment) {
        CatalogEntry e{j, chosen_monomial(mf, g, j), std::vector<Label>(j.size())};
        for (std::size_t t = 0; t < j.size(); ++t) e.column[static_cast<std::size_t>(p[t] - 1)] = ground_label(g, j[t]);
        cat.entries.push_back(std::move(e));
    }
    std::sort(cat.entries.begin(), cat.entries.end(),
              [](const CatalogEntry& a, const CatalogEntry& b) { return a.column < b.column; });
    return cat;
}

std::optional<Tableau> canonical_tableau(const ExponentVector& m, const ColumnCatalog& catalog, std::size_t max_nodes) {
    const std::size_t n = catalog.entries.size();
    const std::size_t dim = m.size();
    const int rows = catalog.grassmannian.r();
    for (auto x : m.values) {
        if (x < 0) return std::nullopt;
    }
    if (m.is_zero()) return Tableau(std::vector<std::vector<Label>>(static_cast<std::size_t>(rows)));
    // covers[i][v]: some column at position >= i uses variable v
    std::vector<std::vector<char>> covers(n + 1, std::vector<char>(dim, 0));
    for (std::size_t i = n; i-- > 0;) {
        covers[i] = covers[i + 1];
        for (std::size_t v = 0; v < dim; ++v) {
            if (catalog.entries[i].exponent[v] > 0) covers[i][v] = 1;
        }
    }
    std::vector<std::vector<std::size_t>> support(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t v = 0; v < dim; ++v) {
            if (catalog.entries[i].exponent[v] > 0) support[i].push_back(v);
        }
    }
    std::vector<std::int64_t> rem = m.values;
    std::vector<std::int64_t> mult(n, 0);
    std::unordered_set<std::string> failed;
    std::size_t nodes = 0;
    std::function<bool(std::size_t)> dfs = [&](std::size_t i) -> bool {
        if (++nodes > max_nodes) throw ResourceLimitError("max_nodes", max_nodes, 0);
        bool zero = true;
        for (std::size_t v = 0; v < dim; ++v) {
            if (rem[v] == 0) continue;
            zero = false;
            if (!covers[i][v]) return false;
        }
        if (zero) return true;
        if (i == n) return false;
        std::string key(reinterpret_cast<const char*>(rem.data()), rem.size() * sizeof(std::int64_t));
        key.append(reinterpret_cast<const char*>(&i), sizeof(i));
        if (failed.count(key)) return false;
        std::int64_t top = std::numeric_limits<std::int64_t>::max();
        for (auto v : support[i]) top = std::min(top, rem[v]);
        for (std::int64_t a = top; a >= 0; --a) {
            for (auto v : support[i]) rem[v] -= a;
            mult[i] = a;
            if (dfs(i + 1)) return true;
            for (auto v : support[i]) rem[v] += a;
        }
        mult[i] = 0;
        failed.insert(std::move(key));
        return false;
    };
    if (!dfs(0)) return std::nullopt;
    std::vector<std::vector<Label>> out(static_cast<std::size_t>(rows));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::int64_t a = 0; a < mult[i]; ++a) {
            for (int r = 0; r < rows; ++r) out[static_cast<std::size_t>(r)].push_back(catalog.entries[i].column[static_cast<std::size_t>(r)]);
        }
    }
    return Tableau(std::move(out));
}

std::optional<LinkedPair> canonical_linked_pair(const ExponentVector& v, const ColumnCatalog& plus,
                                                const ColumnCatalog& minus, const QuiverSpec& spec) {
    if (v.is_zero()) return LinkedPair{};
    auto tp = canonical_tableau(v, plus);
    if (!tp) return std::nullopt;
    auto tm = canonical_tableau(v, minus);
    if (!tm) return std::nullopt;
    return build_linked_pair(*tp, *tm, spec);
}

std::size_t count_two_column_ssyt(int r, int N) {
    const auto all = subsets(N, r);
    std::size_t count = 0;
    for (const auto& a : all) {
        for (const auto& b : all) {
            bool ok = true;
            for (std::size_t t = 0; t < a.size() && ok; ++t) ok = a[t] <= b[t];
            if (ok) ++count;
        }
    }
    return count;
}

std::size_t count_degree_two_products(const MatchingField& mf, const GrassmannianSpec& g) {
    std::vector<ExponentVector> mons;
    for (const auto& [j, p] : mf.assignment) mons.push_back(chosen_monomial(mf, g, j));
    std::set<ExponentVector> products;
    for (std::size_t a = 0; a < mons.size(); ++a) {
        for (std::size_t b = a; b < mons.size(); ++b) products.insert(mons[a] + mons[b]);
    }
    return products.size();
}

bool PipelineReport::all_verified() const {
    if (generators.empty()) return false;
    return std::all_of(generators.begin(), generators.end(),
                       [](const GeneratorStatus& s) { return s.checked && s.lm_verified; });
}

namespace {

std::vector<std::vector<std::vector<Label>>> row_arrangements(const Tableau& t) {
    std::vector<std::vector<std::vector<Label>>> out;
    for (const auto& row : t.rows()) {
        std::vector<Label> r = row;
        std::sort(r.begin(), r.end());
        std::vector<std::vector<Label>> perms;
        do perms.push_back(r);
        while (std::next_permutation(r.begin(), r.end()));
        out.push_back(std::move(perms));
    }
    return out;
}

// Odometer over one arrangement per row.
bool next_choice(std::vector<std::size_t>& idx, const std::vector<std::vector<std::vector<Label>>>& arr) {
    for (std::size_t r = 0; r < idx.size(); ++r) {
        if (++idx[r] < arr[r].size()) return true;
        idx[r] = 0;
    }
    return false;
}

Tableau pick(const std::vector<std::size_t>& idx, const std::vector<std::vector<std::vector<Label>>>& arr) {
    std::vector<std::vector<Label>> rows;
    for (std::size_t r = 0; r < idx.size(); ++r) rows.push_back(arr[r][idx[r]]);
    return Tableau(std::move(rows));
}

bool lm_matches(const LinkedPair& pair, const QuiverSpec& spec, const Grading& c, const ExpandOptions& opt) {
    const SemiInvariant f = expand(pair, spec, opt);
    if (f.empty()) return false;
    const auto lm = leading_monomial(f, c);
    return lm.unique && lm.exponent == mon_plus(pair.plus, spec);
}

}  // namespace

std::optional<Cone> matching_field_cone(const QuiverSpec& spec, const Grading& c) {
    const GrassmannianSpec gm{spec, GrassmannianSpec::Orientation::minus_side};
    const GrassmannianSpec gp{spec, GrassmannianSpec::Orientation::plus_side};
    const InducedField im = induced_matching_field(c, gm);
    const InducedField ip = induced_matching_field(c, gp);
    if (!im.field || !ip.field) return std::nullopt;
    return intersect(mf_cone(*im.field, gm), mf_cone(*ip.field, gp));
}

PipelineReport sagbi_pipeline(const QuiverSpec& spec, const Grading& c, const PipelineOptions& options) {
    PipelineReport rep;
    rep.spec = spec;
    const GrassmannianSpec gm{spec, GrassmannianSpec::Orientation::minus_side};
    const GrassmannianSpec gp{spec, GrassmannianSpec::Orientation::plus_side};
    const InducedField im = induced_matching_field(c, gm);
    const InducedField ip = induced_matching_field(c, gp);
    rep.coherent_minus = im.field.has_value();
    rep.coherent_plus = ip.field.has_value();
    if (!rep.coherent_minus) rep.failures.push_back("grading induces no matching field on Gr(r1, n r2)");
    if (!rep.coherent_plus) rep.failures.push_back("grading induces no matching field on Gr(r2, n r1)");
    if (!rep.ok()) return rep;
    rep.field_minus = im.field;
    rep.field_plus = ip.field;
    rep.assumptions.push_back("Pluecker coordinates form a SAGBI basis for the induced matching field on both Grassmannians");
    rep.degree_two_evidence_minus =
        count_degree_two_products(*im.field, gm) == count_two_column_ssyt(gm.r(), gm.N());
    rep.degree_two_evidence_plus =
        count_degree_two_products(*ip.field, gp) == count_two_column_ssyt(gp.r(), gp.N());

    rep.cone = intersect(mf_cone(*im.field, gm), mf_cone(*ip.field, gp));
    const HeightFunction height = kronecker_height(spec);
    rep.hilbert = hilbert_basis(*rep.cone, height, options.hilbert);
    if (!rep.hilbert->window_clean) rep.failures.push_back("new generators inside the certification window");

    const ColumnCatalog cat_plus = column_catalog(*ip.field, gp);
    const ColumnCatalog cat_minus = column_catalog(*im.field, gm);
    for (std::size_t g = 0; g < rep.hilbert->generators.size(); ++g) {
        GeneratorStatus st;
        st.exponent = ExponentVector(to_int64(rep.hilbert->generators[g]));
        st.degree = rep.hilbert->heights[g];
        st.pair = canonical_linked_pair(st.exponent, cat_plus, cat_minus, spec);
        if (!st.pair) {
            rep.failures.push_back("no canonical pair for generator " + std::to_string(g));
            rep.generators.push_back(std::move(st));
            continue;
        }
        if (st.degree <= options.verify_max_degree) {
            st.checked = true;
            st.lm_verified = lm_matches(*st.pair, spec, c, options.expand);
            if (!st.lm_verified) {
                // Search rearrangements within rows: plus side outer, minus side inner.
                const auto ap = row_arrangements(st.pair->plus);
                const auto am = row_arrangements(st.pair->minus);
                std::vector<std::size_t> ip_idx(ap.size(), 0);
                std::size_t attempts = 0;
                bool found = false;
                do {
                    std::vector<std::size_t> im_idx(am.size(), 0);
                    do {
                        if (++attempts > options.fallback_cap) break;
                        auto cand = build_linked_pair(pick(ip_idx, ap), pick(im_idx, am), spec);
                        if (cand && lm_matches(*cand, spec, c, options.expand)) {
                            st.pair = std::move(cand);
                            found = true;
                        }
                    } while (!found && next_choice(im_idx, am));
                } while (!found && attempts <= options.fallback_cap && next_choice(ip_idx, ap));
                st.fallback_used = true;
                st.lm_verified = found;
                if (!found) rep.failures.push_back("leading monomial check failed for generator " + std::to_string(g));
            }
        }
        rep.generators.push_back(std::move(st));
    }

    rep.polytope = slice_polytope(*rep.cone, height, 1);
    rep.polytope_vertices_integral = std::all_of(rep.polytope->vertices.begin(), rep.polytope->vertices.end(),
                                                 [](const RatVector& v) {
                                                     return std::all_of(v.begin(), v.end(), [](const Rational& q) {
                                                         return denominator(q) == 1;
                                                     });
                                                 });
    rep.polytope_lattice_points =
        for_each_lattice_point_at_height(*rep.cone, 1, height, [](const std::vector<std::int64_t>&) {}, options.limits);
    rep.fan = normal_fan_rays(*rep.polytope);
    rep.toric = classify_toric(*rep.fan, options.limits);
    return rep;
}

}  // namespace kronecker
