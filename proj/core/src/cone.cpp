#include "kronecker/cone.hpp"

#include "kronecker/lp.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

namespace kronecker {

Halfspace Halfspace::inequality(IntVector normal) {
    if (is_zero(normal)) throw std::invalid_argument("halfspace normal must be nonzero");
    return Halfspace{make_primitive(std::move(normal)), Kind::inequality};
}

Halfspace Halfspace::equation(IntVector normal) {
    if (is_zero(normal)) throw std::invalid_argument("halfspace normal must be nonzero");
    return Halfspace{make_primitive(std::move(normal)), Kind::equation};
}

Cone Cone::from_halfspaces(std::size_t ambient_dim, std::vector<Halfspace> hrep) {
    Cone c(ambient_dim);
    for (const auto& h : hrep) {
        if (h.normal.size() != ambient_dim) throw std::invalid_argument("halfspace dimension mismatch");
    }
    c.hrep_ = std::move(hrep);
    return c;
}

Cone Cone::from_rays(std::size_t ambient_dim, IntMatrix rays) {
    Cone c(ambient_dim);
    for (auto& r : rays) {
        if (r.size() != ambient_dim) throw std::invalid_argument("ray dimension mismatch");
        r = make_primitive(std::move(r));
    }
    c.vrep_ = std::move(rays);
    return c;
}

const std::vector<Halfspace>& Cone::hrep() const {
    if (!hrep_) throw std::logic_error("cone has no halfspace representation");
    return *hrep_;
}

const IntMatrix& Cone::rays() const {
    if (!vrep_) throw std::logic_error("cone has no ray representation");
    return *vrep_;
}

void Cone::set_vrep(IntMatrix rays, IntMatrix lineality) {
    vrep_ = std::move(rays);
    lineality_ = std::move(lineality);
}

std::size_t Cone::dimension() const {
    IntMatrix all = rays();
    for (const auto& l : lineality_) all.push_back(l);
    return rank(all);
}

std::vector<Halfspace> Cone::equations() const {
    std::vector<Halfspace> out;
    for (const auto& h : hrep()) {
        if (h.kind == Halfspace::Kind::equation) out.push_back(h);
    }
    return out;
}

std::vector<Halfspace> Cone::inequalities() const {
    std::vector<Halfspace> out;
    for (const auto& h : hrep()) {
        if (h.kind == Halfspace::Kind::inequality) out.push_back(h);
    }
    return out;
}

namespace {

class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t n) : words_((n + 63) / 64, 0) {}
    void resize(std::size_t n) { words_.resize((n + 63) / 64, 0); }
    void set(std::size_t i) { words_[i / 64] |= (std::uint64_t{1} << (i % 64)); }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }
    Bits operator&(const Bits& o) const {
        Bits r;
        r.words_.resize(words_.size());
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
        return r;
    }
    bool subset_of(const Bits& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if ((words_[i] & ~o.words_[i]) != 0) return false;
        }
        return true;
    }

private:
    std::vector<std::uint64_t> words_;
};

struct DDRay {
    IntVector v;
    Bits zero;
};

IntVector combine(const Integer& a, const IntVector& x, const Integer& b, const IntVector& y) {
    IntVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i] - b * y[i];
    return make_primitive(std::move(out));
}

}  // namespace

DoubleDescriptionResult rays_from_halfspaces(std::size_t dim, const std::vector<Halfspace>& hrep) {
    std::vector<const Halfspace*> order;
    for (const auto& h : hrep) {
        if (h.kind == Halfspace::Kind::equation) order.push_back(&h);
    }
    for (const auto& h : hrep) {
        if (h.kind == Halfspace::Kind::inequality) order.push_back(&h);
    }
    const std::size_t total = order.size();

    IntMatrix lineality;
    for (std::size_t i = 0; i < dim; ++i) {
        IntVector e(dim, Integer(0));
        e[i] = 1;
        lineality.push_back(std::move(e));
    }
    std::vector<DDRay> rays;

    for (std::size_t idx = 0; idx < total; ++idx) {
        // Once the lineality is gone, take the inequality creating the fewest candidate pairs.
        if (lineality.empty() && order[idx]->kind == Halfspace::Kind::inequality && idx + 1 < total) {
            std::size_t best = idx, best_cost = std::numeric_limits<std::size_t>::max();
            for (std::size_t j = idx; j < total && best_cost > 0; ++j) {
                std::size_t np = 0, nn = 0;
                for (const auto& r : rays) {
                    const int sg = dot(order[j]->normal, r.v).sign();
                    np += sg > 0;
                    nn += sg < 0;
                }
                if (np * nn < best_cost) {
                    best_cost = np * nn;
                    best = j;
                }
            }
            std::swap(order[idx], order[best]);
        }
        const IntVector& a = order[idx]->normal;
        const bool is_eq = order[idx]->kind == Halfspace::Kind::equation;

        std::size_t pivot = lineality.size();
        Integer pivot_val;
        for (std::size_t i = 0; i < lineality.size(); ++i) {
            Integer s = dot(a, lineality[i]);
            if (s != 0) {
                pivot = i;
                pivot_val = s;
                break;
            }
        }
        if (pivot < lineality.size()) {
            IntVector l0 = lineality[pivot];
            if (pivot_val < 0) {
                for (auto& x : l0) x = -x;
                pivot_val = -pivot_val;
            }
            IntMatrix next_lin;
            for (std::size_t i = 0; i < lineality.size(); ++i) {
                if (i == pivot) continue;
                Integer s = dot(a, lineality[i]);
                if (s == 0) next_lin.push_back(lineality[i]);
                else next_lin.push_back(combine(pivot_val, lineality[i], s, l0));
            }
            for (auto& r : rays) {
                Integer s = dot(a, r.v);
                if (s != 0) r.v = combine(pivot_val, r.v, s, l0);
                r.zero.resize(total);
                r.zero.set(idx);
            }
            if (!is_eq) {
                DDRay nr{l0, Bits(total)};
                for (std::size_t j = 0; j < idx; ++j) nr.zero.set(j);
                rays.push_back(std::move(nr));
            }
            lineality = std::move(next_lin);
            continue;
        }

        std::vector<Integer> val(rays.size());
        std::vector<std::size_t> pos, neg, zer;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            rays[i].zero.resize(total);
            val[i] = dot(a, rays[i].v);
            if (val[i] > 0) pos.push_back(i);
            else if (val[i] < 0) neg.push_back(i);
            else zer.push_back(i);
        }
        if (neg.empty() && !is_eq) {
            for (auto i : zer) rays[i].zero.set(idx);
            continue;
        }
        const std::size_t need =
            dim >= lineality.size() + 2 ? dim - lineality.size() - 2 : 0;
        std::vector<DDRay> next;
        for (std::size_t p : pos) {
            for (std::size_t n : neg) {
                Bits common = rays[p].zero & rays[n].zero;
                if (common.count() < need) continue;
                bool adjacent = true;
                for (std::size_t k = 0; k < rays.size(); ++k) {
                    if (k == p || k == n) continue;
                    if (common.subset_of(rays[k].zero)) {
                        adjacent = false;
                        break;
                    }
                }
                if (!adjacent) continue;
                DDRay nr{combine(val[p], rays[n].v, val[n], rays[p].v), common};
                nr.zero.set(idx);
                next.push_back(std::move(nr));
            }
        }
        for (auto i : zer) {
            rays[i].zero.set(idx);
            next.push_back(rays[i]);
        }
        if (!is_eq) {
            for (auto i : pos) next.push_back(rays[i]);
        }
        rays = std::move(next);
    }

    DoubleDescriptionResult out;
    for (auto& r : rays) out.rays.push_back(std::move(r.v));
    std::sort(out.rays.begin(), out.rays.end());
    out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
    out.lineality = std::move(lineality);
    return out;
}

std::vector<Halfspace> irredundant_hrep(std::size_t dim, const IntMatrix& rays,
                                        const std::vector<Halfspace>& candidates) {
    std::vector<Halfspace> out;
    IntMatrix kernel = integer_kernel(rays, dim);
    for (auto& k : kernel) out.push_back(Halfspace::equation(k));
    const std::size_t cone_dim = rank(rays);
    std::set<std::vector<std::size_t>> seen;
    for (const auto& h : candidates) {
        if (h.kind != Halfspace::Kind::inequality) continue;
        std::vector<std::size_t> tight;
        IntMatrix tight_rays;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            Integer s = dot(h.normal, rays[i]);
            if (s < 0) throw std::logic_error("ray violates inequality in irredundant_hrep");
            if (s == 0) {
                tight.push_back(i);
                tight_rays.push_back(rays[i]);
            }
        }
        if (tight.size() == rays.size()) continue;  // implicit equation
        if (cone_dim == 0 || rank(tight_rays) != cone_dim - 1) continue;
        if (!seen.insert(tight).second) continue;
        out.push_back(h);
    }
    return out;
}

std::vector<Halfspace> halfspaces_from_rays(std::size_t dim, const IntMatrix& generators) {
    std::vector<Halfspace> as_constraints;
    for (const auto& g : generators) {
        if (!is_zero(g)) as_constraints.push_back(Halfspace::inequality(g));
    }
    DoubleDescriptionResult dual = rays_from_halfspaces(dim, as_constraints);
    std::vector<Halfspace> candidates;
    for (auto& r : dual.rays) candidates.push_back(Halfspace::inequality(r));
    IntMatrix nonzero;
    for (const auto& g : generators) {
        if (!is_zero(g)) nonzero.push_back(make_primitive(g));
    }
    return irredundant_hrep(dim, nonzero, candidates);
}

Cone double_description(const Cone& c) {
    Cone out(c.ambient_dim());
    const std::size_t dim = c.ambient_dim();
    if (c.has_hrep()) {
        DoubleDescriptionResult dd = rays_from_halfspaces(dim, c.hrep());
        if (!dd.lineality.empty()) {
            out.set_hrep(c.hrep());
            out.set_vrep(std::move(dd.rays), std::move(dd.lineality));
            return out;
        }
        out.set_hrep(irredundant_hrep(dim, dd.rays, c.hrep()));
        out.set_vrep(std::move(dd.rays), {});
        return out;
    }
    if (!c.has_vrep()) throw std::logic_error("double_description needs at least one representation");
    std::vector<Halfspace> h = halfspaces_from_rays(dim, c.rays());
    DoubleDescriptionResult dd = rays_from_halfspaces(dim, h);
    if (dd.lineality.empty()) h = irredundant_hrep(dim, dd.rays, h);
    out.set_hrep(std::move(h));
    out.set_vrep(std::move(dd.rays), std::move(dd.lineality));
    return out;
}

std::vector<std::vector<std::size_t>> facet_ray_incidence(const Cone& c) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& h : c.hrep()) {
        if (h.kind != Halfspace::Kind::inequality) continue;
        std::vector<std::size_t> tight;
        for (std::size_t i = 0; i < c.rays().size(); ++i) {
            if (dot(h.normal, c.rays()[i]) == 0) tight.push_back(i);
        }
        out.push_back(std::move(tight));
    }
    return out;
}

Certificate certify(const Cone& c) {
    Certificate cert;
    const auto& rays = c.rays();
    const auto& hrep = c.hrep();
    cert.rays_satisfy_halfspaces = true;
    for (const auto& h : hrep) {
        for (const auto& r : rays) {
            Integer s = dot(h.normal, r);
            if (s < 0 || (h.kind == Halfspace::Kind::equation && s != 0)) {
                cert.rays_satisfy_halfspaces = false;
            }
        }
        for (const auto& l : c.lineality()) {
            if (dot(h.normal, l) != 0) cert.rays_satisfy_halfspaces = false;
        }
    }
    const std::size_t cone_dim = c.dimension();
    cert.facets_supported = true;
    for (const auto& tight : facet_ray_incidence(c)) {
        IntMatrix sub;
        for (auto i : tight) sub.push_back(rays[i]);
        for (const auto& l : c.lineality()) sub.push_back(l);
        if (cone_dim == 0 || rank(sub) != cone_dim - 1) cert.facets_supported = false;
    }
    // Independent route: facets recomputed from the rays by the dual conversion.
    if (c.lineality().empty()) {
        std::vector<Halfspace> again = halfspaces_from_rays(c.ambient_dim(), rays);
        auto incidence = [&](const std::vector<Halfspace>& hs) {
            std::set<std::vector<std::size_t>> sets;
            for (const auto& h : hs) {
                if (h.kind != Halfspace::Kind::inequality) continue;
                std::vector<std::size_t> t;
                for (std::size_t i = 0; i < rays.size(); ++i) {
                    if (dot(h.normal, rays[i]) == 0) t.push_back(i);
                }
                sets.insert(t);
            }
            return sets;
        };
        auto count_eq = [](const std::vector<Halfspace>& hs) {
            IntMatrix e;
            for (const auto& h : hs) {
                if (h.kind == Halfspace::Kind::equation) e.push_back(h.normal);
            }
            return rank(e);
        };
        cert.round_trip = incidence(again) == incidence(hrep) &&
                          count_eq(again) == count_eq(hrep) &&
                          c.ambient_dim() - count_eq(hrep) == cone_dim;
    }
    return cert;
}

bool contains(const Cone& c, const RatVector& point) {
    if (c.has_hrep()) {
        for (const auto& h : c.hrep()) {
            Rational s = dot(h.normal, point);
            if (s < 0) return false;
            if (h.kind == Halfspace::Kind::equation && s != 0) return false;
        }
        return true;
    }
    IntMatrix gens = c.rays();
    for (const auto& l : c.lineality()) {
        gens.push_back(l);
        IntVector m = l;
        for (auto& x : m) x = -x;
        gens.push_back(std::move(m));
    }
    return nonnegative_combination(gens, point).has_value();
}

bool contains(const Cone& c, const IntVector& point) { return contains(c, to_rational(point)); }

}  // namespace kronecker
