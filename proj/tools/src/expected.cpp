#include "expected.hpp"

#include <algorithm>
#include <iterator>

namespace kronecker::cli {

namespace {

MetricList k323_mf_pairs() {
    // plus :: minus, in generator order
    static const char* pairs[] = {
        "21 21 | 22 31 | 32 32 :: 21 21 32 | 22 33 33", "21 31 | 31 12 | 32 32 :: 21 31 32 | 12 33 33",
        "21 31 | 22 12 | 31 32 :: 21 31 33 | 22 33 12", "21 21 | 12 31 | 32 32 :: 21 21 32 | 12 33 33",
        "21 21 | 12 31 | 22 32 :: 21 21 32 | 12 23 33", "21 21 | 12 22 | 31 32 :: 21 21 33 | 22 33 12",
        "21 21 | 12 22 | 22 31 :: 21 21 33 | 22 23 12", "21 31 | 12 12 | 31 32 :: 21 31 33 | 12 33 12",
        "21 21 | 12 12 | 31 32 :: 21 21 33 | 12 33 12", "21 21 | 12 12 | 22 31 :: 21 21 33 | 12 23 12",
        "11 21 | 12 31 | 32 32 :: 11 21 32 | 12 33 33", "11 21 | 12 31 | 22 32 :: 11 21 32 | 12 23 33",
        "11 21 | 12 22 | 21 32 :: 11 21 23 | 12 22 33", "11 31 | 12 12 | 31 32 :: 11 31 33 | 12 33 12",
        "11 31 | 12 12 | 21 32 :: 11 23 31 | 12 12 33", "11 21 | 12 12 | 31 32 :: 11 21 33 | 12 33 12",
        "11 21 | 12 12 | 22 31 :: 11 21 33 | 12 23 12", "11 21 | 12 12 | 21 32 :: 11 21 23 | 12 12 33",
        "11 21 | 12 12 | 21 22 :: 11 21 23 | 12 23 12", "11 11 | 12 12 | 21 32 :: 11 11 23 | 12 12 33",
    };
    MetricList out;
    for (std::size_t t = 0; t < std::size(pairs); ++t) out.emplace_back("canonical_pair[" + std::to_string(t + 1) + "]", pairs[t]);
    return out;
}

MetricList k423_height3() {
    // plus-side tableaux, sorted
    static const char* tabs[] = {
        "11 11 11 11 11 22 | 12 12 12 12 32 32 | 21 21 21 21 42 42",
        "11 11 11 11 11 22 | 12 12 12 12 32 32 | 21 21 21 31 42 42",
        "11 11 11 11 11 22 | 12 12 12 12 32 32 | 21 21 31 31 42 42",
        "11 11 11 11 11 22 | 12 12 12 22 32 32 | 21 21 21 31 42 42",
        "11 11 11 11 11 22 | 12 12 12 22 32 32 | 21 21 31 31 42 42",
        "11 11 11 11 11 22 | 12 12 22 22 32 32 | 21 21 31 31 42 42",
        "11 11 11 11 21 22 | 12 12 12 22 32 32 | 21 21 21 31 42 42",
        "11 11 11 11 21 22 | 12 12 12 22 32 32 | 21 21 31 31 42 42",
        "11 11 11 11 21 22 | 12 12 22 22 32 32 | 21 21 31 31 42 42",
        "11 11 11 21 21 22 | 12 12 22 22 32 32 | 21 21 31 31 42 42",
        "11 11 22 22 32 32 | 21 21 31 31 41 41 | 31 32 32 42 42 42",
        "11 11 22 22 32 32 | 21 21 31 31 41 41 | 31 32 42 42 42 42",
        "11 11 22 22 32 32 | 21 21 31 31 41 41 | 31 42 42 42 42 42",
        "11 11 22 22 32 32 | 21 21 31 41 41 41 | 31 32 42 42 42 42",
        "11 11 22 22 32 32 | 21 21 31 41 41 41 | 31 42 42 42 42 42",
        "11 11 22 22 32 32 | 21 21 41 41 41 41 | 31 42 42 42 42 42",
        "11 11 22 32 32 32 | 21 21 31 41 41 41 | 31 32 42 42 42 42",
        "11 11 22 32 32 32 | 21 21 31 41 41 41 | 31 42 42 42 42 42",
        "11 11 22 32 32 32 | 21 21 41 41 41 41 | 31 42 42 42 42 42",
        "11 11 32 32 32 32 | 21 21 41 41 41 41 | 31 42 42 42 42 42",
    };
    std::vector<std::string> v(std::begin(tabs), std::end(tabs));
    std::sort(v.begin(), v.end());
    MetricList out;
    for (std::size_t t = 0; t < v.size(); ++t) out.emplace_back("height3_tableau[" + std::to_string(t + 1) + "]", v[t]);
    return out;
}

MetricList join(MetricList a, const MetricList& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

const std::vector<ExpectedExample>& expected_table() {
    static const std::vector<ExpectedExample> table = {
        {"K323-gc",
         QuiverSpec(3, 2, 3),
         "gc",
         {{"generators", "20"},
          {"generators_by_height", "20"},
          {"slice_vertices", "18"},
          {"fan_rays", "13"},
          {"fano", "true"},
          {"gorenstein", "true"},
          {"terminal", "true"}},
         {}},
        {"K423-gc",
         QuiverSpec(4, 2, 3),
         "gc",
         join(join({{"generators", "232"}, {"generators_by_height", "126/86/20"}}, k423_height3()),
              {{"slice_vertices", "141"}, {"fan_rays", "26"}, {"fano", "true"}, {"gorenstein", "false"}}),
         {{"height3_leading_monomials_verified", "20"}}},
        {"K323-mf",
         QuiverSpec(3, 2, 3),
         "c2",
         join(join({{"generators", "20"}, {"generators_by_height", "20"}}, k323_mf_pairs()),
              {{"leading_monomials_verified", "20"},
               {"fallback_used", "0"},
               {"polytope_vertices", "20"},
               {"polytope_lattice_points", "20"},
               {"polytope_vertices_integral", "true"},
               {"fan_rays", "12"},
               {"fano", "true"},
               {"gorenstein", "true"},
               {"terminal", "true"},
               {"mirror_vertices", "12"},
               {"mirror_lattice_points", "13"},
               {"mirror_reflexive", "true"},
               {"period",
                "1,0,0,18,0,0,4590,0,0,1728720,0,0,876610350,0,0,520461209268,0,0,343838539188144,0,0"}}),
         {}},
        {"K423-mf",
         QuiverSpec(4, 2, 3),
         "c2",
         {{"generators", "206"},
          {"generators_by_height", "126/80"},
          {"leading_monomials_verified", "206"},
          {"polytope_vertices", "142"},
          {"polytope_vertices_integral", "false"},
          {"fano", "true"},
          {"gorenstein", "true"},
          {"terminal", "true"},
          {"fano_index", "4"},
          {"spanning_vertices", "30"},
          {"spanning_lattice_points", "31"}},
         {{"period_vanishes_off_multiples_of_fano_index", "true"}}},
    };
    return table;
}

const ExpectedExample* find_expected(std::string_view id) {
    for (const auto& e : expected_table()) {
        if (e.id == id) return &e;
    }
    return nullptr;
}

}  // namespace kronecker::cli
