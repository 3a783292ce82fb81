#pragma once

// Published constants for the four reproducible examples, in one versioned table.

#include "kronecker/quiver.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kronecker::cli {

inline constexpr int kExpectedTableVersion = 1;

using MetricList = std::vector<std::pair<std::string, std::string>>;

struct ExpectedExample {
    std::string id;
    QuiverSpec spec;
    std::string grading;  // gc | c2
    MetricList metrics;
    MetricList slow_metrics;  // only checked with --slow
};

const std::vector<ExpectedExample>& expected_table();
const ExpectedExample* find_expected(std::string_view id);

}  // namespace kronecker::cli
