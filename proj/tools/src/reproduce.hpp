#pragma once

#include "expected.hpp"
#include "jobs.hpp"

#include <string>
#include <vector>

namespace kronecker::cli {

struct MetricResult {
    std::string name;
    std::string expected;
    std::string computed;
    bool match = false;
};

struct StageTime {
    std::string stage;
    double seconds = 0;
};

struct ReproReport {
    std::string example;
    std::vector<MetricResult> metrics;
    std::vector<StageTime> stages;
    std::size_t cache_hits = 0;

    bool pass() const;
    Json to_json() const;
    std::string text() const;
};

struct ReproOptions {
    bool slow = false;
    bool use_cache = true;
    EnumerationLimits limits;
};

/// Throws UsageError for an unknown example id.
ReproReport reproduce(std::string_view example, const ReproOptions& options = {});

}  // namespace kronecker::cli
