#pragma once

// Pipeline stages behind the CLI. Each stage returns a JSON artifact and goes through the
// artifact cache when one is configured.

#include "kronecker/cache.hpp"
#include "kronecker/io.hpp"

#include <filesystem>
#include <functional>
#include <optional>
#include <string>

namespace kronecker::cli {

/// Bad flags, unreadable or mismatched input artifacts. Exit status 4.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A computation finished but disagreed with what was required of it. Exit status 2.
class MismatchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct JobConfig {
    QuiverSpec spec{1, 1, 1};
    std::string grading = "gc";  // gc (plain cone) | c0 | c2 | path to a grading artifact
    int max_degree = 4;
    int certify_window = 2;
    EnumerationLimits limits;
    std::size_t max_orbit = 50'000'000;
    std::filesystem::path output_dir = ".";
    bool use_cache = true;
};

/// Everything that influences results; the cache key is derived from this.
Json config_json(const JobConfig& cfg);

/// Null for "gc".
std::optional<Grading> resolve_grading(const JobConfig& cfg);

class Stages {
public:
    explicit Stages(JobConfig cfg);

    const JobConfig& config() const { return cfg_; }

    Json cone();
    Json generators();
    Json polytope();
    Json fan();
    Json classify();
    Json mirror();
    Json period(std::size_t terms);
    Json sagbi(std::int64_t verify_max_degree = 1'000'000);

    std::size_t cache_hits() const { return hits_; }

private:
    Json cached(const std::string& kind, Json extra, const std::function<Json()>& produce);
    Cone cone_object();

    JobConfig cfg_;
    std::optional<ArtifactCache> cache_;
    std::size_t hits_ = 0;
};

/// Stage functions on explicit upstream artifacts.
Json generators_from(const Json& cone_artifact, const JobConfig& cfg);
Json polytope_from(const Json& cone_artifact, const JobConfig& cfg);
Json fan_from(const Json& polytope_artifact);
Json classify_from(const Json& fan_or_sagbi_artifact, const JobConfig& cfg);
Json mirror_from(const Json& fan_or_sagbi_artifact, const JobConfig& cfg);
Json period_from(const Json& mirror_artifact, std::size_t terms);

Json read_artifact(const std::filesystem::path& p);
void write_artifact(const std::filesystem::path& p, const Json& artifact);

/// One-paragraph human summary of an artifact.
std::string summarize(const Json& artifact);

}  // namespace kronecker::cli
