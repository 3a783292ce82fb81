#pragma once

// Content-addressed artifact cache. Keys hash the job configuration together with the code
// version, so artifacts written by another version are never read back.

#include "kronecker/io.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace kronecker {

inline constexpr const char* kCacheDirVariable = "KRONECKER_CACHE_DIR";

std::string sha256_hex(std::string_view bytes);

class ArtifactCache {
public:
    explicit ArtifactCache(std::filesystem::path dir);

    /// Directory from KRONECKER_CACHE_DIR, or nullopt when unset or empty.
    static std::optional<ArtifactCache> from_environment();

    /// sha256(config.dump() + code version), hex.
    static std::string key(const Json& config);

    std::optional<Json> load(const std::string& key) const;
    /// Atomic (temp file + rename) under an exclusive lock on <dir>/.lock.
    void store(const std::string& key, const Json& artifact) const;

    const std::filesystem::path& dir() const { return dir_; }

private:
    std::filesystem::path path_for(const std::string& key) const;
    std::filesystem::path dir_;
};

}  // namespace kronecker
