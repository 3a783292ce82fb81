#include "kronecker/cache.hpp"

#include <openssl/evp.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

namespace kronecker {

std::string sha256_hex(std::string_view bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("sha256 failed");
    }
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int t = 0; t < len; ++t) {
        out += hex[md[t] >> 4];
        out += hex[md[t] & 0xf];
    }
    return out;
}

namespace {

class DirLock {
public:
    explicit DirLock(const std::filesystem::path& file) {
        fd_ = ::open(file.c_str(), O_RDWR | O_CREAT, 0644);
        if (fd_ < 0) throw std::runtime_error("cannot open lock file " + file.string());
        if (::flock(fd_, LOCK_EX) != 0) {
            ::close(fd_);
            throw std::runtime_error("cannot lock " + file.string());
        }
    }
    ~DirLock() {
        ::flock(fd_, LOCK_UN);
        ::close(fd_);
    }
    DirLock(const DirLock&) = delete;
    DirLock& operator=(const DirLock&) = delete;

private:
    int fd_ = -1;
};

}  // namespace

ArtifactCache::ArtifactCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
}

std::optional<ArtifactCache> ArtifactCache::from_environment() {
    const char* d = std::getenv(kCacheDirVariable);
    if (!d || !*d) return std::nullopt;
    return ArtifactCache(d);
}

std::string ArtifactCache::key(const Json& config) { return sha256_hex(config.dump() + "\n" + code_version()); }

std::filesystem::path ArtifactCache::path_for(const std::string& key) const { return dir_ / (key + ".json"); }

std::optional<Json> ArtifactCache::load(const std::string& key) const {
    std::ifstream in(path_for(key));
    if (!in) return std::nullopt;
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object()) return std::nullopt;
    if (j.value("code_version", std::string()) != code_version()) return std::nullopt;
    if (j.value("schema_version", 0) != kSchemaVersion) return std::nullopt;
    return j;
}

void ArtifactCache::store(const std::string& key, const Json& artifact) const {
    DirLock lock(dir_ / ".lock");
    const auto target = path_for(key);
    auto tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << artifact.dump(1) << '\n';
    }
    std::filesystem::rename(tmp, target);
}

}  // namespace kronecker
