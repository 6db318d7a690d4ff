#include "tndeform/cache.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace tnd {

std::string fnv1a64_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

CacheStore::CacheStore(const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    file_ = dir / "tndeform-cache.tsv";
    load();
}

std::optional<CacheStore> CacheStore::from_env() {
    const char* dir = std::getenv("TNDEFORM_CACHE");
    if (!dir || !*dir) return std::nullopt;
    return CacheStore(dir);
}

const char* CacheStore::engine_version() { return "tndeform-1"; }

void CacheStore::load() {
    std::ifstream in(file_);
    if (!in) return;
    std::string line;
    while (std::getline(in, line)) {
        auto t1 = line.find('\t');
        if (t1 == std::string::npos) continue;
        auto t2 = line.find('\t', t1 + 1);
        if (t2 == std::string::npos) continue;
        std::string key = line.substr(0, t1);
        std::string value = line.substr(t1 + 1, t2 - t1 - 1);
        std::string sum = line.substr(t2 + 1);
        if (sum != fnv1a64_hex(key + '\t' + value)) continue;  // corrupt, skip
        entries_[key] = value;
    }
}

std::optional<std::string> CacheStore::get(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void CacheStore::put(const std::string& key, const std::string& value) {
    if (key.find('\t') != std::string::npos || key.find('\n') != std::string::npos ||
        value.find('\t') != std::string::npos || value.find('\n') != std::string::npos)
        throw std::invalid_argument("CacheStore: key/value must not contain tab or newline");
    std::ofstream out(file_, std::ios::app);
    out << key << '\t' << value << '\t' << fnv1a64_hex(key + '\t' + value) << '\n';
    out.flush();
    entries_[key] = value;
}

}  // namespace tnd
