#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

namespace tnd {

// Append-only result store: one "key TAB value TAB checksum" line per entry,
// keys are canonical operation strings that already embed the engine version.
// Lines whose checksum does not match are ignored on load, so a torn write
// degrades into a recompute. Later entries for a key win.
class CacheStore {
public:
    explicit CacheStore(const std::filesystem::path& dir);

    // Reads TNDEFORM_CACHE; empty optional when unset.
    static std::optional<CacheStore> from_env();

    static const char* engine_version();

    std::optional<std::string> get(const std::string& key) const;
    void put(const std::string& key, const std::string& value);

    const std::filesystem::path& path() const { return file_; }

private:
    void load();
    std::filesystem::path file_;
    std::map<std::string, std::string> entries_;
};

// FNV-1a, hex; entry integrity only.
std::string fnv1a64_hex(const std::string& data);

}  // namespace tnd
