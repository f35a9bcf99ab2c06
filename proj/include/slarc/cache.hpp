#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "slarc/json_io.hpp"

namespace slarc {

inline constexpr const char* kCacheVersion = "slarc-1";

/// Content-addressed JSON result cache. Keys carry operation, parameters,
/// field and library version; corrupt or mismatched entries are ignored and
/// recomputed.
class Cache {
public:
    Cache() = default;

    static Cache disabled() { return Cache(); }

    static Cache at(const std::string& dir) {
        Cache c;
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (ec || !std::filesystem::is_directory(dir)) {
            std::cerr << "slarc: cache directory '" << dir
                      << "' is not usable, caching disabled\n";
            return c;
        }
        c.dir_ = dir;
        c.enabled_ = true;
        return c;
    }

    /// Resolution order: explicit flag, then SLARC_CACHE, else disabled.
    static Cache configure(const std::string& flag_dir, bool no_cache) {
        if (no_cache) return disabled();
        if (!flag_dir.empty()) return at(flag_dir);
        if (const char* env = std::getenv("SLARC_CACHE")) return at(env);
        return disabled();
    }

    bool enabled() const { return enabled_; }

    std::optional<Json> get(const std::string& key) const {
        if (!enabled_) return std::nullopt;
        std::ifstream in(path_for(key));
        if (!in) return std::nullopt;
        Json j = Json::parse(in, nullptr, false);
        if (j.is_discarded() || !j.is_object()) return std::nullopt;
        if (j.value("key", std::string{}) != key) return std::nullopt;
        if (!j.contains("value")) return std::nullopt;
        return j["value"];
    }

    void put(const std::string& key, const Json& value) const {
        if (!enabled_) return;
        Json j;
        j["key"] = key;
        j["value"] = value;
        std::ofstream out(path_for(key));
        if (out) out << j.dump();
    }

    static std::string make_key(const std::string& op, const std::string& params,
                                const std::string& field) {
        return std::string(kCacheVersion) + "|" + op + "|" + params + "|" + field;
    }

private:
    std::filesystem::path path_for(const std::string& key) const {
        // FNV-1a 64
        uint64_t h = 1469598103934665603ull;
        for (unsigned char c : key) {
            h ^= c;
            h *= 1099511628211ull;
        }
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
        return dir_ / (std::string(buf) + ".json");
    }

    std::filesystem::path dir_;
    bool enabled_ = false;
};

}  // namespace slarc
