// On-disk cache of computed homology groups, keyed by
// (spec, degree, ring, code version). Writes are atomic via rename.
#pragma once

#include "chesshom/complex.hpp"
#include "chesshom/homology.hpp"
#include "chesshom/ring.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

namespace chesshom {

inline constexpr const char* kSchemaVersion = "chesshom/1";
inline constexpr const char* kCodeVersion = "1";

inline std::string default_cache_dir()
{
    if (const char* env = std::getenv("CHESSHOM_CACHE")) return env;
    return ".chesshom-cache";
}

class HomologyCache {
public:
    explicit HomologyCache(std::string dir) : dir_(std::move(dir)) {}

    static std::string key_of(const ComplexSpec& spec, int d, const RingSpec& ring)
    {
        std::string ring_part = std::holds_alternative<RingZ>(ring)
                                    ? "Z"
                                    : "Zp" + std::to_string(std::get<RingZp>(ring).p);
        return spec.key() + "_d" + std::to_string(d) + "_" + ring_part + "_v" + kCodeVersion;
    }

    std::optional<HomologyGroup> load(const ComplexSpec& spec, int d, const RingSpec& ring) const
    {
        std::filesystem::path path = file_of(spec, d, ring);
        std::ifstream in(path);
        if (!in) return std::nullopt;
        nlohmann::json j;
        try {
            in >> j;
        } catch (...) {
            return std::nullopt;
        }
        if (!j.is_object() || j.value("schema", "") != kSchemaVersion) return std::nullopt;
        HomologyGroup g;
        g.free_rank = j.at("free").get<long>();
        for (const auto& t : j.at("torsion")) {
            if (t.is_string())
                g.torsion.push_back(Int(t.get<std::string>()));
            else
                g.torsion.push_back(Int(t.get<std::int64_t>()));
        }
        return g;
    }

    void store(const ComplexSpec& spec, int d, const RingSpec& ring,
               const HomologyGroup& g) const
    {
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        std::filesystem::path path = file_of(spec, d, ring);
        std::filesystem::path tmp = path;
        tmp += ".tmp";
        {
            std::ofstream out(tmp);
            if (!out) return;
            nlohmann::json j = g.to_json();
            j["schema"] = kSchemaVersion;
            out << j.dump() << "\n";
        }
        std::filesystem::rename(tmp, path, ec);  // atomic publish
        if (ec) std::filesystem::remove(tmp, ec);
    }

    const std::string& dir() const { return dir_; }

private:
    std::filesystem::path file_of(const ComplexSpec& spec, int d, const RingSpec& ring) const
    {
        return std::filesystem::path(dir_) / (key_of(spec, d, ring) + ".json");
    }

    std::string dir_;
};

// homology() with read-through caching; pass nullptr to skip caching.
inline HomologyGroup homology_cached(const ComplexSpec& spec, int d, const RingSpec& ring,
                                     const HomologyCache* cache, const SnfOptions& opt = {})
{
    if (cache) {
        if (auto hit = cache->load(spec, d, ring)) return *hit;
    }
    HomologyGroup g = homology(spec, d, ring, opt);
    if (cache) cache->store(spec, d, ring, g);
    return g;
}

}  // namespace chesshom
