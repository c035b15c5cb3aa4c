#pragma once

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include <unistd.h>

#include "qborwein/qproducts.hpp"
#include "qborwein/serialize.hpp"
#include "qborwein/series.hpp"

namespace qborwein {

/// On-disk cache of expanded series, one JSON file per ProductSpec. Keys
/// are a 64-bit FNV-1a hash of the canonical spec JSON; the stored file
/// repeats the full spec and load() verifies it, so a hash collision or a
/// stale file degrades to a miss, never to wrong coefficients. Writes go
/// through a temp file and an atomic rename, making concurrent writers
/// safe (last one wins with a complete file).
class SeriesCache {
public:
    explicit SeriesCache(std::filesystem::path dir) : dir_(std::move(dir)) {
        std::filesystem::create_directories(dir_);
    }

    const std::filesystem::path& directory() const { return dir_; }

    static std::string key(const ProductSpec& spec) {
        const std::string dump = spec.to_json().dump();
        std::uint64_t h = 14695981039346656037ull;
        for (const unsigned char c : dump) {
            h ^= c;
            h *= 1099511628211ull;
        }
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
        return std::string(buf);
    }

    template <CoefficientRing R>
    std::optional<Series<R>> load(const ProductSpec& spec) const {
        const std::filesystem::path file = path_for(spec);
        std::ifstream in(file);
        if (!in) return std::nullopt;
        try {
            const json j = json::parse(in);
            if (j.at("version").get<int>() != 1) return std::nullopt;
            if (j.at("spec") != spec.to_json()) return std::nullopt;
            return series_from_json<R>(j.at("series"));
        } catch (const std::exception&) {
            return std::nullopt; // unreadable or foreign-ring entry: recompute
        }
    }

    template <CoefficientRing R>
    void store(const ProductSpec& spec, const Series<R>& series) const {
        const json j{{"version", 1}, {"spec", spec.to_json()}, {"series", series_to_json(series)}};
        const std::filesystem::path file = path_for(spec);
        std::filesystem::path tmp = file;
        tmp += ".tmp." + std::to_string(::getpid());
        {
            std::ofstream out(tmp);
            out << j.dump();
            if (!out) {
                std::error_code ec;
                std::filesystem::remove(tmp, ec);
                throw std::runtime_error("SeriesCache: cannot write " + tmp.string());
            }
        }
        std::filesystem::rename(tmp, file);
    }

private:
    std::filesystem::path path_for(const ProductSpec& spec) const {
        return dir_ / (key(spec) + ".json");
    }

    std::filesystem::path dir_;
};

} // namespace qborwein
