#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>

#include "qblowup/series.hpp"

namespace qb {

// canonical text serialization: one line per term,
//   "num/den * Q1^a Q2^b U^c : z^(e/D)"
// sorted by z-exponent then exponent vector; round-trips bit-exactly.
std::string serialize_series(const PointSeries& s);
std::optional<PointSeries> parse_series(const std::string& text);

// stable 64-bit content digest used for cache file names
std::string digest_hex(const std::string& key);

// Memoization for instanton series: concurrent reads, exclusive insertion.
// Point-backend entries are additionally persisted as content-addressed
// files under dir (when set); symbolic entries stay in memory.
class SeriesCache {
  public:
    SeriesCache() = default;
    explicit SeriesCache(std::string disk_dir);

    struct Stats {
        std::uint64_t hits = 0;
        std::uint64_t disk_hits = 0;
        std::uint64_t misses = 0;
    };

    std::optional<PointSeries> get_point(const std::string& key, std::int64_t trunc);
    void put_point(const std::string& key, const PointSeries& s);

    std::optional<SymSeries> get_sym(const std::string& key, std::int64_t trunc);
    void put_sym(const std::string& key, const SymSeries& s);

    template <class F>
    std::optional<ZSeries<F>> get(const std::string& key, std::int64_t trunc) {
        if constexpr (std::is_same_v<F, Rational>)
            return get_point(key, trunc);
        else
            return get_sym(key, trunc);
    }
    template <class F>
    void put(const std::string& key, const ZSeries<F>& s) {
        if constexpr (std::is_same_v<F, Rational>)
            put_point(key, s);
        else
            put_sym(key, s);
    }

    Stats stats() const;
    const std::string& dir() const { return dir_; }

  private:
    std::string disk_path(const std::string& key, std::int64_t trunc) const;

    mutable std::shared_mutex mu_;
    std::map<std::string, PointSeries> point_;
    std::map<std::string, SymSeries> sym_;
    std::string dir_;
    Stats stats_;
};

}  // namespace qb
