#include "qblowup/cache.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>

namespace qb {

std::string serialize_series(const PointSeries& s) {
    std::ostringstream os;
    os << "series D=" << s.D() << " trunc=" << s.trunc() << "\n";
    for (const auto& [e, v] : s.coeffs())
        os << rational_str(v) << " * Q1^0 Q2^0 U^0 : z^(" << e << "/" << s.D() << ")\n";
    return os.str();
}

std::optional<PointSeries> parse_series(const std::string& text) {
    std::istringstream is(text);
    std::string tag;
    std::string dfield, tfield;
    if (!(is >> tag >> dfield >> tfield) || tag != "series") return std::nullopt;
    if (dfield.rfind("D=", 0) != 0 || tfield.rfind("trunc=", 0) != 0) return std::nullopt;
    int D = 0;
    std::int64_t trunc = 0;
    try {
        D = std::stoi(dfield.substr(2));
        trunc = std::stoll(tfield.substr(6));
    } catch (...) {
        return std::nullopt;
    }
    if (D <= 0) return std::nullopt;
    PointSeries s(D, trunc);
    std::string line;
    std::getline(is, line);  // rest of header line
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string coeff, star, m1, m2, m3, colon, zpart;
        if (!(ls >> coeff >> star >> m1 >> m2 >> m3 >> colon >> zpart)) return std::nullopt;
        if (star != "*" || colon != ":" || m1 != "Q1^0" || m2 != "Q2^0" || m3 != "U^0")
            return std::nullopt;
        if (zpart.rfind("z^(", 0) != 0 || zpart.back() != ')') return std::nullopt;
        std::string inner = zpart.substr(3, zpart.size() - 4);
        auto slash = inner.find('/');
        if (slash == std::string::npos) return std::nullopt;
        std::int64_t tick = 0;
        int d2 = 0;
        try {
            tick = std::stoll(inner.substr(0, slash));
            d2 = std::stoi(inner.substr(slash + 1));
        } catch (...) {
            return std::nullopt;
        }
        if (d2 != D) return std::nullopt;
        try {
            s.add(tick, parse_rational(coeff));
        } catch (...) {
            return std::nullopt;
        }
    }
    return s;
}

std::string digest_hex(const std::string& key) {
    // FNV-1a, stable across runs and platforms
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : key) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

SeriesCache::SeriesCache(std::string disk_dir) : dir_(std::move(disk_dir)) {
    if (!dir_.empty()) std::filesystem::create_directories(dir_);
}

std::string SeriesCache::disk_path(const std::string& key, std::int64_t trunc) const {
    return dir_ + "/" + digest_hex(key + "|trunc=" + std::to_string(trunc)) + ".series";
}

std::optional<PointSeries> SeriesCache::get_point(const std::string& key, std::int64_t trunc) {
    {
        std::shared_lock lock(mu_);
        auto it = point_.find(key);
        if (it != point_.end() && it->second.trunc() >= trunc) {
            ++stats_.hits;
            return it->second.truncated(trunc);
        }
    }
    if (!dir_.empty()) {
        std::ifstream in(disk_path(key, trunc));
        if (in) {
            std::stringstream buf;
            buf << in.rdbuf();
            auto s = parse_series(buf.str());
            if (s && s->trunc() >= trunc) {
                std::unique_lock lock(mu_);
                auto it = point_.find(key);
                if (it == point_.end() || it->second.trunc() < s->trunc())
                    point_.insert_or_assign(key, *s);
                ++stats_.hits;
                ++stats_.disk_hits;
                return s->truncated(trunc);
            }
            if (s == std::nullopt)
                std::cerr << "warning: corrupt cache entry ignored: " << disk_path(key, trunc)
                          << "\n";
        }
    }
    std::unique_lock lock(mu_);
    ++stats_.misses;
    return std::nullopt;
}

void SeriesCache::put_point(const std::string& key, const PointSeries& s) {
    {
        std::unique_lock lock(mu_);
        auto it = point_.find(key);
        if (it == point_.end() || it->second.trunc() < s.trunc()) point_.insert_or_assign(key, s);
    }
    if (!dir_.empty()) {
        std::string path = disk_path(key, s.trunc());
        std::string tmp = path + ".tmp";
        {
            std::ofstream out(tmp);
            out << serialize_series(s);
        }
        std::error_code ec;
        std::filesystem::rename(tmp, path, ec);
        if (ec) std::filesystem::remove(tmp, ec);
    }
}

std::optional<SymSeries> SeriesCache::get_sym(const std::string& key, std::int64_t trunc) {
    std::shared_lock lock(mu_);
    auto it = sym_.find(key);
    if (it != sym_.end() && it->second.trunc() >= trunc) {
        ++stats_.hits;
        return it->second.truncated(trunc);
    }
    ++stats_.misses;
    return std::nullopt;
}

void SeriesCache::put_sym(const std::string& key, const SymSeries& s) {
    std::unique_lock lock(mu_);
    auto it = sym_.find(key);
    if (it == sym_.end() || it->second.trunc() < s.trunc()) sym_.insert_or_assign(key, s);
}

SeriesCache::Stats SeriesCache::stats() const {
    std::shared_lock lock(mu_);
    return stats_;
}

}  // namespace qb
