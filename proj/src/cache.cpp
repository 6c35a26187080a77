#include "moonshine/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace moonshine {

// Bumped whenever the canonical series format changes; part of every key.
static const char* const FORMAT_TAG = "moonshine-series-v1";

static std::string format_hash() {
    std::uint64_t h = 1469598103934665603ULL;
    for (const char* p = FORMAT_TAG; *p; ++p) {
        h ^= static_cast<unsigned char>(*p);
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

SeriesCache::SeriesCache(std::string dir) : dir_(std::move(dir)) {
    if (!dir_.empty()) std::filesystem::create_directories(dir_);
}

SeriesCache SeriesCache::configure(const std::string& flag_dir) {
    if (!flag_dir.empty()) return SeriesCache(flag_dir);
    const char* env = std::getenv("MOONSHINE_CACHE");
    if (env && *env) return SeriesCache(env);
    return SeriesCache();
}

std::string SeriesCache::path_for(const std::string& label, TruncOrder T) const {
    std::string safe;
    for (char c : label)
        safe.push_back(std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
    return dir_ + "/" + safe + "__T" + std::to_string(T.num) + "_" + std::to_string(T.den) + "__" +
           format_hash() + ".json";
}

std::optional<FSeries> SeriesCache::load(const std::string& label, TruncOrder T) const {
    if (!enabled()) return std::nullopt;
    std::ifstream in(path_for(label, T));
    if (!in) return std::nullopt;
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return FSeries::deserialize(ss.str());
    } catch (const std::exception&) {
        return std::nullopt;  // corrupt entry: rebuild
    }
}

void SeriesCache::store(const std::string& label, TruncOrder T, const FSeries& series) const {
    if (!enabled()) return;
    std::ofstream out(path_for(label, T), std::ios::trunc);
    out << series.serialize();
}

SiegelForm cached_siegel_form(const std::string& name, TruncOrder T, const SeriesCache& cache) {
    if (auto hit = cache.load(name, T)) {
        // rebuild only the metadata (weight, level, label) at a token order
        SiegelForm f = siegel_form_by_name(name, Frac(1));
        f.series = *hit;
        return f;
    }
    SiegelForm f = siegel_form_by_name(name, T);
    cache.store(name, T, f.series);
    return f;
}

}  // namespace moonshine
