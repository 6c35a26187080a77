#pragma once

#include <optional>
#include <string>

#include "moonshine/fseries.hpp"
#include "moonshine/siegel.hpp"

namespace moonshine {

// One file per (label, truncation, format hash) of canonical JSON. Disabled
// when constructed with an empty directory. Unreadable or corrupt entries
// are treated as absent and rebuilt.
class SeriesCache {
public:
    SeriesCache() = default;
    explicit SeriesCache(std::string dir);
    // --cache-dir flag value, else MOONSHINE_CACHE, else disabled.
    static SeriesCache configure(const std::string& flag_dir);

    bool enabled() const { return !dir_.empty(); }
    std::string path_for(const std::string& label, TruncOrder T) const;
    std::optional<FSeries> load(const std::string& label, TruncOrder T) const;
    void store(const std::string& label, TruncOrder T, const FSeries& series) const;

private:
    std::string dir_;
};

// siegel_form_by_name with read-through caching of the series.
SiegelForm cached_siegel_form(const std::string& name, TruncOrder T, const SeriesCache& cache);

}  // namespace moonshine
