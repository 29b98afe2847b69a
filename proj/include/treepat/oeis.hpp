#pragma once

#include "treepat/ratfun.hpp"

#include <optional>
#include <string>
#include <vector>

namespace treepat {

struct OeisMatch {
    std::string id;    // "A001519"
    std::string name;  // short description when known
    bool operator==(const OeisMatch&) const = default;
};

/// Sequence annotation against a bundled offline cache, optionally followed
/// by an OEIS search over HTTP. Network failure degrades to cache-only
/// results with a warning on the configured stream; it is never an error.
///
/// Configuration: TREEPAT_CACHE overrides the cache path (default:
/// oeis_cache.json next to the executable), TREEPAT_OEIS_URL the endpoint
/// (default https://oeis.org), TREEPAT_OEIS_TIMEOUT_MS the request timeout.
class OeisClient {
public:
    struct Options {
        std::string cache_path;  // empty: resolve default
        std::string base_url;    // empty: resolve from env/default
        int timeout_ms = 3000;
        bool use_network = true;
    };

    OeisClient() : OeisClient(Options{}) {}
    explicit OeisClient(Options opts);

    /// Requires at least 6 terms. Matches a cache entry when the query (with
    /// up to 2 leading terms dropped to absorb offset differences) occurs as
    /// a contiguous run of the entry's terms. Network results are merged in.
    std::vector<OeisMatch> annotate(const std::vector<Int>& sequence, std::string* warnings = nullptr) const;

    size_t cache_size() const { return cache_.size(); }

private:
    struct Entry {
        std::string id;
        std::string name;
        std::vector<Int> terms;
    };
    void load_cache(const std::string& path);

    std::vector<Entry> cache_;
    Options opts_;
};

}  // namespace treepat
