#pragma once

#include <filesystem>
#include <memory>
#include <string>

namespace seqexp::io {

struct HttpResponse {
    int status = 0;
    std::string body;
};

/// Transport used by the OEIS client; tests substitute a double.
class Fetcher {
public:
    virtual ~Fetcher() = default;
    /// Throws NetworkError when no response could be obtained.
    virtual HttpResponse get(const std::string& url) = 0;
};

/// HTTPS GET via cpp-httplib.
class HttpFetcher : public Fetcher {
public:
    explicit HttpFetcher(int timeout_seconds = 30) : timeout_(timeout_seconds) {}
    HttpResponse get(const std::string& url) override;

private:
    int timeout_;
};

/// SEQEXP_CACHE_DIR, else $XDG_CACHE_HOME/seqexp, else ~/.cache/seqexp.
std::filesystem::path default_cache_dir();

/// "A202062" -> "https://oeis.org/A202062/b202062.txt"
std::string bfile_url(const std::string& id);

/// Checks and canonicalizes an A-number ("a202062" -> "A202062").
std::string normalize_id(const std::string& id);

class OeisClient {
public:
    OeisClient(std::filesystem::path cache_dir, bool offline, std::shared_ptr<Fetcher> fetcher = nullptr);

    /// b-file body for the sequence. The cache is consulted first; offline
    /// mode never calls the fetcher. Errors: NotFound, NetworkError, CacheMiss.
    std::string fetch(const std::string& id);

    std::filesystem::path cache_path(const std::string& id) const;
    /// True when the last fetch() was answered from the cache.
    bool last_from_cache() const { return last_from_cache_; }

private:
    void store(const std::filesystem::path& path, const std::string& body) const;

    std::filesystem::path cache_dir_;
    bool offline_;
    std::shared_ptr<Fetcher> fetcher_;
    bool last_from_cache_ = false;
};

}  // namespace seqexp::io
