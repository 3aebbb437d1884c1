#include "seqexp/io/oeis.hpp"

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "seqexp/error.hpp"

namespace seqexp::io {

namespace fs = std::filesystem;

HttpResponse HttpFetcher::get(const std::string& url) {
    // split "scheme://host/path"
    const auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) throw Error(ErrorCode::InvalidArgument, "bad URL " + url);
    const auto path_start = url.find('/', scheme_end + 3);
    const std::string origin = url.substr(0, path_start);
    const std::string path = path_start == std::string::npos ? "/" : url.substr(path_start);

    httplib::Client client(origin);
    client.set_connection_timeout(timeout_);
    client.set_read_timeout(timeout_);
    client.set_follow_location(true);
    auto res = client.Get(path);
    if (!res) throw Error(ErrorCode::NetworkError, "GET " + url + " failed: " + httplib::to_string(res.error()));
    return {res->status, res->body};
}

fs::path default_cache_dir() {
    if (const char* dir = std::getenv("SEQEXP_CACHE_DIR"); dir && *dir) return dir;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "seqexp";
    if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "seqexp";
    return fs::temp_directory_path() / "seqexp-cache";
}

std::string normalize_id(const std::string& id) {
    std::string s = id;
    if (!s.empty() && (s[0] == 'a' || s[0] == 'A')) s = s.substr(1);
    bool ok = s.size() == 6;
    for (char c : s) ok = ok && std::isdigit(static_cast<unsigned char>(c));
    if (!ok) throw Error(ErrorCode::InvalidArgument, "not an A-number: '" + id + "'");
    return "A" + s;
}

std::string bfile_url(const std::string& id) {
    const std::string a = normalize_id(id);
    return "https://oeis.org/" + a + "/b" + a.substr(1) + ".txt";
}

OeisClient::OeisClient(fs::path cache_dir, bool offline, std::shared_ptr<Fetcher> fetcher)
    : cache_dir_(std::move(cache_dir)), offline_(offline), fetcher_(std::move(fetcher)) {
    if (!fetcher_ && !offline_) fetcher_ = std::make_shared<HttpFetcher>();
}

fs::path OeisClient::cache_path(const std::string& id) const { return cache_dir_ / (normalize_id(id) + ".bfile"); }

std::string OeisClient::fetch(const std::string& id) {
    const fs::path path = cache_path(id);
    if (std::ifstream in(path, std::ios::binary); in) {
        std::ostringstream ss;
        ss << in.rdbuf();
        last_from_cache_ = true;
        return ss.str();
    }
    last_from_cache_ = false;
    if (offline_) throw Error(ErrorCode::CacheMiss, normalize_id(id) + " is not cached at " + path.string());

    const HttpResponse res = fetcher_->get(bfile_url(id));
    if (res.status == 404) throw Error(ErrorCode::NotFound, normalize_id(id) + " has no b-file");
    if (res.status != 200) throw Error(ErrorCode::NetworkError, "HTTP status " + std::to_string(res.status));
    store(path, res.body);
    return res.body;
}

void OeisClient::store(const fs::path& path, const std::string& body) const {
    fs::create_directories(cache_dir_);
    const fs::path lock_path = cache_dir_ / ".lock";
    const int fd = ::open(lock_path.c_str(), O_CREAT | O_RDWR, 0644);
    if (fd < 0) throw Error(ErrorCode::IoError, "cannot open cache lock " + lock_path.string());
    ::flock(fd, LOCK_EX);
    // write-then-rename keeps readers from seeing partial files
    const fs::path tmp = path.string() + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << body;
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    ::flock(fd, LOCK_UN);
    ::close(fd);
    if (ec) throw Error(ErrorCode::IoError, "cannot write cache entry " + path.string() + ": " + ec.message());
}

}  // namespace seqexp::io
