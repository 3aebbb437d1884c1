#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <random>

#include "seqexp/error.hpp"
#include "seqexp/io/bfile.hpp"
#include "seqexp/io/csv.hpp"
#include "seqexp/io/oeis.hpp"
#include "seqexp/io/report.hpp"

using namespace seqexp;
using namespace seqexp::io;
namespace fs = std::filesystem;

namespace {

class FakeFetcher : public Fetcher {
public:
    HttpResponse get(const std::string& url) override {
        ++calls;
        last_url = url;
        if (fail) throw Error(ErrorCode::NetworkError, "no route");
        if (url.find("A202062") != std::string::npos) return {200, "# fixture\n0 1\n1 1\n2 2\n"};
        return {404, "not found"};
    }
    int calls = 0;
    bool fail = false;
    std::string last_url;
};

fs::path fresh_dir(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("seqexp-test-" + name + "-" + std::to_string(::getpid()));
    fs::remove_all(p);
    return p;
}

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("b-file parsing") {
    const auto s = parse_bfile("0 1\n1 1\n2 2");
    CHECK(s.offset == 0);
    CHECK(s == seqgen::make_sequence(0, {1, 1, 2}));
    const auto c = parse_bfile("# c\n1 5\n");
    CHECK(c.offset == 1);
    CHECK(c.terms == std::vector<exact::BigInt>{5});
    CHECK(parse_bfile("\n\n").empty());
    CHECK(parse_bfile("3 123456789012345678901234567890\r\n").terms[0] == exact::parse_bigint("123456789012345678901234567890"));
    CHECK(code_of([] { parse_bfile("0 1\n1 x\n"); }) == ErrorCode::MalformedLine);
    CHECK(code_of([] { parse_bfile("0 1\n2 1\n"); }) == ErrorCode::NonContiguousIndex);
    CHECK(code_of([] { parse_bfile("7\n"); }) == ErrorCode::MalformedLine);
    try {
        parse_bfile("# a\n0 1\n1 z\n");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("b-file round trip") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 50; ++t) {
        seqgen::Sequence s{static_cast<long>(rng() % 7) - 3, {}};
        const std::size_t n = rng() % 20;
        for (std::size_t i = 0; i < n; ++i) {
            exact::BigInt v(static_cast<long>(rng() % 1000000) - 500000);
            v *= exact::BigInt(static_cast<long>(rng() % 100000)) * exact::BigInt("1000000000000000000000");
            s.terms.push_back(v);
        }
        const auto back = parse_bfile(render_bfile(s));
        if (s.empty()) {
            CHECK(back.empty());
        } else {
            CHECK(back == s);
        }
    }
}

TEST_CASE("A-numbers and URLs") {
    CHECK(normalize_id("a202062") == "A202062");
    CHECK(bfile_url("A202062") == "https://oeis.org/A202062/b202062.txt");
    CHECK_THROWS_AS(normalize_id("A12"), Error);
    CHECK_THROWS_AS(normalize_id("../etc"), Error);
}

TEST_CASE("OEIS client caching") {
    const fs::path dir = fresh_dir("cache");
    auto fake = std::make_shared<FakeFetcher>();
    OeisClient client(dir, false, fake);
    const std::string first = client.fetch("A202062");
    CHECK_FALSE(client.last_from_cache());
    CHECK(fake->last_url == "https://oeis.org/A202062/b202062.txt");
    CHECK(fs::exists(dir / "A202062.bfile"));
    const std::string second = client.fetch("A202062");
    CHECK(client.last_from_cache());
    CHECK(first == second);
    CHECK(fake->calls == 1);
    CHECK(code_of([&] { client.fetch("A999999"); }) == ErrorCode::NotFound);
    fake->fail = true;
    CHECK(code_of([&] { client.fetch("A000001"); }) == ErrorCode::NetworkError);
    fs::remove_all(dir);
}

TEST_CASE("offline mode never touches the fetcher") {
    const fs::path dir = fresh_dir("offline");
    auto fake = std::make_shared<FakeFetcher>();
    OeisClient offline(dir, true, fake);
    CHECK(code_of([&] { offline.fetch("A202062"); }) == ErrorCode::CacheMiss);
    CHECK(fake->calls == 0);
    OeisClient online(dir, false, fake);
    online.fetch("A202062");
    CHECK(offline.fetch("A202062") == online.fetch("A202062"));
    CHECK(fake->calls == 1);
    fs::remove_all(dir);
}

TEST_CASE("cache directory from the environment") {
    ::setenv("SEQEXP_CACHE_DIR", "/tmp/seqexp-env-cache", 1);
    CHECK(default_cache_dir() == fs::path("/tmp/seqexp-env-cache"));
    ::unsetenv("SEQEXP_CACHE_DIR");
    CHECK(default_cache_dir() != fs::path("/tmp/seqexp-env-cache"));
}

TEST_CASE("CSV emission") {
    CHECK(emit_csv({{"1", "1"}}) == "x,y\n1,1\n");
    CHECK(emit_csv({}) == "x,y\n");
    CHECK(emit_csv({{"a,b", "say \"hi\""}}) == "x,y\n\"a,b\",\"say \"\"hi\"\"\"\n");
    const asympt::HpContext ctx{30};
    const auto pts = to_points({{ctx.make(exact::BigRat(1, 4)), ctx.make(3L)}});
    CHECK(pts[0] == Point{"0.25", "3"});
}

TEST_CASE("report digest ignores timestamps") {
    const asympt::HpContext ctx{40};
    auto build = [&] {
        AnalysisReport r({"seqexp", "analyze", "ratios"});
        r.set_input("terms", "0 1\n1 2\n");
        r.parameters()["precision"] = 40;
        r.add_scalar("mu", ctx.pi(), ctx.make(exact::BigRat(1, 1000)));
        r.add_sequence("s", seqgen::make_sequence(0, {1, 2, 3}));
        return r;
    };
    AnalysisReport a = build(), b = build();
    CHECK(a.digest() == b.digest());
    const Json ja = a.finish();
    CHECK(ja["digest"] == a.digest());
    CHECK(ja.contains("timestamps"));
    CHECK(ja["scalars"]["mu"]["value"].get<std::string>().rfind("3.14159265358979", 0) == 0);
    b.parameters()["precision"] = 41;
    CHECK(a.digest() != b.digest());
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
