#include "treepat/oeis.hpp"

#ifdef TREEPAT_HAVE_OPENSSL
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include <httplib.h>

#include <doctest.h>

#include <atomic>
#include <thread>

using namespace treepat;

namespace {

OeisClient offline_client() {
    OeisClient::Options o;
    o.cache_path = "oeis_cache.json";
    o.use_network = false;
    return OeisClient(o);
}

bool has_id(const std::vector<OeisMatch>& ms, const std::string& id) {
    for (const auto& m : ms)
        if (m.id == id) return true;
    return false;
}

std::vector<Int> ints(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_SUITE_BEGIN("oeis");

TEST_CASE("cache loads") {
    OeisClient c = offline_client();
    CHECK(c.cache_size() >= 20);
}

TEST_CASE("annotate finds the bundled ids offline") {
    OeisClient c = offline_client();
    CHECK(has_id(c.annotate(ints({1, 1, 2, 5, 13, 34, 89, 233})), "A001519"));
    CHECK(has_id(c.annotate(ints({1, 1, 2, 4, 7, 13, 24, 44, 81})), "A000073"));
    CHECK(has_id(c.annotate(ints({1, 1, 2, 4, 8, 16, 32, 64})), "A000079"));
    CHECK(has_id(c.annotate(ints({1, 1, 2, 5, 14, 42, 131, 417})), "A080937"));
    CHECK(has_id(c.annotate(ints({1, 1, 2, 3, 5, 8, 13, 21})), "A000045"));
}

TEST_CASE("annotate of an all-zero sequence is empty") {
    OeisClient c = offline_client();
    CHECK(c.annotate(ints({0, 0, 0, 0, 0, 0})).empty());
}

TEST_CASE("annotate requires at least 6 terms") {
    OeisClient c = offline_client();
    CHECK_THROWS_AS(c.annotate(ints({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("network lookup merges results from the configured endpoint") {
    httplib::Server server;
    std::atomic<bool> hit{false};
    server.Get("/search", [&](const httplib::Request& req, httplib::Response& res) {
        hit = true;
        CHECK(req.get_param_value("fmt") == "json");
        res.set_content(R"({"results":[{"number":129,"name":"Pell numbers: served by test"}]})",
                        "application/json");
    });
    int port = server.bind_to_any_port("127.0.0.1");
    REQUIRE(port > 0);
    std::thread worker([&] { server.listen_after_bind(); });
    server.wait_until_ready();

    OeisClient::Options o;
    o.cache_path = "oeis_cache.json";
    o.base_url = "http://127.0.0.1:" + std::to_string(port);
    o.use_network = true;
    std::string warnings;
    auto ms = OeisClient(o).annotate(ints({9, 8, 7, 6, 5, 4}), &warnings);  // no cache hit
    CHECK(hit);
    CHECK(warnings.empty());
    REQUIRE(has_id(ms, "A000129"));

    server.stop();
    worker.join();
}

TEST_CASE("network failure degrades to cache-only with a warning") {
    OeisClient::Options o;
    o.cache_path = "oeis_cache.json";
    o.base_url = "http://127.0.0.1:9";  // discard port, nothing listens
    o.timeout_ms = 200;
    o.use_network = true;
    std::string warnings;
    auto ms = OeisClient(o).annotate(ints({1, 1, 2, 5, 13, 34, 89, 233}), &warnings);
    CHECK(has_id(ms, "A001519"));  // cache still answers
    CHECK(warnings.find("warning") != std::string::npos);
}

TEST_SUITE_END();
