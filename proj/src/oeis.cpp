#include "treepat/oeis.hpp"

#ifdef TREEPAT_HAVE_OPENSSL
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include <httplib.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#ifdef __linux__
#include <unistd.h>
#endif

namespace treepat {

namespace {

std::string env_or(const char* name, const std::string& fallback) {
    const char* v = std::getenv(name);
    return (v && *v) ? std::string(v) : fallback;
}

std::string default_cache_path() {
#ifdef __linux__
    char buf[4096];
    ssize_t n = ::readlink("/proc/self/exe", buf, sizeof(buf) - 1);
    if (n > 0) {
        buf[n] = '\0';
        auto p = std::filesystem::path(buf).parent_path() / "oeis_cache.json";
        if (std::filesystem::exists(p)) return p.string();
    }
#endif
    return "oeis_cache.json";
}

bool subsequence_at(const std::vector<Int>& terms, const std::vector<Int>& query) {
    if (query.empty() || query.size() > terms.size()) return false;
    for (size_t start = 0; start + query.size() <= terms.size(); ++start) {
        bool ok = true;
        for (size_t i = 0; i < query.size(); ++i)
            if (terms[start + i] != query[i]) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return false;
}

}  // namespace

OeisClient::OeisClient(Options opts) : opts_(std::move(opts)) {
    if (opts_.cache_path.empty()) opts_.cache_path = env_or("TREEPAT_CACHE", default_cache_path());
    if (opts_.base_url.empty()) opts_.base_url = env_or("TREEPAT_OEIS_URL", "https://oeis.org");
    if (const char* t = std::getenv("TREEPAT_OEIS_TIMEOUT_MS")) opts_.timeout_ms = std::atoi(t);
    load_cache(opts_.cache_path);
}

void OeisClient::load_cache(const std::string& path) {
    std::ifstream in(path);
    if (!in) return;  // missing cache: annotate still works via network
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception&) {
        return;
    }
    if (!j.contains("sequences")) return;
    for (const auto& e : j["sequences"]) {
        Entry ent;
        ent.id = e.value("id", "");
        ent.name = e.value("name", "");
        for (const auto& t : e["terms"]) {
            if (t.is_string())
                ent.terms.emplace_back(t.get<std::string>());
            else
                ent.terms.emplace_back(t.get<long long>());
        }
        if (!ent.id.empty()) cache_.push_back(std::move(ent));
    }
}

std::vector<OeisMatch> OeisClient::annotate(const std::vector<Int>& sequence, std::string* warnings) const {
    if (sequence.size() < 6) throw std::invalid_argument("annotate: need at least 6 terms");
    std::vector<OeisMatch> out;
    auto add = [&out](OeisMatch m) {
        for (const OeisMatch& e : out)
            if (e.id == m.id) return;
        out.push_back(std::move(m));
    };

    // offset differences between av-sequences and OEIS entries are small,
    // so retry with up to 2 leading terms dropped
    for (size_t drop = 0; drop <= 2 && sequence.size() - drop >= 5; ++drop) {
        std::vector<Int> q(sequence.begin() + static_cast<long>(drop), sequence.end());
        for (const Entry& e : cache_)
            if (subsequence_at(e.terms, q)) add({e.id, e.name});
    }

    if (opts_.use_network) {
        std::ostringstream qs;
        for (size_t i = 0; i < sequence.size(); ++i) {
            if (i) qs << ",";
            qs << sequence[i].str();
        }
        try {
            httplib::Client cli(opts_.base_url);
            cli.set_connection_timeout(0, opts_.timeout_ms * 1000);
            cli.set_read_timeout(0, opts_.timeout_ms * 1000);
            cli.set_follow_location(true);
            auto res = cli.Get("/search?q=" + qs.str() + "&fmt=json");
            if (!res || res->status != 200) throw std::runtime_error("http status");
            nlohmann::json j = nlohmann::json::parse(res->body);
            const nlohmann::json* results = nullptr;
            if (j.is_array())
                results = &j;
            else if (j.contains("results") && j["results"].is_array())
                results = &j["results"];
            if (results)
                for (const auto& r : *results) {
                    if (!r.contains("number")) continue;
                    char id[16];
                    std::snprintf(id, sizeof(id), "A%06d", r["number"].get<int>());
                    add({id, r.value("name", "")});
                }
        } catch (const std::exception&) {
            if (warnings)
                *warnings += "warning: OEIS lookup at " + opts_.base_url + " failed; using offline cache only\n";
        }
    }
    return out;
}

}  // namespace treepat
