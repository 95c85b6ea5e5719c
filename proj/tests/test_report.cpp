#include "thetalift/error.hpp"
#include "thetalift/report.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace thetalift;
using namespace thetalift::report;

namespace {

Json run(const std::string& verb, const std::vector<std::string>& args, Options options = {}) {
    return execute(make_request(verb, args, options));
}

std::filesystem::path fresh_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("thetalift_test_" + name);
    std::filesystem::remove_all(dir);
    return dir;
}

}  // namespace

TEST_CASE("request validation rejects malformed input before computing") {
    CHECK_THROWS_AS(make_request("nope", {}, {}), UsageError);
    CHECK_THROWS_AS(make_request("dim", {"F4"}, {}), UsageError);
    CHECK_THROWS_AS(make_request("dim", {"G2", "1,0"}, {}), UsageError);
    CHECK_THROWS_AS(make_request("dim", {"F4", "1,1"}, {}), UsageError);
    CHECK_THROWS_AS(make_request("dim", {"F4", "0,0,0,-1"}, {}), UsageError);
    CHECK_THROWS_AS(make_request("dim", {"B4", "E_2"}, {}), UsageError);
    CHECK_THROWS_AS(make_request("lift-so2", {"7"}, {}), UsageError);
    CHECK_THROWS_AS(make_request("lift-so2", {"x"}, {}), UsageError);
    CHECK_THROWS_AS(make_request("match", {"full_parity(odd)"}, {}), UsageError);
    CHECK_THROWS_AS(make_request("branch", {"B4_in_E8", "1,0,0,0"}, {}), UsageError);
    CHECK_THROWS_AS(make_request("sl2-rank", {"8", "4", "5", "6"}, {}), UsageError);
    CHECK_THROWS_AS(make_request("verify-paper", {"extra"}, {}), UsageError);
}

TEST_CASE("named families and Dynkin labels canonicalize to coordinates") {
    Options dynkin;
    dynkin.dynkin = true;
    const auto a = make_request("dim", {"F4", "0,0,0,1"}, dynkin);
    const auto b = make_request("dim", {"F4", "E_1"}, {});
    const auto c = make_request("dim", {"F4", "1,0,0,0"}, {});
    CHECK(a.args == b.args);
    CHECK(b.args == c.args);
    CHECK(execute(a).at("dimension") == 26);
    CHECK(run("dim", {"B4", "tau(0,1)"}).at("dimension") == 16);
    CHECK(run("dim", {"B4", "tau(1,0)"}).at("dimension") == 9);
}

TEST_CASE("infchar and lift-so2 reproduce the worked examples") {
    CHECK(run("infchar", {"F4", "n=5"}).at("infinitesimal_character") == "21/2,5/2,3/2,1/2");
    const auto lift = run("lift-so2", {"8"});
    CHECK(lift.at("m") == 2);
    const std::vector<TauLabel> expected{{0, 0}, {1, 0}, {2, 0}};
    std::vector<TauLabel> got;
    for (const auto& t : lift.at("ktype_bound")) got.push_back(tau_from_json(t));
    CHECK(got == expected);

    const auto transfer = run("infchar", {"transfer", "-2"});
    CHECK(transfer.at("nonpositive") == true);
    CHECK(transfer.at("value") == "-1,5/2,3/2,1/2");
}

TEST_CASE("structured results round-trip through serialization") {
    const auto tensor = run("tensor", {"B4", "tau(1,0)", "tau(0,1)"});
    const auto dec = decomposition_from_json(tensor.at("decomposition"));
    CHECK(total_dimension(dec) == 9 * 16);
    CHECK(to_json(dec) == tensor.at("decomposition"));
    CHECK(Json::parse(tensor.dump()) == tensor);

    const TauLabel tau{3, 7};
    CHECK(tau_from_json(to_json(tau)) == tau);
    const IrrepLabel rep = e_n(2);
    CHECK(irrep_from_json(to_json(rep)).highest_weight == rep.highest_weight);

    const auto req = make_request("branch", {"B4_in_F4", "E_1"}, {});
    const auto doc = make_document(req, execute(req), 1.5);
    for (const char* key : {"verb", "args", "result", "provenance", "elapsed_ms", "engine_version"})
        CHECK(doc.contains(key));
    CHECK(doc.dump().find('\n') == std::string::npos);
}

TEST_CASE("cache hits are identical to recomputation") {
    const auto dir = fresh_dir("cache");
    ResultCache cache(dir);
    const auto req = make_request("branch", {"B4_in_F4", "E_2"}, {});
    CHECK_FALSE(cache.lookup(req).has_value());
    const auto computed = execute(req);
    cache.store(req, computed);
    const auto hit = cache.lookup(req);
    REQUIRE(hit.has_value());
    CHECK(hit->dump() == computed.dump());
    CHECK(execute(req).dump() == computed.dump());

    // A different request never reads another entry.
    const auto other = make_request("branch", {"B4_in_F4", "E_1"}, {});
    CHECK(cache.entry_path(other) != cache.entry_path(req));
    CHECK_FALSE(cache.lookup(other).has_value());

    // Entries with a foreign key or version are ignored.
    {
        std::ofstream out(cache.entry_path(other));
        out << Json{{"schema_version", kCacheSchemaVersion + 1}, {"engine_version", kEngineVersion},
                    {"key", {{"verb", other.verb}, {"args", other.args}}}, {"value", 1}}
                   .dump();
    }
    CHECK_FALSE(cache.lookup(other).has_value());
    std::filesystem::remove_all(dir);
}

TEST_CASE("verify-paper exit status is the conjunction of check verdicts") {
    const auto req = make_request("verify-paper", {}, {});
    const auto result = execute(req);
    bool all = true;
    for (const auto& c : result.at("checks")) all = all && c.at("pass").get<bool>();
    CHECK(result.at("checks").size() == 9);
    CHECK(result.at("all_pass") == all);
    CHECK(result_failed(req, result) == !all);

    Json forged = result;
    forged["checks"][0]["pass"] = false;
    forged["all_pass"] = false;
    CHECK(result_failed(req, forged));
}

TEST_CASE("text rendering covers every verb") {
    const std::vector<std::pair<std::string, std::vector<std::string>>> cases{
        {"dim", {"F4", "E_1"}},           {"weights", {"B4", "tau(1,0)"}},
        {"tensor", {"A1", "1", "2"}},     {"branch", {"B4_in_D5", "2,0,0,0,0"}},
        {"infchar", {"F4", "E_0"}},       {"lift-ktype", {"1", "2"}},
        {"lift-so2", {"6"}},              {"theta-support", {"lowest(6)"}},
        {"match", {"full_parity(even)"}}, {"pi-table", {"1"}},
        {"sl2-rank", {"8", "4", "3"}},
    };
    for (const auto& [verb, args] : cases) {
        CAPTURE(verb);
        const auto req = make_request(verb, args, {});
        const auto text = render_text(req, execute(req));
        CHECK_FALSE(text.empty());
        CHECK(text.back() == '\n');
    }
    CHECK(render_text(make_request("dim", {"F4", "E_1"}, {}), run("dim", {"F4", "E_1"})) == "26\n");
}
