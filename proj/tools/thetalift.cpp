// thetalift: command-line front end for the representation-theory engine.
// Exit codes: 0 success, 1 failed check or internal inconsistency, 2 usage error.

#include "thetalift/error.hpp"
#include "thetalift/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>

namespace {

struct Verb {
    const char* name;
    const char* help;
};

constexpr Verb kVerbs[] = {
    {"dim", "dimension of an irreducible: dim SYSTEM WEIGHT"},
    {"weights", "dominant weights with multiplicities: weights SYSTEM WEIGHT"},
    {"tensor", "tensor product decomposition: tensor SYSTEM WEIGHT WEIGHT"},
    {"branch", "restriction along B4_in_F4 or B4_in_D5: branch EMBEDDING WEIGHT"},
    {"infchar", "infinitesimal character: infchar SYSTEM WEIGHT | infchar transfer X"},
    {"lift-ktype", "lift of the K-type tau(m,n): lift-ktype M N"},
    {"lift-so2", "lift of an even SO(2) weight: lift-so2 K"},
    {"theta-support", "K-type support of the theta lift: theta-support SIGMA"},
    {"match", "lowest-type matching report: match SIGMA"},
    {"pi-table", "compact decomposition table: pi-table N_MAX"},
    {"sl2-rank", "filtration ranks of delta(n) (x) conj-delta(m): sl2-rank N M MAX_DEGREE [DEPTH]"},
    {"verify-paper", "run every acceptance check"},
};

}  // namespace

int main(int argc, char** argv) {
    namespace rp = thetalift::report;

    CLI::App app{"Exact representation-theory engine for the F4 / sl2 theta correspondence"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string cache_dir;
    std::string profile = "quick";
    std::int64_t max_dim = thetalift::theta::kDefaultDimensionCap;
    bool dynkin = false;
    app.add_option("--format", format, "text or structured (one JSON document per line)")
        ->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--cache-dir", cache_dir, std::string("result cache directory (default: $") + rp::kCacheDirEnv + ")");
    app.add_option("--profile", profile, "verify-paper profile")->check(CLI::IsMember({"quick", "full"}));
    app.add_option("--max-dim", max_dim, "dimension cap for pi-table")->check(CLI::PositiveNumber);
    app.add_flag("--dynkin", dynkin, "read weights as Dynkin labels instead of coordinates");

    std::vector<std::string> positional;
    for (const auto& verb : kVerbs) {
        auto* sub = app.add_subcommand(verb.name, verb.help)->fallthrough();
        sub->add_option("args", positional, "verb arguments");
        sub->allow_extras(false);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    rp::Options options;
    options.format = format == "structured" ? rp::OutputFormat::Structured : rp::OutputFormat::Text;
    options.profile = thetalift::acceptance::parse_profile(profile);
    options.max_dim = max_dim;
    options.dynkin = dynkin;
    if (!cache_dir.empty()) {
        options.cache_dir = cache_dir;
    } else if (const char* env = std::getenv(rp::kCacheDirEnv); env && *env) {
        options.cache_dir = env;
    }

    const std::string verb = app.get_subcommands().front()->get_name();
    try {
        const auto request = rp::make_request(verb, positional, options);
        const auto start = std::chrono::steady_clock::now();

        std::optional<rp::Json> result;
        std::optional<rp::ResultCache> cache;
        const bool cacheable = options.cache_dir && verb != "verify-paper";
        if (cacheable) {
            cache.emplace(*options.cache_dir);
            result = cache->lookup(request);
        }
        if (!result) {
            result = rp::execute(request);
            if (cacheable) cache->store(request, *result);
        }
        const double elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

        if (options.format == rp::OutputFormat::Structured)
            std::cout << rp::make_document(request, *result, elapsed_ms).dump() << '\n';
        else
            std::cout << rp::render_text(request, *result);
        return rp::result_failed(request, *result) ? 1 : 0;
    } catch (const rp::UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const thetalift::InputError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const thetalift::ConsistencyError& e) {
        std::cerr << "consistency error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
