#pragma once

#include "thetalift/acceptance.hpp"
#include "thetalift/characters.hpp"
#include "thetalift/theta_engine.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace thetalift::report {

using Json = nlohmann::json;

inline constexpr const char* kEngineVersion = "1.0.0";
inline constexpr int kCacheSchemaVersion = 1;

/// Raised for malformed command lines; maps to exit status 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { Text, Structured };

struct Options {
    OutputFormat format = OutputFormat::Text;
    std::optional<std::filesystem::path> cache_dir;
    acceptance::Profile profile = acceptance::Profile::Quick;
    std::int64_t max_dim = theta::kDefaultDimensionCap;
    bool dynkin = false;  // weights on the command line are Dynkin labels
};

/// A fully validated request. `args` is canonical: equal requests have
/// byte-identical `args.dump()`.
struct CommandRequest {
    std::string verb;
    Json args;
    Options options;
};

/// Validates positional arguments for `verb` and canonicalizes them.
/// Throws UsageError on anything malformed.
CommandRequest make_request(const std::string& verb, const std::vector<std::string>& positional,
                            const Options& options);

/// Highest weight syntax: coordinates "1/2,1/2,1/2,1/2", Dynkin labels when
/// `dynkin` is set, or the named families "E_n" (F4) and "tau(m,n)" (B4).
IrrepLabel parse_irrep(SystemLabel system, const std::string& text, bool dynkin);

/// Executes a validated request. The result is a pure function of the
/// request: exact arithmetic makes it deterministic.
Json execute(const CommandRequest& request);

/// Statements each verb's output corresponds to.
std::vector<std::string> provenance(const std::string& verb);

/// {verb, args, result, provenance, elapsed_ms, engine_version}
Json make_document(const CommandRequest& request, const Json& result, double elapsed_ms);

std::string render_text(const CommandRequest& request, const Json& result);

/// True when a verify-paper result reports failures.
bool result_failed(const CommandRequest& request, const Json& result);

/// File-backed result cache keyed by (verb, canonical args). Entries carry
/// the schema and engine versions; a mismatch is treated as a miss.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path dir);

    std::optional<Json> lookup(const CommandRequest& request) const;
    /// Writes through a temporary file and renames it into place.
    void store(const CommandRequest& request, const Json& value) const;

    std::filesystem::path entry_path(const CommandRequest& request) const;
    static std::string canonical_key(const CommandRequest& request);

private:
    std::filesystem::path dir_;
};

/// Environment variable consulted when --cache-dir is absent.
inline constexpr const char* kCacheDirEnv = "THETALIFT_CACHE_DIR";

Json to_json(const TauLabel& tau);
TauLabel tau_from_json(const Json& j);
Json to_json(const IrrepLabel& irrep);
IrrepLabel irrep_from_json(const Json& j);
Json to_json(const DecompositionList& dec);
DecompositionList decomposition_from_json(const Json& j);

}  // namespace thetalift::report
