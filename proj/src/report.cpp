#include "thetalift/report.hpp"

#include "thetalift/branching.hpp"
#include "thetalift/error.hpp"
#include "thetalift/sl2_lab.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <regex>
#include <sstream>
#include <unistd.h>

namespace thetalift::report {

namespace {

std::int64_t parse_int(const std::string& text, const char* what) {
    static const std::regex integer(R"(\s*[-+]?\d+\s*)");
    if (!std::regex_match(text, integer)) throw UsageError(std::string(what) + " must be an integer, got '" + text + "'");
    return std::stoll(text);
}

void expect_arity(const std::string& verb, const std::vector<std::string>& args, std::size_t lo, std::size_t hi,
                  const char* usage) {
    if (args.size() < lo || args.size() > hi) throw UsageError("usage: " + verb + " " + usage);
}

SystemLabel parse_system(const std::string& text) {
    try {
        return parse_system_label(text);
    } catch (const InputError& e) {
        throw UsageError(e.what());
    }
}

Json tau_array(const std::vector<std::pair<TauLabel, std::int64_t>>& taus) {
    Json out = Json::array();
    for (const auto& [tau, mult] : taus) {
        Json j = to_json(tau);
        j["multiplicity"] = mult;
        out.push_back(j);
    }
    return out;
}

Json support_json(const theta::ThetaSupport& s) {
    Json j{{"sigma", sl2::to_string(s.sigma)}, {"vanishes", s.vanishes}, {"rule", s.rule}};
    j["minimal_m"] = s.minimal_m ? Json(*s.minimal_m) : Json(nullptr);
    j["maximal_m"] = s.maximal_m ? Json(*s.maximal_m) : Json(nullptr);
    Json sample = Json::array();
    for (const auto& tau : s.enumerate(5, 2)) sample.push_back(to_json(tau));
    j["sample_m_le_5_n_le_2"] = sample;
    return j;
}

Json pairing_json(const theta::PairingReport& r) {
    Json j{{"sigma", sl2::to_string(r.sigma)},
           {"theta_vanishes", r.theta_vanishes},
           {"below_dims", r.below_dims},
           {"split_count", r.split_count},
           {"split_contradiction", r.split_contradiction},
           {"verdict", r.pass ? "pass" : "fail"},
           {"reasons", r.reasons}};
    j["minimal_m"] = r.minimal_m ? Json(*r.minimal_m) : Json(nullptr);
    j["lowest_ktype"] = r.lowest_ktype ? to_json(*r.lowest_ktype) : Json(nullptr);
    Json chain = Json::array();
    for (const auto& step : r.hom_chain) chain.push_back({{"space", step.space}, {"dimension", step.dimension}});
    j["hom_chain"] = chain;
    return j;
}

std::string fnv1a_hex(const std::string& text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

}  // namespace

Json to_json(const TauLabel& tau) { return {{"m", tau.m}, {"n", tau.n}}; }

TauLabel tau_from_json(const Json& j) { return {j.at("m").get<std::int64_t>(), j.at("n").get<std::int64_t>()}; }

Json to_json(const IrrepLabel& irrep) {
    return {{"system", to_string(irrep.system)}, {"highest_weight", to_string(irrep.highest_weight)}};
}

IrrepLabel irrep_from_json(const Json& j) {
    return {parse_system_label(j.at("system").get<std::string>()),
            parse_weight(j.at("highest_weight").get<std::string>())};
}

Json to_json(const DecompositionList& dec) {
    Json out = Json::array();
    for (const auto& entry : dec) {
        Json j = to_json(entry.irrep);
        j["multiplicity"] = entry.multiplicity;
        j["dimension"] = weyl_dim(entry.irrep);
        out.push_back(j);
    }
    return out;
}

DecompositionList decomposition_from_json(const Json& j) {
    DecompositionList out;
    for (const auto& entry : j) out.push_back({irrep_from_json(entry), entry.at("multiplicity").get<std::int64_t>()});
    return out;
}

IrrepLabel parse_irrep(SystemLabel system, const std::string& text, bool dynkin) {
    static const std::regex en(R"(\s*(?:E_|n=)(\d+)\s*)");
    static const std::regex tau(R"(\s*tau\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*)");
    std::smatch match;
    try {
        IrrepLabel rep{system, {}};
        if (std::regex_match(text, match, en)) {
            if (system != SystemLabel::F4) throw UsageError("E_n names an F4 representation");
            rep = e_n(std::stoll(match[1]));
        } else if (std::regex_match(text, match, tau)) {
            if (system != SystemLabel::B4) throw UsageError("tau(m,n) names a B4 representation");
            rep = TauLabel{std::stoll(match[1]), std::stoll(match[2])}.irrep();
        } else {
            Weight w = parse_weight(text);
            const RootSystem& sys = root_system(system);
            if (w.size() != sys.rank())
                throw UsageError("weight '" + text + "' needs " + std::to_string(sys.rank()) + " entries for " +
                                 to_string(system));
            rep.highest_weight = dynkin ? sys.from_dynkin_labels(w.coords()) : w;
        }
        validate(rep);
        return rep;
    } catch (const InputError& e) {
        throw UsageError(e.what());
    }
}

CommandRequest make_request(const std::string& verb, const std::vector<std::string>& a, const Options& options) {
    CommandRequest req{verb, Json::object(), options};
    Json& args = req.args;
    try {
        if (verb == "dim" || verb == "weights") {
            expect_arity(verb, a, 2, 2, "SYSTEM WEIGHT");
            const auto rep = parse_irrep(parse_system(a[0]), a[1], options.dynkin);
            args = {{"system", a[0]}, {"highest_weight", to_string(rep.highest_weight)}};
        } else if (verb == "tensor") {
            expect_arity(verb, a, 3, 3, "SYSTEM WEIGHT WEIGHT");
            const auto system = parse_system(a[0]);
            args = {{"system", a[0]},
                    {"a", to_string(parse_irrep(system, a[1], options.dynkin).highest_weight)},
                    {"b", to_string(parse_irrep(system, a[2], options.dynkin).highest_weight)}};
        } else if (verb == "branch") {
            expect_arity(verb, a, 2, 2, "B4_in_F4|B4_in_D5 WEIGHT");
            EmbeddingMap emb;
            try {
                emb = make_embedding(a[0]);
            } catch (const InputError& e) {
                throw UsageError(e.what());
            }
            const auto rep = parse_irrep(emb.source_system, a[1], options.dynkin);
            args = {{"embedding", emb.name}, {"highest_weight", to_string(rep.highest_weight)}};
        } else if (verb == "infchar") {
            expect_arity(verb, a, 2, 2, "SYSTEM WEIGHT | transfer X");
            if (a[0] == "transfer") {
                args = {{"transfer", to_string(parse_rational(a[1]))}};
            } else {
                const auto rep = parse_irrep(parse_system(a[0]), a[1], options.dynkin);
                args = {{"system", a[0]}, {"highest_weight", to_string(rep.highest_weight)}};
            }
        } else if (verb == "lift-ktype") {
            expect_arity(verb, a, 2, 2, "M N");
            const auto m = parse_int(a[0], "M"), n = parse_int(a[1], "N");
            if (m < 0 || n < 0) throw UsageError("lift-ktype requires M, N >= 0");
            args = {{"m", m}, {"n", n}};
        } else if (verb == "lift-so2") {
            expect_arity(verb, a, 1, 1, "K");
            const auto k = parse_int(a[0], "K");
            if (k % 2 != 0) throw UsageError("odd SO(2) weight excluded: " + a[0]);
            args = {{"k", k}};
        } else if (verb == "theta-support" || verb == "match") {
            expect_arity(verb, a, 1, 1, "SIGMA   e.g. lowest(4) | highest(-2) | full_parity(even) | finite{2,6}");
            args = {{"sigma", sl2::to_string(sl2::parse_support(a[0]))}};
        } else if (verb == "pi-table") {
            expect_arity(verb, a, 1, 1, "N_MAX");
            const auto n_max = parse_int(a[0], "N_MAX");
            if (n_max < 0) throw UsageError("N_MAX must be >= 0");
            args = {{"n_max", n_max}, {"max_dim", options.max_dim}};
        } else if (verb == "sl2-rank") {
            expect_arity(verb, a, 3, 4, "N M MAX_DEGREE [DEPTH]");
            const auto n = parse_int(a[0], "N"), m = parse_int(a[1], "M");
            const auto degree = parse_int(a[2], "MAX_DEGREE");
            if (degree < 0) throw UsageError("MAX_DEGREE must be >= 0");
            const auto depth = a.size() == 4 ? parse_int(a[3], "DEPTH") : 2 * (degree + 1);
            if (depth < 2 * (degree + 1)) throw UsageError("truncation too shallow: DEPTH must be >= 2(MAX_DEGREE+1)");
            if (depth > 200) throw UsageError("DEPTH above 200 is not supported");
            args = {{"n", n}, {"m", m}, {"max_degree", degree}, {"depth", depth}};
        } else if (verb == "verify-paper") {
            expect_arity(verb, a, 0, 0, "");
            args = {{"profile", acceptance::to_string(options.profile)}};
        } else {
            throw UsageError("unknown verb '" + verb + "'");
        }
    } catch (const InputError& e) {
        throw UsageError(e.what());
    }
    return req;
}

Json execute(const CommandRequest& req) {
    const Json& args = req.args;
    const std::string& verb = req.verb;

    auto irrep_arg = [&](const char* key) {
        return IrrepLabel{parse_system_label(args.at("system").get<std::string>()),
                          parse_weight(args.at(key).get<std::string>())};
    };

    if (verb == "dim") {
        const auto rep = irrep_arg("highest_weight");
        return {{"irrep", to_json(rep)}, {"dimension", weyl_dim(rep)}};
    }
    if (verb == "weights") {
        const auto rep = irrep_arg("highest_weight");
        const auto chi = freudenthal_character(rep);
        const RootSystem& sys = root_system(rep.system);
        Json dominant = Json::array();
        std::size_t distinct = 0;
        for (auto it = chi->dominant().rbegin(); it != chi->dominant().rend(); ++it) {
            const auto orbit = sys.weyl_orbit(it->first).size();
            distinct += orbit;
            dominant.push_back({{"weight", to_string(it->first)}, {"multiplicity", it->second}, {"orbit_size", orbit}});
        }
        return {{"irrep", to_json(rep)}, {"dimension", chi->dimension()}, {"distinct_weights", distinct},
                {"dominant_weights", dominant}};
    }
    if (verb == "tensor") {
        const auto a = irrep_arg("a"), b = irrep_arg("b");
        const auto dec = tensor_decompose(a, b);
        return {{"decomposition", to_json(dec)}, {"dimension", total_dimension(dec)}};
    }
    if (verb == "branch") {
        const auto emb = make_embedding(args.at("embedding").get<std::string>());
        const IrrepLabel rep{emb.source_system, parse_weight(args.at("highest_weight").get<std::string>())};
        const auto dec = branch(rep, emb);
        const auto classified = classify_tau(dec);
        return {{"source", to_json(rep)},
                {"source_dimension", weyl_dim(rep)},
                {"decomposition", to_json(dec)},
                {"dimension_conserved", total_dimension(dec) == weyl_dim(rep)},
                {"tau", tau_array(classified.taus)},
                {"non_tau", to_json(classified.failures)}};
    }
    if (verb == "infchar") {
        if (args.contains("transfer")) {
            const auto t = theta_infchar_transfer(parse_rational(args.at("transfer").get<std::string>()));
            return {{"value", to_string(t.value)}, {"dominant", to_string(t.dominant)},
                    {"singular", t.singular}, {"nonpositive", t.nonpositive}};
        }
        const auto rep = irrep_arg("highest_weight");
        return {{"irrep", to_json(rep)}, {"infinitesimal_character", to_string(infinitesimal_character(rep))}};
    }
    if (verb == "lift-ktype") {
        const auto lift = theta::lift_ktype(args.at("m").get<std::int64_t>(), args.at("n").get<std::int64_t>());
        const std::size_t degree = 4;
        const auto check = theta::cross_validate(lift, degree);
        return {{"ktype", to_json(TauLabel{lift.m, lift.n})},
                {"ktype_highest_weight", to_string(TauLabel{lift.m, lift.n}.highest_weight())},
                {"lowest_factor", lift.lowest_factor},
                {"highest_factor", lift.highest_factor},
                {"generator_so2_weight", lift.generator_so2_weight},
                {"cross_validation",
                 {{"max_degree", degree},
                  {"model_generator_weight", check.model_generator_weight},
                  {"filtration_ranks", check.filtration_ranks},
                  {"ok", check.ok}}}};
    }
    if (verb == "lift-so2") {
        const auto lift = theta::lift_so2type(args.at("k").get<std::int64_t>());
        Json bound = Json::array();
        for (const auto& tau : lift.ktype_bound) bound.push_back(to_json(tau));
        return {{"k", lift.k},
                {"m", lift.m},
                {"ktype_bound", bound},
                {"d5_label", lift.d5_label ? Json(to_string(*lift.d5_label)) : Json(nullptr)},
                {"out_of_theorem_scope", lift.out_of_theorem_scope}};
    }
    if (verb == "theta-support") return support_json(theta::theta_support(sl2::parse_support(args.at("sigma").get<std::string>())));
    if (verb == "match") return pairing_json(theta::match_lowest_types(sl2::parse_support(args.at("sigma").get<std::string>())));
    if (verb == "pi-table") {
        Json rows = Json::array();
        for (const auto& row : theta::pi_compact_table(args.at("n_max").get<std::int64_t>(), args.at("max_dim").get<std::int64_t>()))
            rows.push_back({{"n", row.n},
                            {"sl2_factor", "delta(" + std::to_string(row.sl2_lowest_weight) + ")"},
                            {"hc_parameter", to_string(row.hc_parameter)},
                            {"dimension", row.dimension},
                            {"infinitesimal_character", to_string(row.infinitesimal_character)},
                            {"tau", tau_array(row.taus)},
                            {"non_tau", to_json(row.non_tau)},
                            {"dimension_conserved", row.dimension_conserved},
                            {"tau_closed", row.tau_closed}});
        return {{"rows", rows}};
    }
    if (verb == "sl2-rank") {
        const auto depth = static_cast<std::size_t>(args.at("depth").get<std::int64_t>());
        const auto model = sl2::tensor_modules(sl2::build_lowest_weight_module(args.at("n").get<std::int64_t>(), depth),
                                               sl2::build_highest_weight_module(args.at("m").get<std::int64_t>(), depth));
        std::vector<std::size_t> ranks, counts;
        const auto degree = static_cast<std::size_t>(args.at("max_degree").get<std::int64_t>());
        for (std::size_t N = 0; N <= degree; ++N) {
            ranks.push_back(sl2::filtration_rank(model, model.index(0, 0), N));
            counts.push_back((N + 1) * (N + 2) / 2);
        }
        const std::size_t gen = model.index(0, 0);
        return {{"generator_weight", model.h.get(gen, gen).get_num().get_si()},
                {"filtration_ranks", ranks},
                {"free_module_counts", counts},
                {"free", ranks == counts},
                {"brackets_ok", sl2::check_brackets(model).ok()}};
    }
    if (verb == "verify-paper") {
        Json checks = Json::array();
        bool all = true;
        for (const auto& r : acceptance::run_all(acceptance::parse_profile(args.at("profile").get<std::string>()))) {
            all = all && r.pass;
            checks.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"details", r.details},
                              {"elapsed_seconds", r.elapsed_seconds}, {"budget_seconds", r.budget_seconds}});
        }
        return {{"checks", checks}, {"all_pass", all}};
    }
    throw UsageError("unknown verb '" + verb + "'");
}

std::vector<std::string> provenance(const std::string& verb) {
    if (verb == "dim") return {"Weyl dimension formula", "26-dim F4, 16-dim spin and 9-dim standard B4 representations"};
    if (verb == "weights") return {"Freudenthal multiplicity recursion"};
    if (verb == "tensor") return {"Brauer-Klimyk rule"};
    if (verb == "branch") return {"restriction F4 -> B4 of E_n; only tau(m,n) occur", "restriction D5 -> B4 of F_m"};
    if (verb == "infchar") return {"infinitesimal character of E_n is (2n+11,5,3,1)/2", "sl2 parameter x -> (x,5,3,1)/2"};
    if (verb == "lift-ktype") return {"lift of tau(m,n) is delta(2m+n+8) (x) conj-delta(n+4), generated in weight 2m+4"};
    if (verb == "lift-so2") return {"lift of 2m+4 is a quotient of U(g) (x)_U(k) F_m"};
    if (verb == "theta-support") return {"see-saw identity and Frobenius reciprocity", "nonvanishing criterion and K-type support"};
    if (verb == "match") return {"uniqueness of the irreducible quotient via lowest types"};
    if (verb == "pi-table") return {"compact decomposition into delta(2n+12) (x) E_n"};
    if (verb == "sl2-rank") return {"U(sl2) (x)_U(so2) (n-m) is isomorphic to delta(n) (x) conj-delta(m)"};
    if (verb == "verify-paper") return {"acceptance criteria 1-9"};
    return {};
}

Json make_document(const CommandRequest& request, const Json& result, double elapsed_ms) {
    return {{"verb", request.verb},
            {"args", request.args},
            {"result", result},
            {"provenance", provenance(request.verb)},
            {"elapsed_ms", elapsed_ms},
            {"engine_version", kEngineVersion}};
}

namespace {

std::string tau_text(const Json& t) {
    std::string s = "tau(" + std::to_string(t.at("m").get<std::int64_t>()) + "," + std::to_string(t.at("n").get<std::int64_t>()) + ")";
    if (t.contains("multiplicity") && t.at("multiplicity").get<std::int64_t>() != 1)
        s = std::to_string(t.at("multiplicity").get<std::int64_t>()) + "*" + s;
    return s;
}

std::string join_taus(const Json& arr) {
    std::string out;
    for (const auto& t : arr) out += (out.empty() ? "" : " + ") + tau_text(t);
    return out.empty() ? "(none)" : out;
}

std::string decomposition_text(const Json& dec) {
    std::ostringstream out;
    for (const auto& e : dec)
        out << "  " << e.at("multiplicity").get<std::int64_t>() << " x " << e.at("system").get<std::string>() << "("
            << e.at("highest_weight").get<std::string>() << ")  dim " << e.at("dimension").get<std::int64_t>() << '\n';
    return out.str();
}

}  // namespace

std::string render_text(const CommandRequest& req, const Json& r) {
    std::ostringstream out;
    const std::string& verb = req.verb;
    if (verb == "dim") {
        out << r.at("dimension").get<std::int64_t>() << '\n';
    } else if (verb == "weights") {
        out << "dimension " << r.at("dimension") << ", " << r.at("distinct_weights") << " distinct weights\n";
        for (const auto& w : r.at("dominant_weights"))
            out << "  " << w.at("weight").get<std::string>() << "  mult " << w.at("multiplicity") << "  orbit "
                << w.at("orbit_size") << '\n';
    } else if (verb == "tensor") {
        out << decomposition_text(r.at("decomposition")) << "total dimension " << r.at("dimension") << '\n';
    } else if (verb == "branch") {
        out << decomposition_text(r.at("decomposition"));
        out << "tau form: " << join_taus(r.at("tau")) << '\n';
        if (!r.at("non_tau").empty()) out << "not of tau form: " << r.at("non_tau").size() << " constituent(s)\n";
        out << "dimension conserved: " << (r.at("dimension_conserved").get<bool>() ? "yes" : "NO") << '\n';
    } else if (verb == "infchar") {
        if (r.contains("value")) {
            out << r.at("value").get<std::string>() << '\n';
            if (r.at("singular").get<bool>()) out << "note: singular (on a wall)\n";
            if (r.at("nonpositive").get<bool>()) out << "warning: x <= 0, reported unnormalized; dominant "
                                                     << r.at("dominant").get<std::string>() << '\n';
        } else {
            out << r.at("infinitesimal_character").get<std::string>() << '\n';
        }
    } else if (verb == "lift-ktype") {
        out << tau_text(r.at("ktype")) << " -> delta(" << r.at("lowest_factor") << ") (x) conj-delta("
            << r.at("highest_factor") << "), generator weight " << r.at("generator_so2_weight") << '\n';
        out << "sl2 model ranks " << r.at("cross_validation").at("filtration_ranks").dump() << " ok="
            << r.at("cross_validation").at("ok") << '\n';
    } else if (verb == "lift-so2") {
        out << "m = " << r.at("m") << ": F_m K-types " << join_taus(r.at("ktype_bound")) << '\n';
        if (r.at("out_of_theorem_scope").get<bool>()) out << "note: m < 0, no F_m exists; bound shown is the trivial K-type\n";
    } else if (verb == "theta-support") {
        out << r.at("rule").get<std::string>() << '\n';
    } else if (verb == "match") {
        out << "verdict: " << r.at("verdict").get<std::string>() << '\n';
        if (!r.at("lowest_ktype").is_null()) out << "lowest K-type: " << tau_text(r.at("lowest_ktype")) << '\n';
        for (const auto& step : r.at("hom_chain"))
            out << "  dim " << step.at("space").get<std::string>() << " = " << step.at("dimension") << '\n';
        for (const auto& reason : r.at("reasons")) out << "  " << reason.get<std::string>() << '\n';
    } else if (verb == "pi-table") {
        for (const auto& row : r.at("rows"))
            out << "n=" << row.at("n") << "  " << row.at("sl2_factor").get<std::string>() << "  param "
                << row.at("hc_parameter").get<std::string>() << "  dim " << row.at("dimension") << "  infchar ("
                << row.at("infinitesimal_character").get<std::string>() << ")  K-types " << join_taus(row.at("tau"))
                << "  closed=" << row.at("tau_closed") << '\n';
    } else if (verb == "sl2-rank") {
        out << "ranks " << r.at("filtration_ranks").dump() << "\nfree  " << r.at("free_module_counts").dump()
            << "\nisomorphism at truncation: " << (r.at("free").get<bool>() ? "yes" : "NO") << '\n';
    } else if (verb == "verify-paper") {
        for (const auto& c : r.at("checks")) {
            out << (c.at("pass").get<bool>() ? "PASS" : "FAIL") << "  [" << c.at("id") << "] " << c.at("name").get<std::string>() << '\n';
            if (!c.at("pass").get<bool>())
                for (const auto& d : c.at("details")) out << "      " << d.get<std::string>() << '\n';
        }
        out << (r.at("all_pass").get<bool>() ? "all checks pass" : "some checks FAIL") << '\n';
    } else {
        out << r.dump(2) << '\n';
    }
    return out.str();
}

bool result_failed(const CommandRequest& request, const Json& result) {
    return request.verb == "verify-paper" && !result.at("all_pass").get<bool>();
}

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::string ResultCache::canonical_key(const CommandRequest& request) {
    return request.verb + "\n" + request.args.dump();
}

std::filesystem::path ResultCache::entry_path(const CommandRequest& request) const {
    return dir_ / ("v" + std::to_string(kCacheSchemaVersion) + "-" + fnv1a_hex(canonical_key(request)) + ".json");
}

std::optional<Json> ResultCache::lookup(const CommandRequest& request) const {
    std::ifstream in(entry_path(request));
    if (!in) return std::nullopt;
    const Json entry = Json::parse(in, nullptr, false);
    if (entry.is_discarded() || !entry.is_object()) return std::nullopt;
    if (entry.value("schema_version", -1) != kCacheSchemaVersion) return std::nullopt;
    if (entry.value("engine_version", "") != kEngineVersion) return std::nullopt;
    const Json expected_key{{"verb", request.verb}, {"args", request.args}};
    if (!entry.contains("key") || entry.at("key") != expected_key || !entry.contains("value")) return std::nullopt;
    return entry.at("value");
}

void ResultCache::store(const CommandRequest& request, const Json& value) const {
    std::filesystem::create_directories(dir_);
    const Json entry{{"schema_version", kCacheSchemaVersion},
                     {"engine_version", kEngineVersion},
                     {"key", {{"verb", request.verb}, {"args", request.args}}},
                     {"value", value}};
    const auto target = entry_path(request);
    auto temp = target;
    temp += ".tmp" + std::to_string(::getpid());
    {
        std::ofstream out(temp);
        out << entry.dump() << '\n';
        if (!out) throw Error("cannot write cache entry " + temp.string());
    }
    std::filesystem::rename(temp, target);
}

}  // namespace thetalift::report
