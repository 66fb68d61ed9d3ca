// kdp: exact computations around dimension polynomials of leader sets, their
// canonical decompositions and ordinal ranks, ordinal-indexed chains, word
// growth in free monoids, and finite prime-field probes. Reports are JSON on
// stdout; for a fixed seed they are byte-identical across runs.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <utility>

#include "kdp/error.hpp"
#include "kdp/json_io.hpp"
#include "kdp/verify.hpp"

namespace {

using kdp::json;

struct Caps {
    unsigned word_m = 3;
    unsigned word_tmax = 14;
    std::size_t probe_set = 64;
    bool enforce = true;

    void merge(const json& j) {
        if (!j.is_object()) throw kdp::schema_error("caps must be an object");
        if (j.contains("word_m")) word_m = j["word_m"].get<unsigned>();
        if (j.contains("word_tmax")) word_tmax = j["word_tmax"].get<unsigned>();
        if (j.contains("probe_set")) probe_set = j["probe_set"].get<std::size_t>();
    }

    json to_json() const {
        return json{{"word_m", word_m},
                    {"word_tmax", word_tmax},
                    {"probe_set", probe_set},
                    {"enforced", enforce}};
    }
};

json read_input(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) throw kdp::schema_error("cannot open input file: " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw kdp::schema_error("input is not valid JSON");
    return j;
}

json envelope(const std::string& command, const json& input, const std::string& shadow,
              json result) {
    return json{{"command", command},
                {"input", input},
                {"paper_shadow", shadow},
                {"result", std::move(result)}};
}

json handle_dimpoly(const json& payload) {
    kdp::LeaderSet ls = kdp::leader_set_of_json(payload);
    kdp::DimensionPolynomial dp = kdp::dimension_polynomial(ls);
    kdp::KolchinDecomposition dec = kdp::decompose(dp.poly);
    json result{{"polynomial", kdp::to_json(dp.poly)},
                {"threshold", dp.threshold},
                {"decomposition", kdp::to_json(dec)},
                {"rank", kdp::to_json(kdp::rank(dec))},
                {"delta_rank", kdp::delta_rank(ls)}};
    return envelope("dimpoly", kdp::to_json(ls), "dimension polynomial of a leader set", result);
}

json handle_decompose(const json& payload) {
    kdp::NumericalPolynomial p = kdp::polynomial_of_json(payload);
    kdp::KolchinDecomposition dec = kdp::decompose(p);
    json result{{"decomposition", kdp::to_json(dec)},
                {"rank", kdp::to_json(kdp::rank(dec))},
                {"reconstruction_matches", kdp::reconstruct(dec.exponents) == p}};
    return envelope("decompose", kdp::to_json(p), "canonical binomial decomposition", result);
}

json handle_rank(const json& payload) {
    kdp::NumericalPolynomial p = kdp::polynomial_of_json(payload);
    kdp::BoundsReport bounds = kdp::check_rank_bounds(p);
    json result{{"rank", kdp::to_json(bounds.rank)}, {"bounds", kdp::to_json(bounds)}};
    return envelope("rank", kdp::to_json(p), "two-sided ordinal rank bounds", result);
}

json handle_chain(const json& payload) {
    if (!payload.contains("m") || !payload.contains("eta"))
        throw kdp::schema_error("chain needs \"m\" and \"eta\"");
    unsigned m = payload["m"].get<unsigned>();
    kdp::Ordinal eta = kdp::ordinal_of_json(payload["eta"]);
    std::vector<kdp::Ordinal> samples;
    if (payload.contains("samples"))
        for (const auto& s : payload["samples"]) samples.push_back(kdp::ordinal_of_json(s));
    unsigned window = payload.value("window", 10u);
    kdp::ChainSpec spec = kdp::ChainSpec::make(m, std::move(eta));
    kdp::ChainReport rep = kdp::verify_chain(spec, std::move(samples), window);
    json input{{"m", m}, {"eta", kdp::to_json(rep.eta)}, {"window", window}};
    return envelope("chain", input, "ordinal-indexed chain of restrictions with strict rank drops",
                    kdp::to_json(rep));
}

json handle_ncgrowth(const json& payload, const Caps& caps) {
    json shaped = payload;
    if (!shaped.contains("leaders") && !shaped.contains("words"))
        shaped["leaders"] = json::array();  // no exclusions: the whole free monoid
    kdp::WordSet leaders = kdp::word_set_of_json(shaped);
    if (!payload.contains("tmax")) throw kdp::schema_error("ncgrowth needs \"tmax\"");
    unsigned tmax = payload["tmax"].get<unsigned>();
    unsigned max_degree = payload.value("max_degree", 6u);
    if (caps.enforce) {
        if (leaders.m > caps.word_m)
            throw kdp::domain_error(kdp::errc::cap_exceeded, "alphabet size exceeds the cap");
        if (tmax > caps.word_tmax)
            throw kdp::domain_error(kdp::errc::cap_exceeded, "tmax exceeds the enumeration cap");
    }
    kdp::GrowthWitness wit = kdp::non_polynomial_witness(leaders, tmax, max_degree);
    json result = kdp::to_json(wit);
    result["max_degree"] = max_degree;
    result["caps"] = caps.to_json();
    return envelope("ncgrowth", json{{"leaders", kdp::to_json(leaders)}, {"tmax", tmax}},
                    "non-polynomial growth of free words under noncommuting directions", result);
}

std::uint64_t parse_element(const std::string& s) {
    try {
        return std::stoull(s);
    } catch (const std::exception&) {
        throw kdp::schema_error("not a field element: " + s);
    }
}

std::vector<std::uint64_t> parse_probe_set(const json& spec, std::uint64_t p) {
    if (spec.is_string()) {
        std::string s = spec.get<std::string>();
        if (s == "qr") return kdp::quadratic_residues(p);
        if (s == "all") {
            std::vector<std::uint64_t> out(p);
            for (std::uint64_t i = 0; i < p; ++i) out[i] = i;
            return out;
        }
        static const std::regex interval(R"(([0-9]+)\.\.([0-9]+))");
        static const std::regex comma_list(R"([0-9]+(,[0-9]+)*)");
        std::smatch parts;
        if (std::regex_match(s, parts, interval)) {
            std::uint64_t lo = parse_element(parts[1]);
            std::uint64_t hi = parse_element(parts[2]);
            if (lo > hi) throw kdp::schema_error("empty interval: " + s);
            if (hi - lo >= 10'000'000) throw kdp::schema_error("interval too large: " + s);
            std::vector<std::uint64_t> out;
            for (std::uint64_t v = lo; v <= hi; ++v) out.push_back(v);
            return out;
        }
        if (std::regex_match(s, comma_list)) {
            std::vector<std::uint64_t> out;
            std::stringstream in(s);
            for (std::string tok; std::getline(in, tok, ',');) out.push_back(parse_element(tok));
            return out;
        }
        throw kdp::schema_error(
            "set must be \"qr\", \"all\", an interval \"lo..hi\", a comma list, or an array");
    }
    if (!spec.is_array())
        throw kdp::schema_error(
            "set must be \"qr\", \"all\", an interval \"lo..hi\", a comma list, or an array");
    std::vector<std::uint64_t> out;
    for (const auto& e : spec) {
        kdp::Integer v = kdp::integer_of_json(e);
        if (v < 0) throw kdp::schema_error("set elements must be nonnegative");
        out.push_back(v.convert_to<std::uint64_t>());
    }
    return out;
}

json quads_json(const std::vector<kdp::InvQuad>& quads, std::size_t cap) {
    json arr = json::array();
    for (std::size_t i = 0; i < quads.size() && i < cap; ++i) arr.push_back(kdp::to_json(quads[i]));
    return arr;
}

json handle_probe(const json& payload, const Caps& caps) {
    if (!payload.contains("p")) throw kdp::schema_error("probe needs \"p\"");
    std::uint64_t p = payload["p"].get<std::uint64_t>();
    json set_spec = payload.value("set", json("all"));
    std::map<std::string, std::vector<std::uint64_t>> families;
    families["qr"] = kdp::quadratic_residues(p);
    if (payload.contains("families"))
        for (const auto& [name, arr] : payload["families"].items())
            families[name] = parse_probe_set(arr, p);
    kdp::ProbeConfig cfg = kdp::ProbeConfig::make(p, parse_probe_set(set_spec, p), families);
    std::string op = payload.value("op", "inv");
    json input{{"p", p}, {"set_size", cfg.x.size()}, {"op", op}};

    if (op == "inv") {
        if (!payload.contains("alpha")) throw kdp::schema_error("probe op inv needs \"alpha\"");
        const json& alpha = payload["alpha"];
        if (alpha.is_string() && alpha.get<std::string>() == "all") {
            // nonemptiness sweep with early-exit witnesses
            json sweep = json::array();
            bool all_nonempty = true;
            for (std::uint64_t a = 1; a < cfg.p; ++a) {
                auto w = kdp::inv_witness(cfg, a);
                all_nonempty = all_nonempty && w.has_value();
                sweep.push_back(json{{"alpha", a},
                                     {"witness", w ? kdp::to_json(*w) : json(nullptr)}});
            }
            input["alpha"] = "all";
            json result{{"witnesses", sweep}, {"all_nonempty", all_nonempty}};
            return envelope("probe", input, "inversion quadruples exist at every nonzero slope",
                            result);
        }
        std::uint64_t a = alpha.get<std::uint64_t>();
        if (caps.enforce && cfg.x.size() > caps.probe_set)
            throw kdp::domain_error(kdp::errc::cap_exceeded,
                                    "set too large for full quadruple enumeration");
        std::vector<kdp::InvQuad> quads = kdp::inv_set(cfg, a);
        bool recheck = true;
        for (const auto& q : quads) {
            std::uint64_t diff = (q.b + cfg.p - q.c) % cfg.p;
            recheck = recheck && q.b != q.c &&
                      (q.a + cfg.p - q.d) % cfg.p * kdp::mod_inv(diff, cfg.p) % cfg.p == a % cfg.p;
        }
        input["alpha"] = a;
        json result{{"count", quads.size()},
                    {"quadruples", quads_json(quads, 100)},
                    {"truncated", quads.size() > 100},
                    {"definitional_recheck", recheck},
                    {"caps", caps.to_json()}};
        return envelope("probe", input, "inversion quadruples at a fixed slope", result);
    }
    if (op == "fiber") {
        for (const char* k : {"alpha", "a", "b"})
            if (!payload.contains(k))
                throw kdp::schema_error(std::string("probe op fiber needs \"") + k + "\"");
        std::uint64_t alpha = payload["alpha"].get<std::uint64_t>();
        std::uint64_t a = payload["a"].get<std::uint64_t>();
        std::uint64_t b = payload["b"].get<std::uint64_t>();
        auto fiber = kdp::inv_fiber(cfg, alpha, a, b);
        json pairs = json::array();
        for (std::size_t i = 0; i < fiber.size() && i < 200; ++i)
            pairs.push_back(json::array({fiber[i].first, fiber[i].second}));
        input["alpha"] = alpha;
        input["a"] = a;
        input["b"] = b;
        json result{{"count", fiber.size()},
                    {"pairs", pairs},
                    {"truncated", fiber.size() > 200}};
        return envelope("probe", input, "fiber of the inversion set over a fixed pair", result);
    }
    if (op == "xfamily") {
        for (const char* k : {"a", "b", "family"})
            if (!payload.contains(k))
                throw kdp::schema_error(std::string("probe op xfamily needs \"") + k + "\"");
        std::uint64_t a = payload["a"].get<std::uint64_t>();
        std::uint64_t b = payload["b"].get<std::uint64_t>();
        std::string family = payload["family"].get<std::string>();
        std::uint64_t threshold = payload.value("threshold", std::uint64_t{1});
        auto set = kdp::x_family_set(cfg, a, b, family, threshold);
        input["a"] = a;
        input["b"] = b;
        input["family"] = family;
        input["threshold"] = threshold;
        json result{{"count", set.size()}, {"elements", set}};
        return envelope("probe", input, "slice of X through a named direction family", result);
    }
    if (op == "aff") {
        std::size_t limit = payload.value("limit", std::size_t{50});
        auto orbit = kdp::aff_orbit(cfg, limit);
        json sets = json::array();
        for (std::size_t i = 0; i < orbit.size() && i < 20; ++i) sets.push_back(orbit[i]);
        input["limit"] = limit;
        json result{{"distinct_images", orbit.size()},
                    {"first_images", sets},
                    {"truncated", orbit.size() > 20}};
        return envelope("probe", input, "affine images of X, deduplicated", result);
    }
    throw kdp::schema_error("unknown probe op: " + op);
}

json handle_verify(const json& payload) {
    kdp::VerifyOptions opts;
    opts.suite = payload.value("suite", "all");
    opts.seed = payload.value("seed", std::uint64_t{0});
    opts.cases = payload.value("cases", 50u);
    json result = kdp::run_verify(opts);
    json input{{"suite", opts.suite}, {"seed", opts.seed}, {"cases", opts.cases}};
    return envelope("verify", input, "plumbing", result);
}

json dispatch(const std::string& command, const json& payload, const Caps& caps) {
    if (command == "dimpoly") return handle_dimpoly(payload);
    if (command == "decompose") return handle_decompose(payload);
    if (command == "rank") return handle_rank(payload);
    if (command == "chain") return handle_chain(payload);
    if (command == "ncgrowth") return handle_ncgrowth(payload, caps);
    if (command == "probe") return handle_probe(payload, caps);
    if (command == "verify") return handle_verify(payload);
    throw kdp::schema_error("unknown command: " + command);
}

int emit(const json& report, bool pretty) {
    std::cout << kdp::dump_report(report, pretty);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact dimension-polynomial, ordinal-rank, and field-probe computations"};
    app.require_subcommand(1);

    bool pretty = false;
    bool override_caps = false;
    app.add_flag("--pretty", pretty, "indent the JSON report");
    app.add_flag("--override-caps", override_caps, "lift the enumeration safety caps");

    std::string input_path;
    std::string coeffs, eta, samples, leaders, set_spec, alpha, op = "inv", family, suite = "all";
    unsigned m = 0, tmax = 0, max_degree = 6, window = 10, cases = 50;
    std::uint64_t seed = 0, prime = 0, av = 0, bv = 0, threshold = 1;
    std::size_t limit = 50;

    auto add_input = [&](CLI::App* cmd) {
        cmd->fallthrough();  // let the global flags appear after the subcommand
        cmd->add_option("--input", input_path, "JSON payload file, or - for stdin");
    };

    CLI::App* c_dim = app.add_subcommand("dimpoly", "dimension polynomial of a leader set");
    add_input(c_dim);

    CLI::App* c_dec = app.add_subcommand("decompose", "canonical binomial decomposition");
    add_input(c_dec);
    c_dec->add_option("--coeffs", coeffs, "binomial-basis coefficients c0,c1,...");

    CLI::App* c_rank = app.add_subcommand("rank", "ordinal rank and two-sided bounds");
    add_input(c_rank);
    c_rank->add_option("--coeffs", coeffs, "binomial-basis coefficients c0,c1,...");

    CLI::App* c_chain = app.add_subcommand("chain", "ordinal-indexed chain with rank checks");
    add_input(c_chain);
    c_chain->add_option("--m", m, "number of directions");
    c_chain->add_option("--eta", eta, "chain index, e.g. \"w*4+7\"");
    c_chain->add_option("--samples", samples, "comma- or semicolon-separated ordinals below eta");
    c_chain->add_option("--window", window, "oracle agreement window length");

    CLI::App* c_nc = app.add_subcommand("ncgrowth", "free-word growth and polynomial fit attempt");
    add_input(c_nc);
    c_nc->add_option("--m", m, "alphabet size");
    c_nc->add_option("--leaders", leaders, "semicolon-separated words like \"2,1;1,2\"");
    c_nc->add_option("--tmax", tmax, "largest word length to count");
    c_nc->add_option("--max-degree", max_degree, "degrees tried by the fit");

    CLI::App* c_probe = app.add_subcommand("probe", "prime-field inversion configurations");
    add_input(c_probe);
    c_probe->add_option("--p", prime, "odd prime modulus");
    c_probe->add_option("--set", set_spec, "qr, all, lo..hi, a comma list, or a JSON array");
    c_probe->add_option("--alpha", alpha, "slope, or all for the nonemptiness sweep");
    c_probe->add_option("--op", op, "inv (default), fiber, xfamily, or aff");
    c_probe->add_option("--a", av, "first fixed element");
    c_probe->add_option("--b", bv, "second fixed element");
    c_probe->add_option("--family", family, "direction family name for xfamily");
    c_probe->add_option("--threshold", threshold, "minimum intersection size for xfamily");
    c_probe->add_option("--limit", limit, "image cap for aff");

    CLI::App* c_verify = app.add_subcommand("verify", "randomized oracle cross-checks");
    add_input(c_verify);
    c_verify->add_option("--suite", suite, "lattice, kolchin, ordinal, chain, ncgrowth, probe, all");
    c_verify->add_option("--seed", seed, "RNG seed");
    c_verify->add_option("--cases", cases, "cases per suite");

    CLI::App* c_run = app.add_subcommand("run", "execute a full JSON request");
    add_input(c_run);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    std::string command;
    for (const auto* sub :
         {c_dim, c_dec, c_rank, c_chain, c_nc, c_probe, c_verify, c_run})
        if (sub->parsed()) command = sub->get_name();

    try {
        json payload = json::object();
        if (!input_path.empty()) payload = read_input(input_path);

        Caps caps;
        if (payload.is_object() && payload.contains("caps")) caps.merge(payload["caps"]);
        caps.enforce = !override_caps;

        if (command == "run") {
            if (!payload.is_object() || !payload.contains("command"))
                throw kdp::schema_error("run request needs \"command\"");
            std::string inner = payload["command"].get<std::string>();
            json inner_payload = payload.value("payload", json::object());
            if (inner_payload.is_object() && inner_payload.contains("caps"))
                caps.merge(inner_payload["caps"]);
            return emit(dispatch(inner, inner_payload, caps), pretty);
        }

        if (!payload.is_object()) throw kdp::schema_error("payload must be a JSON object");

        // fold the convenience flags into the payload
        if (!coeffs.empty()) {
            json arr = json::array();
            std::stringstream ss(coeffs);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                if (tok.find_first_not_of(" -0123456789") != std::string::npos)
                    throw kdp::schema_error("malformed --coeffs list");
                arr.push_back(json::parse(tok, nullptr, false));
                if (arr.back().is_discarded()) throw kdp::schema_error("malformed --coeffs list");
            }
            payload["binomial_coeffs"] = arr;
        }
        if (c_chain->parsed()) {
            if (c_chain->count("--m")) payload["m"] = m;
            if (c_chain->count("--eta")) payload["eta"] = eta;
            if (c_chain->count("--window")) payload["window"] = window;
            if (c_chain->count("--samples")) {
                // ordinal literals never contain ',' or ';', so accept either
                json arr = json::array();
                std::string tok;
                for (char ch : samples) {
                    if (ch == ';' || ch == ',') {
                        if (!tok.empty()) arr.push_back(std::exchange(tok, {}));
                    } else {
                        tok.push_back(ch);
                    }
                }
                if (!tok.empty()) arr.push_back(tok);
                payload["samples"] = arr;
            }
        }
        if (c_nc->parsed()) {
            if (c_nc->count("--m")) payload["m"] = m;
            if (c_nc->count("--tmax")) payload["tmax"] = tmax;
            if (c_nc->count("--max-degree")) payload["max_degree"] = max_degree;
            if (c_nc->count("--leaders")) {
                json arr = json::array();
                std::stringstream ss(leaders);
                std::string tok;
                while (std::getline(ss, tok, ';'))
                    if (!tok.empty()) arr.push_back(tok);
                payload["leaders"] = arr;
            }
        }
        if (c_probe->parsed()) {
            if (c_probe->count("--p")) payload["p"] = prime;
            if (c_probe->count("--op")) payload["op"] = op;
            if (c_probe->count("--a")) payload["a"] = av;
            if (c_probe->count("--b")) payload["b"] = bv;
            if (c_probe->count("--family")) payload["family"] = family;
            if (c_probe->count("--threshold")) payload["threshold"] = threshold;
            if (c_probe->count("--limit")) payload["limit"] = limit;
            if (c_probe->count("--set")) {
                json arr = json::parse(set_spec, nullptr, false);
                // JSON arrays pass through; everything else is a generator
                // string (qr, all, lo..hi, comma list) decoded later.
                payload["set"] = arr.is_array() ? arr : json(set_spec);
            }
            if (c_probe->count("--alpha")) {
                if (alpha == "all") {
                    payload["alpha"] = "all";
                } else {
                    json v = json::parse(alpha, nullptr, false);
                    if (v.is_discarded() || !v.is_number_unsigned())
                        throw kdp::schema_error("alpha must be a natural number or \"all\"");
                    payload["alpha"] = v;
                }
            }
        }
        if (c_verify->parsed()) {
            if (c_verify->count("--suite")) payload["suite"] = suite;
            if (c_verify->count("--seed")) payload["seed"] = seed;
            if (c_verify->count("--cases")) payload["cases"] = cases;
        }

        return emit(dispatch(command, payload, caps), pretty);
    } catch (const kdp::schema_error& e) {
        std::cout << kdp::dump_report(
            json{{"command", command},
                 {"error", json{{"code", "SchemaError"}, {"message", e.what()}}}},
            pretty);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cout << kdp::dump_report(
            json{{"command", command},
                 {"error", json{{"code", "SchemaError"}, {"message", e.what()}}}},
            pretty);
        return 2;
    } catch (const kdp::domain_error& e) {
        std::cout << kdp::dump_report(
            json{{"command", command},
                 {"error", json{{"code", kdp::errc_name(e.code())}, {"message", e.what()}}}},
            pretty);
        return 3;
    } catch (const json::exception& e) {
        std::cout << kdp::dump_report(
            json{{"command", command},
                 {"error", json{{"code", "SchemaError"}, {"message", e.what()}}}},
            pretty);
        return 2;
    } catch (const std::exception& e) {
        std::cout << kdp::dump_report(
            json{{"command", command},
                 {"error", json{{"code", "InternalError"}, {"message", e.what()}}}},
            pretty);
        return 1;
    }
}
