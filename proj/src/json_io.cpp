#include "kdp/json_io.hpp"

#include <limits>

#include "kdp/error.hpp"

namespace kdp {

json json_of_integer(const Integer& n) {
    if (n >= std::numeric_limits<std::int64_t>::min() &&
        n <= std::numeric_limits<std::int64_t>::max())
        return n.convert_to<std::int64_t>();
    return n.str();
}

Integer integer_of_json(const json& j) {
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s.empty()) throw schema_error("empty string where an integer was expected");
        std::size_t start = s[0] == '-' ? 1 : 0;
        if (start == s.size()) throw schema_error("malformed integer literal");
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') throw schema_error("malformed integer literal");
        return Integer(s);
    }
    throw schema_error("expected an integer (number or decimal string)");
}

json to_json(const NumericalPolynomial& p) {
    json coeffs = json::array();
    for (const auto& c : p.binomial_coeffs()) coeffs.push_back(json_of_integer(c));
    return json{{"binomial_coeffs", coeffs}, {"pretty", p.to_string()}};
}

NumericalPolynomial polynomial_of_json(const json& j) {
    const json* coeffs = &j;
    if (j.is_object()) {
        if (!j.contains("binomial_coeffs"))
            throw schema_error("polynomial object needs \"binomial_coeffs\"");
        coeffs = &j["binomial_coeffs"];
    }
    if (!coeffs->is_array()) throw schema_error("binomial_coeffs must be an array");
    std::vector<Integer> c;
    for (const auto& e : *coeffs) c.push_back(integer_of_json(e));
    return NumericalPolynomial(std::move(c));
}

json to_json(const Ordinal& o) {
    json terms = json::array();
    for (const auto& [e, c] : o.terms()) terms.push_back(json::array({e, json_of_integer(c)}));
    return json{{"cnf", terms}, {"pretty", to_pretty(o)}};
}

Ordinal ordinal_of_json(const json& j) {
    if (j.is_string()) return parse_ordinal(j.get<std::string>());
    if (j.is_number_integer() || j.is_number_unsigned()) {
        Integer n = integer_of_json(j);
        if (n < 0) throw schema_error("ordinal literal must be nonnegative");
        return Ordinal::natural(n);
    }
    if (!j.is_object() || !j.contains("cnf")) throw schema_error("ordinal needs a \"cnf\" array");
    const json& terms = j["cnf"];
    if (!terms.is_array()) throw schema_error("\"cnf\" must be an array of [exponent, coeff]");
    std::vector<Ordinal::Term> out;
    for (const auto& t : terms) {
        if (!t.is_array() || t.size() != 2)
            throw schema_error("each cnf term must be [exponent, coeff]");
        Integer e = integer_of_json(t[0]);
        if (e < 0 || e > 1000000) throw schema_error("cnf exponent out of range");
        out.emplace_back(e.convert_to<unsigned>(), integer_of_json(t[1]));
    }
    return Ordinal::from_terms(std::move(out));
}

json to_json(const LeaderSet& ls) {
    json coords = json::array();
    for (const auto& antichain : ls.coords) {
        json pts = json::array();
        for (const auto& p : antichain) pts.push_back(p);
        coords.push_back(pts);
    }
    return json{{"m", ls.m}, {"coords", coords}};
}

LeaderSet leader_set_of_json(const json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("coords"))
        throw schema_error("leader set needs \"m\" and \"coords\"");
    Integer m = integer_of_json(j["m"]);
    if (m < 1 || m > 16) throw schema_error("m out of range (1..16)");
    if (!j["coords"].is_array() || j["coords"].empty())
        throw schema_error("\"coords\" must be a nonempty array of antichains");
    std::vector<std::vector<LatticePoint>> coords;
    for (const auto& antichain : j["coords"]) {
        if (!antichain.is_array()) throw schema_error("each coordinate must be an array of points");
        std::vector<LatticePoint> pts;
        for (const auto& pt : antichain) {
            if (!pt.is_array()) throw schema_error("each leader must be an array of naturals");
            LatticePoint u;
            for (const auto& e : pt) {
                Integer v = integer_of_json(e);
                if (v < 0 || v > 1000000000) throw schema_error("leader entry out of range");
                u.push_back(v.convert_to<unsigned>());
            }
            pts.push_back(std::move(u));
        }
        coords.push_back(std::move(pts));
    }
    return LeaderSet::make(m.convert_to<unsigned>(), std::move(coords));
}

json to_json(const WordSet& s) {
    json words = json::array();
    for (const auto& w : s.words) words.push_back(word_to_string(w));
    return json{{"m", s.m}, {"words", words}};
}

WordSet word_set_of_json(const json& j) {
    if (!j.is_object() || !j.contains("m")) throw schema_error("word set needs \"m\"");
    Integer m = integer_of_json(j["m"]);
    if (m < 1 || m > 255) throw schema_error("alphabet size out of range (1..255)");
    const char* key = j.contains("words") ? "words" : "leaders";
    if (!j.contains(key) || !j[key].is_array())
        throw schema_error("word set needs a \"words\" array");
    std::vector<Word> words;
    for (const auto& w : j[key]) {
        if (w.is_string()) {
            words.push_back(parse_word(w.get<std::string>(), m.convert_to<unsigned>()));
        } else if (w.is_array()) {
            Word word;
            for (const auto& a : w) {
                Integer v = integer_of_json(a);
                if (v < 1 || v > m) throw schema_error("word letter outside the alphabet");
                word.letters.push_back(v.convert_to<std::uint8_t>());
            }
            words.push_back(std::move(word));
        } else {
            throw schema_error("each word must be a string like \"2,1\" or an array");
        }
    }
    return WordSet::make(m.convert_to<unsigned>(), std::move(words));
}

json to_json(const KolchinDecomposition& d) {
    return json{{"exponents", d.exponents}};
}

json to_json(const BoundsReport& r) {
    return json{{"degree", r.k},
                {"leading_coeff", json_of_integer(r.n)},
                {"rank", to_json(r.rank)},
                {"lower", to_json(Ordinal::omega_power(r.k, r.n))},
                {"upper", to_json(Ordinal::omega_power(r.k, r.n + 1))},
                {"holds", r.holds}};
}

json to_json(const DimensionPolynomial& dp) {
    return json{{"polynomial", to_json(dp.poly)}, {"threshold", dp.threshold}};
}

json to_json(const ChainReport& r) {
    json samples = json::array();
    for (const auto& s : r.samples)
        samples.push_back(json{{"zeta", to_json(s.zeta)},
                               {"polynomial", to_json(s.poly)},
                               {"threshold", json_of_integer(s.threshold)},
                               {"rank", to_json(s.rank)},
                               {"rank_ge_zeta", s.rank_ge_zeta},
                               {"oracle_agrees", s.oracle_agrees}});
    return json{{"m", r.m},
                {"eta", to_json(r.eta)},
                {"samples", samples},
                {"strict_steps", r.strict_steps},
                {"chain_strict", r.chain_strict},
                {"generic_rank", to_json(r.generic_rank)},
                {"generic_rank_is_omega_m", r.generic_rank_is_omega_m},
                {"oracle_window", r.oracle_window},
                {"all_ok", r.all_ok}};
}

json to_json(const GrowthWitness& w) {
    json counts = json::array();
    for (const auto& c : w.counts) counts.push_back(json_of_integer(c));
    json ratios = json::array();
    for (const auto& r : w.ratios) ratios.push_back(r.str());
    json fit = w.fit ? to_json(*w.fit) : json(nullptr);
    return json{{"counts", counts},
                {"fit", fit},
                {"polynomial_fit", w.fit.has_value()},
                {"ratios", ratios}};
}

json to_json(const InvQuad& q) {
    return json{{"a", q.a}, {"b", q.b}, {"c", q.c}, {"d", q.d}};
}

std::string dump_report(const json& j, bool pretty) {
    return (pretty ? j.dump(2) : j.dump()) + "\n";
}

const char* errc_name(errc c) {
    switch (c) {
        case errc::not_in_p: return "NotInP";
        case errc::out_of_range: return "OutOfRange";
        case errc::not_an_extension: return "NotAnExtension";
        case errc::not_downward_closed: return "NotDownwardClosed";
        case errc::zero_polynomial: return "ZeroPolynomial";
        case errc::unknown_family: return "UnknownFamily";
        case errc::cap_exceeded: return "CapExceeded";
    }
    return "DomainError";
}

}  // namespace kdp
