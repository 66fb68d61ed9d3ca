#include "kdp/ordinal.hpp"

#include <algorithm>
#include <cctype>

#include "kdp/error.hpp"

namespace kdp {

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].second < 1) throw schema_error("ordinal term with coefficient < 1");
        if (i > 0 && terms[i].first >= terms[i - 1].first)
            throw schema_error("ordinal exponents must be strictly decreasing");
    }
    Ordinal o;
    o.terms_ = std::move(terms);
    return o;
}

Ordinal Ordinal::omega_power(unsigned e, const Integer& coeff) {
    if (coeff == 0) return {};
    return from_terms({{e, coeff}});
}

Ordinal Ordinal::natural(const Integer& n) {
    if (n < 0) throw schema_error("ordinal from negative integer");
    return omega_power(0, n);
}

unsigned Ordinal::leading_exponent() const {
    if (is_zero()) throw std::logic_error("leading_exponent of zero ordinal");
    return terms_.front().first;
}

Ordering compare(const Ordinal& a, const Ordinal& b) {
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    for (std::size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
        if (ta[i].first != tb[i].first)
            return ta[i].first > tb[i].first ? Ordering::Greater : Ordering::Less;
        if (ta[i].second != tb[i].second)
            return ta[i].second > tb[i].second ? Ordering::Greater : Ordering::Less;
    }
    if (ta.size() != tb.size()) return ta.size() > tb.size() ? Ordering::Greater : Ordering::Less;
    return Ordering::Equal;
}

bool operator<(const Ordinal& a, const Ordinal& b) { return compare(a, b) == Ordering::Less; }
bool operator<=(const Ordinal& a, const Ordinal& b) { return compare(a, b) != Ordering::Greater; }

Ordinal ordinal_sum(const Ordinal& a, const Ordinal& b) {
    if (b.is_zero()) return a;
    unsigned lead = b.leading_exponent();
    std::vector<Ordinal::Term> out;
    for (const auto& [e, c] : a.terms())
        if (e > lead) out.emplace_back(e, c);
    // merge the boundary term, then absorb the rest of a
    Integer boundary = b.terms().front().second;
    for (const auto& [e, c] : a.terms())
        if (e == lead) boundary += c;
    out.emplace_back(lead, boundary);
    for (std::size_t i = 1; i < b.terms().size(); ++i) out.push_back(b.terms()[i]);
    return Ordinal::from_terms(std::move(out));
}

Ordinal natural_sum(const Ordinal& a, const Ordinal& b) {
    std::vector<Ordinal::Term> out;
    auto ia = a.terms().begin(), ea = a.terms().end();
    auto ib = b.terms().begin(), eb = b.terms().end();
    while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && ia->first > ib->first)) {
            out.push_back(*ia++);
        } else if (ia == ea || ib->first > ia->first) {
            out.push_back(*ib++);
        } else {
            out.emplace_back(ia->first, ia->second + ib->second);
            ++ia, ++ib;
        }
    }
    return Ordinal::from_terms(std::move(out));
}

Ordinal ordinal_of_tuple(std::span<const Integer> r) {
    std::vector<Ordinal::Term> out;
    for (std::size_t i = r.size(); i-- > 0;) {
        if (r[i] < 0) throw schema_error("tuple entries must be nonnegative");
        if (r[i] > 0) out.emplace_back(static_cast<unsigned>(i), r[i]);
    }
    return Ordinal::from_terms(std::move(out));
}

std::vector<Integer> tuple_of_ordinal(const Ordinal& eta, unsigned m) {
    std::vector<Integer> r(m, Integer(0));
    for (const auto& [e, c] : eta.terms()) {
        if (e >= m)
            throw domain_error(errc::out_of_range,
                               "ordinal " + to_pretty(eta) + " is not below w^" + std::to_string(m));
        r[e] = c;
    }
    return r;
}

std::string to_pretty(const Ordinal& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : a.terms()) {
        if (!out.empty()) out += " + ";
        if (e == 0) {
            out += c.str();
        } else if (e == 1) {
            out += "w*" + c.str();
        } else {
            out += "w^" + std::to_string(e) + "*" + c.str();
        }
    }
    return out;
}

namespace {

void skip_ws(std::string_view& s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
}

Integer parse_nat(std::string_view& s, const char* what) {
    skip_ws(s);
    std::string digits;
    while (!s.empty() && std::isdigit(static_cast<unsigned char>(s.front()))) {
        digits += s.front();
        s.remove_prefix(1);
    }
    if (digits.empty()) throw schema_error(std::string("expected ") + what + " in ordinal literal");
    return Integer(digits);
}

Ordinal::Term parse_term(std::string_view& s) {
    skip_ws(s);
    if (s.empty()) throw schema_error("empty ordinal term");
    if (s.front() != 'w') {
        return {0u, parse_nat(s, "coefficient")};
    }
    s.remove_prefix(1);
    unsigned e = 1;
    skip_ws(s);
    if (!s.empty() && s.front() == '^') {
        s.remove_prefix(1);
        Integer exp = parse_nat(s, "exponent");
        if (exp > 1000000) throw schema_error("ordinal exponent too large");
        e = static_cast<unsigned>(exp);
        skip_ws(s);
    }
    Integer c = 1;
    if (!s.empty() && s.front() == '*') {
        s.remove_prefix(1);
        c = parse_nat(s, "coefficient");
    }
    return {e, c};
}

}  // namespace

Ordinal parse_ordinal(std::string_view text) {
    skip_ws(text);
    if (text.empty()) throw schema_error("empty ordinal literal");
    std::vector<Ordinal::Term> terms;
    while (true) {
        terms.push_back(parse_term(text));
        skip_ws(text);
        if (text.empty()) break;
        if (text.front() != '+') throw schema_error("unexpected character in ordinal literal");
        text.remove_prefix(1);
    }
    // accept terms in any order, merging duplicates exponent-wise
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<Ordinal::Term> merged;
    for (auto& t : terms) {
        if (!merged.empty() && merged.back().first == t.first)
            merged.back().second += t.second;
        else
            merged.push_back(t);
    }
    std::erase_if(merged, [](const auto& t) { return t.second == 0; });
    return Ordinal::from_terms(std::move(merged));
}

}  // namespace kdp
