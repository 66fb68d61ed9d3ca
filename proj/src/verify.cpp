#include "kdp/verify.hpp"

#include <functional>

#include "kdp/error.hpp"

namespace kdp {

LeaderSet random_leader_set(Prng& rng, unsigned max_m, unsigned max_d, unsigned max_entry,
                            unsigned max_leaders) {
    unsigned m = static_cast<unsigned>(rng.range(1, max_m));
    unsigned d = static_cast<unsigned>(rng.range(1, max_d));
    std::vector<std::vector<LatticePoint>> coords(d);
    for (auto& antichain : coords) {
        unsigned n = static_cast<unsigned>(rng.below(max_leaders + 1));
        for (unsigned i = 0; i < n; ++i) {
            LatticePoint u(m);
            for (auto& e : u) e = static_cast<unsigned>(rng.below(max_entry + 1));
            antichain.push_back(std::move(u));
        }
    }
    return LeaderSet::make(m, std::move(coords));
}

std::vector<unsigned> random_exponent_list(Prng& rng, unsigned max_len, unsigned max_val) {
    unsigned len = static_cast<unsigned>(rng.below(max_len + 1));
    std::vector<unsigned> exps(len);
    for (auto& e : exps) e = static_cast<unsigned>(rng.below(max_val + 1));
    std::sort(exps.rbegin(), exps.rend());
    return exps;
}

Ordinal random_ordinal_below(Prng& rng, unsigned exp_bound, std::uint64_t coeff_bound) {
    std::vector<Ordinal::Term> terms;
    for (unsigned e = exp_bound; e-- > 0;) {
        std::uint64_t c = rng.below(coeff_bound + 1);
        if (c > 0) terms.emplace_back(e, Integer(c));
    }
    return Ordinal::from_terms(std::move(terms));
}

namespace {

struct SuiteResult {
    unsigned cases = 0;
    unsigned agreements = 0;
    json failures = json::array();

    void record(bool ok, const json& detail) {
        ++cases;
        if (ok)
            ++agreements;
        else if (failures.size() < 10)
            failures.push_back(detail);
    }

    json to_json() const {
        return json{{"cases", cases}, {"agreements", agreements}, {"failures", failures}};
    }
};

SuiteResult suite_lattice(std::uint64_t seed, unsigned cases) {
    Prng rng(seed);
    SuiteResult res;
    for (unsigned i = 0; i < cases; ++i) {
        LeaderSet ls = random_leader_set(rng, 3, 3, 6, 5);
        DimensionPolynomial dp = dimension_polynomial(ls);
        bool ok = true;
        for (unsigned t = dp.threshold; t <= dp.threshold + 10; ++t)
            if (dp.poly(t) != count_free_points(ls, t)) {
                ok = false;
                break;
            }
        ok = ok && count_free_points_serial(ls, dp.threshold + 5) ==
                       count_free_points(ls, dp.threshold + 5);
        // canonical decomposition exists and reproduces the polynomial
        KolchinDecomposition d = decompose(dp.poly);
        ok = ok && reconstruct(d.exponents) == dp.poly;
        // two-sided rank bounds (stated for nonzero polynomials)
        if (!dp.poly.is_zero()) ok = ok && check_rank_bounds(dp.poly).holds;
        // degree-m coefficient counts the unconstrained coordinates
        unsigned dr = delta_rank(ls);
        if (dr > 0)
            ok = ok && dp.poly.leading_monomial_coeff() * factorial(ls.m) == dr &&
                 dp.poly.degree() == static_cast<int>(ls.m);
        else
            ok = ok && dp.poly.degree() < static_cast<int>(ls.m);
        res.record(ok, ::kdp::to_json(ls));
    }
    return res;
}

SuiteResult suite_kolchin(std::uint64_t seed, unsigned cases) {
    Prng rng(seed);
    SuiteResult res;
    NumericalPolynomial prev;
    bool have_prev = false;
    for (unsigned i = 0; i < cases; ++i) {
        std::vector<unsigned> exps = random_exponent_list(rng, 6, 4);
        NumericalPolynomial p = reconstruct(exps);
        KolchinDecomposition d = decompose(p);
        bool ok = d.exponents == exps;
        if (!p.is_zero()) ok = ok && check_rank_bounds(p).holds;
        // rank respects the eventual pointwise order
        if (have_prev) {
            Ordering po = compare_dominance(prev, p);
            Ordering ro = compare(rank(prev), rank(p));
            if (po != Ordering::Equal) ok = ok && ro == po;
        }
        prev = p;
        have_prev = true;
        res.record(ok, json{{"exponents", exps}});
    }
    return res;
}

SuiteResult suite_ordinal(std::uint64_t seed, unsigned cases) {
    Prng rng(seed);
    SuiteResult res;
    for (unsigned i = 0; i < cases; ++i) {
        Ordinal a = random_ordinal_below(rng, 4, 9);
        Ordinal b = random_ordinal_below(rng, 4, 9);
        Ordinal c = random_ordinal_below(rng, 4, 9);
        bool ok = ordinal_sum(a, b) <= natural_sum(a, b);
        ok = ok && natural_sum(a, b) == natural_sum(b, a);
        ok = ok && natural_sum(natural_sum(a, b), c) == natural_sum(a, natural_sum(b, c));
        ok = ok && ordinal_sum(ordinal_sum(a, b), c) == ordinal_sum(a, ordinal_sum(b, c));
        ok = ok && (a <= ordinal_sum(a, b)) && (b <= ordinal_sum(a, b));
        // colex bijection on N^3
        std::vector<Integer> u(3), v(3);
        for (auto& e : u) e = rng.below(50);
        for (auto& e : v) e = rng.below(50);
        Ordinal ou = ordinal_of_tuple(u), ov = ordinal_of_tuple(v);
        ok = ok && tuple_of_ordinal(ou, 3) == u;
        auto colex = [](const std::vector<Integer>& x, const std::vector<Integer>& y) {
            for (std::size_t k = x.size(); k-- > 0;)
                if (x[k] != y[k]) return x[k] < y[k] ? Ordering::Less : Ordering::Greater;
            return Ordering::Equal;
        };
        ok = ok && colex(u, v) == compare(ou, ov);
        res.record(ok, json{{"a", to_pretty(a)}, {"b", to_pretty(b)}});
    }
    return res;
}

SuiteResult suite_chain(std::uint64_t seed, unsigned cases) {
    Prng rng(seed);
    SuiteResult res;
    for (unsigned i = 0; i < cases; ++i) {
        unsigned m = static_cast<unsigned>(rng.range(1, 3));
        Ordinal eta = random_ordinal_below(rng, m, 4);
        if (eta.is_zero()) eta = Ordinal::natural(1 + Integer(rng.below(4)));
        ChainSpec spec = ChainSpec::make(m, eta);
        std::vector<Ordinal> samples;
        for (unsigned s = 0; s < 3; ++s) {
            Ordinal z = random_ordinal_below(rng, m, 4);
            if (z < eta) samples.push_back(z);
        }
        ChainReport rep = verify_chain(spec, std::move(samples), 10);
        res.record(rep.all_ok, json{{"m", m}, {"eta", to_pretty(eta)}});
    }
    return res;
}

SuiteResult suite_ncgrowth(std::uint64_t seed, unsigned cases) {
    Prng rng(seed);
    SuiteResult res;
    for (unsigned i = 0; i < cases; ++i) {
        bool ok = true;
        if (i % 3 == 0) {
            // one-letter alphabet degenerates to the lattice count in N^1
            unsigned k = static_cast<unsigned>(rng.range(1, 6));
            Word leader;
            leader.letters.assign(k, 1);
            WordSet ws = WordSet::make(1, {leader});
            LeaderSet ls = LeaderSet::make(1, {{LatticePoint{k}}});
            for (unsigned t = 0; t <= 12; ++t)
                ok = ok && free_word_count(ws, t) == count_free_points(ls, t);
        } else {
            unsigned m = 2;
            std::vector<Word> leaders;
            unsigned n = static_cast<unsigned>(rng.range(1, 3));
            for (unsigned w = 0; w < n; ++w) {
                Word word;
                unsigned len = static_cast<unsigned>(rng.range(1, 3));
                for (unsigned j = 0; j < len; ++j)
                    word.letters.push_back(static_cast<std::uint8_t>(rng.range(1, m)));
                leaders.push_back(std::move(word));
            }
            WordSet ws = WordSet::make(m, std::move(leaders));
            for (unsigned t = 0; t <= 11; ++t)
                ok = ok && free_word_count(ws, t) == free_word_count_serial(ws, t);
        }
        res.record(ok, json{{"case", i}});
    }
    return res;
}

SuiteResult suite_probe(std::uint64_t seed, unsigned cases) {
    Prng rng(seed);
    ProbeConfig cfg = ProbeConfig::make(31, quadratic_residues(31));
    SuiteResult res;
    for (unsigned i = 0; i < cases; ++i) {
        std::uint64_t alpha = rng.range(1, 30);
        std::vector<InvQuad> quads = inv_set(cfg, alpha);
        bool ok = quads == inv_set_serial(cfg, alpha);
        // definitional recheck through the division route
        for (const auto& q : quads) {
            std::uint64_t diff = (q.b + cfg.p - q.c) % cfg.p;
            ok = ok && q.b != q.c &&
                 (q.a + cfg.p - q.d) % cfg.p * mod_inv(diff, cfg.p) % cfg.p == alpha % cfg.p;
        }
        // fiber slices partition the quadruples with fixed (a, b)
        std::uint64_t a = cfg.x[rng.below(cfg.x.size())];
        std::uint64_t b = cfg.x[rng.below(cfg.x.size())];
        auto fiber = inv_fiber(cfg, alpha, a, b);
        std::size_t from_quads = 0;
        for (const auto& q : quads)
            if (q.a == a && q.b == b) ++from_quads;
        std::size_t from_fiber = 0;
        for (const auto& [c, d] : fiber)
            if (b != c) ++from_fiber;
        ok = ok && from_quads == from_fiber;
        res.record(ok, json{{"alpha", alpha}, {"a", a}, {"b", b}});
    }
    return res;
}

}  // namespace

json run_verify(const VerifyOptions& opts) {
    using Suite = std::function<SuiteResult(std::uint64_t, unsigned)>;
    const std::vector<std::pair<std::string, Suite>> suites = {
        {"lattice", suite_lattice},   {"kolchin", suite_kolchin}, {"ordinal", suite_ordinal},
        {"chain", suite_chain},       {"ncgrowth", suite_ncgrowth}, {"probe", suite_probe},
    };

    json out{{"suite", opts.suite}, {"seed", opts.seed}, {"cases", opts.cases}};
    json detail = json::object();
    unsigned total = 0, agreed = 0;
    bool matched = false;
    for (const auto& [name, fn] : suites) {
        if (opts.suite != "all" && opts.suite != name) continue;
        matched = true;
        SuiteResult r = fn(opts.seed, opts.cases);
        detail[name] = r.to_json();
        total += r.cases;
        agreed += r.agreements;
    }
    if (!matched) throw schema_error("unknown verify suite: " + opts.suite);
    out["suites"] = detail;
    out["total_cases"] = total;
    out["total_agreements"] = agreed;
    out["all_ok"] = total == agreed;
    return out;
}

}  // namespace kdp
