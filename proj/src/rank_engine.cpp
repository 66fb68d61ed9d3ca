#include "kdp/rank_engine.hpp"

#include <algorithm>
#include <cstdint>

#include "kdp/error.hpp"
#include "kdp/lattice.hpp"

namespace kdp {

ChainSpec ChainSpec::make(unsigned m, Ordinal eta) {
    if (m < 1) throw schema_error("chain spec needs m >= 1");
    ChainSpec s;
    s.m = m;
    s.r = tuple_of_ordinal(eta, m);  // rejects eta >= w^m
    s.eta = std::move(eta);
    return s;
}

bool forks(const NumericalPolynomial& parent, const NumericalPolynomial& child) {
    Ordering ord = compare_dominance(child, parent);
    if (ord == Ordering::Greater)
        throw domain_error(errc::not_an_extension,
                           "child polynomial exceeds the parent, so it is no restriction");
    return ord == Ordering::Less;
}

Ordinal u_rank_upper(const NumericalPolynomial& p) { return rank(p); }

ChainPolynomial chain_type_polynomial(const ChainSpec& spec) {
    // Points u <_colex r split by the highest index j where u_j < r_j while
    // u_i = r_i above j: a slab of thickness r_j with j - 1 free coordinates
    // below and the fixed tail sum F_j = sum_{i > j} r_i.
    ChainPolynomial out;
    out.threshold = 0;
    for (const Integer& c : spec.r) out.threshold += c;
    Integer tail = 0;  // F_j while walking j = m..1
    for (unsigned j = spec.m; j >= 1; --j) {
        const Integer& rj = spec.r[j - 1];
        if (rj > 0) {
            NumericalPolynomial whole =
                NumericalPolynomial::binomial_shift(j, Integer(j) - tail);
            NumericalPolynomial beyond =
                NumericalPolynomial::binomial_shift(j, Integer(j) - tail - rj);
            out.poly = out.poly + (whole - beyond);
        }
        tail += rj;
    }
    return out;
}

namespace {

bool colex_less(const LatticePoint& u, std::span<const Integer> r) {
    for (std::size_t i = u.size(); i-- > 0;) {
        if (u[i] < r[i]) return true;
        if (u[i] > r[i]) return false;
    }
    return false;
}

std::uint64_t count_colex_rec(std::span<const Integer> r, LatticePoint& u, unsigned pos,
                              unsigned budget) {
    if (pos + 1 == u.size()) {
        std::uint64_t total = 0;
        for (unsigned v = 0; v <= budget; ++v) {
            u[pos] = v;
            if (colex_less(u, r)) ++total;
        }
        return total;
    }
    std::uint64_t total = 0;
    for (unsigned v = 0; v <= budget; ++v) {
        u[pos] = v;
        total += count_colex_rec(r, u, pos + 1, budget - v);
    }
    return total;
}

}  // namespace

Integer count_colex_below(unsigned m, std::span<const Integer> r, unsigned t) {
    const long long top = t;
    std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
    for (long long v0 = 0; v0 <= top; ++v0) {
        LatticePoint u(m, 0u);
        u[0] = static_cast<unsigned>(v0);
        if (m == 1)
            total += colex_less(u, r) ? 1 : 0;
        else
            total += count_colex_rec(r, u, 1, t - static_cast<unsigned>(v0));
    }
    return Integer(total);
}

Integer count_colex_below_serial(unsigned m, std::span<const Integer> r, unsigned t) {
    LatticePoint u(m, 0u);
    return Integer(count_colex_rec(r, u, 0, t));
}

namespace {

// Enumeration budget for the oracle loop inside verify_chain: simplex size
// C(t + m, m) summed over the window must stay desk-sized.
const Integer kOracleBudget = 200000000;

void oracle_check(ChainSample& sample, unsigned m, std::span<const Integer> r,
                  unsigned window) {
    if (sample.threshold + window + m > 1000000000)
        throw domain_error(errc::cap_exceeded, "chain threshold too large for the oracle window");
    unsigned t0 = sample.threshold.convert_to<unsigned>();
    Integer cost = binomial(Integer(t0 + window) + m, m) * (window + 1);
    if (cost > kOracleBudget)
        throw domain_error(errc::cap_exceeded, "oracle window enumeration exceeds the budget");
    sample.oracle_agrees = true;
    for (unsigned t = t0; t <= t0 + window; ++t) {
        if (sample.poly(t) != count_colex_below(m, r, t)) {
            sample.oracle_agrees = false;
            break;
        }
    }
}

ChainSample make_sample(const Ordinal& zeta, unsigned m, unsigned window) {
    ChainSpec spec = ChainSpec::make(m, zeta);
    ChainPolynomial cp = chain_type_polynomial(spec);
    ChainSample s;
    s.zeta = zeta;
    s.poly = cp.poly;
    s.threshold = cp.threshold;
    s.rank = rank(s.poly);
    s.rank_ge_zeta = zeta <= s.rank;
    oracle_check(s, m, spec.r, window);
    return s;
}

}  // namespace

ChainReport verify_chain(const ChainSpec& spec, std::vector<Ordinal> samples,
                         unsigned oracle_window) {
    for (const auto& z : samples)
        if (!(z < spec.eta))
            throw domain_error(errc::out_of_range,
                               "chain sample " + to_pretty(z) + " is not below " + to_pretty(spec.eta));
    std::sort(samples.begin(), samples.end(),
              [](const Ordinal& a, const Ordinal& b) { return a < b; });
    samples.erase(std::unique(samples.begin(), samples.end()), samples.end());

    ChainReport rep;
    rep.m = spec.m;
    rep.eta = spec.eta;
    rep.oracle_window = oracle_window;
    for (const auto& z : samples) rep.samples.push_back(make_sample(z, spec.m, oracle_window));
    rep.samples.push_back(make_sample(spec.eta, spec.m, oracle_window));

    rep.chain_strict = true;
    for (std::size_t i = 0; i + 1 < rep.samples.size(); ++i) {
        bool strict = forks(rep.samples[i + 1].poly, rep.samples[i].poly);
        rep.strict_steps.push_back(strict);
        rep.chain_strict = rep.chain_strict && strict;
    }

    LeaderSet unconstrained = LeaderSet::make(spec.m, {{}});
    rep.generic_rank = rank(dimension_polynomial(unconstrained).poly);
    rep.generic_rank_is_omega_m = rep.generic_rank == Ordinal::omega_power(spec.m);

    rep.all_ok = rep.chain_strict && rep.generic_rank_is_omega_m;
    for (const auto& s : rep.samples)
        rep.all_ok = rep.all_ok && s.rank_ge_zeta && s.oracle_agrees;
    return rep;
}

bool lascar_bounds(const Ordinal& a, const Ordinal& b, const Ordinal& c) {
    return ordinal_sum(a, b) <= c && c <= natural_sum(a, b);
}

}  // namespace kdp
