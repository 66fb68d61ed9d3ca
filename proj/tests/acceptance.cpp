// Acceptance gate for the kdp toolkit.  Each numbered criterion prints one
// [PASS]/[FAIL] line with its wall time; any failure makes the process exit 1.
// Seeds, case counts, and runtime budgets are pinned here on purpose.
//
// Usage: kdp_acceptance <path-to-kdp-cli>
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "kdp/field_probe.hpp"
#include "kdp/free_monoid.hpp"
#include "kdp/json_io.hpp"
#include "kdp/kolchin.hpp"
#include "kdp/lattice.hpp"
#include "kdp/numpoly.hpp"
#include "kdp/ordinal.hpp"
#include "kdp/prng.hpp"
#include "kdp/rank_engine.hpp"
#include "kdp/verify.hpp"

using namespace kdp;

namespace {

const char* g_cli = nullptr;
int g_failed = 0;

// Polynomials produced by earlier criteria, reused by the rank checks.
std::vector<NumericalPolynomial> g_lattice_polys;
std::vector<NumericalPolynomial> g_roundtrip_polys;

struct Check {
    bool ok = true;
    std::string note;  // first failing sub-check, or a passing observation

    void require(bool cond, const std::string& what) {
        if (!cond && ok) note = what;
        ok = ok && cond;
    }
    void observe(const std::string& what) {
        if (ok) note = what;
    }
};

void run(int id, const char* title, double budget_s, void (*fn)(Check&)) {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    try {
        fn(c);
    } catch (const std::exception& e) {
        c.ok = false;
        c.note = std::string("unexpected exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_budget = budget_s <= 0.0 || secs < budget_s;
    bool pass = c.ok && in_budget;
    if (!pass) ++g_failed;

    std::string timing;
    char buf[64];
    if (budget_s > 0.0)
        std::snprintf(buf, sizeof buf, "%.3fs, budget %.0fs", secs, budget_s);
    else
        std::snprintf(buf, sizeof buf, "%.3fs", secs);
    timing = buf;
    std::string tail;
    if (!c.ok) tail = " -- " + c.note;
    if (!in_budget) tail += std::string(c.ok ? " -- " : "; ") + "over budget";
    if (pass && !c.note.empty()) tail = " -- " + c.note;
    std::printf("[%s] criterion %2d: %s (%s)%s\n", pass ? "PASS" : "FAIL", id, title,
                timing.c_str(), tail.c_str());
    std::fflush(stdout);
}

std::string run_capture(const std::string& cmd, int& exit_code) {
    std::string full = cmd + " 2>/dev/null";
    FILE* pipe = popen(full.c_str(), "r");
    if (!pipe) {
        exit_code = -1;
        return {};
    }
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

LeaderSet unconstrained(unsigned m) { return LeaderSet::make(m, {{}}); }

// --- 1. unconstrained directions -------------------------------------------

void criterion1(Check& c) {
    for (unsigned m = 1; m <= 3; ++m) {
        DimensionPolynomial dp = dimension_polynomial(unconstrained(m));
        c.require(dp.poly == NumericalPolynomial::shifted_binomial(m, 0),
                  "polynomial is not C(T+m,m) at m=" + std::to_string(m));
        KolchinDecomposition dec = decompose(dp.poly);
        c.require(dec.exponents == std::vector<unsigned>{m},
                  "decomposition is not the single summand (m) at m=" + std::to_string(m));
        c.require(rank(dec) == Ordinal::omega_power(m),
                  "rank is not w^m at m=" + std::to_string(m));
        c.require(dp.threshold == 0, "threshold should be 0 for the unconstrained set");
    }
}

// --- 2. closed form vs brute force on random leader sets --------------------

void criterion2(Check& c) {
    Prng rng(20250801);
    for (int i = 0; i < 200; ++i) {
        LeaderSet ls = random_leader_set(rng, 3, 3, 6, 5);
        DimensionPolynomial dp = dimension_polynomial(ls);
        for (unsigned t = dp.threshold; t <= dp.threshold + 10; ++t)
            c.require(dp.poly(Integer(t)) == count_free_points_serial(ls, t),
                      "closed form disagrees with brute force at case " + std::to_string(i) +
                          ", t=" + std::to_string(t));
        g_lattice_polys.push_back(dp.poly);
        if (!c.ok) return;
    }
}

// --- 3. decomposition round trip --------------------------------------------

void criterion3(Check& c) {
    Prng rng(20250802);
    for (int i = 0; i < 500; ++i) {
        std::vector<unsigned> exps = random_exponent_list(rng, 6, 4);
        NumericalPolynomial p = reconstruct(exps);
        c.require(decompose(p).exponents == exps,
                  "reconstruct/decompose is not the identity at case " + std::to_string(i));
        g_roundtrip_polys.push_back(std::move(p));
        if (!c.ok) return;
    }
}

// --- 4. two-sided rank bounds ------------------------------------------------

void criterion4(Check& c) {
    std::size_t checked = 0, zero = 0;
    auto sweep = [&](const std::vector<NumericalPolynomial>& polys) {
        for (const auto& p : polys) {
            if (p.is_zero()) {
                ++zero;  // the bounds statement is about nonzero polynomials
                continue;
            }
            c.require(check_rank_bounds(p).holds, "bounds fail for " + p.to_string());
            ++checked;
        }
    };
    for (unsigned m = 1; m <= 3; ++m) sweep({dimension_polynomial(unconstrained(m)).poly});
    sweep(g_lattice_polys);
    sweep(g_roundtrip_polys);
    c.require(checked > 600, "polynomial corpus from criteria 1-3 is unexpectedly small");
    c.observe(std::to_string(checked) + " nonzero polynomials checked, " + std::to_string(zero) +
              " zero skipped");
}

// --- 5. strict rank monotonicity ---------------------------------------------

void criterion5(Check& c) {
    c.require(g_lattice_polys.size() >= 2, "criterion 2 corpus missing");
    if (!c.ok) return;
    Prng rng(20250803);
    for (int i = 0; i < 200; ++i) {
        const auto& p = g_lattice_polys[rng.below(g_lattice_polys.size())];
        const auto& q = g_lattice_polys[rng.below(g_lattice_polys.size())];
        Ordinal rp = rank(p), rq = rank(q);
        switch (compare_dominance(p, q)) {
            case Ordering::Less:
                c.require(rp < rq, "strictness fails at pair " + std::to_string(i));
                break;
            case Ordering::Equal:
                c.require(rp == rq, "equal polynomials with distinct ranks at pair " +
                                        std::to_string(i));
                break;
            case Ordering::Greater:
                c.require(rq < rp, "strictness fails at pair " + std::to_string(i));
                break;
        }
        if (!c.ok) return;
    }
}

// --- 6. chain polynomials ascend strictly -------------------------------------

void criterion6(Check& c) {
    const std::vector<std::string> etas = {"1", "5", "w", "w + 3", "w*2", "w*4 + 7"};
    std::vector<NumericalPolynomial> polys;
    for (const auto& s : etas) {
        Ordinal eta = parse_ordinal(s);
        ChainSpec spec = ChainSpec::make(2, eta);
        ChainPolynomial cp = chain_type_polynomial(spec);
        unsigned thr = cp.threshold.convert_to<unsigned>();
        for (unsigned t = thr; t <= thr + 10; ++t)
            c.require(cp.poly(Integer(t)) == count_colex_below_serial(2, spec.r, t),
                      "oracle window fails for eta=" + s + " at t=" + std::to_string(t));
        c.require(!(rank(cp.poly) < eta), "rank drops below eta=" + s);
        polys.push_back(cp.poly);
    }
    for (std::size_t i = 0; i < polys.size(); ++i)
        for (std::size_t j = i + 1; j < polys.size(); ++j)
            c.require(compare_dominance(polys[i], polys[j]) == Ordering::Less,
                      "chain is not strictly increasing between eta=" + etas[i] + " and eta=" +
                          etas[j]);
    Ordinal generic = rank(dimension_polynomial(unconstrained(2)).poly);
    c.require(generic == Ordinal::omega_power(2), "generic rank is not w^2");
}

// --- 7. free-word growth -------------------------------------------------------

void criterion7(Check& c) {
    WordSet two = WordSet::make(2, {});
    std::vector<Integer> counts;
    for (unsigned t = 0; t <= 12; ++t) {
        Integer n = free_word_count(two, t);
        c.require(n == Integer((std::uint64_t{1} << (t + 1)) - 1),
                  "count differs from 2^(t+1)-1 at t=" + std::to_string(t));
        c.require(n == free_word_count_serial(two, t),
                  "kernel and odometer disagree at t=" + std::to_string(t));
        counts.push_back(std::move(n));
    }
    for (unsigned d = 0; d <= 6; ++d)
        c.require(!fit_from_values(counts, Integer(0), d),
                  "a degree-" + std::to_string(d) + " fit should not exist");

    WordSet one = WordSet::make(1, {});
    LeaderSet line = unconstrained(1);
    std::vector<Integer> linear;
    for (unsigned t = 0; t <= 8; ++t) {
        Integer n = free_word_count(one, t);
        c.require(n == count_free_points(line, t),
                  "m=1 words disagree with the lattice count at t=" + std::to_string(t));
        linear.push_back(std::move(n));
    }
    auto fit = fit_from_values(linear, Integer(0), 3);
    c.require(fit.has_value() && *fit == NumericalPolynomial({Integer(1), Integer(1)}),
              "m=1 growth should fit T+1");
}

// --- 8. ordinal arithmetic laws and the colex bijection ------------------------

void criterion8(Check& c) {
    Prng rng(20250804);
    for (int i = 0; i < 1000; ++i) {
        Ordinal a = random_ordinal_below(rng, 4, 20);
        Ordinal b = random_ordinal_below(rng, 4, 20);
        Ordinal d = random_ordinal_below(rng, 4, 20);
        c.require(ordinal_sum(a, b) <= natural_sum(a, b),
                  "a+b exceeds the natural sum at case " + std::to_string(i));
        c.require(natural_sum(a, b) == natural_sum(b, a),
                  "natural sum is not commutative at case " + std::to_string(i));
        c.require(natural_sum(natural_sum(a, b), d) == natural_sum(a, natural_sum(b, d)),
                  "natural sum is not associative at case " + std::to_string(i));
        if (!c.ok) return;
    }
    auto colex_less = [](const std::vector<Integer>& u, const std::vector<Integer>& v) {
        for (std::size_t k = u.size(); k-- > 0;)
            if (u[k] != v[k]) return u[k] < v[k];
        return false;
    };
    for (int i = 0; i < 1000; ++i) {
        std::vector<Integer> u(3), v(3);
        for (auto& e : u) e = Integer(rng.below(41));
        for (auto& e : v) e = Integer(rng.below(41));
        Ordinal ou = ordinal_of_tuple(u), ov = ordinal_of_tuple(v);
        c.require(colex_less(u, v) == (ou < ov),
                  "bijection does not preserve colex order at case " + std::to_string(i));
        c.require(tuple_of_ordinal(ou, 3) == u,
                  "tuple round trip fails at case " + std::to_string(i));
        if (!c.ok) return;
    }
}

// --- 9. field probe definitional soundness --------------------------------------

void criterion9(Check& c) {
    ProbeConfig cfg = ProbeConfig::make(101, quadratic_residues(101));
    auto in_x = [&](std::uint64_t v) {
        return std::binary_search(cfg.x.begin(), cfg.x.end(), v);
    };
    std::uint64_t nonempty = 0;
    for (std::uint64_t alpha = 1; alpha < cfg.p; ++alpha) {
        std::vector<InvQuad> quads = inv_set(cfg, alpha);
        if (inv_witness(cfg, alpha)) ++nonempty;
        c.require(quads.empty() == !inv_witness(cfg, alpha),
                  "witness disagrees with the full scan at alpha=" + std::to_string(alpha));
        for (const InvQuad& q : quads) {
            bool members = in_x(q.a) && in_x(q.b) && in_x(q.c) && in_x(q.d) && q.b != q.c;
            std::uint64_t diff = (q.b + cfg.p - q.c) % cfg.p;
            bool product = (q.a + cfg.p - q.d) % cfg.p == alpha * diff % cfg.p;
            bool division = (q.a + cfg.p - q.d) % cfg.p * mod_inv(diff, cfg.p) % cfg.p == alpha;
            c.require(members && product && division,
                      "a quadruple fails its defining equation at alpha=" + std::to_string(alpha));
            if (!c.ok) return;
        }
    }

    Prng rng(20250805);
    for (int i = 0; i < 50; ++i) {
        std::uint64_t alpha = rng.range(1, cfg.p - 1);
        std::uint64_t a = cfg.x[rng.below(cfg.x.size())];
        std::uint64_t b = cfg.x[rng.below(cfg.x.size())];
        auto fiber = inv_fiber(cfg, alpha, a, b);
        for (const auto& [cd, dd] : fiber) {
            bool eq = (dd + alpha * (cfg.p - cd)) % cfg.p == (a + alpha * (cfg.p - b)) % cfg.p;
            c.require(in_x(cd) && in_x(dd) && eq && !(cd == b && dd == a),
                      "a fiber pair fails its defining equation at sample " + std::to_string(i));
        }
        std::vector<std::pair<std::uint64_t, std::uint64_t>> slice;
        for (const InvQuad& q : inv_set(cfg, alpha))
            if (q.a == a && q.b == b) slice.emplace_back(q.c, q.d);
        std::sort(slice.begin(), slice.end());
        std::vector<std::pair<std::uint64_t, std::uint64_t>> sorted_fiber(fiber.begin(),
                                                                          fiber.end());
        std::sort(sorted_fiber.begin(), sorted_fiber.end());
        c.require(slice == sorted_fiber,
                  "fiber and quadruple slice disagree at sample " + std::to_string(i));
        if (!c.ok) return;
    }
    c.observe("Inv nonempty for " + std::to_string(nonempty) + "/100 slopes (observation)");
}

// --- 10. CLI determinism ----------------------------------------------------------

void criterion10(Check& c) {
    std::string cmd = std::string("'") + g_cli + "' verify --suite all --seed 4242 --cases 30";
    int code1 = -1, code2 = -1;
    std::string out1 = run_capture(cmd, code1);
    std::string out2 = run_capture(cmd, code2);
    c.require(code1 == 0 && code2 == 0, "verify did not exit cleanly");
    c.require(!out1.empty(), "verify produced no output");
    c.require(out1 == out2, "consecutive runs are not byte-identical");
    if (!c.ok) return;
    json j = json::parse(out1, nullptr, false);
    c.require(!j.is_discarded() && j["result"]["all_ok"] == true,
              "verify report is not a clean pass");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: %s <path-to-kdp-cli>\n", argv[0]);
        return 2;
    }
    g_cli = argv[1];

    run(1, "unconstrained directions give the simplex polynomial and rank w^m", 1.0, criterion1);
    run(2, "closed-form lattice counts match brute force on 200 seeded sets", 10.0, criterion2);
    run(3, "decomposition round-trips 500 seeded exponent lists", 5.0, criterion3);
    run(4, "two-sided rank bounds hold for every generated polynomial", 0.0, criterion4);
    run(5, "rank is strictly monotone on 200 dominance-compared pairs", 0.0, criterion5);
    run(6, "chain polynomials ascend strictly and agree with their oracle", 5.0, criterion6);
    run(7, "free-word growth: non-polynomial at m=2, linear at m=1", 0.0, criterion7);
    run(8, "ordinal sum laws and the colex bijection hold on seeded samples", 0.0, criterion8);
    run(9, "inversion quadruples and fibers re-verify definitionally at p=101", 30.0, criterion9);
    run(10, "verify reports are byte-identical across consecutive runs", 0.0, criterion10);

    if (g_failed) {
        std::printf("acceptance: %d of 10 criteria failed\n", g_failed);
        return 1;
    }
    std::printf("acceptance: all 10 criteria passed\n");
    return 0;
}
