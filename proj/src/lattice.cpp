#include "kdp/lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "kdp/error.hpp"

namespace kdp {

unsigned order_of(const LatticePoint& u) {
    unsigned s = 0;
    for (unsigned x : u) s += x;
    return s;
}

bool dominates(const LatticePoint& hi, const LatticePoint& lo) {
    for (std::size_t i = 0; i < hi.size(); ++i)
        if (hi[i] < lo[i]) return false;
    return true;
}

std::vector<LatticePoint> minimize(std::vector<LatticePoint> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    std::vector<LatticePoint> out;
    for (const auto& p : points) {
        bool minimal = true;
        for (const auto& q : points)
            if (q != p && dominates(p, q)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(p);
    }
    return out;
}

LeaderSet LeaderSet::make(unsigned m, std::vector<std::vector<LatticePoint>> coords) {
    if (m < 1) throw schema_error("leader set needs m >= 1");
    if (coords.empty()) throw schema_error("leader set needs at least one coordinate");
    for (auto& antichain : coords) {
        for (const auto& p : antichain)
            if (p.size() != m) throw schema_error("leader entry arity does not match m");
        antichain = minimize(std::move(antichain));
    }
    return LeaderSet{m, std::move(coords)};
}

namespace {

// Count of antichains in ls not dominating u, i.e. coordinates where u is free.
unsigned free_coords(const LeaderSet& ls, const LatticePoint& u) {
    unsigned n = 0;
    for (const auto& antichain : ls.coords) {
        bool excluded = false;
        for (const auto& e : antichain)
            if (dominates(u, e)) {
                excluded = true;
                break;
            }
        if (!excluded) ++n;
    }
    return n;
}

std::uint64_t count_simplex(const LeaderSet& ls, LatticePoint& u, unsigned pos, unsigned budget) {
    if (pos + 1 == ls.m) {
        std::uint64_t total = 0;
        for (unsigned v = 0; v <= budget; ++v) {
            u[pos] = v;
            total += free_coords(ls, u);
        }
        return total;
    }
    std::uint64_t total = 0;
    for (unsigned v = 0; v <= budget; ++v) {
        u[pos] = v;
        total += count_simplex(ls, u, pos + 1, budget - v);
    }
    return total;
}

}  // namespace

Integer count_free_points(const LeaderSet& ls, unsigned t) {
    const long long top = t;
    std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
    for (long long v0 = 0; v0 <= top; ++v0) {
        LatticePoint u(ls.m, 0u);
        u[0] = static_cast<unsigned>(v0);
        if (ls.m == 1)
            total += free_coords(ls, u);
        else
            total += count_simplex(ls, u, 1, t - static_cast<unsigned>(v0));
    }
    return Integer(total);
}

Integer count_free_points_serial(const LeaderSet& ls, unsigned t) {
    LatticePoint u(ls.m, 0u);
    return Integer(count_simplex(ls, u, 0, t));
}

DimensionPolynomial dimension_polynomial(const LeaderSet& ls) {
    DimensionPolynomial out;
    for (const auto& antichain : ls.coords) {
        if (antichain.size() > 24)
            throw domain_error(errc::cap_exceeded,
                               "antichain too large for inclusion-exclusion (max 24 leaders)");
        // net signs per distinct join of a subset of the antichain
        std::map<LatticePoint, long long> net;
        const std::size_t n = antichain.size();
        for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
            LatticePoint join(ls.m, 0u);
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1)
                    for (unsigned c = 0; c < ls.m; ++c)
                        join[c] = std::max(join[c], antichain[i][c]);
            net[join] += (__builtin_popcountll(mask) % 2 == 0) ? 1 : -1;
            // every subset's identity must hold from the threshold on, whether
            // or not its join survives sign cancellation; the full join is the
            // componentwise maximum, so it bounds all of them
            if (mask + 1 == (1ull << n)) out.threshold = std::max(out.threshold, order_of(join));
        }
        for (const auto& [join, sign] : net) {
            if (sign == 0) continue;
            unsigned o = order_of(join);
            // #points u <= t with u >= join is C(t - |join| + m, m)
            out.poly = out.poly +
                       NumericalPolynomial::binomial_shift(ls.m, Integer(ls.m) - Integer(o)) * sign;
        }
    }
    return out;
}

unsigned delta_rank(const LeaderSet& ls) {
    unsigned n = 0;
    for (const auto& antichain : ls.coords)
        if (antichain.empty()) ++n;
    return n;
}

}  // namespace kdp
