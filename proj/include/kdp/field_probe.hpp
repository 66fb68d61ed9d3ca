#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kdp {

bool is_prime(std::uint64_t n);
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p);
// Nonzero squares of F_p, sorted.
std::vector<std::uint64_t> quadratic_residues(std::uint64_t p);

// A subset X of a prime field together with named auxiliary sets Y_z.
struct ProbeConfig {
    std::uint64_t p = 3;
    std::vector<std::uint64_t> x;                               // sorted, unique
    std::map<std::string, std::vector<std::uint64_t>> families;  // each sorted, unique

    static ProbeConfig make(std::uint64_t p, std::vector<std::uint64_t> x,
                            std::map<std::string, std::vector<std::uint64_t>> families = {});
};

// Quadruple in X^4 with b != c and a - d = alpha * (b - c).
struct InvQuad {
    std::uint64_t a = 0, b = 0, c = 0, d = 0;

    bool operator==(const InvQuad&) const = default;
};

// All inversion quadruples for a fixed slope alpha, in scan order of the
// sorted set (a, then b, then c, then d). OpenMP kernel over a.
std::vector<InvQuad> inv_set(const ProbeConfig& cfg, std::uint64_t alpha);
std::vector<InvQuad> inv_set_serial(const ProbeConfig& cfg, std::uint64_t alpha);
// First quadruple in scan order, if any; early exit for nonemptiness sweeps.
std::optional<InvQuad> inv_witness(const ProbeConfig& cfg, std::uint64_t alpha);

// Fiber over fixed (a, b): pairs (c, d) in X^2 with a - b*alpha = d - c*alpha
// and (c, d) != (b, a). Requires a, b in X.
std::vector<std::pair<std::uint64_t, std::uint64_t>> inv_fiber(const ProbeConfig& cfg,
                                                               std::uint64_t alpha,
                                                               std::uint64_t a, std::uint64_t b);

// Elements c of X such that the line {a + (c - b) * y : y in Y_family} meets X
// in at least `threshold` points. Requires a, b in X and a known family.
std::vector<std::uint64_t> x_family_set(const ProbeConfig& cfg, std::uint64_t a, std::uint64_t b,
                                        const std::string& family, std::uint64_t threshold);

// Distinct images u + v * X over u in F_p, v in F_p^*, in scan order, capped.
std::vector<std::vector<std::uint64_t>> aff_orbit(const ProbeConfig& cfg, std::size_t limit);

}  // namespace kdp
