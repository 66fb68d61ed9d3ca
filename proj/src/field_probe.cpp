#include "kdp/field_probe.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "kdp/error.hpp"

namespace kdp {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
    // extended Euclid on (a, p), p prime and a != 0 mod p
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw domain_error(errc::out_of_range, "no modular inverse");
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

std::vector<std::uint64_t> quadratic_residues(std::uint64_t p) {
    std::set<std::uint64_t> out;
    for (std::uint64_t x = 1; x < p; ++x) out.insert(x * x % p);
    return {out.begin(), out.end()};
}

namespace {

std::vector<std::uint64_t> normalize_set(std::vector<std::uint64_t> v, std::uint64_t p) {
    for (auto& x : v)
        if (x >= p) throw schema_error("set element not reduced modulo p");
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a + p - b) % p; }

void require_member(const std::vector<std::uint64_t>& x, std::uint64_t v, const char* name) {
    if (!std::binary_search(x.begin(), x.end(), v))
        throw domain_error(errc::out_of_range, std::string(name) + " must be an element of X");
}

}  // namespace

ProbeConfig ProbeConfig::make(std::uint64_t p, std::vector<std::uint64_t> x,
                              std::map<std::string, std::vector<std::uint64_t>> families) {
    if (p < 3 || p > (1ull << 31) || !is_prime(p))
        throw schema_error("p must be an odd prime below 2^31");
    ProbeConfig cfg;
    cfg.p = p;
    cfg.x = normalize_set(std::move(x), p);
    if (cfg.x.empty()) throw schema_error("X must be nonempty");
    for (auto& [name, set] : families) cfg.families[name] = normalize_set(std::move(set), p);
    return cfg;
}

std::vector<InvQuad> inv_set_serial(const ProbeConfig& cfg, std::uint64_t alpha) {
    std::vector<InvQuad> out;
    alpha %= cfg.p;
    for (std::uint64_t a : cfg.x)
        for (std::uint64_t b : cfg.x)
            for (std::uint64_t c : cfg.x) {
                if (b == c) continue;
                std::uint64_t rhs = alpha * sub_mod(b, c, cfg.p) % cfg.p;
                for (std::uint64_t d : cfg.x)
                    if (sub_mod(a, d, cfg.p) == rhs) out.push_back({a, b, c, d});
            }
    return out;
}

std::vector<InvQuad> inv_set(const ProbeConfig& cfg, std::uint64_t alpha) {
    alpha %= cfg.p;
    const long long n = static_cast<long long>(cfg.x.size());
    std::vector<std::vector<InvQuad>> slots(cfg.x.size());
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < n; ++i) {
        std::uint64_t a = cfg.x[i];
        auto& local = slots[i];
        for (std::uint64_t b : cfg.x)
            for (std::uint64_t c : cfg.x) {
                if (b == c) continue;
                std::uint64_t rhs = alpha * sub_mod(b, c, cfg.p) % cfg.p;
                for (std::uint64_t d : cfg.x)
                    if (sub_mod(a, d, cfg.p) == rhs) local.push_back({a, b, c, d});
            }
    }
    std::vector<InvQuad> out;
    for (auto& s : slots) out.insert(out.end(), s.begin(), s.end());
    return out;
}

std::optional<InvQuad> inv_witness(const ProbeConfig& cfg, std::uint64_t alpha) {
    alpha %= cfg.p;
    for (std::uint64_t a : cfg.x)
        for (std::uint64_t b : cfg.x)
            for (std::uint64_t c : cfg.x) {
                if (b == c) continue;
                // d = a - alpha * (b - c)
                std::uint64_t d = sub_mod(a, alpha * sub_mod(b, c, cfg.p) % cfg.p, cfg.p);
                if (std::binary_search(cfg.x.begin(), cfg.x.end(), d))
                    return InvQuad{a, b, c, d};
            }
    return std::nullopt;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> inv_fiber(const ProbeConfig& cfg,
                                                               std::uint64_t alpha,
                                                               std::uint64_t a, std::uint64_t b) {
    require_member(cfg.x, a, "a");
    require_member(cfg.x, b, "b");
    alpha %= cfg.p;
    std::uint64_t level = sub_mod(a, alpha * b % cfg.p, cfg.p);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::uint64_t c : cfg.x)
        for (std::uint64_t d : cfg.x) {
            if (c == b && d == a) continue;
            if (sub_mod(d, alpha * c % cfg.p, cfg.p) == level) out.emplace_back(c, d);
        }
    return out;
}

std::vector<std::uint64_t> x_family_set(const ProbeConfig& cfg, std::uint64_t a, std::uint64_t b,
                                        const std::string& family, std::uint64_t threshold) {
    require_member(cfg.x, a, "a");
    require_member(cfg.x, b, "b");
    auto it = cfg.families.find(family);
    if (it == cfg.families.end())
        throw domain_error(errc::unknown_family, "unknown family: " + family);
    const auto& ys = it->second;
    std::vector<std::uint64_t> out;
    for (std::uint64_t c : cfg.x) {
        std::set<std::uint64_t> image;
        for (std::uint64_t y : ys) image.insert((a + sub_mod(c, b, cfg.p) * y) % cfg.p);
        std::uint64_t hits = 0;
        for (std::uint64_t v : image)
            if (std::binary_search(cfg.x.begin(), cfg.x.end(), v)) ++hits;
        if (hits >= threshold) out.push_back(c);
    }
    return out;
}

std::vector<std::vector<std::uint64_t>> aff_orbit(const ProbeConfig& cfg, std::size_t limit) {
    std::vector<std::vector<std::uint64_t>> out;
    std::set<std::vector<std::uint64_t>> seen;
    for (std::uint64_t u = 0; u < cfg.p && out.size() < limit; ++u)
        for (std::uint64_t v = 1; v < cfg.p && out.size() < limit; ++v) {
            std::set<std::uint64_t> image;
            for (std::uint64_t x : cfg.x) image.insert((u + v * x) % cfg.p);
            std::vector<std::uint64_t> vec(image.begin(), image.end());
            if (seen.insert(vec).second) out.push_back(std::move(vec));
        }
    return out;
}

}  // namespace kdp
