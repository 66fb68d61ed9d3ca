#pragma once

#include <string>

#include "kdp/json_io.hpp"
#include "kdp/prng.hpp"

namespace kdp {

struct VerifyOptions {
    std::string suite = "all";  // lattice | kolchin | ordinal | chain | ncgrowth | probe | all
    std::uint64_t seed = 0;
    unsigned cases = 50;
};

// Runs randomized cross-checks of the closed forms against their brute-force
// counters and of the order/arithmetic laws. The report is a pure function of
// (suite, seed, cases). Throws schema_error for an unknown suite name.
json run_verify(const VerifyOptions& opts);

// Random generators shared with the test harnesses.
LeaderSet random_leader_set(Prng& rng, unsigned max_m, unsigned max_d, unsigned max_entry,
                            unsigned max_leaders);
std::vector<unsigned> random_exponent_list(Prng& rng, unsigned max_len, unsigned max_val);
Ordinal random_ordinal_below(Prng& rng, unsigned exp_bound, std::uint64_t coeff_bound);

}  // namespace kdp
