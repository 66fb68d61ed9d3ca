// Times each OpenMP kernel against its serial reference on a fixed workload
// and checks that both return the same value.  Exits nonzero on any mismatch.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "kdp/field_probe.hpp"
#include "kdp/free_monoid.hpp"
#include "kdp/lattice.hpp"
#include "kdp/rank_engine.hpp"

using namespace kdp;

namespace {

int g_mismatches = 0;

double time_ms(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

void row(const std::string& name, const std::function<Integer()>& serial,
         const std::function<Integer()>& parallel) {
    Integer s, p;
    double ts = time_ms([&] { s = serial(); });
    double tp = time_ms([&] { p = parallel(); });
    bool match = s == p;
    if (!match) ++g_mismatches;
    std::printf("%-34s %10.1f ms %10.1f ms %7.2fx   %s\n", name.c_str(), ts, tp,
                tp > 0 ? ts / tp : 0.0, match ? "yes" : "NO");
    std::fflush(stdout);
}

}  // namespace

int main() {
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
    std::printf("%-34s %13s %13s %9s   %s\n", "kernel", "serial", "parallel", "speedup",
                "match");

    LeaderSet ls = LeaderSet::make(3, {{{5, 0, 0}, {0, 4, 1}}, {}, {{1, 1, 1}, {0, 0, 6}}});
    row("lattice count (m=3, t=220)", [&] { return count_free_points_serial(ls, 220); },
        [&] { return count_free_points(ls, 220); });

    std::vector<Integer> r{Integer(3), Integer(2), Integer(4)};
    row("colex count (m=3, t=320)", [&] { return count_colex_below_serial(3, r, 320); },
        [&] { return count_colex_below(3, r, 320); });

    WordSet ws = WordSet::make(2, {parse_word("2,1", 2)});
    row("free words (m=2, t=19)", [&] { return free_word_count_serial(ws, 19); },
        [&] { return free_word_count(ws, 19); });

    ProbeConfig cfg = ProbeConfig::make(257, quadratic_residues(257));
    row("inversion scan (p=257, |X|=128)",
        [&] { return Integer(inv_set_serial(cfg, 7).size()); },
        [&] { return Integer(inv_set(cfg, 7).size()); });

    return g_mismatches == 0 ? 0 : 1;
}
