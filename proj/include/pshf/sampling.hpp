#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace pshf {

// SplitMix64; the whole sampling layer derives each point independently
// from (seed, index) so results are identical under any parallel split.
struct SplitMix64 {
    std::uint64_t s;
    explicit SplitMix64(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() {
        s += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in (0, 1]
    double uniform() { return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53; }
    double normal();  // Box-Muller
};

// Deterministic point index -> unit sphere S^{dim-1}.
std::vector<double> sphere_point(std::uint64_t seed, long index, int dim);

// Deterministic point index -> open ball of given radius.
std::vector<double> ball_point(std::uint64_t seed, long index, int dim, double radius);

// Worker cap from PSH_FORGE_THREADS (default: hardware concurrency).
int worker_count();

// Runs fn over [0, n) split in contiguous chunks across workers.
void parallel_chunks(long n, const std::function<void(int worker, long begin, long end)>& fn);

}  // namespace pshf
