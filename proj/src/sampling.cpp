#include "pshf/sampling.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace pshf {

double SplitMix64::normal() {
    const double u1 = uniform(), u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

std::vector<double> sphere_point(std::uint64_t seed, long index, int dim) {
    SplitMix64 g(seed ^ (0x5851f42d4c957f2dULL * static_cast<std::uint64_t>(index + 1)));
    std::vector<double> v(dim);
    double n2 = 0.0;
    do {
        n2 = 0.0;
        for (int i = 0; i < dim; ++i) {
            v[i] = g.normal();
            n2 += v[i] * v[i];
        }
    } while (n2 < 1e-30);
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& x : v) x *= inv;
    return v;
}

std::vector<double> ball_point(std::uint64_t seed, long index, int dim, double radius) {
    SplitMix64 g(seed ^ (0xda3e39cb94b95bdbULL * static_cast<std::uint64_t>(index + 1)));
    std::vector<double> v(dim);
    double n2 = 0.0;
    do {
        n2 = 0.0;
        for (int i = 0; i < dim; ++i) {
            v[i] = g.normal();
            n2 += v[i] * v[i];
        }
    } while (n2 < 1e-30);
    const double r = radius * std::pow(g.uniform(), 1.0 / dim) / std::sqrt(n2);
    for (auto& x : v) x *= r;
    return v;
}

int worker_count() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 1;
    if (const char* env = std::getenv("PSH_FORGE_THREADS")) {
        const int cap = std::atoi(env);
        if (cap > 0 && cap < hw) hw = cap;
    }
    return hw;
}

void parallel_chunks(long n, const std::function<void(int, long, long)>& fn) {
    const int workers = static_cast<int>(std::min<long>(worker_count(), std::max<long>(n, 1)));
    if (workers <= 1 || n < 1024) {
        fn(0, 0, n);
        return;
    }
    std::vector<std::thread> threads;
    const long chunk = (n + workers - 1) / workers;
    for (int t = 0; t < workers; ++t) {
        const long b = t * chunk, e = std::min(n, b + chunk);
        if (b >= e) break;
        threads.emplace_back(fn, t, b, e);
    }
    for (auto& th : threads) th.join();
}

}  // namespace pshf
