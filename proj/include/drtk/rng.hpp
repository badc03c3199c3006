#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace drtk {

// Every sample is derived from (seed, index) so batches are reproducible and
// independent of evaluation order.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class SampleRng {
public:
    SampleRng(std::uint64_t seed, std::uint64_t index)
        : gen_(splitmix64(seed ^ splitmix64(index))) {}

    double gaussian() { return normal_(gen_); }

    std::vector<double> gaussian_vector(std::size_t n) {
        std::vector<double> v(n);
        for (auto& x : v) x = gaussian();
        return v;
    }

    /// Gaussian vector normalized to unit length (resampled if degenerate).
    std::vector<double> unit_vector(std::size_t n) {
        for (;;) {
            auto v = gaussian_vector(n);
            double s = 0;
            for (double x : v) s += x * x;
            if (s > 1e-12) {
                const double inv = 1.0 / std::sqrt(s);
                for (auto& x : v) x *= inv;
                return v;
            }
        }
    }

    /// Uniform integer in [0, bound).
    std::uint64_t uniform(std::uint64_t bound) {
        return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(gen_);
    }

private:
    std::mt19937_64 gen_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

} // namespace drtk
