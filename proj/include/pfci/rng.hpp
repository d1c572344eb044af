#ifndef PFCI_RNG_HPP
#define PFCI_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <string>

namespace pfci {

// Seeded generator with platform-stable output: mt19937_64 is fully specified
// by the standard, and all variate transforms below are implemented here rather
// than delegating to implementation-defined std::*_distribution code paths.
// Substreams are derived with SplitMix64 so that (seed, stream) pairs never
// collide in practice; the identity string goes into run manifests.
class Rng {
public:
    static constexpr const char* kIdentity = "mt19937_64/splitmix64-streams/boxmuller-v1";

    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Independent substream for (seed, stream_id), e.g. one per replicate or node.
    static Rng substream(std::uint64_t seed, std::uint64_t stream_id) {
        return Rng(splitmix64(seed ^ splitmix64(stream_id)));
    }

    // Uniform on [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    bool bernoulli(double p) { return uniform01() < p; }

    // Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        // Rejection keeps the draw exactly uniform.
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    // Standard normal via Box-Muller; the spare variate is cached.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * kPi * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

    // Student-t with 4 degrees of freedom: Z / sqrt(chi2_4 / 4),
    // chi2_4 = -2 log(u1 u2) (sum of two exponentials).
    double student_t4() {
        const double z = normal();
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        double u2 = uniform01();
        while (u2 <= 0.0) u2 = uniform01();
        const double chi2 = -2.0 * std::log(u1 * u2);
        return z * std::sqrt(4.0 / chi2);
    }

    static std::uint64_t splitmix64(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

private:
    static constexpr double kPi = 3.141592653589793238462643383279502884;

    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace pfci

#endif
