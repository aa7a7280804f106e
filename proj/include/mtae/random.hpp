#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mtae {

// Counter-based deterministic PRNG. The state advances by a fixed odd
// constant and every output is the splitmix64 finalizer of the counter, so
// two instances with equal seeds produce bit-identical streams on any
// platform. Not shareable across threads; fork() derives an independent
// stream per worker.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : counter_(seed) {}

    std::uint64_t next_u64() {
        counter_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = counter_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 bits of resolution.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) {
        if (!(lo < hi)) throw std::invalid_argument("uniform: requires lo < hi");
        return lo + (hi - lo) * next_unit();
    }

    // Unbiased-enough index draw via 128-bit multiply (n is tiny here).
    std::size_t below(std::size_t n) {
        return static_cast<std::size_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    // Independent child stream for worker/task `index`.
    RandomSource fork(std::uint64_t index) const {
        std::uint64_t z = counter_ ^ (0x5851f42d4c957f2dULL * (index + 1));
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return RandomSource(z ^ (z >> 31));
    }

private:
    std::uint64_t counter_;
};

std::vector<std::size_t> rand_permutation(RandomSource& r, std::size_t n);

// mask[i] = 1 with probability p, else 0.
std::vector<std::uint8_t> rand_bernoulli_mask(RandomSource& r, std::size_t n, double p);

}  // namespace mtae
