#include "mtae/random.hpp"

#include <numeric>

namespace mtae {

std::vector<std::size_t> rand_permutation(RandomSource& r, std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    for (std::size_t i = n; i > 1; --i) {
        std::size_t j = r.below(i);
        std::swap(p[i - 1], p[j]);
    }
    return p;
}

std::vector<std::uint8_t> rand_bernoulli_mask(RandomSource& r, std::size_t n, double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("bernoulli mask: p outside [0,1]");
    std::vector<std::uint8_t> mask(n);
    for (std::size_t i = 0; i < n; ++i) mask[i] = r.next_unit() < p ? 1 : 0;
    return mask;
}

}  // namespace mtae
