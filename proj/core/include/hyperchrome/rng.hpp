#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace hyperchrome {

struct RngSeed {
    std::uint64_t value = 0;
};

/// splitmix64 finalizer; used to derive independent child seeds.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) noexcept {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// mt19937_64 with portable bounded draws (std distributions are not
/// specified bit-for-bit across standard libraries).
class Rng {
  public:
    explicit Rng(RngSeed seed) : engine_(seed.value) {}

    /// Uniform in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x;
        do x = engine_();
        while (x >= limit);
        return x % bound;
    }

    template <class T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace hyperchrome
