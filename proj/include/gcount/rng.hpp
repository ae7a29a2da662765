#ifndef GCOUNT_RNG_HPP
#define GCOUNT_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace gcount {

// Seeded random source. All randomized operations in this project take an
// explicit seed and are reproducible across platforms: bounded draws use
// rejection sampling instead of std::uniform_int_distribution (whose output
// is implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(scramble(seed)) {}

    // Derived stream for trial t of a seeded experiment (seed + trial counter).
    static Rng derived(std::uint64_t base_seed, std::uint64_t trial) {
        return Rng(base_seed + trial);
    }

    std::uint64_t next_u64() { return eng_(); }

    // Uniform in [0, bound), unbiased. bound must be > 0.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % bound;
    }

    // Uniform in [lo, hi], inclusive.
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    // Uniform in [0, 1).
    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = below(i);
            std::swap(v[i - 1], v[j]);
        }
    }

    // Uniform element of a non-empty vector.
    template <class T>
    const T& pick(const std::vector<T>& v) {
        return v[below(v.size())];
    }

private:
    // splitmix64 finalizer; decorrelates nearby seeds before feeding mt19937_64.
    static std::uint64_t scramble(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    std::mt19937_64 eng_;
};

} // namespace gcount

#endif
