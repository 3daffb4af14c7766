#ifndef FCX_RNG_HPP
#define FCX_RNG_HPP

#include <cstdint>

namespace fcx {

// Name recorded in the metadata of every randomized artifact so corpora
// stay reproducible across platforms and releases.
inline constexpr const char* kRngAlgorithm = "splitmix64-v1";

// SplitMix64: tiny, fully specified, bit-stable everywhere.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n) via 128-bit multiply (n > 0).
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    // True with probability num/den.
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

private:
    std::uint64_t state_;
};

} // namespace fcx

#endif // FCX_RNG_HPP
