#pragma once

#include <cstdint>
#include <string_view>

namespace qcontig {

/// Deterministic cross-platform generator (splitmix64). Used everywhere a
/// seeded stream is needed so reports are byte-identical across runs and
/// platforms; std::mt19937 + distributions are not portable enough.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [1, bound] (bound >= 1); slight modulo bias is irrelevant
    /// for identity testing.
    std::uint64_t next_in(std::uint64_t bound) { return 1 + next() % bound; }

private:
    std::uint64_t state_;
};

/// FNV-1a over a string plus integers; stable task-seed derivation
/// hash(master, id, instance) independent of scheduling.
inline std::uint64_t fnv1a(std::uint64_t seed, std::string_view s, long n = 0, long m = 0) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&h](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 0x100000001b3ull;
        }
    };
    mix(seed);
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    }
    mix(static_cast<std::uint64_t>(n));
    mix(static_cast<std::uint64_t>(m));
    return h;
}

} // namespace qcontig
