// Deterministic PRNG (splitmix64). Seeds fully determine every randomized
// choice, identically on every platform, which the CLI relies on for
// byte-identical output.
#pragma once

#include <cstdint>

namespace qc2 {

class Prng {
public:
    explicit Prng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n) by rejection; n > 0.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t lim = ~std::uint64_t(0) - (~std::uint64_t(0) % n);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= lim);
        return v % n;
    }

    // A fresh generator split off deterministically.
    Prng fork() { return Prng(next() ^ 0xd1b54a32d192ed03ull); }

private:
    std::uint64_t state_;
};

}  // namespace qc2
