#pragma once

#include <cstdint>
#include <vector>

namespace syllogen {

// Deterministic 64-bit generator (splitmix64). The standard library engines
// are portable but their distributions are not, so bounded draws and
// shuffles are implemented here to keep generated corpora byte-identical
// across compilers.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform draw in [0, bound) via 128-bit multiply-shift.
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // Derives an independent stream for a sub-task; mixing is order-sensitive.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t salt) {
        Rng r(seed ^ (salt * 0xd6e8feb86659fd93ULL + 0xa5a5a5a5a5a5a5a5ULL));
        r.next();
        return r.next();
    }

private:
    std::uint64_t state_;
};

}  // namespace syllogen
