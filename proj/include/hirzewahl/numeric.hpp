#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>

namespace hirzewahl {

using Int = mpz_class;
using Rat = mpq_class;

/// Exact division by 2; throws if the argument is odd (parity bugs, not inputs).
inline Int half_exact(const Int& v) {
    if (mpz_odd_p(v.get_mpz_t()))
        throw std::logic_error("half_exact: value is odd");
    return v / 2;
}

// splitmix64: deterministic across platforms, unlike <random> distributions.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // value in [1, bound]; modulo bias is irrelevant for point sampling
    std::uint64_t one_to(std::uint64_t bound) { return 1 + next() % bound; }
};

}  // namespace hirzewahl
