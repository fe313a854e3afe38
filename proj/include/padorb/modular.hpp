#pragma once

// Small word-size modular helpers shared by the series and dynamics code.

#include <cstdint>
#include <vector>

namespace padorb {

using ModMatrix = std::vector<std::vector<std::uint64_t>>;

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    std::uint64_t s = a + b;
    return s >= m ? s - m : s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return a >= b ? a - b : a + (m - b);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t k, std::uint64_t m);

/// Inverse modulo a prime p; a must be nonzero mod p.
std::uint64_t inv_mod_prime(std::uint64_t a, std::uint64_t p);

/// Determinant of a square matrix over F_p (entries already reduced).
std::uint64_t det_mod_prime(ModMatrix m, std::uint64_t p);

}  // namespace padorb
