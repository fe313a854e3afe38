#include "padorb/modular.hpp"

#include <utility>

#include "padorb/errors.hpp"

namespace padorb {

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t k, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (k > 0) {
        if (k & 1) r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        k >>= 1;
    }
    return r;
}

std::uint64_t inv_mod_prime(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) throw NonUnitError("zero has no inverse mod p");
    return pow_mod(a, p - 2, p);
}

std::uint64_t det_mod_prime(ModMatrix m, std::uint64_t p) {
    const std::size_t n = m.size();
    std::uint64_t det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] % p == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = det == 0 ? 0 : p - det;
        }
        det = mul_mod(det, m[col][col], p);
        std::uint64_t inv = inv_mod_prime(m[col][col], p);
        for (std::size_t row = col + 1; row < n; ++row) {
            std::uint64_t f = mul_mod(m[row][col], inv, p);
            if (f == 0) continue;
            for (std::size_t k = col; k < n; ++k)
                m[row][k] = sub_mod(m[row][k], mul_mod(f, m[col][k], p), p);
        }
    }
    return det;
}

}  // namespace padorb
