#include "specht/prime_field.hpp"

namespace specht {

bool is_prime(std::uint32_t m) {
    if (m < 2) return false;
    if (m % 2 == 0) return m == 2;
    for (std::uint32_t d = 3; static_cast<std::uint64_t>(d) * d <= m; d += 2)
        if (m % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p))
        throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) +
                                    " is not prime");
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    if (a == 0) throw std::invalid_argument("PrimeField: inverse of zero");
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    return reduce(t);
}

}
