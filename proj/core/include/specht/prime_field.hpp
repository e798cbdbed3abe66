#pragma once

#include <cstdint>
#include <stdexcept>

namespace specht {

/// Thrown when a computation would exceed the configured resource limits.
class guard_error : public std::runtime_error {
public:
    explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

bool is_prime(std::uint32_t m);

/// Arithmetic in the prime field GF(p). Elements are residues in [0, p).
/// The modulus is validated prime at construction; all operations are exact.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t modulus() const { return p_; }

    std::uint32_t reduce(std::int64_t x) const {
        std::int64_t r = x % static_cast<std::int64_t>(p_);
        return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(a) * b) % p_);
    }
    std::uint32_t inv(std::uint32_t a) const;

    bool operator==(const PrimeField& other) const { return p_ == other.p_; }
    bool operator!=(const PrimeField& other) const { return p_ != other.p_; }

private:
    std::uint32_t p_;
};

}
