#ifndef LEFSCHETZ_PRIME_FIELD_HPP
#define LEFSCHETZ_PRIME_FIELD_HPP

#include <cstdint>

#include "lefschetz/errors.hpp"

namespace lefschetz {

/**
 * Arithmetic in GF(p) for a word-sized prime p.
 *
 * Elements are canonical representatives in [0, p).  The modulus is kept
 * below 2^30 so that a product of two canonical elements fits in a signed
 * 64-bit word with room for a few additions before reduction.
 */
class PrimeField {
  public:
    static constexpr std::int64_t kMaxModulus = (std::int64_t{1} << 30);

    /// Throws BadPrime unless p is a prime in [2, 2^30).
    explicit PrimeField(std::int64_t p);

    std::int64_t modulus() const { return p_; }

    std::int64_t reduce(std::int64_t a) const {
        std::int64_t r = a % p_;
        return r < 0 ? r + p_ : r;
    }

    std::int64_t add(std::int64_t a, std::int64_t b) const {
        std::int64_t r = a + b;
        return r >= p_ ? r - p_ : r;
    }

    std::int64_t sub(std::int64_t a, std::int64_t b) const {
        std::int64_t r = a - b;
        return r < 0 ? r + p_ : r;
    }

    std::int64_t neg(std::int64_t a) const { return a == 0 ? 0 : p_ - a; }

    std::int64_t mul(std::int64_t a, std::int64_t b) const { return (a * b) % p_; }

    std::int64_t pow(std::int64_t base, std::int64_t exp) const;

    /// Multiplicative inverse of a nonzero element.
    std::int64_t inv(std::int64_t a) const;

    bool operator==(const PrimeField& other) const { return p_ == other.p_; }

  private:
    std::int64_t p_;
};

/// Deterministic primality test for the supported modulus range.
bool is_prime(std::int64_t n);

}  // namespace lefschetz

#endif
