#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <vector>

namespace narrowtower {

using Int = mpz_class;
using Rat = mpq_class;

// gmpxx has no long long constructor; long is 64-bit on every platform we
// target.
static_assert(sizeof(long) == 8, "64-bit long required");
inline Int to_int(long long v) { return Int(static_cast<long>(v)); }
inline long long to_ll(const Int& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("to_ll: value out of range");
    return v.get_si();
}

struct BoundExceeded : std::runtime_error {
    explicit BoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Kronecker symbol (a/n), total for n != 0. Agrees with the Legendre symbol
/// for odd prime n and follows the standard extension at 2 and negative n.
int kronecker(const Int& a, const Int& n);
int kronecker(long a, long n);

/// Primes up to `limit` (cached sieve, thread-safe).
const std::vector<unsigned long>& primes_up_to(unsigned long limit);

bool is_prime(const Int& n);

inline constexpr long kDefaultFactorBound = 1'000'000'000'000L;  // 10^12

/// Prime factorization with multiplicity, sorted ascending. Trial division up
/// to 10^6, then the cofactor must be certified prime (deterministic
/// Miller-Rabin); anything larger throws BoundExceeded.
std::vector<Int> factor(const Int& n, const Int& bound = Int(kDefaultFactorBound));

/// Squarefree part of n, sign preserved; squarefree_part(-12) = -3.
Int squarefree_part(const Int& n);

bool is_perfect_square(const Rat& q);
std::optional<Rat> sqrt_exact(const Rat& q);

Int isqrt(const Int& n);

/// All negative prime discriminants with |q| <= bound for the odd ones;
/// -4 and -8 are always included. Sorted by absolute value.
std::vector<long long> negative_prime_discriminants(long long bound);

inline bool is_negative_prime_discriminant(long long d) {
    if (d == -4 || d == -8) return true;
    if (d >= 0) return false;
    Int q = to_int(-d);
    return q % 4 == 3 && is_prime(q);
}

}  // namespace narrowtower
