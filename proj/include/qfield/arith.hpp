#ifndef QFIELD_ARITH_HPP
#define QFIELD_ARITH_HPP

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

namespace qfield {

using Integer = mpz_class;

namespace arith {

/* Largest composite cofactor factor_integer() will accept after trial
 * division; norms up to this size always factor completely. */
inline constexpr unsigned long kTrialDivisionLimit = 1000000;

/* Remainder in [0, |m|). */
Integer mod(Integer const& a, Integer const& m);

Integer isqrt(Integer const& n);
std::optional<Integer> exact_sqrt(Integer const& n);

Integer gcd(Integer const& a, Integer const& b);

/* g = s*a + t*b, g = gcd(a, b) >= 0. */
struct Bezout {
    Integer g, s, t;
};
Bezout xgcd(Integer const& a, Integer const& b);

/* Deterministic Miller-Rabin (fixed base set, proven for n < 3.3e24);
 * above that range falls back to GMP's probabilistic test. */
bool is_prime(Integer const& n);

/* Prime factorization of n >= 1 by trial division up to
 * kTrialDivisionLimit; a leftover cofactor must be prime, otherwise
 * ErrorCode::OutOfRange is raised. */
std::vector<std::pair<Integer, unsigned>> factor(Integer const& n);

/* Roots in [0, p) of x^2 - t*x + n modulo the prime p, ascending,
 * without multiplicity. */
std::vector<Integer> quadratic_roots_mod(Integer const& t, Integer const& n, Integer const& p);

/* Square root of a quadratic residue a modulo an odd prime p. */
Integer sqrt_mod(Integer const& a, Integer const& p);

}  // namespace arith
}  // namespace qfield

#endif  // QFIELD_ARITH_HPP
