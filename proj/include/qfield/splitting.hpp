#ifndef QFIELD_SPLITTING_HPP
#define QFIELD_SPLITTING_HPP

#include "qfield/ideal.hpp"

#include <vector>

namespace qfield {

enum class SplittingType { Ramified, Split, Inert };

/* A prime ideal P of Z[w] lying over the rational prime p, with
 * ramification index e and residue degree f (norm(P) = p^f). */
struct PrimeIdealFactor {
    Ideal ideal;
    Integer p;
    int e = 1;
    int f = 1;

    friend bool operator==(PrimeIdealFactor const& x, PrimeIdealFactor const& y) { return x.ideal == y.ideal; }
};

struct FactorPower {
    PrimeIdealFactor prime;
    unsigned exponent = 1;

    friend bool operator==(FactorPower const&, FactorPower const&) = default;
};

/* Prime ideal factorization of a nonzero ideal.  Factors are sorted by
 * p ascending, then by HNF b ascending; the empty list is the unit
 * ideal. */
struct Factorization {
    Ideal ideal;
    std::vector<FactorPower> factors;

    Ideal product() const;
};

/* Kronecker symbol (D | p) for a prime p: Legendre symbol for odd p;
 * for p = 2, 0 if D is even, +1 if D = +-1 mod 8 and -1 otherwise. */
int kronecker_symbol(Integer const& D, Integer const& p);

SplittingType splitting_type(QuadraticField const& field, Integer const& p);

/* Factorization of pO by Dedekind-Kummer on the minimal polynomial of w
 * modulo p. */
Factorization split_prime(QuadraticField const& field, Integer const& p);

Factorization factor_ideal(Ideal const& ideal);

/* Largest k with P^k | A. */
unsigned valuation(Ideal const& ideal, PrimeIdealFactor const& prime);

bool canonical_less(PrimeIdealFactor const& x, PrimeIdealFactor const& y);

}  // namespace qfield

#endif  // QFIELD_SPLITTING_HPP
