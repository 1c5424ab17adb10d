#ifndef QFIELD_SAMPLING_HPP
#define QFIELD_SAMPLING_HPP

#include "qfield/ideal.hpp"

#include <random>

namespace qfield {

/* Nonzero element with coordinates in [-bound, bound]. */
AlgebraicInteger random_element(QuadraticField const& field, std::mt19937_64& rng, long bound);

/* Product of a few random principal ideals and random prime ideals above
 * small primes, with norm at most max_norm.  Prime factors are mixed in
 * so non-principal classes appear when the class number exceeds 1. */
Ideal random_ideal(QuadraticField const& field, std::mt19937_64& rng, Integer const& max_norm);

}  // namespace qfield

#endif  // QFIELD_SAMPLING_HPP
