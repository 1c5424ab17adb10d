#ifndef QFIELD_GALOIS_NORM_HPP
#define QFIELD_GALOIS_NORM_HPP

#include "qfield/splitting.hpp"

namespace qfield {

/* (A * sigma(A)) cap Z, computed literally from the product over the
 * Galois group; returns the positive generator. */
Integer relative_norm(Ideal const& ideal);

/* mZ -> mO. */
Ideal extend_ideal(QuadraticField const& field, Integer const& m);

/* relative_norm(extend_ideal(a)) == a^2. */
bool check_extension_norm(QuadraticField const& field, Integer const& a);

/* f with relative_norm(P) = p^f.  Raises Internal if the stored residue
 * degree disagrees with the norm or with |O/P|. */
int residue_degree(PrimeIdealFactor const& prime);

}  // namespace qfield

#endif  // QFIELD_GALOIS_NORM_HPP
