#include "qfield/galois_norm.hpp"
#include "qfield/error.hpp"

namespace qfield {

Integer relative_norm(Ideal const& ideal)
{
    // n = 2: the product over Gal(L/Q) = {id, sigma}
    return intersect_base(ideal_mul(ideal, conjugate_ideal(ideal)));
}

Ideal extend_ideal(QuadraticField const& field, Integer const& m)
{
    if (sgn(m) <= 0)
        raise(ErrorCode::NonPositive, "extend_ideal needs m >= 1, got " + m.get_str());
    return Ideal::from_hnf(field, m, 0, m);
}

bool check_extension_norm(QuadraticField const& field, Integer const& a)
{
    Integer const lhs = relative_norm(extend_ideal(field, a));
    Integer rhs;
    mpz_pow_ui(rhs.get_mpz_t(), a.get_mpz_t(), QuadraticField::galois_degree());
    return lhs == rhs;
}

int residue_degree(PrimeIdealFactor const& prime)
{
    Integer const n = relative_norm(prime.ideal);
    // |O/P| is the index [O : P]
    Integer const residue_size = ideal_norm(prime.ideal);
    int f = 0;
    Integer power = 1;
    while (power < n) {
        power *= prime.p;
        ++f;
    }
    if (power != n || residue_size != n || f != prime.f || f < 1 || f > 2)
        raise(ErrorCode::Internal, "norm " + n.get_str() + " of " + to_string(prime.ideal) +
                                       " is not p^f for p=" + prime.p.get_str());
    return f;
}

}  // namespace qfield
