#include "qfield/splitting.hpp"
#include "qfield/error.hpp"

#include <algorithm>
#include <array>

namespace qfield {

namespace {

void require_prime(Integer const& p)
{
    if (!arith::is_prime(p))
        raise(ErrorCode::NotPrime, p.get_str() + " is not prime");
}

}  // namespace

bool canonical_less(PrimeIdealFactor const& x, PrimeIdealFactor const& y)
{
    if (x.p != y.p)
        return x.p < y.p;
    if (x.ideal.b() != y.ideal.b())
        return x.ideal.b() < y.ideal.b();
    if (x.ideal.c() != y.ideal.c())
        return x.ideal.c() < y.ideal.c();
    return x.ideal.a() < y.ideal.a();
}

Ideal Factorization::product() const
{
    Ideal result = Ideal::unit(ideal.field());
    for (auto const& fp : factors)
        result = ideal_mul(result, ideal_pow(fp.prime.ideal, fp.exponent));
    return result;
}

int kronecker_symbol(Integer const& D, Integer const& p)
{
    require_prime(p);
    if (p == 2) {
        if (mpz_even_p(D.get_mpz_t()))
            return 0;
        Integer const r = arith::mod(D, 8);
        return (r == 1 || r == 7) ? 1 : -1;
    }
    Integer const r = arith::mod(D, p);
    return mpz_legendre(r.get_mpz_t(), p.get_mpz_t());
}

SplittingType splitting_type(QuadraticField const& field, Integer const& p)
{
    switch (kronecker_symbol(field.discriminant(), p)) {
    case 0: return SplittingType::Ramified;
    case 1: return SplittingType::Split;
    default: return SplittingType::Inert;
    }
}

Factorization split_prime(QuadraticField const& field, Integer const& p)
{
    require_prime(p);
    Factorization out{Ideal::from_hnf(field, p, 0, p), {}};

    // Dedekind-Kummer: Z[w] is the full ring of integers, so every root r
    // of the minimal polynomial of w mod p gives the prime (p, w - r).
    std::vector<Integer> const roots = arith::quadratic_roots_mod(field.omega_trace(), field.omega_norm(), p);
    SplittingType const expected = splitting_type(field, p);

    if (roots.empty()) {
        if (expected != SplittingType::Inert)
            raise(ErrorCode::Internal, "root count disagrees with the Kronecker symbol at p=" + p.get_str());
        out.factors.push_back({{out.ideal, p, 1, 2}, 1});
        return out;
    }

    bool const ramified = roots.size() == 1;
    if (ramified != (expected == SplittingType::Ramified))
        raise(ErrorCode::Internal, "root count disagrees with the Kronecker symbol at p=" + p.get_str());
    for (Integer const& r : roots) {
        std::array<AlgebraicInteger, 2> const gens{AlgebraicInteger(field, p), AlgebraicInteger(field, -r, 1)};
        Ideal P = ideal_from_generators(field, gens);
        if (ramified)
            out.factors.push_back({{std::move(P), p, 2, 1}, 2});
        else
            out.factors.push_back({{std::move(P), p, 1, 1}, 1});
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](FactorPower const& x, FactorPower const& y) { return canonical_less(x.prime, y.prime); });
    return out;
}

unsigned valuation(Ideal const& ideal, PrimeIdealFactor const& prime)
{
    require_same_field(ideal.field(), prime.ideal.field());
    unsigned k = 0;
    Ideal power = prime.ideal;
    while (ideal_divides(power, ideal)) {
        ++k;
        power = ideal_mul(power, prime.ideal);
    }
    return k;
}

Factorization factor_ideal(Ideal const& ideal)
{
    Factorization out{ideal, {}};
    if (ideal.is_unit())
        return out;
    for (auto const& [p, multiplicity] : arith::factor(ideal_norm(ideal))) {
        (void)multiplicity;
        for (auto const& fp : split_prime(ideal.field(), p).factors) {
            unsigned const v = valuation(ideal, fp.prime);
            if (v)
                out.factors.push_back({fp.prime, v});
        }
    }
    return out;
}

}  // namespace qfield
