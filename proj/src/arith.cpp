#include "qfield/arith.hpp"
#include "qfield/error.hpp"

#include <algorithm>

namespace qfield::arith {

Integer mod(Integer const& a, Integer const& m)
{
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Integer isqrt(Integer const& n)
{
    if (sgn(n) < 0)
        raise(ErrorCode::InvalidArgument, "isqrt of a negative integer");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::optional<Integer> exact_sqrt(Integer const& n)
{
    if (sgn(n) < 0 || !mpz_perfect_square_p(n.get_mpz_t()))
        return std::nullopt;
    return isqrt(n);
}

Integer gcd(Integer const& a, Integer const& b)
{
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Bezout xgcd(Integer const& a, Integer const& b)
{
    Bezout r;
    mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

namespace {

bool miller_rabin_round(Integer const& n, Integer const& base, Integer const& odd, unsigned twos)
{
    Integer nm1 = n - 1;
    Integer x;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), odd.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == nm1)
        return true;
    for (unsigned i = 1; i < twos; ++i) {
        x = x * x % n;
        if (x == nm1)
            return true;
        if (x == 1)
            return false;
    }
    return false;
}

}  // namespace

bool is_prime(Integer const& n)
{
    static unsigned long const bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    if (n < 2)
        return false;
    for (unsigned long b : bases) {
        if (n == b)
            return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), b))
            return false;
    }
    // 3317044064679887385961981 is the first strong pseudoprime to all
    // bases up to 41.
    static Integer const deterministic_limit("3317044064679887385961981");
    if (n >= deterministic_limit)
        return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;

    Integer odd = n - 1;
    unsigned twos = 0;
    while (mpz_even_p(odd.get_mpz_t())) {
        odd /= 2;
        ++twos;
    }
    for (unsigned long b : bases)
        if (!miller_rabin_round(n, Integer(b), odd, twos))
            return false;
    return true;
}

std::vector<std::pair<Integer, unsigned>> factor(Integer const& n)
{
    if (sgn(n) <= 0)
        raise(ErrorCode::NonPositive, "factor expects a positive integer, got " + n.get_str());
    std::vector<std::pair<Integer, unsigned>> out;
    Integer rest = n;
    auto strip = [&](unsigned long q) {
        unsigned k = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), q)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), q);
            ++k;
        }
        if (k)
            out.emplace_back(Integer(q), k);
    };
    strip(2);
    for (unsigned long q = 3; q <= kTrialDivisionLimit; q += 2) {
        if (rest == 1)
            break;
        if (mpz_cmp_ui(rest.get_mpz_t(), q * q) < 0)
            break;
        strip(q);
    }
    if (rest > 1) {
        if (!is_prime(rest))
            raise(ErrorCode::OutOfRange,
                  "composite cofactor " + rest.get_str() + " exceeds the trial division range");
        out.emplace_back(rest, 1);
    }
    return out;
}

Integer sqrt_mod(Integer const& a_in, Integer const& p)
{
    Integer a = mod(a_in, p);
    if (sgn(a) == 0)
        return 0;
    if (mpz_legendre(a.get_mpz_t(), p.get_mpz_t()) != 1)
        raise(ErrorCode::InvalidArgument, a.get_str() + " is not a square modulo " + p.get_str());

    // Tonelli-Shanks
    Integer q = p - 1;
    unsigned long s = 0;
    while (mpz_even_p(q.get_mpz_t())) {
        q /= 2;
        ++s;
    }
    Integer z = 2;
    while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1)
        ++z;

    auto powm = [&](Integer const& b, Integer const& e) {
        Integer r;
        mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        return r;
    };
    unsigned long m = s;
    Integer c = powm(z, q);
    Integer t = powm(a, q);
    Integer r = powm(a, (q + 1) / 2);
    while (t != 1) {
        unsigned long i = 0;
        Integer t2 = t;
        while (t2 != 1) {
            t2 = t2 * t2 % p;
            ++i;
        }
        Integer b = c;
        for (unsigned long j = 0; j + i + 1 < m; ++j)
            b = b * b % p;
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    return r;
}

std::vector<Integer> quadratic_roots_mod(Integer const& t, Integer const& n, Integer const& p)
{
    std::vector<Integer> roots;
    if (p < 10000) {
        for (Integer r = 0; r < p; ++r)
            if (sgn(mod(r * r - t * r + n, p)) == 0)
                roots.push_back(r);
        return roots;
    }
    // p odd: roots are (t +- sqrt(t^2 - 4n)) / 2
    Integer disc = mod(t * t - 4 * n, p);
    if (sgn(disc) != 0 && mpz_legendre(disc.get_mpz_t(), p.get_mpz_t()) != 1)
        return roots;
    Integer s = sqrt_mod(disc, p);
    Integer inv2 = (p + 1) / 2;
    roots.push_back(mod((t + s) * inv2, p));
    Integer other = mod((t - s) * inv2, p);
    if (other != roots.front())
        roots.push_back(other);
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace qfield::arith
