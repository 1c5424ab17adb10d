#include "qfield/units_class.hpp"
#include "qfield/error.hpp"
#include "qfield/splitting.hpp"

#include <cmath>
#include <vector>

namespace qfield {

namespace {

// 4*N(x + y*w) = (2x + t*y)^2 - D*y^2
struct NormFormSolution {
    Integer x, y;
};

/* All (x, y) with |y| == k and N(x + y*w) == target. */
std::vector<NormFormSolution> solve_norm_form_row(QuadraticField const& field, Integer const& target, Integer const& k)
{
    std::vector<NormFormSolution> out;
    Integer const val = 4 * target + field.discriminant() * k * k;
    auto const s = arith::exact_sqrt(val);
    if (!s)
        return out;
    Integer const& t = field.omega_trace();
    std::vector<Integer> ys{k};
    if (sgn(k) != 0)
        ys.push_back(-k);
    std::vector<Integer> ss{*s};
    if (sgn(*s) != 0)
        ss.push_back(-*s);
    for (Integer const& y : ys)
        for (Integer const& root : ss) {
            Integer const twice_x = root - t * y;
            if (mpz_even_p(twice_x.get_mpz_t()))
                out.push_back({twice_x / 2, y});
        }
    return out;
}

/* Least non-negative x, then positive y. */
bool generator_preferred(NormFormSolution const& a, NormFormSolution const& b)
{
    bool const an = sgn(a.x) < 0, bn = sgn(b.x) < 0;
    if (an != bn)
        return !an;
    if (abs(a.x) != abs(b.x))
        return abs(a.x) < abs(b.x);
    return a.y > b.y;
}

long double real_value(AlgebraicInteger const& a)
{
    long double const root = std::sqrt(static_cast<long double>(a.field().d().get_si()));
    long double const omega = a.field().omega_kind() == OmegaKind::SqrtD ? root : (1.0L + root) / 2.0L;
    return static_cast<long double>(a.x().get_d()) + static_cast<long double>(a.y().get_d()) * omega;
}

/* Upper bound for |y| of a generator of norm +-m chosen in the fundamental
 * domain 1 <= |a / sigma(a)| < eps^2: |y| <= sqrt(m) (eps + 1) / sqrt(D). */
Integer real_search_limit(QuadraticField const& field, Integer const& m)
{
    long double const eps = real_value(fundamental_unit(field));
    long double const bound = std::sqrt(static_cast<long double>(m.get_d())) * (eps + 1.0L) /
                              std::sqrt(static_cast<long double>(field.discriminant().get_d()));
    // over-approximate generously against rounding
    long double const padded = bound * 1.001L + 2.0L;
    if (padded > 1e30L)
        return Integer(kGeneratorSearchCap) + 1;
    Integer limit;
    mpz_set_d(limit.get_mpz_t(), static_cast<double>(std::ceil(padded)));
    return limit;
}

}  // namespace

AlgebraicInteger fundamental_unit(QuadraticField const& field)
{
    if (!field.is_real())
        raise(ErrorCode::InvalidArgument, "fundamental unit requested for an imaginary field");
    Integer const& D = field.discriminant();
    Integer const& t = field.omega_trace();
    for (Integer y = 1; y <= kFundamentalUnitCap; ++y) {
        // smaller unit first: norm -1 gives the smaller s at equal y
        for (int sign : {-1, 1}) {
            auto const s = arith::exact_sqrt(4 * sign + D * y * y);
            if (s && sgn(*s) > 0)
                return AlgebraicInteger(field, Integer((*s - t * y) / 2), y);
        }
    }
    raise(ErrorCode::SearchExhausted, "no unit with y <= " + std::to_string(kFundamentalUnitCap) +
                                          " for d=" + field.d().get_str());
}

UnitGroupInfo unit_group(QuadraticField const& field)
{
    if (field.is_real())
        return {UnitGroupInfo::Kind::InfiniteRankOne, 0, fundamental_unit(field)};
    int order = 2;
    if (field.d() == -1)
        order = 4;
    else if (field.d() == -3)
        order = 6;
    return {UnitGroupInfo::Kind::FiniteCyclic, order, std::nullopt};
}

bool are_associate(AlgebraicInteger const& a, AlgebraicInteger const& b)
{
    require_same_field(a.field(), b.field());
    if (a.is_zero() || b.is_zero())
        raise(ErrorCode::ZeroElement, "associate test on zero");
    Integer const n = norm(a);
    if (abs(n) != abs(norm(b)))
        return false;
    // b / a = b * sigma(a) / N(a)
    AlgebraicInteger const num = mul(b, conjugate(a));
    if (!mpz_divisible_p(num.x().get_mpz_t(), n.get_mpz_t()) || !mpz_divisible_p(num.y().get_mpz_t(), n.get_mpz_t()))
        return false;
    return is_unit(AlgebraicInteger(a.field(), Integer(num.x() / n), Integer(num.y() / n)));
}

Integer class_number_imaginary(QuadraticField const& field)
{
    if (!field.is_imaginary())
        raise(ErrorCode::NotImaginary, "d=" + field.d().get_str() + " is positive");
    Integer const& D = field.discriminant();
    Integer count = 0;
    for (Integer A = 1; 3 * A * A <= -D; ++A) {
        for (Integer B = -A + 1; B <= A; ++B) {
            Integer const num = B * B - D;
            Integer const den = 4 * A;
            if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
                continue;
            Integer const C = num / den;
            if (C < A)
                continue;
            if (A == C && sgn(B) < 0)
                continue;
            if (arith::gcd(arith::gcd(A, B), C) != 1)
                continue;
            ++count;
        }
    }
    return count;
}

mpq_class minkowski_bound(QuadraticField const& field)
{
    // sqrt|D| <= (isqrt(|D| * 10^30) + 1) / 10^15
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, 15);
    Integer const root_up = arith::isqrt(abs(field.discriminant()) * scale * scale) + 1;
    mpq_class sqrt_up(root_up, scale);
    sqrt_up.canonicalize();
    if (field.is_real()) {
        mpq_class r = sqrt_up / 2;
        r.canonicalize();
        return r;
    }
    mpq_class const pi_low(Integer("3141592653589793"), scale);
    mpq_class r = 2 * sqrt_up / pi_low;
    r.canonicalize();
    return r;
}

std::optional<AlgebraicInteger> find_generator(Ideal const& ideal)
{
    QuadraticField const& field = ideal.field();
    Integer const m = ideal_norm(ideal);
    Integer limit;
    std::vector<Integer> targets{m};
    if (field.is_imaginary()) {
        limit = arith::isqrt(4 * m / abs(field.discriminant()));
    } else {
        limit = real_search_limit(field, m);
        targets.push_back(-m);
    }
    bool const capped = limit > kGeneratorSearchCap;
    if (capped)
        limit = kGeneratorSearchCap;

    for (Integer k = 0; k <= limit; ++k) {
        std::optional<NormFormSolution> best;
        for (Integer const& target : targets)
            for (auto const& sol : solve_norm_form_row(field, target, k)) {
                if (!contains(ideal, AlgebraicInteger(field, sol.x, sol.y)))
                    continue;
                if (!best || generator_preferred(sol, *best))
                    best = sol;
            }
        if (best)
            return AlgebraicInteger(field, best->x, best->y);
    }
    if (capped)
        raise(ErrorCode::SearchExhausted, "generator search for " + to_string(ideal) + " exceeds |y| <= " +
                                              std::to_string(kGeneratorSearchCap));
    return std::nullopt;
}

bool is_ufd(QuadraticField const& field)
{
    if (field.is_imaginary())
        return class_number_imaginary(field) == 1;
    mpq_class const bound = minkowski_bound(field);
    if (bound < 2)
        return true;
    // the class group is generated by primes of norm <= bound; inert
    // primes are principal already
    Integer const top = Integer(bound.get_num() / bound.get_den());
    for (Integer p = 2; p <= top; ++p) {
        if (!arith::is_prime(p))
            continue;
        for (auto const& fp : split_prime(field, p).factors)
            if (fp.prime.f == 1 && !find_generator(fp.prime.ideal))
                return false;
    }
    return true;
}

}  // namespace qfield
