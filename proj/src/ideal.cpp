#include "qfield/ideal.hpp"
#include "qfield/error.hpp"

#include <array>
#include <optional>

namespace qfield {

namespace {

bool divides(Integer const& d, Integer const& n)
{
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

bool hnf_is_canonical(QuadraticField const& field, Integer const& a, Integer const& b, Integer const& c)
{
    if (sgn(a) <= 0 || sgn(c) <= 0 || sgn(b) < 0 || b >= a)
        return false;
    if (!divides(c, a) || !divides(c, b))
        return false;
    return divides(a * c, norm(AlgebraicInteger(field, b, c)));
}

}  // namespace

Ideal Ideal::from_hnf(QuadraticField const& field, Integer a, Integer b, Integer c)
{
    if (!hnf_is_canonical(field, a, b, c))
        raise(ErrorCode::NonCanonical, "(" + a.get_str() + ", " + b.get_str() + ", " + c.get_str() +
                                           ") is not a canonical ideal HNF for d=" + field.d().get_str());
    return Ideal(field, std::move(a), std::move(b), std::move(c));
}

Ideal Ideal::unit(QuadraticField const& field)
{
    return Ideal(field, 1, 0, 1);
}

Ideal hnf_of_module(QuadraticField const& field, std::span<std::pair<Integer, Integer> const> vectors)
{
    // Row-reduce on the w coordinate: one pivot row keeps gcd of all y,
    // every eliminated row contributes its x to the gcd along 1.
    std::optional<std::pair<Integer, Integer>> pivot;
    Integer a = 0;
    for (auto const& [x, y] : vectors) {
        if (sgn(y) == 0) {
            a = arith::gcd(a, x);
            continue;
        }
        if (!pivot) {
            pivot.emplace(x, y);
            continue;
        }
        auto const& [px, py] = *pivot;
        auto const bz = arith::xgcd(py, y);
        Integer const u = py / bz.g;
        Integer const v = y / bz.g;
        Integer const eliminated = v * px - u * x;
        Integer combined = bz.s * px + bz.t * x;
        pivot.emplace(std::move(combined), bz.g);
        a = arith::gcd(a, eliminated);
    }
    if (!pivot || sgn(a) == 0)
        raise(ErrorCode::ZeroIdeal, "generators span a module of rank < 2");

    Integer c = pivot->second;
    Integer b = pivot->first;
    if (sgn(c) < 0) {
        c = -c;
        b = -b;
    }
    b = arith::mod(b, a);
    if (!hnf_is_canonical(field, a, b, c))
        raise(ErrorCode::Internal, "module is not an ideal");
    return Ideal(field, std::move(a), std::move(b), std::move(c));
}

Ideal ideal_from_generators(QuadraticField const& field, std::span<AlgebraicInteger const> gens)
{
    std::vector<std::pair<Integer, Integer>> rows;
    AlgebraicInteger const omega(field, 0, 1);
    for (auto const& g : gens) {
        require_same_field(field, g.field());
        if (g.is_zero())
            continue;
        AlgebraicInteger const gw = g * omega;
        rows.emplace_back(g.x(), g.y());
        rows.emplace_back(gw.x(), gw.y());
    }
    if (rows.empty())
        raise(ErrorCode::ZeroIdeal, "all generators are zero");
    return hnf_of_module(field, rows);
}

Ideal principal(AlgebraicInteger const& alpha)
{
    std::array<AlgebraicInteger, 1> const gens{alpha};
    return ideal_from_generators(alpha.field(), gens);
}

Ideal ideal_mul(Ideal const& lhs, Ideal const& rhs)
{
    require_same_field(lhs.field(), rhs.field());
    QuadraticField const& field = lhs.field();
    std::array<AlgebraicInteger, 2> const l{AlgebraicInteger(field, lhs.a()), AlgebraicInteger(field, lhs.b(), lhs.c())};
    std::array<AlgebraicInteger, 2> const r{AlgebraicInteger(field, rhs.a()), AlgebraicInteger(field, rhs.b(), rhs.c())};
    std::vector<std::pair<Integer, Integer>> rows;
    for (auto const& x : l)
        for (auto const& y : r) {
            AlgebraicInteger const prod = x * y;
            rows.emplace_back(prod.x(), prod.y());
        }
    return hnf_of_module(field, rows);
}

Ideal ideal_pow(Ideal const& base, unsigned exponent)
{
    Ideal result = Ideal::unit(base.field());
    Ideal square = base;
    while (exponent) {
        if (exponent & 1u)
            result = ideal_mul(result, square);
        exponent >>= 1;
        if (exponent)
            square = ideal_mul(square, square);
    }
    return result;
}

Integer ideal_norm(Ideal const& ideal)
{
    return ideal.a() * ideal.c();
}

bool contains(Ideal const& ideal, AlgebraicInteger const& alpha)
{
    require_same_field(ideal.field(), alpha.field());
    // alpha = s*a + t*(b + c*w): t = y/c, then a | x - t*b
    if (!divides(ideal.c(), alpha.y()))
        return false;
    Integer const t = alpha.y() / ideal.c();
    return divides(ideal.a(), alpha.x() - t * ideal.b());
}

bool ideal_divides(Ideal const& divisor, Ideal const& dividend)
{
    require_same_field(divisor.field(), dividend.field());
    QuadraticField const& field = dividend.field();
    return contains(divisor, AlgebraicInteger(field, dividend.a())) &&
           contains(divisor, AlgebraicInteger(field, dividend.b(), dividend.c()));
}

Ideal conjugate_ideal(Ideal const& ideal)
{
    AlgebraicInteger const second = conjugate(AlgebraicInteger(ideal.field(), ideal.b(), ideal.c()));
    std::array<std::pair<Integer, Integer>, 2> const rows{
        std::pair<Integer, Integer>{ideal.a(), 0},
        std::pair<Integer, Integer>{second.x(), second.y()},
    };
    return hnf_of_module(ideal.field(), rows);
}

std::string to_string(Ideal const& ideal)
{
    std::string s = "(" + ideal.a().get_str() + ", " + ideal.b().get_str() + "+";
    if (ideal.c() != 1)
        s += ideal.c().get_str() + "*";
    return s + "w)";
}

}  // namespace qfield
