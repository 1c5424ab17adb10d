#ifndef QFIELD_IDEAL_HPP
#define QFIELD_IDEAL_HPP

#include "qfield/field.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qfield {

/* Nonzero ideal of Z[w] in Hermite normal form: the Z-basis is
 * {a, b + c*w} with a, c > 0, 0 <= b < a, c | a, c | b, and
 * a*c | norm(b + c*w).  The representation is unique, so equality is
 * a comparison of (a, b, c). */
class Ideal {
  public:
    /* Validates the HNF invariants; NonCanonical otherwise. */
    static Ideal from_hnf(QuadraticField const& field, Integer a, Integer b, Integer c);

    static Ideal unit(QuadraticField const& field);

    QuadraticField const& field() const { return field_; }
    Integer const& a() const { return a_; }
    Integer const& b() const { return b_; }
    Integer const& c() const { return c_; }

    bool is_unit() const { return a_ == 1; }

    friend bool operator==(Ideal const& x, Ideal const& y) {
        return x.field_ == y.field_ && x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
    }

  private:
    friend Ideal hnf_of_module(QuadraticField const&, std::span<std::pair<Integer, Integer> const>);
    Ideal(QuadraticField field, Integer a, Integer b, Integer c)
        : field_(std::move(field)), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}

    QuadraticField field_;
    Integer a_, b_, c_;
};

/* HNF of the Z-module spanned by the (x, y) coordinate vectors.  The
 * caller guarantees the module is an ideal; a rank-deficient span
 * raises ZeroIdeal. */
Ideal hnf_of_module(QuadraticField const& field, std::span<std::pair<Integer, Integer> const> vectors);

Ideal ideal_from_generators(QuadraticField const& field, std::span<AlgebraicInteger const> gens);
Ideal principal(AlgebraicInteger const& alpha);

Ideal ideal_mul(Ideal const& lhs, Ideal const& rhs);
Ideal ideal_pow(Ideal const& base, unsigned exponent);

/* Index [O : A] = a*c. */
Integer ideal_norm(Ideal const& ideal);

/* Positive generator of A cap Z. */
inline Integer const& intersect_base(Ideal const& ideal) { return ideal.a(); }

bool contains(Ideal const& ideal, AlgebraicInteger const& alpha);

/* A | B, i.e. B is contained in A. */
bool ideal_divides(Ideal const& divisor, Ideal const& dividend);

Ideal conjugate_ideal(Ideal const& ideal);

/* `(a, b+c*w)`, with `b+w` when c == 1. */
std::string to_string(Ideal const& ideal);

}  // namespace qfield

#endif  // QFIELD_IDEAL_HPP
