#ifndef QFIELD_FIELD_HPP
#define QFIELD_FIELD_HPP

#include "qfield/arith.hpp"

#include <string>
#include <string_view>

namespace qfield {

enum class OmegaKind {
    SqrtD,             // w = sqrt(d), d = 2, 3 mod 4
    HalfOnePlusSqrtD,  // w = (1 + sqrt(d)) / 2, d = 1 mod 4
};

/* Supported |d|; keeps the squarefree test by trial division instant. */
inline constexpr long kMaxAbsD = 1000000;

/* Q(sqrt d) together with its ring of integers Z[w].
 *
 * w is a root of x^2 - trace*x + norm, where (trace, norm) is (0, -d)
 * for SqrtD and (1, (1 - d)/4) for HalfOnePlusSqrtD.  Degree of the
 * Galois group is always 2. */
class QuadraticField {
  public:
    static QuadraticField make(Integer const& d);
    static QuadraticField make(long d) { return make(Integer(d)); }

    Integer const& d() const { return d_; }
    Integer const& discriminant() const { return disc_; }
    OmegaKind omega_kind() const { return kind_; }
    static constexpr int galois_degree() { return 2; }

    Integer const& omega_trace() const { return trace_; }
    Integer const& omega_norm() const { return norm_; }

    bool is_imaginary() const { return sgn(d_) < 0; }
    bool is_real() const { return sgn(d_) > 0; }

    friend bool operator==(QuadraticField const& a, QuadraticField const& b) { return a.d_ == b.d_; }

  private:
    QuadraticField() = default;
    Integer d_, disc_, trace_, norm_;
    OmegaKind kind_ = OmegaKind::SqrtD;
};

void require_same_field(QuadraticField const& a, QuadraticField const& b);

/* x + y*w in Z[w]. */
class AlgebraicInteger {
  public:
    AlgebraicInteger(QuadraticField field, Integer x, Integer y = 0)
        : field_(std::move(field)), x_(std::move(x)), y_(std::move(y)) {}

    QuadraticField const& field() const { return field_; }
    Integer const& x() const { return x_; }
    Integer const& y() const { return y_; }

    bool is_zero() const { return sgn(x_) == 0 && sgn(y_) == 0; }

    friend bool operator==(AlgebraicInteger const& a, AlgebraicInteger const& b) {
        return a.field_ == b.field_ && a.x_ == b.x_ && a.y_ == b.y_;
    }

  private:
    QuadraticField field_;
    Integer x_, y_;
};

AlgebraicInteger add(AlgebraicInteger const& a, AlgebraicInteger const& b);
AlgebraicInteger sub(AlgebraicInteger const& a, AlgebraicInteger const& b);
AlgebraicInteger mul(AlgebraicInteger const& a, AlgebraicInteger const& b);
AlgebraicInteger negate(AlgebraicInteger const& a);

/* The nontrivial automorphism, w -> trace - w. */
AlgebraicInteger conjugate(AlgebraicInteger const& a);

Integer trace(AlgebraicInteger const& a);

/* a * conjugate(a), as a rational integer. */
Integer norm(AlgebraicInteger const& a);

bool is_unit(AlgebraicInteger const& a);

/* `x+y*w` (or `x-y*w` for negative y). */
std::string to_string(AlgebraicInteger const& a);
AlgebraicInteger parse_element(QuadraticField const& field, std::string_view text);

inline AlgebraicInteger operator+(AlgebraicInteger const& a, AlgebraicInteger const& b) { return add(a, b); }
inline AlgebraicInteger operator-(AlgebraicInteger const& a, AlgebraicInteger const& b) { return sub(a, b); }
inline AlgebraicInteger operator*(AlgebraicInteger const& a, AlgebraicInteger const& b) { return mul(a, b); }

}  // namespace qfield

#endif  // QFIELD_FIELD_HPP
