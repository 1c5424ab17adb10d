#include "qfield/field.hpp"
#include "qfield/error.hpp"

#include <regex>

namespace qfield {

QuadraticField QuadraticField::make(Integer const& d)
{
    if (d == 0 || d == 1)
        raise(ErrorCode::DegenerateD, "d must not be 0 or 1");
    if (abs(d) > kMaxAbsD)
        raise(ErrorCode::OutOfRange, "|d| = " + Integer(abs(d)).get_str() + " exceeds " + std::to_string(kMaxAbsD));

    long const ad = Integer(abs(d)).get_si();
    for (long q = 2; q * q <= ad; ++q)
        if (ad % (q * q) == 0)
            raise(ErrorCode::NotSquarefree, d.get_str() + " is divisible by " + std::to_string(q * q));

    QuadraticField f;
    f.d_ = d;
    if (arith::mod(d, 4) == 1) {
        f.kind_ = OmegaKind::HalfOnePlusSqrtD;
        f.disc_ = d;
        f.trace_ = 1;
        f.norm_ = (1 - d) / 4;
    } else {
        f.kind_ = OmegaKind::SqrtD;
        f.disc_ = 4 * d;
        f.trace_ = 0;
        f.norm_ = -d;
    }
    return f;
}

void require_same_field(QuadraticField const& a, QuadraticField const& b)
{
    if (!(a == b))
        raise(ErrorCode::FieldMismatch, "d=" + a.d().get_str() + " vs d=" + b.d().get_str());
}

AlgebraicInteger add(AlgebraicInteger const& a, AlgebraicInteger const& b)
{
    require_same_field(a.field(), b.field());
    return {a.field(), a.x() + b.x(), a.y() + b.y()};
}

AlgebraicInteger sub(AlgebraicInteger const& a, AlgebraicInteger const& b)
{
    require_same_field(a.field(), b.field());
    return {a.field(), a.x() - b.x(), a.y() - b.y()};
}

AlgebraicInteger negate(AlgebraicInteger const& a)
{
    return {a.field(), -a.x(), -a.y()};
}

AlgebraicInteger mul(AlgebraicInteger const& a, AlgebraicInteger const& b)
{
    require_same_field(a.field(), b.field());
    // w^2 = t*w - n
    Integer const& t = a.field().omega_trace();
    Integer const& n = a.field().omega_norm();
    Integer yy = a.y() * b.y();
    return {a.field(), a.x() * b.x() - n * yy, a.x() * b.y() + a.y() * b.x() + t * yy};
}

AlgebraicInteger conjugate(AlgebraicInteger const& a)
{
    return {a.field(), a.x() + a.field().omega_trace() * a.y(), -a.y()};
}

Integer trace(AlgebraicInteger const& a)
{
    return 2 * a.x() + a.field().omega_trace() * a.y();
}

Integer norm(AlgebraicInteger const& a)
{
    Integer const& t = a.field().omega_trace();
    Integer const& n = a.field().omega_norm();
    return a.x() * a.x() + t * a.x() * a.y() + n * a.y() * a.y();
}

bool is_unit(AlgebraicInteger const& a)
{
    return abs(norm(a)) == 1;
}

std::string to_string(AlgebraicInteger const& a)
{
    std::string s = a.x().get_str();
    if (sgn(a.y()) < 0)
        s += "-" + Integer(-a.y()).get_str();
    else
        s += "+" + a.y().get_str();
    return s + "*w";
}

AlgebraicInteger parse_element(QuadraticField const& field, std::string_view text)
{
    static std::regex const pattern(R"(\s*([+-]?[0-9]+)\s*(\+\s*-|\+|-)\s*([0-9]+)\s*\*\s*w\s*)");
    std::string const str(text);
    std::smatch m;
    if (!std::regex_match(str, m, pattern))
        raise(ErrorCode::ParseError, "expected x+y*w, got '" + str + "'");
    auto number = [](std::string digits) {
        if (!digits.empty() && digits.front() == '+')
            digits.erase(0, 1);
        return Integer(digits, 10);
    };
    Integer x = number(m[1].str());
    Integer y = number(m[3].str());
    if (m[2].str().find('-') != std::string::npos)
        y = -y;
    return {field, std::move(x), std::move(y)};
}

}  // namespace qfield
