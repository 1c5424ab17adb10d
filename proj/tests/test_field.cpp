#include "oracles.hpp"

#include "qfield/error.hpp"
#include "qfield/field.hpp"

#include <doctest.h>

#include <random>

using namespace qfield;

namespace {

ErrorCode code_of(auto&& fn)
{
    try {
        fn();
    } catch (Error const& e) {
        return e.code();
    }
    return ErrorCode::Internal;
}

AlgebraicInteger el(QuadraticField const& f, long x, long y)
{
    return {f, x, y};
}

}  // namespace

TEST_SUITE("field") {

TEST_CASE("make_field")
{
    auto const q2 = QuadraticField::make(2);
    CHECK(q2.discriminant() == 8);
    CHECK(q2.omega_kind() == OmegaKind::SqrtD);

    auto const q3 = QuadraticField::make(-3);
    CHECK(q3.discriminant() == -3);
    CHECK(q3.omega_kind() == OmegaKind::HalfOnePlusSqrtD);

    CHECK(code_of([] { QuadraticField::make(12); }) == ErrorCode::NotSquarefree);
    CHECK(code_of([] { QuadraticField::make(-18); }) == ErrorCode::NotSquarefree);
    CHECK(code_of([] { QuadraticField::make(0); }) == ErrorCode::DegenerateD);
    CHECK(code_of([] { QuadraticField::make(1); }) == ErrorCode::DegenerateD);
    CHECK(code_of([] { QuadraticField::make(1000003); }) == ErrorCode::OutOfRange);
    CHECK(QuadraticField::galois_degree() == 2);
}

TEST_CASE("discriminant and omega kind invariants")
{
    for (long d = -300; d <= 300; ++d) {
        if (d == 0 || d == 1)
            continue;
        bool squarefree = true;
        for (long q = 2; q * q <= std::abs(d); ++q)
            squarefree = squarefree && std::abs(d) % (q * q) != 0;
        if (!squarefree)
            continue;
        auto const f = QuadraticField::make(d);
        long const D = f.discriminant().get_si();
        CHECK((((D % 4) + 4) % 4 == 0 || ((D % 4) + 4) % 4 == 1));
        CHECK((f.omega_kind() == OmegaKind::HalfOnePlusSqrtD) == (((d % 4) + 4) % 4 == 1));
    }
}

TEST_CASE("elem_add")
{
    auto const f = QuadraticField::make(2);
    CHECK(el(f, 1, 1) + el(f, 2, -1) == el(f, 3, 0));
    CHECK(el(f, 5, -7) + el(f, 0, 0) == el(f, 5, -7));
    CHECK(code_of([] {
              add(AlgebraicInteger(QuadraticField::make(2), 1, 0), AlgebraicInteger(QuadraticField::make(3), 1, 0));
          }) == ErrorCode::FieldMismatch);
}

TEST_CASE("elem_mul")
{
    auto const f2 = QuadraticField::make(2);
    CHECK(el(f2, 1, 1) * el(f2, 1, -1) == el(f2, -1, 0));
    // ((1 + sqrt(-3))/2)^2 = (-1 + sqrt(-3))/2 = -1 + w
    auto const f3 = QuadraticField::make(-3);
    CHECK(el(f3, 0, 1) * el(f3, 0, 1) == el(f3, -1, 1));
    CHECK(el(f3, 4, -9) * el(f3, 1, 0) == el(f3, 4, -9));
    CHECK(code_of([&] { mul(el(f2, 1, 0), el(f3, 1, 0)); }) == ErrorCode::FieldMismatch);
}

TEST_CASE("elem_mul matches the complex embedding")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> coord(-50, 50);
    for (long d : oracle::kTestFields) {
        auto const f = QuadraticField::make(d);
        for (int i = 0; i < 200; ++i) {
            long const x1 = coord(rng), y1 = coord(rng), x2 = coord(rng), y2 = coord(rng);
            auto const p = el(f, x1, y1) * el(f, x2, y2);
            auto const expect = oracle::embed(d, x1, y1) * oracle::embed(d, x2, y2);
            auto const got = oracle::embed(d, p.x().get_si(), p.y().get_si());
            REQUIRE(std::abs(expect - got) < 1e-6);
        }
    }
}

TEST_CASE("conjugate")
{
    auto const f2 = QuadraticField::make(2);
    CHECK(conjugate(el(f2, 3, 1)) == el(f2, 3, -1));
    auto const f5 = QuadraticField::make(5);
    CHECK(conjugate(el(f5, 0, 1)) == el(f5, 1, -1));
    CHECK(conjugate(conjugate(el(f5, 7, -4))) == el(f5, 7, -4));
}

TEST_CASE("elem_norm and is_unit")
{
    auto const f2 = QuadraticField::make(2);
    CHECK(norm(el(f2, 1, 1)) == -1);
    CHECK(norm(el(f2, 0, 0)) == 0);
    auto const fi = QuadraticField::make(-1);
    CHECK(norm(el(fi, 2, 1)) == 5);

    CHECK(is_unit(el(f2, 1, 1)));
    CHECK_FALSE(is_unit(el(f2, 0, 1)));
    CHECK(is_unit(el(f2, 1, 0)));
}

TEST_CASE("ring properties on random elements")
{
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> coord(-1000, 1000);
    for (long d : oracle::kTestFields) {
        auto const f = QuadraticField::make(d);
        for (int i = 0; i < 300; ++i) {
            auto const a = el(f, coord(rng), coord(rng));
            auto const b = el(f, coord(rng), coord(rng));
            REQUIRE(norm(a * b) == norm(a) * norm(b));
            REQUIRE(conjugate(a + b) == conjugate(a) + conjugate(b));
            REQUIRE(conjugate(a * b) == conjugate(a) * conjugate(b));
            auto const n = a * conjugate(a);
            REQUIRE(n.y() == 0);
            REQUIRE(n.x() == norm(a));
            REQUIRE(norm(a) == Integer(static_cast<long>(oracle::norm(d, a.x().get_si(), a.y().get_si()))));
        }
    }
}

TEST_CASE("trace and norm of w")
{
    for (long d : oracle::kTestFields) {
        auto const f = QuadraticField::make(d);
        auto const w = el(f, 0, 1);
        if (((d % 4) + 4) % 4 == 1) {
            CHECK(trace(w) == 1);
            CHECK(norm(w) == -(d - 1) / 4);
        } else {
            CHECK(trace(w) == 0);
            CHECK(norm(w) == -d);
        }
    }
}

TEST_CASE("element text format")
{
    auto const f = QuadraticField::make(2);
    CHECK(to_string(el(f, 3, 1)) == "3+1*w");
    CHECK(to_string(el(f, -3, 0)) == "-3+0*w");
    CHECK(to_string(el(f, 3, -1)) == "3-1*w");
    CHECK(parse_element(f, "3+1*w") == el(f, 3, 1));
    CHECK(parse_element(f, " -3 + 0 * w ") == el(f, -3, 0));
    CHECK(parse_element(f, "3+-2*w") == el(f, 3, -2));
    CHECK(parse_element(f, "3-2*w") == el(f, 3, -2));
    for (char const* bad : {"", "3", "3+w", "w", "3*w+1", "3+1*x", "3++1*w", "1.5+1*w"})
        CHECK(code_of([&] { parse_element(f, bad); }) == ErrorCode::ParseError);

    Integer const huge("123456789012345678901234567890");
    AlgebraicInteger const big(f, huge, -huge);
    CHECK(parse_element(f, to_string(big)) == big);

    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> coord(-100000, 100000);
    for (int i = 0; i < 500; ++i) {
        auto const a = el(f, coord(rng), coord(rng));
        REQUIRE(parse_element(f, to_string(a)) == a);
    }
}

}
