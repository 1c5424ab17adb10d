#include "oracles.hpp"

#include "qfield/error.hpp"
#include "qfield/sampling.hpp"
#include "qfield/splitting.hpp"
#include "qfield/units_class.hpp"

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

}  // namespace

TEST_SUITE("units_class") {

TEST_CASE("unit_group")
{
    auto const g2 = unit_group(QuadraticField::make(2));
    CHECK(g2.kind == UnitGroupInfo::Kind::InfiniteRankOne);
    REQUIRE(g2.fundamental_unit);
    CHECK(*g2.fundamental_unit == AlgebraicInteger(QuadraticField::make(2), 1, 1));

    auto const gi = unit_group(QuadraticField::make(-1));
    CHECK(gi.kind == UnitGroupInfo::Kind::FiniteCyclic);
    CHECK(gi.order == 4);
    CHECK_FALSE(gi.fundamental_unit);
    CHECK(unit_group(QuadraticField::make(-3)).order == 6);
    CHECK(unit_group(QuadraticField::make(-163)).order == 2);

    auto const g5 = unit_group(QuadraticField::make(5));
    REQUIRE(g5.fundamental_unit);
    CHECK(*g5.fundamental_unit == AlgebraicInteger(QuadraticField::make(5), 0, 1));

    // 1520 + 273 sqrt(31)
    auto const u31 = fundamental_unit(QuadraticField::make(31));
    CHECK(u31 == AlgebraicInteger(QuadraticField::make(31), 1520, 273));
}

TEST_CASE("fundamental unit is minimal among searched candidates")
{
    for (long d : {2L, 3L, 5L, 6L, 7L, 10L, 13L, 14L, 21L, 29L, 41L}) {
        auto const f = QuadraticField::make(d);
        auto const u = fundamental_unit(f);
        CHECK(is_unit(u));
        CHECK(u.y() > 0);
        CHECK(std::real(oracle::embed(d, u.x().get_si(), u.y().get_si())) > 1.0);
        long const y = u.y().get_si();
        long const xmax = static_cast<long>(static_cast<double>(y) * std::sqrt(static_cast<double>(d))) + 3;
        for (long yy = 1; yy < y; ++yy)
            for (long xx = -xmax; xx <= xmax; ++xx)
                REQUIRE(std::llabs(oracle::norm(d, xx, yy)) != 1);
    }
}

TEST_CASE("powers of 1 + sqrt 2 are units")
{
    auto const f = QuadraticField::make(2);
    AlgebraicInteger const alpha(f, 1, 1);
    AlgebraicInteger power(f, 1, 0);
    for (int k = 0; k <= 20; ++k) {
        CHECK(is_unit(power));
        power = power * alpha;
    }
}

TEST_CASE("are_associate")
{
    auto const f = QuadraticField::make(2);
    CHECK(are_associate(AlgebraicInteger(f, 3, 1), AlgebraicInteger(f, 5, 4)));
    CHECK_FALSE(are_associate(AlgebraicInteger(f, 0, 1), AlgebraicInteger(f, 3, 0)));
    CHECK(are_associate(AlgebraicInteger(f, 3, 1), AlgebraicInteger(f, 3, 1)));
    // same norm, not associate: 3 + sqrt 2 and 3 - sqrt 2 lie over different primes
    CHECK_FALSE(are_associate(AlgebraicInteger(f, 3, 1), AlgebraicInteger(f, 3, -1)));
    CHECK(code_of([&] { are_associate(AlgebraicInteger(f, 0, 0), AlgebraicInteger(f, 1, 0)); }) ==
          ErrorCode::ZeroElement);
    CHECK(code_of([&] { are_associate(AlgebraicInteger(f, 1, 0), AlgebraicInteger(QuadraticField::make(3), 1, 0)); }) ==
          ErrorCode::FieldMismatch);

    // high powers of the fundamental unit
    AlgebraicInteger u(f, 1, 0);
    for (int k = 0; k < 60; ++k)
        u = u * AlgebraicInteger(f, 1, 1);
    CHECK(are_associate(AlgebraicInteger(f, 7, 2), u * AlgebraicInteger(f, 7, 2)));
}

TEST_CASE("are_associate is an equivalence relation")
{
    std::mt19937_64 rng(99);
    for (long d : oracle::kTestFields) {
        auto const f = QuadraticField::make(d);
        std::vector<AlgebraicInteger> units{AlgebraicInteger(f, 1, 0), AlgebraicInteger(f, -1, 0)};
        if (f.is_real())
            units.push_back(fundamental_unit(f));
        if (d == -1)
            units.emplace_back(f, 0, 1);
        if (d == -3)
            units.emplace_back(f, 0, 1);
        std::uniform_int_distribution<std::size_t> pick(0, units.size() - 1);
        for (int i = 0; i < 200; ++i) {
            auto const a = random_element(f, rng, 8);
            auto const b = (i % 3 == 0) ? a * units[pick(rng)] : random_element(f, rng, 8);
            auto const c = (i % 2 == 0) ? b * units[pick(rng)] : random_element(f, rng, 8);
            REQUIRE(are_associate(a, a));
            REQUIRE(are_associate(a, b) == are_associate(b, a));
            if (are_associate(a, b) && are_associate(b, c))
                REQUIRE(are_associate(a, c));
            if (are_associate(a, b))
                REQUIRE(abs(norm(a)) == abs(norm(b)));
            if (i % 3 == 0)
                REQUIRE(are_associate(a, b));
        }
    }
}

TEST_CASE("class_number_imaginary")
{
    CHECK(class_number_imaginary(QuadraticField::make(-1)) == 1);
    CHECK(class_number_imaginary(QuadraticField::make(-5)) == 2);
    CHECK(class_number_imaginary(QuadraticField::make(-23)) == 3);
    CHECK(code_of([] { class_number_imaginary(QuadraticField::make(2)); }) == ErrorCode::NotImaginary);

    auto const forms5 = oracle::reduced_forms(-20);
    CHECK(forms5 == std::vector<std::array<long long, 3>>{{1, 0, 5}, {2, 2, 3}});
    auto const forms23 = oracle::reduced_forms(-23);
    CHECK(forms23 == std::vector<std::array<long long, 3>>{{1, 1, 6}, {2, -1, 3}, {2, 1, 3}});

    for (long d = -1; d >= -400; --d) {
        bool squarefree = true;
        for (long q = 2; q * q <= -d; ++q)
            squarefree = squarefree && (-d) % (q * q) != 0;
        if (!squarefree)
            continue;
        auto const f = QuadraticField::make(d);
        REQUIRE(class_number_imaginary(f) ==
                static_cast<long>(oracle::reduced_forms(f.discriminant().get_si()).size()));
    }
}

TEST_CASE("minkowski_bound")
{
    auto approx = [](long d) { return minkowski_bound(QuadraticField::make(d)).get_d(); };
    CHECK(approx(2) == doctest::Approx(std::sqrt(8.0) / 2).epsilon(1e-12));
    CHECK(minkowski_bound(QuadraticField::make(2)) < 2);
    CHECK(approx(-1) == doctest::Approx(4 / M_PI).epsilon(1e-12));
    CHECK(minkowski_bound(QuadraticField::make(-1)) < 2);
    CHECK(approx(-163) == doctest::Approx(2 / M_PI * std::sqrt(163.0)).epsilon(1e-12));
    // certified upper bounds
    for (long d : {2L, 3L, 5L, 13L, 10L, -1L, -2L, -3L, -7L, -163L, -999983L}) {
        auto const f = QuadraticField::make(d);
        double const exact = f.is_real() ? std::sqrt(f.discriminant().get_d()) / 2
                                         : 2 / M_PI * std::sqrt(-f.discriminant().get_d());
        mpq_class const b = minkowski_bound(f);
        CHECK(b.get_d() >= exact * (1 - 1e-15));
        CHECK(b.get_d() - exact < 1e-9);
    }
}

TEST_CASE("find_generator")
{
    auto const f = QuadraticField::make(2);
    auto const g = find_generator(Ideal::from_hnf(f, 7, 3, 1));
    REQUIRE(g);
    CHECK(*g == AlgebraicInteger(f, 3, 1));
    auto const f10 = QuadraticField::make(10);
    CHECK_FALSE(find_generator(split_prime(f10, 2).factors[0].prime.ideal));
    CHECK_FALSE(find_generator(split_prime(QuadraticField::make(-5), 2).factors[0].prime.ideal));
    CHECK(find_generator(split_prime(f10, 3).factors[0].prime.ideal) == std::nullopt);

    std::mt19937_64 rng(4);
    for (long d : {2L, 3L, 5L, -1L, -3L, 10L, -5L}) {
        auto const F = QuadraticField::make(d);
        for (int i = 0; i < 40; ++i) {
            auto const a = random_element(F, rng, 25);
            auto const gen = find_generator(principal(a));
            REQUIRE(gen);
            REQUIRE(are_associate(*gen, a));
        }
    }
}

TEST_CASE("is_ufd")
{
    for (long d : {-1L, -2L, -3L, -7L, -11L, -19L, -43L, -67L, -163L})
        CHECK(is_ufd(QuadraticField::make(d)));
    for (long d : {-5L, -6L, -10L, -13L, -14L, -15L})
        CHECK_FALSE(is_ufd(QuadraticField::make(d)));
    CHECK(is_ufd(QuadraticField::make(2)));
    for (long d : {3L, 5L, 6L, 7L, 11L, 13L, 14L, 17L, 19L, 21L})
        CHECK(is_ufd(QuadraticField::make(d)));
    for (long d : {10L, 15L, 26L, 30L, 34L})
        CHECK_FALSE(is_ufd(QuadraticField::make(d)));
}

}
