#include "oracles.hpp"

#include "qfield/error.hpp"
#include "qfield/ideal.hpp"
#include "qfield/sampling.hpp"
#include "qfield/splitting.hpp"

#include <doctest.h>

#include <array>
#include <map>
#include <random>

using namespace qfield;

namespace {

AlgebraicInteger el(QuadraticField const& f, long x, long y = 0)
{
    return {f, x, y};
}

Ideal hnf(QuadraticField const& f, long a, long b, long c)
{
    return Ideal::from_hnf(f, a, b, c);
}

Ideal gens(QuadraticField const& f, std::vector<AlgebraicInteger> const& g)
{
    return ideal_from_generators(f, g);
}

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

TEST_SUITE("ideal") {

TEST_CASE("ideal_from_generators")
{
    auto const f = QuadraticField::make(2);
    CHECK(gens(f, {el(f, 7), el(f, 3, 1)}) == hnf(f, 7, 3, 1));
    CHECK(gens(f, {el(f, 0, 1)}) == hnf(f, 2, 0, 1));
    CHECK(code_of([&] { gens(f, {el(f, 0)}); }) == ErrorCode::ZeroIdeal);
    CHECK(code_of([&] { gens(f, {el(f, 0), el(f, 0, 0)}); }) == ErrorCode::ZeroIdeal);
    CHECK(code_of([&] { gens(f, {el(QuadraticField::make(3), 1)}); }) == ErrorCode::FieldMismatch);
    // zero generators alongside nonzero ones are ignored
    CHECK(gens(f, {el(f, 0), el(f, 7), el(f, 3, 1)}) == hnf(f, 7, 3, 1));
}

TEST_CASE("principal")
{
    auto const f2 = QuadraticField::make(2);
    CHECK(principal(el(f2, 2)) == hnf(f2, 2, 0, 2));
    CHECK(principal(el(f2, 1)) == Ideal::unit(f2));
    CHECK(code_of([&] { principal(el(f2, 0)); }) == ErrorCode::ZeroIdeal);

    // (2 + i) contains 2 + i itself, so b = 2
    auto const fi = QuadraticField::make(-1);
    Ideal const P = principal(el(fi, 2, 1));
    CHECK(P == hnf(fi, 5, 2, 1));
    CHECK(ideal_norm(P) == 5);
}

TEST_CASE("from_hnf rejects non-canonical triples")
{
    auto const f = QuadraticField::make(2);
    for (auto const& t : std::vector<std::array<long, 3>>{
             {7, 2, 1}, {7, 10, 1}, {7, -4, 1}, {0, 0, 1}, {4, 0, 3}, {4, 1, 2}, {-7, 3, 1}, {7, 3, 0}}) {
        CHECK(code_of([&] { hnf(f, t[0], t[1], t[2]); }) == ErrorCode::NonCanonical);
    }
}

TEST_CASE("ideal_mul")
{
    auto const f = QuadraticField::make(2);
    Ideal const r2 = hnf(f, 2, 0, 1);
    CHECK(ideal_mul(r2, r2) == hnf(f, 2, 0, 2));
    CHECK(ideal_mul(hnf(f, 7, 3, 1), hnf(f, 7, 4, 1)) == hnf(f, 7, 0, 7));
    CHECK(ideal_mul(hnf(f, 7, 3, 1), Ideal::unit(f)) == hnf(f, 7, 3, 1));
    CHECK(code_of([&] { ideal_mul(r2, Ideal::unit(QuadraticField::make(3))); }) == ErrorCode::FieldMismatch);
    CHECK(ideal_pow(r2, 0) == Ideal::unit(f));
    CHECK(ideal_pow(r2, 5) == hnf(f, 8, 0, 4) /* (sqrt 2)^5 = 4 sqrt 2 */);
}

TEST_CASE("ideal_norm and intersect_base")
{
    auto const f = QuadraticField::make(2);
    CHECK(ideal_norm(hnf(f, 7, 3, 1)) == 7);
    CHECK(ideal_norm(principal(el(f, 3))) == 9);
    CHECK(ideal_norm(Ideal::unit(f)) == 1);
    CHECK(intersect_base(hnf(f, 7, 3, 1)) == 7);
    CHECK(intersect_base(hnf(f, 2, 0, 1)) == 2);
    CHECK(intersect_base(Ideal::unit(f)) == 1);
}

TEST_CASE("ideal_divides")
{
    auto const f = QuadraticField::make(2);
    CHECK(ideal_divides(principal(el(f, 0, 1)), principal(el(f, 2))));
    CHECK_FALSE(ideal_divides(principal(el(f, 3)), principal(el(f, 3, 1))));
    Ideal const A = hnf(f, 7, 3, 1);
    CHECK(ideal_divides(A, A));
    CHECK(ideal_divides(Ideal::unit(f), A));
    CHECK_FALSE(ideal_divides(A, Ideal::unit(f)));
    CHECK(code_of([&] { ideal_divides(A, Ideal::unit(QuadraticField::make(3))); }) == ErrorCode::FieldMismatch);
}

TEST_CASE("conjugate_ideal")
{
    auto const f = QuadraticField::make(2);
    CHECK(conjugate_ideal(hnf(f, 7, 3, 1)) == hnf(f, 7, 4, 1));
    CHECK(conjugate_ideal(principal(el(f, 3))) == principal(el(f, 3)));
    std::mt19937_64 rng(8);
    for (long d : oracle::kTestFields) {
        auto const F = QuadraticField::make(d);
        for (int i = 0; i < 100; ++i) {
            Ideal const A = random_ideal(F, rng, 1000000);
            REQUIRE(conjugate_ideal(conjugate_ideal(A)) == A);
            REQUIRE(ideal_norm(conjugate_ideal(A)) == ideal_norm(A));
        }
    }
}

TEST_CASE("text format")
{
    auto const f = QuadraticField::make(2);
    CHECK(to_string(hnf(f, 7, 3, 1)) == "(7, 3+w)");
    CHECK(to_string(principal(el(f, 3))) == "(3, 0+3*w)");
    CHECK(to_string(Ideal::unit(f)) == "(1, 0+w)");
}

TEST_CASE("index of principal ideals and the enumeration oracle")
{
    // every canonical triple of small index is exactly what the library
    // accepts, and principal ideals have index |N(alpha)|
    for (long d : oracle::kTestFields) {
        auto const f = QuadraticField::make(d);
        for (long n = 1; n <= 60; ++n) {
            auto const expected = oracle::ideals_of_index(d, n);
            std::size_t accepted = 0;
            for (long c = 1; c <= n; ++c)
                for (long a = 1; a <= n; ++a) {
                    if (a * c != n)
                        continue;
                    for (long b = 0; b < a; ++b) {
                        try {
                            Ideal::from_hnf(f, a, b, c);
                            ++accepted;
                        } catch (Error const&) {
                        }
                    }
                }
            REQUIRE(accepted == expected.size());
        }
        std::mt19937_64 rng(static_cast<unsigned long>(d + 100));
        for (int i = 0; i < 200; ++i) {
            auto const a = random_element(f, rng, 40);
            REQUIRE(ideal_norm(principal(a)) == abs(norm(a)));
            REQUIRE(contains(principal(a), a));
        }
    }
}

TEST_CASE("ideal properties on random ideals")
{
    std::mt19937_64 rng(21);
    for (long d : oracle::kTestFields) {
        auto const f = QuadraticField::make(d);
        for (int i = 0; i < 100; ++i) {
            Ideal const A = random_ideal(f, rng, 1000000);
            Ideal const B = random_ideal(f, rng, 1000000);
            REQUIRE(ideal_norm(ideal_mul(A, B)) == ideal_norm(A) * ideal_norm(B));
            REQUIRE(ideal_mul(A, B) == ideal_mul(B, A));

            // regenerating from the HNF basis is the identity
            REQUIRE(gens(f, {el(f, 0) + AlgebraicInteger(f, A.a()), AlgebraicInteger(f, A.b(), A.c())}) == A);

            Integer const base = intersect_base(A);
            Integer const index = ideal_norm(A);
            REQUIRE(mpz_divisible_p(index.get_mpz_t(), base.get_mpz_t()));
            Integer const sq = base * base;
            REQUIRE(mpz_divisible_p(sq.get_mpz_t(), index.get_mpz_t()));

            auto const a = random_element(f, rng, 60);
            auto const b = random_element(f, rng, 60);
            REQUIRE(principal(a * b) == ideal_mul(principal(a), principal(b)));
        }
    }
}

TEST_CASE("divisibility agrees with prime valuations")
{
    std::mt19937_64 rng(34);
    auto exponents = [](Ideal const& I) {
        std::map<std::array<std::string, 3>, unsigned> m;
        for (auto const& fp : factor_ideal(I).factors)
            m[{fp.prime.ideal.a().get_str(), fp.prime.ideal.b().get_str(), fp.prime.ideal.c().get_str()}] =
                fp.exponent;
        return m;
    };
    for (long d : oracle::kTestFields) {
        auto const f = QuadraticField::make(d);
        int hits = 0;
        for (int i = 0; i < 150; ++i) {
            Ideal const A = random_ideal(f, rng, 2000);
            Ideal const B = (i % 2) ? ideal_mul(A, random_ideal(f, rng, 2000)) : random_ideal(f, rng, 4000000);
            auto const ea = exponents(A);
            auto const eb = exponents(B);
            bool by_valuation = true;
            for (auto const& [key, k] : ea) {
                auto const it = eb.find(key);
                by_valuation = by_valuation && it != eb.end() && it->second >= k;
            }
            REQUIRE(ideal_divides(A, B) == by_valuation);
            hits += by_valuation;
        }
        CHECK(hits >= 75);
    }
}

}
