#ifndef QFIELD_UNITS_CLASS_HPP
#define QFIELD_UNITS_CLASS_HPP

#include "qfield/ideal.hpp"

#include <cstdint>
#include <optional>

namespace qfield {

/* |y| bound of the fundamental unit search. */
inline constexpr std::uint64_t kFundamentalUnitCap = 10000000;

struct UnitGroupInfo {
    enum class Kind { FiniteCyclic, InfiniteRankOne };
    Kind kind;
    int order = 0;  // FiniteCyclic only
    std::optional<AlgebraicInteger> fundamental_unit;
};

UnitGroupInfo unit_group(QuadraticField const& field);

/* Fundamental unit of a real field: the unit x + y*w > 1 with least
 * y > 0.  SearchExhausted past kFundamentalUnitCap. */
AlgebraicInteger fundamental_unit(QuadraticField const& field);

bool are_associate(AlgebraicInteger const& a, AlgebraicInteger const& b);

/* Number of reduced primitive forms of discriminant D < 0. */
Integer class_number_imaginary(QuadraticField const& field);

/* Certified rational upper bound for the Minkowski constant:
 * sqrt(D)/2 for real fields, (2/pi) sqrt|D| for imaginary ones.  The
 * returned value exceeds the true bound by less than 1e-12. */
mpq_class minkowski_bound(QuadraticField const& field);

/* Hard cap on |y| scanned by the real-quadratic generator searches. */
inline constexpr std::uint64_t kGeneratorSearchCap = std::uint64_t{1} << 20;

/* Canonical generator of a principal ideal: among elements of absolute
 * norm equal to the ideal norm, least |y|, then least non-negative x,
 * then positive y.  Returns nullopt when the ideal is not principal.
 * The search is exhaustive: imaginary fields scan the norm ellipse,
 * real fields a fundamental domain of the unit group (SearchExhausted
 * if that domain needs more than kGeneratorSearchCap rows). */
std::optional<AlgebraicInteger> find_generator(Ideal const& ideal);

bool is_ufd(QuadraticField const& field);

}  // namespace qfield

#endif  // QFIELD_UNITS_CLASS_HPP
