#ifndef QFIELD_INFINITUDE_HPP
#define QFIELD_INFINITUDE_HPP

#include "qfield/splitting.hpp"
#include "qfield/units_class.hpp"

#include <cstdint>
#include <deque>
#include <span>
#include <unordered_map>
#include <vector>

namespace qfield {

/* 2, 3, 5, ... in order, from an incremental sieve that keeps one
 * pending composite per prime found so far. */
class RationalPrimeStream {
  public:
    Integer next();

  private:
    std::uint64_t candidate_ = 2;
    std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> composites_;
};

/* Prime ideals of Z[w] in the order of the rational prime below them,
 * each batch in canonical order. */
class PrimeIdealStream {
  public:
    explicit PrimeIdealStream(QuadraticField field) : field_(std::move(field)) {}

    PrimeIdealFactor next();
    QuadraticField const& field() const { return field_; }

  private:
    QuadraticField field_;
    RationalPrimeStream primes_;
    std::deque<PrimeIdealFactor> pending_;
};

/* A prime ideal of Z[w] different from every entry of `known`: the first
 * factor above the smallest rational prime not lying under any entry. */
PrimeIdealFactor escape_finite_list(QuadraticField const& field, std::span<PrimeIdealFactor const> known);

/* Generators of the first `count` prime ideals of the stream; the field
 * must be a UFD (NotUFD otherwise). */
std::vector<AlgebraicInteger> nonassociate_prime_elements(QuadraticField const& field, std::size_t count);

}  // namespace qfield

#endif  // QFIELD_INFINITUDE_HPP
