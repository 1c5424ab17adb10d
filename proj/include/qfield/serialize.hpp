#ifndef QFIELD_SERIALIZE_HPP
#define QFIELD_SERIALIZE_HPP

#include "qfield/splitting.hpp"

#include <json.hpp>

#include <span>
#include <string_view>
#include <vector>

namespace qfield::json {

using json = nlohmann::ordered_json;

/* Integers are written as JSON numbers when they fit in 64 bits and as
 * decimal strings otherwise; both forms are accepted on input. */
json from_integer(Integer const& v);
Integer to_integer(json const& v);

json field_to_json(QuadraticField const& field);

/* {"d": 2, "hnf": [a, b, c]} */
json ideal_to_json(Ideal const& ideal);
Ideal ideal_from_json(json const& j);

/* {"p": 7, "hnf": [7,3,1], "e": 1, "f": 1, "exp": 1} */
json factor_to_json(FactorPower const& fp);

/* {"ideal": {...}, "factors": [...]} */
json factorization_to_json(Factorization const& fac);

/* {"d": 2, "factors": [...]} with every exponent 1. */
json prime_list_to_json(QuadraticField const& field, std::span<PrimeIdealFactor const> primes);

/* Reads a Factorization or prime list document (or a bare array of
 * factor objects) and returns its prime ideals.  Each entry must be a
 * genuine prime ideal of `field` with matching p, e and f. */
std::vector<PrimeIdealFactor> primes_from_json(QuadraticField const& field, json const& j);

json parse(std::string_view text);

}  // namespace qfield::json

#endif  // QFIELD_SERIALIZE_HPP
