#include "qfield/sampling.hpp"
#include "qfield/splitting.hpp"

#include <array>

namespace qfield {

AlgebraicInteger random_element(QuadraticField const& field, std::mt19937_64& rng, long bound)
{
    std::uniform_int_distribution<long> coord(-bound, bound);
    for (;;) {
        long const x = coord(rng);
        long const y = coord(rng);
        if (x != 0 || y != 0)
            return {field, x, y};
    }
}

Ideal random_ideal(QuadraticField const& field, std::mt19937_64& rng, Integer const& max_norm)
{
    static std::array<long, 15> const small_primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
    std::uniform_int_distribution<int> steps(1, 4);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<std::size_t> pick(0, small_primes.size() - 1);

    Ideal result = Ideal::unit(field);
    while (result.is_unit()) {
        for (int i = steps(rng); i > 0; --i) {
            Ideal factor = Ideal::unit(field);
            if (coin(rng)) {
                factor = principal(random_element(field, rng, 30));
            } else {
                auto const split = split_prime(field, Integer(small_primes[pick(rng)]));
                std::uniform_int_distribution<std::size_t> which(0, split.factors.size() - 1);
                factor = split.factors[which(rng)].prime.ideal;
            }
            Ideal candidate = ideal_mul(result, factor);
            if (ideal_norm(candidate) <= max_norm)
                result = std::move(candidate);
        }
    }
    return result;
}

}  // namespace qfield
