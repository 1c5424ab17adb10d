#include "qfield/infinitude.hpp"
#include "qfield/error.hpp"

#include <set>

namespace qfield {

Integer RationalPrimeStream::next()
{
    for (;; ++candidate_) {
        auto it = composites_.find(candidate_);
        if (it == composites_.end()) {
            std::uint64_t const p = candidate_++;
            composites_[p * p].push_back(p);
            return Integer(p);
        }
        for (std::uint64_t q : it->second)
            composites_[candidate_ + q].push_back(q);
        composites_.erase(it);
    }
}

PrimeIdealFactor PrimeIdealStream::next()
{
    while (pending_.empty())
        for (auto& fp : split_prime(field_, primes_.next()).factors)
            pending_.push_back(std::move(fp.prime));
    PrimeIdealFactor out = std::move(pending_.front());
    pending_.pop_front();
    return out;
}

PrimeIdealFactor escape_finite_list(QuadraticField const& field, std::span<PrimeIdealFactor const> known)
{
    // the n_i = N_i cap Z of the list
    std::set<Integer> below;
    for (auto const& P : known) {
        require_same_field(field, P.ideal.field());
        below.insert(intersect_base(P.ideal));
    }

    RationalPrimeStream primes;
    Integer p = primes.next();
    while (below.count(p))
        p = primes.next();

    PrimeIdealFactor escaped = split_prime(field, p).factors.front().prime;
    for (auto const& P : known)
        if (P.ideal == escaped.ideal)
            raise(ErrorCode::Internal, "escaped prime " + to_string(escaped.ideal) + " is in the list");
    return escaped;
}

std::vector<AlgebraicInteger> nonassociate_prime_elements(QuadraticField const& field, std::size_t count)
{
    if (count == 0)
        raise(ErrorCode::NonPositive, "count must be at least 1");
    if (!is_ufd(field))
        raise(ErrorCode::NotUFD, "d=" + field.d().get_str() + " has class number > 1");

    std::vector<AlgebraicInteger> out;
    out.reserve(count);
    PrimeIdealStream stream(field);
    while (out.size() < count) {
        PrimeIdealFactor const P = stream.next();
        std::optional<AlgebraicInteger> pi;
        if (P.f == 2)
            pi.emplace(field, P.p, 0);
        else
            pi = find_generator(P.ideal);
        if (!pi)
            raise(ErrorCode::SearchExhausted, "no generator found for " + to_string(P.ideal));
        for (auto const& earlier : out)
            if (are_associate(earlier, *pi))
                raise(ErrorCode::Internal, to_string(*pi) + " is associate to " + to_string(earlier));
        out.push_back(std::move(*pi));
    }
    return out;
}

}  // namespace qfield
