#include "qfield/serialize.hpp"
#include "qfield/error.hpp"

#include <regex>

namespace qfield::json {

json from_integer(Integer const& v)
{
    if (mpz_fits_slong_p(v.get_mpz_t()))
        return json(v.get_si());
    return json(v.get_str());
}

Integer to_integer(json const& v)
{
    if (v.is_number_integer() || v.is_number_unsigned())
        return v.is_number_unsigned() ? Integer(v.get<unsigned long>()) : Integer(v.get<long>());
    if (v.is_string()) {
        static std::regex const digits(R"(-?[0-9]+)");
        std::string const s = v.get<std::string>();
        if (std::regex_match(s, digits))
            return Integer(s, 10);
    }
    raise(ErrorCode::ParseError, "expected an integer, got " + v.dump());
}

namespace {

json const& member(json const& j, char const* key)
{
    if (!j.is_object() || !j.contains(key))
        raise(ErrorCode::ParseError, std::string("missing key '") + key + "' in " + j.dump());
    return j.at(key);
}

int small_int(json const& j, char const* key)
{
    Integer const v = to_integer(member(j, key));
    if (!mpz_fits_sint_p(v.get_mpz_t()))
        raise(ErrorCode::ParseError, std::string("'") + key + "' out of range");
    return static_cast<int>(v.get_si());
}

Ideal hnf_from_json(QuadraticField const& field, json const& hnf)
{
    if (!hnf.is_array() || hnf.size() != 3)
        raise(ErrorCode::ParseError, "hnf must be [a, b, c], got " + hnf.dump());
    return Ideal::from_hnf(field, to_integer(hnf[0]), to_integer(hnf[1]), to_integer(hnf[2]));
}

void check_field(QuadraticField const& field, json const& j)
{
    if (j.is_object() && j.contains("d"))
        require_same_field(field, QuadraticField::make(to_integer(j.at("d"))));
}

}  // namespace

json field_to_json(QuadraticField const& field)
{
    json j;
    j["d"] = from_integer(field.d());
    j["D"] = from_integer(field.discriminant());
    j["omega_kind"] = field.omega_kind() == OmegaKind::SqrtD ? "SqrtD" : "HalfOnePlusSqrtD";
    j["n"] = QuadraticField::galois_degree();
    return j;
}

json ideal_to_json(Ideal const& ideal)
{
    json j;
    j["d"] = from_integer(ideal.field().d());
    j["hnf"] = json::array({from_integer(ideal.a()), from_integer(ideal.b()), from_integer(ideal.c())});
    return j;
}

Ideal ideal_from_json(json const& j)
{
    QuadraticField const field = QuadraticField::make(to_integer(member(j, "d")));
    return hnf_from_json(field, member(j, "hnf"));
}

json factor_to_json(FactorPower const& fp)
{
    json j;
    j["p"] = from_integer(fp.prime.p);
    j["hnf"] = json::array({from_integer(fp.prime.ideal.a()), from_integer(fp.prime.ideal.b()),
                            from_integer(fp.prime.ideal.c())});
    j["e"] = fp.prime.e;
    j["f"] = fp.prime.f;
    j["exp"] = fp.exponent;
    return j;
}

json factorization_to_json(Factorization const& fac)
{
    json j;
    j["ideal"] = ideal_to_json(fac.ideal);
    j["factors"] = json::array();
    for (auto const& fp : fac.factors)
        j["factors"].push_back(factor_to_json(fp));
    return j;
}

json prime_list_to_json(QuadraticField const& field, std::span<PrimeIdealFactor const> primes)
{
    json j;
    j["d"] = from_integer(field.d());
    j["factors"] = json::array();
    for (auto const& P : primes)
        j["factors"].push_back(factor_to_json({P, 1}));
    return j;
}

std::vector<PrimeIdealFactor> primes_from_json(QuadraticField const& field, json const& j)
{
    json const* entries = &j;
    if (j.is_object()) {
        check_field(field, j);
        if (j.contains("ideal"))
            check_field(field, j.at("ideal"));
        entries = &member(j, "factors");
    }
    if (!entries->is_array())
        raise(ErrorCode::ParseError, "expected an array of prime ideal factors");

    std::vector<PrimeIdealFactor> out;
    for (json const& entry : *entries) {
        check_field(field, entry);
        Integer const p = to_integer(member(entry, "p"));
        Ideal ideal = hnf_from_json(field, member(entry, "hnf"));
        int const e = small_int(entry, "e");
        int const f = small_int(entry, "f");
        if (entry.contains("exp") && to_integer(entry.at("exp")) < 1)
            raise(ErrorCode::ParseError, "exponent must be positive in " + entry.dump());
        if (!arith::is_prime(p))
            raise(ErrorCode::NonCanonical, p.get_str() + " is not prime in " + entry.dump());
        bool found = false;
        for (auto const& fp : split_prime(field, p).factors)
            if (fp.prime.ideal == ideal && fp.prime.e == e && fp.prime.f == f)
                found = true;
        if (!found)
            raise(ErrorCode::NonCanonical, entry.dump() + " is not a prime ideal above " + p.get_str());
        out.push_back({std::move(ideal), p, e, f});
    }
    return out;
}

json parse(std::string_view text)
{
    try {
        return json::parse(text);
    } catch (nlohmann::json::exception const& e) {
        raise(ErrorCode::ParseError, e.what());
    }
}

}  // namespace qfield::json
