#include "qfield/qfield.h"

#include "qfield/error.hpp"
#include "qfield/galois_norm.hpp"
#include "qfield/infinitude.hpp"
#include "qfield/sampling.hpp"
#include "qfield/serialize.hpp"
#include "qfield/units_class.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <regex>
#include <string>

using namespace qfield;

struct qf_field {
    QuadraticField value;
};
struct qf_elem {
    AlgebraicInteger value;
};
struct qf_ideal {
    Ideal value;
};
struct qf_prime {
    PrimeIdealFactor value;
};
struct qf_factorization {
    Factorization value;
};
struct qf_rational_prime_stream {
    RationalPrimeStream value;
};
struct qf_prime_ideal_stream {
    PrimeIdealStream value;
};
struct qf_rng {
    std::mt19937_64 value;
};

namespace {

thread_local std::string last_error;

qf_status fail(qf_status status, std::string message)
{
    last_error = std::move(message);
    return status;
}

template <typename Fn>
qf_status guarded(Fn&& fn)
{
    try {
        fn();
        return QF_OK;
    } catch (Error const& e) {
        return fail(static_cast<qf_status>(e.code()), e.what());
    } catch (std::bad_alloc const&) {
        return fail(QF_ERR_INTERNAL, "out of memory");
    } catch (std::exception const& e) {
        return fail(QF_ERR_INTERNAL, e.what());
    }
}

template <typename... Ptrs>
void require_non_null(Ptrs const*... ptrs)
{
    if (((ptrs == nullptr) || ...))
        raise(ErrorCode::InvalidArgument, "null pointer argument");
}

Integer parse_integer(char const* text)
{
    require_non_null(text);
    static std::regex const pattern(R"(\s*[+-]?[0-9]+\s*)");
    if (!std::regex_match(text, pattern))
        raise(ErrorCode::ParseError, std::string("not an integer: '") + text + "'");
    std::string s(text);
    s.erase(0, s.find_first_not_of(" \t"));
    s.erase(s.find_last_not_of(" \t") + 1);
    if (s.front() == '+')
        s.erase(0, 1);
    return Integer(s, 10);
}

char* dup_string(std::string const& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit(char** out, std::string const& s)
{
    *out = dup_string(s);
}

}  // namespace

extern "C" {

const char* qf_status_name(qf_status status)
{
    if (status == QF_OK)
        return "OK";
    if (status < QF_ERR_NOT_SQUAREFREE || status > QF_ERR_INTERNAL)
        return "Unknown";
    // error_name returns views of string literals
    return error_name(static_cast<ErrorCode>(status)).data();
}

const char* qf_last_error(void)
{
    return last_error.c_str();
}

void qf_string_free(char* s)
{
    std::free(s);
}

/* fields */

qf_status qf_field_create(const char* d, qf_field** out)
{
    return guarded([&] {
        require_non_null(out);
        *out = new qf_field{QuadraticField::make(parse_integer(d))};
    });
}

void qf_field_free(qf_field* field)
{
    delete field;
}

qf_status qf_field_d(const qf_field* field, char** out)
{
    return guarded([&] {
        require_non_null(field, out);
        emit(out, field->value.d().get_str());
    });
}

qf_status qf_field_discriminant(const qf_field* field, char** out)
{
    return guarded([&] {
        require_non_null(field, out);
        emit(out, field->value.discriminant().get_str());
    });
}

qf_status qf_field_omega_kind(const qf_field* field, qf_omega_kind* out)
{
    return guarded([&] {
        require_non_null(field, out);
        *out = field->value.omega_kind() == OmegaKind::SqrtD ? QF_OMEGA_SQRT_D : QF_OMEGA_HALF_ONE_PLUS_SQRT_D;
    });
}

int qf_field_galois_degree(const qf_field*)
{
    return QuadraticField::galois_degree();
}

qf_status qf_field_to_json(const qf_field* field, char** out)
{
    return guarded([&] {
        require_non_null(field, out);
        emit(out, json::field_to_json(field->value).dump());
    });
}

/* elements */

qf_status qf_elem_create(const qf_field* field, const char* x, const char* y, qf_elem** out)
{
    return guarded([&] {
        require_non_null(field, out);
        *out = new qf_elem{AlgebraicInteger(field->value, parse_integer(x), parse_integer(y))};
    });
}

qf_status qf_elem_parse(const qf_field* field, const char* text, qf_elem** out)
{
    return guarded([&] {
        require_non_null(field, text, out);
        *out = new qf_elem{parse_element(field->value, text)};
    });
}

void qf_elem_free(qf_elem* elem)
{
    delete elem;
}

void qf_elem_array_free(qf_elem** elems, size_t count)
{
    if (!elems)
        return;
    for (size_t i = 0; i < count; ++i)
        delete elems[i];
    std::free(elems);
}

qf_status qf_elem_to_string(const qf_elem* elem, char** out)
{
    return guarded([&] {
        require_non_null(elem, out);
        emit(out, to_string(elem->value));
    });
}

qf_status qf_elem_add(const qf_elem* a, const qf_elem* b, qf_elem** out)
{
    return guarded([&] {
        require_non_null(a, b, out);
        *out = new qf_elem{add(a->value, b->value)};
    });
}

qf_status qf_elem_mul(const qf_elem* a, const qf_elem* b, qf_elem** out)
{
    return guarded([&] {
        require_non_null(a, b, out);
        *out = new qf_elem{mul(a->value, b->value)};
    });
}

qf_status qf_elem_conjugate(const qf_elem* a, qf_elem** out)
{
    return guarded([&] {
        require_non_null(a, out);
        *out = new qf_elem{conjugate(a->value)};
    });
}

qf_status qf_elem_norm(const qf_elem* a, char** out)
{
    return guarded([&] {
        require_non_null(a, out);
        emit(out, norm(a->value).get_str());
    });
}

qf_status qf_elem_is_unit(const qf_elem* a, int* out)
{
    return guarded([&] {
        require_non_null(a, out);
        *out = is_unit(a->value) ? 1 : 0;
    });
}

/* ideals */

qf_status qf_ideal_from_hnf(const qf_field* field, const char* a, const char* b, const char* c, qf_ideal** out)
{
    return guarded([&] {
        require_non_null(field, out);
        *out = new qf_ideal{Ideal::from_hnf(field->value, parse_integer(a), parse_integer(b), parse_integer(c))};
    });
}

qf_status qf_ideal_from_json(const char* text, qf_ideal** out)
{
    return guarded([&] {
        require_non_null(text, out);
        *out = new qf_ideal{json::ideal_from_json(json::parse(text))};
    });
}

qf_status qf_ideal_from_generators(const qf_field* field, const qf_elem* const* gens, size_t count, qf_ideal** out)
{
    return guarded([&] {
        require_non_null(field, out);
        if (count == 0 || !gens)
            raise(ErrorCode::InvalidArgument, "at least one generator is required");
        std::vector<AlgebraicInteger> values;
        for (size_t i = 0; i < count; ++i) {
            require_non_null(gens[i]);
            values.push_back(gens[i]->value);
        }
        *out = new qf_ideal{ideal_from_generators(field->value, values)};
    });
}

qf_status qf_ideal_principal(const qf_elem* alpha, qf_ideal** out)
{
    return guarded([&] {
        require_non_null(alpha, out);
        *out = new qf_ideal{principal(alpha->value)};
    });
}

void qf_ideal_free(qf_ideal* ideal)
{
    delete ideal;
}

qf_status qf_ideal_mul(const qf_ideal* a, const qf_ideal* b, qf_ideal** out)
{
    return guarded([&] {
        require_non_null(a, b, out);
        *out = new qf_ideal{ideal_mul(a->value, b->value)};
    });
}

qf_status qf_ideal_conjugate(const qf_ideal* a, qf_ideal** out)
{
    return guarded([&] {
        require_non_null(a, out);
        *out = new qf_ideal{conjugate_ideal(a->value)};
    });
}

qf_status qf_ideal_norm(const qf_ideal* a, char** out)
{
    return guarded([&] {
        require_non_null(a, out);
        emit(out, ideal_norm(a->value).get_str());
    });
}

qf_status qf_ideal_intersect_base(const qf_ideal* a, char** out)
{
    return guarded([&] {
        require_non_null(a, out);
        emit(out, intersect_base(a->value).get_str());
    });
}

qf_status qf_ideal_divides(const qf_ideal* divisor, const qf_ideal* dividend, int* out)
{
    return guarded([&] {
        require_non_null(divisor, dividend, out);
        *out = ideal_divides(divisor->value, dividend->value) ? 1 : 0;
    });
}

qf_status qf_ideal_equal(const qf_ideal* a, const qf_ideal* b, int* out)
{
    return guarded([&] {
        require_non_null(a, b, out);
        *out = a->value == b->value ? 1 : 0;
    });
}

qf_status qf_ideal_to_string(const qf_ideal* a, char** out)
{
    return guarded([&] {
        require_non_null(a, out);
        emit(out, to_string(a->value));
    });
}

qf_status qf_ideal_to_json(const qf_ideal* a, char** out)
{
    return guarded([&] {
        require_non_null(a, out);
        emit(out, json::ideal_to_json(a->value).dump());
    });
}

/* primes and factorizations */

void qf_prime_free(qf_prime* prime)
{
    delete prime;
}

void qf_prime_array_free(qf_prime** primes, size_t count)
{
    if (!primes)
        return;
    for (size_t i = 0; i < count; ++i)
        delete primes[i];
    std::free(primes);
}

qf_status qf_prime_ideal(const qf_prime* prime, qf_ideal** out)
{
    return guarded([&] {
        require_non_null(prime, out);
        *out = new qf_ideal{prime->value.ideal};
    });
}

qf_status qf_prime_p(const qf_prime* prime, char** out)
{
    return guarded([&] {
        require_non_null(prime, out);
        emit(out, prime->value.p.get_str());
    });
}

int qf_prime_e(const qf_prime* prime)
{
    return prime ? prime->value.e : 0;
}

int qf_prime_f(const qf_prime* prime)
{
    return prime ? prime->value.f : 0;
}

qf_status qf_kronecker(const char* D, const char* p, int* out)
{
    return guarded([&] {
        require_non_null(out);
        *out = kronecker_symbol(parse_integer(D), parse_integer(p));
    });
}

qf_status qf_splitting_type(const qf_field* field, const char* p, qf_splitting* out)
{
    return guarded([&] {
        require_non_null(field, out);
        switch (splitting_type(field->value, parse_integer(p))) {
        case SplittingType::Ramified: *out = QF_RAMIFIED; break;
        case SplittingType::Split: *out = QF_SPLIT; break;
        case SplittingType::Inert: *out = QF_INERT; break;
        }
    });
}

qf_status qf_split_prime(const qf_field* field, const char* p, qf_factorization** out)
{
    return guarded([&] {
        require_non_null(field, out);
        *out = new qf_factorization{split_prime(field->value, parse_integer(p))};
    });
}

qf_status qf_factor_ideal(const qf_ideal* ideal, qf_factorization** out)
{
    return guarded([&] {
        require_non_null(ideal, out);
        *out = new qf_factorization{factor_ideal(ideal->value)};
    });
}

qf_status qf_valuation(const qf_ideal* ideal, const qf_prime* prime, unsigned* out)
{
    return guarded([&] {
        require_non_null(ideal, prime, out);
        *out = valuation(ideal->value, prime->value);
    });
}

void qf_factorization_free(qf_factorization* fac)
{
    delete fac;
}

size_t qf_factorization_size(const qf_factorization* fac)
{
    return fac ? fac->value.factors.size() : 0;
}

namespace {

FactorPower const& factor_at(qf_factorization const* fac, size_t index)
{
    require_non_null(fac);
    if (index >= fac->value.factors.size())
        raise(ErrorCode::OutOfRange, "factor index " + std::to_string(index) + " out of range");
    return fac->value.factors[index];
}

}  // namespace

qf_status qf_factorization_prime(const qf_factorization* fac, size_t index, qf_prime** out)
{
    return guarded([&] {
        require_non_null(out);
        *out = new qf_prime{factor_at(fac, index).prime};
    });
}

qf_status qf_factorization_exponent(const qf_factorization* fac, size_t index, unsigned* out)
{
    return guarded([&] {
        require_non_null(out);
        *out = factor_at(fac, index).exponent;
    });
}

qf_status qf_factorization_ideal(const qf_factorization* fac, qf_ideal** out)
{
    return guarded([&] {
        require_non_null(fac, out);
        *out = new qf_ideal{fac->value.ideal};
    });
}

qf_status qf_factorization_product(const qf_factorization* fac, qf_ideal** out)
{
    return guarded([&] {
        require_non_null(fac, out);
        *out = new qf_ideal{fac->value.product()};
    });
}

qf_status qf_factorization_to_string(const qf_factorization* fac, char** out)
{
    return guarded([&] {
        require_non_null(fac, out);
        std::string s;
        for (auto const& fp : fac->value.factors) {
            if (!s.empty())
                s += " * ";
            s += to_string(fp.prime.ideal);
            if (fp.exponent != 1)
                s += "^" + std::to_string(fp.exponent);
        }
        emit(out, s.empty() ? "1" : s);
    });
}

qf_status qf_factorization_to_json(const qf_factorization* fac, char** out)
{
    return guarded([&] {
        require_non_null(fac, out);
        emit(out, json::factorization_to_json(fac->value).dump());
    });
}

/* relative norm */

qf_status qf_relative_norm(const qf_ideal* ideal, char** out)
{
    return guarded([&] {
        require_non_null(ideal, out);
        emit(out, relative_norm(ideal->value).get_str());
    });
}

qf_status qf_extend_ideal(const qf_field* field, const char* m, qf_ideal** out)
{
    return guarded([&] {
        require_non_null(field, out);
        *out = new qf_ideal{extend_ideal(field->value, parse_integer(m))};
    });
}

qf_status qf_check_extension_norm(const qf_field* field, const char* a, int* out)
{
    return guarded([&] {
        require_non_null(field, out);
        *out = check_extension_norm(field->value, parse_integer(a)) ? 1 : 0;
    });
}

qf_status qf_residue_degree(const qf_prime* prime, int* out)
{
    return guarded([&] {
        require_non_null(prime, out);
        *out = residue_degree(prime->value);
    });
}

/* streams */

qf_status qf_rational_prime_stream_create(qf_rational_prime_stream** out)
{
    return guarded([&] {
        require_non_null(out);
        *out = new qf_rational_prime_stream{};
    });
}

qf_status qf_rational_prime_stream_next(qf_rational_prime_stream* stream, char** out)
{
    return guarded([&] {
        require_non_null(stream, out);
        emit(out, stream->value.next().get_str());
    });
}

void qf_rational_prime_stream_free(qf_rational_prime_stream* stream)
{
    delete stream;
}

qf_status qf_prime_ideal_stream_create(const qf_field* field, qf_prime_ideal_stream** out)
{
    return guarded([&] {
        require_non_null(field, out);
        *out = new qf_prime_ideal_stream{PrimeIdealStream(field->value)};
    });
}

qf_status qf_prime_ideal_stream_next(qf_prime_ideal_stream* stream, qf_prime** out)
{
    return guarded([&] {
        require_non_null(stream, out);
        *out = new qf_prime{stream->value.next()};
    });
}

void qf_prime_ideal_stream_free(qf_prime_ideal_stream* stream)
{
    delete stream;
}

namespace {

std::vector<PrimeIdealFactor> collect(const qf_prime* const* list, size_t count)
{
    std::vector<PrimeIdealFactor> out;
    if (count && !list)
        raise(ErrorCode::InvalidArgument, "null prime list");
    for (size_t i = 0; i < count; ++i) {
        require_non_null(list[i]);
        out.push_back(list[i]->value);
    }
    return out;
}

}  // namespace

qf_status qf_escape_finite_list(const qf_field* field, const qf_prime* const* list, size_t count, qf_prime** out)
{
    return guarded([&] {
        require_non_null(field, out);
        std::vector<PrimeIdealFactor> const known = collect(list, count);
        *out = new qf_prime{escape_finite_list(field->value, known)};
    });
}

qf_status qf_primes_from_json(const qf_field* field, const char* text, qf_prime*** out, size_t* count)
{
    return guarded([&] {
        require_non_null(field, text, out, count);
        std::vector<PrimeIdealFactor> const primes = json::primes_from_json(field->value, json::parse(text));
        auto** array = static_cast<qf_prime**>(std::calloc(primes.size() + 1, sizeof(qf_prime*)));
        if (!array)
            throw std::bad_alloc();
        try {
            for (size_t i = 0; i < primes.size(); ++i)
                array[i] = new qf_prime{primes[i]};
        } catch (...) {
            qf_prime_array_free(array, primes.size());
            throw;
        }
        *out = array;
        *count = primes.size();
    });
}

qf_status qf_primes_to_json(const qf_field* field, const qf_prime* const* primes, size_t count, char** out)
{
    return guarded([&] {
        require_non_null(field, out);
        std::vector<PrimeIdealFactor> const list = collect(primes, count);
        emit(out, json::prime_list_to_json(field->value, list).dump());
    });
}

qf_status qf_nonassociate_prime_elements(const qf_field* field, size_t count, qf_elem*** out)
{
    return guarded([&] {
        require_non_null(field, out);
        std::vector<AlgebraicInteger> const elems = nonassociate_prime_elements(field->value, count);
        auto** array = static_cast<qf_elem**>(std::calloc(elems.size() + 1, sizeof(qf_elem*)));
        if (!array)
            throw std::bad_alloc();
        try {
            for (size_t i = 0; i < elems.size(); ++i)
                array[i] = new qf_elem{elems[i]};
        } catch (...) {
            qf_elem_array_free(array, elems.size());
            throw;
        }
        *out = array;
    });
}

/* units and class numbers */

qf_status qf_unit_group(const qf_field* field, qf_unit_kind* kind, int* order, qf_elem** fundamental_unit)
{
    return guarded([&] {
        require_non_null(field, kind, order, fundamental_unit);
        UnitGroupInfo const info = unit_group(field->value);
        *kind = info.kind == UnitGroupInfo::Kind::FiniteCyclic ? QF_UNITS_FINITE_CYCLIC : QF_UNITS_INFINITE_RANK_ONE;
        *order = info.order;
        *fundamental_unit = info.fundamental_unit ? new qf_elem{*info.fundamental_unit} : nullptr;
    });
}

qf_status qf_are_associate(const qf_elem* a, const qf_elem* b, int* out)
{
    return guarded([&] {
        require_non_null(a, b, out);
        *out = are_associate(a->value, b->value) ? 1 : 0;
    });
}

qf_status qf_class_number_imaginary(const qf_field* field, char** out)
{
    return guarded([&] {
        require_non_null(field, out);
        emit(out, class_number_imaginary(field->value).get_str());
    });
}

qf_status qf_minkowski_bound(const qf_field* field, char** out, double* approx)
{
    return guarded([&] {
        require_non_null(field, out, approx);
        mpq_class const bound = minkowski_bound(field->value);
        *approx = bound.get_d();
        emit(out, bound.get_str());
    });
}

qf_status qf_is_ufd(const qf_field* field, int* out)
{
    return guarded([&] {
        require_non_null(field, out);
        *out = is_ufd(field->value) ? 1 : 0;
    });
}

qf_status qf_find_generator(const qf_ideal* ideal, qf_elem** out)
{
    return guarded([&] {
        require_non_null(ideal, out);
        auto const g = find_generator(ideal->value);
        *out = g ? new qf_elem{*g} : nullptr;
    });
}

/* sampling */

qf_status qf_rng_create(uint64_t seed, qf_rng** out)
{
    return guarded([&] {
        require_non_null(out);
        *out = new qf_rng{std::mt19937_64(seed)};
    });
}

void qf_rng_free(qf_rng* rng)
{
    delete rng;
}

qf_status qf_random_ideal(const qf_field* field, qf_rng* rng, const char* max_norm, qf_ideal** out)
{
    return guarded([&] {
        require_non_null(field, rng, out);
        Integer const bound = parse_integer(max_norm);
        if (sgn(bound) <= 0)
            raise(ErrorCode::NonPositive, "max_norm must be positive");
        *out = new qf_ideal{random_ideal(field->value, rng->value, bound)};
    });
}

}  // extern "C"
