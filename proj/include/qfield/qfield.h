#ifndef QFIELD_H
#define QFIELD_H

/* C interface to the quadratic-field ideal library.
 *
 * Every object is an opaque handle owned by the caller and released with
 * the matching *_free function.  Integers cross the boundary as decimal
 * strings, so no fixed-width arithmetic is imposed on callers.  Strings
 * returned through `char**` are heap allocated; release them with
 * qf_string_free.  Functions return QF_OK or an error status; details of
 * the most recent failure on the calling thread are available from
 * qf_last_error(). */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QF_API __declspec(dllexport)
#else
#define QF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qf_status {
    QF_OK = 0,
    QF_ERR_NOT_SQUAREFREE = 1,
    QF_ERR_DEGENERATE_D = 2,
    QF_ERR_FIELD_MISMATCH = 3,
    QF_ERR_ZERO_IDEAL = 4,
    QF_ERR_ZERO_ELEMENT = 5,
    QF_ERR_NOT_PRIME = 6,
    QF_ERR_NON_POSITIVE = 7,
    QF_ERR_NOT_UFD = 8,
    QF_ERR_SEARCH_EXHAUSTED = 9,
    QF_ERR_NOT_IMAGINARY = 10,
    QF_ERR_OUT_OF_RANGE = 11,
    QF_ERR_PARSE = 12,
    QF_ERR_NON_CANONICAL = 13,
    QF_ERR_INVALID_ARGUMENT = 14,
    QF_ERR_INTERNAL = 15
} qf_status;

typedef enum qf_omega_kind {
    QF_OMEGA_SQRT_D = 0,
    QF_OMEGA_HALF_ONE_PLUS_SQRT_D = 1
} qf_omega_kind;

typedef enum qf_splitting {
    QF_RAMIFIED = 0,
    QF_SPLIT = 1,
    QF_INERT = 2
} qf_splitting;

typedef enum qf_unit_kind {
    QF_UNITS_FINITE_CYCLIC = 0,
    QF_UNITS_INFINITE_RANK_ONE = 1
} qf_unit_kind;

typedef struct qf_field qf_field;
typedef struct qf_elem qf_elem;
typedef struct qf_ideal qf_ideal;
typedef struct qf_prime qf_prime;
typedef struct qf_factorization qf_factorization;
typedef struct qf_rational_prime_stream qf_rational_prime_stream;
typedef struct qf_prime_ideal_stream qf_prime_ideal_stream;
typedef struct qf_rng qf_rng;

/* Name of a status, e.g. "NotSquarefree"; "OK" for QF_OK. */
QF_API const char* qf_status_name(qf_status status);
/* Message of the last failed call on this thread ("" if none). */
QF_API const char* qf_last_error(void);
QF_API void qf_string_free(char* s);

/* fields */
QF_API qf_status qf_field_create(const char* d, qf_field** out);
QF_API void qf_field_free(qf_field* field);
QF_API qf_status qf_field_d(const qf_field* field, char** out);
QF_API qf_status qf_field_discriminant(const qf_field* field, char** out);
QF_API qf_status qf_field_omega_kind(const qf_field* field, qf_omega_kind* out);
QF_API int qf_field_galois_degree(const qf_field* field);
QF_API qf_status qf_field_to_json(const qf_field* field, char** out);

/* elements x + y*w */
QF_API qf_status qf_elem_create(const qf_field* field, const char* x, const char* y, qf_elem** out);
QF_API qf_status qf_elem_parse(const qf_field* field, const char* text, qf_elem** out);
QF_API void qf_elem_free(qf_elem* elem);
QF_API void qf_elem_array_free(qf_elem** elems, size_t count);
QF_API qf_status qf_elem_to_string(const qf_elem* elem, char** out);
QF_API qf_status qf_elem_add(const qf_elem* a, const qf_elem* b, qf_elem** out);
QF_API qf_status qf_elem_mul(const qf_elem* a, const qf_elem* b, qf_elem** out);
QF_API qf_status qf_elem_conjugate(const qf_elem* a, qf_elem** out);
QF_API qf_status qf_elem_norm(const qf_elem* a, char** out);
QF_API qf_status qf_elem_is_unit(const qf_elem* a, int* out);

/* ideals in Hermite normal form {a, b + c*w} */
QF_API qf_status qf_ideal_from_hnf(const qf_field* field, const char* a, const char* b, const char* c, qf_ideal** out);
/* {"d": 2, "hnf": [7, 3, 1]}; non-canonical triples are rejected. */
QF_API qf_status qf_ideal_from_json(const char* json, qf_ideal** out);
QF_API qf_status qf_ideal_from_generators(const qf_field* field, const qf_elem* const* gens, size_t count,
                                          qf_ideal** out);
QF_API qf_status qf_ideal_principal(const qf_elem* alpha, qf_ideal** out);
QF_API void qf_ideal_free(qf_ideal* ideal);
QF_API qf_status qf_ideal_mul(const qf_ideal* a, const qf_ideal* b, qf_ideal** out);
QF_API qf_status qf_ideal_conjugate(const qf_ideal* a, qf_ideal** out);
QF_API qf_status qf_ideal_norm(const qf_ideal* a, char** out);
QF_API qf_status qf_ideal_intersect_base(const qf_ideal* a, char** out);
/* *out = 1 iff `divisor` contains `dividend`. */
QF_API qf_status qf_ideal_divides(const qf_ideal* divisor, const qf_ideal* dividend, int* out);
QF_API qf_status qf_ideal_equal(const qf_ideal* a, const qf_ideal* b, int* out);
QF_API qf_status qf_ideal_to_string(const qf_ideal* a, char** out);
QF_API qf_status qf_ideal_to_json(const qf_ideal* a, char** out);

/* prime ideals and factorizations */
QF_API void qf_prime_free(qf_prime* prime);
QF_API void qf_prime_array_free(qf_prime** primes, size_t count);
QF_API qf_status qf_prime_ideal(const qf_prime* prime, qf_ideal** out);
QF_API qf_status qf_prime_p(const qf_prime* prime, char** out);
QF_API int qf_prime_e(const qf_prime* prime);
QF_API int qf_prime_f(const qf_prime* prime);

QF_API qf_status qf_kronecker(const char* D, const char* p, int* out);
QF_API qf_status qf_splitting_type(const qf_field* field, const char* p, qf_splitting* out);
QF_API qf_status qf_split_prime(const qf_field* field, const char* p, qf_factorization** out);
QF_API qf_status qf_factor_ideal(const qf_ideal* ideal, qf_factorization** out);
QF_API qf_status qf_valuation(const qf_ideal* ideal, const qf_prime* prime, unsigned* out);
QF_API void qf_factorization_free(qf_factorization* fac);
QF_API size_t qf_factorization_size(const qf_factorization* fac);
QF_API qf_status qf_factorization_prime(const qf_factorization* fac, size_t index, qf_prime** out);
QF_API qf_status qf_factorization_exponent(const qf_factorization* fac, size_t index, unsigned* out);
QF_API qf_status qf_factorization_ideal(const qf_factorization* fac, qf_ideal** out);
QF_API qf_status qf_factorization_product(const qf_factorization* fac, qf_ideal** out);
/* "(2, 0+w)^2 * (3, 0+3*w)", or "1" for the unit ideal. */
QF_API qf_status qf_factorization_to_string(const qf_factorization* fac, char** out);
/* {"ideal": {...}, "factors": [{"p":..,"hnf":[..],"e":..,"f":..,"exp":..}]} */
QF_API qf_status qf_factorization_to_json(const qf_factorization* fac, char** out);

/* relative norm and the extension map */
QF_API qf_status qf_relative_norm(const qf_ideal* ideal, char** out);
QF_API qf_status qf_extend_ideal(const qf_field* field, const char* m, qf_ideal** out);
QF_API qf_status qf_check_extension_norm(const qf_field* field, const char* a, int* out);
QF_API qf_status qf_residue_degree(const qf_prime* prime, int* out);

/* streams of primes and the escape construction */
QF_API qf_status qf_rational_prime_stream_create(qf_rational_prime_stream** out);
QF_API qf_status qf_rational_prime_stream_next(qf_rational_prime_stream* stream, char** out);
QF_API void qf_rational_prime_stream_free(qf_rational_prime_stream* stream);
QF_API qf_status qf_prime_ideal_stream_create(const qf_field* field, qf_prime_ideal_stream** out);
QF_API qf_status qf_prime_ideal_stream_next(qf_prime_ideal_stream* stream, qf_prime** out);
QF_API void qf_prime_ideal_stream_free(qf_prime_ideal_stream* stream);
QF_API qf_status qf_escape_finite_list(const qf_field* field, const qf_prime* const* list, size_t count,
                                       qf_prime** out);
/* Reads a Factorization / prime list JSON document; *out is an array of
 * *count handles, released with qf_prime_array_free. */
QF_API qf_status qf_primes_from_json(const qf_field* field, const char* json, qf_prime*** out, size_t* count);
/* {"d": .., "factors": [...]} */
QF_API qf_status qf_primes_to_json(const qf_field* field, const qf_prime* const* primes, size_t count, char** out);
QF_API qf_status qf_nonassociate_prime_elements(const qf_field* field, size_t count, qf_elem*** out);

/* units, associates, class numbers */
/* *fundamental_unit is set to NULL for finite unit groups. */
QF_API qf_status qf_unit_group(const qf_field* field, qf_unit_kind* kind, int* order, qf_elem** fundamental_unit);
QF_API qf_status qf_are_associate(const qf_elem* a, const qf_elem* b, int* out);
QF_API qf_status qf_class_number_imaginary(const qf_field* field, char** out);
/* Exact rational upper bound "num/den" plus a double approximation. */
QF_API qf_status qf_minkowski_bound(const qf_field* field, char** out, double* approx);
QF_API qf_status qf_is_ufd(const qf_field* field, int* out);
/* *out is NULL when the ideal is not principal. */
QF_API qf_status qf_find_generator(const qf_ideal* ideal, qf_elem** out);

/* seeded sampling for property sweeps */
QF_API qf_status qf_rng_create(uint64_t seed, qf_rng** out);
QF_API void qf_rng_free(qf_rng* rng);
QF_API qf_status qf_random_ideal(const qf_field* field, qf_rng* rng, const char* max_norm, qf_ideal** out);

#ifdef __cplusplus
}
#endif

#endif /* QFIELD_H */
