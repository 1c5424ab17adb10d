// Command-line front end over the C API in qfield.h.

#include "qfield/qfield.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitDomainError = 1;
constexpr int kExitUsage = 2;

/* Real fields whose fundamental unit the brute-force search handles. */
constexpr long kMaxRealD = 200;
constexpr std::uint64_t kMaxSweep = 1000000;
constexpr char const* kRandomNormBound = "1000000";

struct DomainError {
    std::string name;
    std::string detail;
};

struct UsageError {
    std::string message;
};

void check(qf_status status)
{
    if (status != QF_OK)
        throw DomainError{qf_status_name(status), qf_last_error()};
}

template <typename T, void (*Free)(T*)>
struct Deleter {
    void operator()(T* p) const { Free(p); }
};
using Field = std::unique_ptr<qf_field, Deleter<qf_field, qf_field_free>>;
using Elem = std::unique_ptr<qf_elem, Deleter<qf_elem, qf_elem_free>>;
using IdealH = std::unique_ptr<qf_ideal, Deleter<qf_ideal, qf_ideal_free>>;
using Prime = std::unique_ptr<qf_prime, Deleter<qf_prime, qf_prime_free>>;
using Fact = std::unique_ptr<qf_factorization, Deleter<qf_factorization, qf_factorization_free>>;
using Rng = std::unique_ptr<qf_rng, Deleter<qf_rng, qf_rng_free>>;
using PrimeStream = std::unique_ptr<qf_prime_ideal_stream, Deleter<qf_prime_ideal_stream, qf_prime_ideal_stream_free>>;
using RationalStream =
    std::unique_ptr<qf_rational_prime_stream, Deleter<qf_rational_prime_stream, qf_rational_prime_stream_free>>;

std::string take(char* s)
{
    std::string out(s);
    qf_string_free(s);
    return out;
}

template <typename Fn>
std::string text(Fn&& fn)
{
    char* s = nullptr;
    check(fn(&s));
    return take(s);
}

std::uint64_t to_u64(std::string const& s)
{
    return std::stoull(s);
}

struct Options {
    bool json = false;
    std::string d;
    std::string p;
    std::string elem;
    std::string hnf;
    std::vector<std::string> gens;
    std::string list;
    std::string identity;
    std::uint64_t count = 10;
    std::uint64_t seed = 1;
    std::uint64_t trials = 200;
    std::uint64_t max_a = 500;
    bool max_a_given = false;
};

Field open_field(std::string const& d)
{
    qf_field* f = nullptr;
    check(qf_field_create(d.c_str(), &f));
    return Field(f);
}

void require_small_real(qf_field const* field)
{
    std::string const d = text([&](char** s) { return qf_field_d(field, s); });
    if (d.front() != '-' && std::stol(d) > kMaxRealD)
        throw DomainError{"OutOfRange", "real fields are limited to d <= " + std::to_string(kMaxRealD)};
}

Json parse_json(std::string const& s)
{
    return Json::parse(s);
}

std::string ideal_text(qf_ideal const* ideal)
{
    return text([&](char** s) { return qf_ideal_to_string(ideal, s); });
}

IdealH prime_ideal(qf_prime const* prime)
{
    qf_ideal* ideal = nullptr;
    check(qf_prime_ideal(prime, &ideal));
    return IdealH(ideal);
}

std::string prime_line(qf_prime const* prime)
{
    IdealH const ideal = prime_ideal(prime);
    return "p=" + text([&](char** s) { return qf_prime_p(prime, s); }) + " e=" + std::to_string(qf_prime_e(prime)) +
           " f=" + std::to_string(qf_prime_f(prime)) + " " + ideal_text(ideal.get());
}

/* Ideal named on the command line by --hnf, --elem or --gen. */
IdealH read_ideal(qf_field const* field, Options const& opt)
{
    int const given = !opt.hnf.empty() + !opt.elem.empty() + !opt.gens.empty();
    if (given != 1)
        throw UsageError{"exactly one of --hnf, --elem, --gen is required"};
    qf_ideal* out = nullptr;
    if (!opt.hnf.empty()) {
        std::vector<std::string> parts;
        std::stringstream ss(opt.hnf);
        for (std::string part; std::getline(ss, part, ',');)
            parts.push_back(part);
        if (parts.size() != 3)
            throw UsageError{"--hnf expects a,b,c"};
        check(qf_ideal_from_hnf(field, parts[0].c_str(), parts[1].c_str(), parts[2].c_str(), &out));
        return IdealH(out);
    }
    std::vector<std::string> const texts = opt.elem.empty() ? opt.gens : std::vector<std::string>{opt.elem};
    std::vector<Elem> owned;
    std::vector<qf_elem const*> raw;
    for (auto const& t : texts) {
        qf_elem* e = nullptr;
        check(qf_elem_parse(field, t.c_str(), &e));
        owned.emplace_back(e);
        raw.push_back(e);
    }
    check(qf_ideal_from_generators(field, raw.data(), raw.size(), &out));
    return IdealH(out);
}

int cmd_field(Options const& opt)
{
    Field const field = open_field(opt.d);
    if (opt.json) {
        std::cout << text([&](char** s) { return qf_field_to_json(field.get(), s); }) << "\n";
        return 0;
    }
    qf_omega_kind kind{};
    check(qf_field_omega_kind(field.get(), &kind));
    std::cout << "d=" << text([&](char** s) { return qf_field_d(field.get(), s); })
              << " D=" << text([&](char** s) { return qf_field_discriminant(field.get(), s); })
              << " w=" << (kind == QF_OMEGA_SQRT_D ? "sqrt(d)" : "(1+sqrt(d))/2")
              << " n=" << qf_field_galois_degree(field.get()) << "\n";
    return 0;
}

int cmd_split(Options const& opt)
{
    Field const field = open_field(opt.d);
    qf_factorization* raw = nullptr;
    check(qf_split_prime(field.get(), opt.p.c_str(), &raw));
    Fact const fac(raw);
    qf_splitting type{};
    check(qf_splitting_type(field.get(), opt.p.c_str(), &type));
    char const* name = type == QF_SPLIT ? "split" : type == QF_INERT ? "inert" : "ramified";
    if (opt.json) {
        Json j = parse_json(text([&](char** s) { return qf_factorization_to_json(fac.get(), s); }));
        j["type"] = name;
        std::cout << j.dump() << "\n";
        return 0;
    }
    std::string const factors = text([&](char** s) { return qf_factorization_to_string(fac.get(), s); });
    char const* verb = type == QF_SPLIT ? " splits: " : type == QF_INERT ? " is inert: " : " ramifies: ";
    std::cout << opt.p << verb << factors << "\n";
    return 0;
}

int cmd_factor(Options const& opt)
{
    Field const field = open_field(opt.d);
    IdealH const ideal = read_ideal(field.get(), opt);
    qf_factorization* raw = nullptr;
    check(qf_factor_ideal(ideal.get(), &raw));
    Fact const fac(raw);
    if (opt.json)
        std::cout << text([&](char** s) { return qf_factorization_to_json(fac.get(), s); }) << "\n";
    else
        std::cout << ideal_text(ideal.get()) << " = "
                  << text([&](char** s) { return qf_factorization_to_string(fac.get(), s); }) << "\n";
    return 0;
}

int cmd_norm(Options const& opt)
{
    Field const field = open_field(opt.d);
    IdealH const ideal = read_ideal(field.get(), opt);
    std::string const index = text([&](char** s) { return qf_ideal_norm(ideal.get(), s); });
    std::string const rel = text([&](char** s) { return qf_relative_norm(ideal.get(), s); });
    std::string const base = text([&](char** s) { return qf_ideal_intersect_base(ideal.get(), s); });
    if (opt.json) {
        Json j;
        j["ideal"] = parse_json(text([&](char** s) { return qf_ideal_to_json(ideal.get(), s); }));
        j["norm"] = parse_json(index);
        j["relative_norm"] = parse_json(rel);
        j["intersect_base"] = parse_json(base);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "ideal=" << ideal_text(ideal.get()) << " norm=" << index << " relative_norm=" << rel
                  << " intersect=" << base << "\n";
    }
    return 0;
}

/* One identity check; printed as a line or collected into JSON. */
class Report {
  public:
    Report(Options const& opt, std::string tag) : opt_(opt), tag_(std::move(tag)) {}

    void add(Json fields, bool ok)
    {
        failures_ += ok ? 0 : 1;
        if (opt_.json) {
            fields["ok"] = ok;
            checks_.push_back(std::move(fields));
            return;
        }
        std::cout << tag_ << " d=" << opt_.d;
        for (auto const& [key, value] : fields.items())
            std::cout << " " << key << "=" << (value.is_string() ? value.get<std::string>() : value.dump());
        std::cout << (ok ? " OK" : " FAIL") << "\n";
    }

    int finish()
    {
        if (opt_.json) {
            Json j;
            j["identity"] = opt_.identity;
            j["d"] = parse_json(opt_.d);
            j["checks"] = checks_;
            j["ok"] = failures_ == 0;
            std::cout << j.dump() << "\n";
        }
        if (failures_)
            throw DomainError{"IdentityFailed", std::to_string(failures_) + " " + tag_ + " checks failed"};
        return 0;
    }

  private:
    Options const& opt_;
    std::string tag_;
    Json checks_ = Json::array();
    std::uint64_t failures_ = 0;
};

void verify_extension_norm(qf_field const* field, Options const& opt, Report& report)
{
    for (std::uint64_t a = 1; a <= opt.max_a; ++a) {
        std::string const as = std::to_string(a);
        qf_ideal* raw = nullptr;
        check(qf_extend_ideal(field, as.c_str(), &raw));
        IdealH const ext(raw);
        std::string const lhs = text([&](char** s) { return qf_relative_norm(ext.get(), s); });
        std::string const rhs = std::to_string(a * a);
        int ok = 0;
        check(qf_check_extension_norm(field, as.c_str(), &ok));
        report.add({{"a", a}, {"lhs", parse_json(lhs)}, {"rhs", parse_json(rhs)}}, ok && lhs == rhs);
    }
}

void verify_multiplicativity(qf_field const* field, Options const& opt, Report& report)
{
    qf_rng* raw_rng = nullptr;
    check(qf_rng_create(opt.seed, &raw_rng));
    Rng const rng(raw_rng);
    for (std::uint64_t i = 0; i < opt.trials; ++i) {
        qf_ideal *a = nullptr, *b = nullptr, *ab = nullptr;
        check(qf_random_ideal(field, rng.get(), kRandomNormBound, &a));
        IdealH const A(a);
        check(qf_random_ideal(field, rng.get(), kRandomNormBound, &b));
        IdealH const B(b);
        check(qf_ideal_mul(A.get(), B.get(), &ab));
        IdealH const AB(ab);
        std::string const lhs = text([&](char** s) { return qf_relative_norm(AB.get(), s); });
        std::uint64_t const na = to_u64(text([&](char** s) { return qf_relative_norm(A.get(), s); }));
        std::uint64_t const nb = to_u64(text([&](char** s) { return qf_relative_norm(B.get(), s); }));
        std::string const rhs = std::to_string(na * nb);
        report.add({{"A", ideal_text(A.get())}, {"B", ideal_text(B.get())}, {"lhs", parse_json(lhs)}, {"rhs", parse_json(rhs)}}, lhs == rhs);
    }
}

void verify_norm_pf(qf_field const* field, Options const& opt, Report& report)
{
    std::uint64_t const bound = opt.max_a_given ? opt.max_a : 1000;
    qf_rational_prime_stream* raw = nullptr;
    check(qf_rational_prime_stream_create(&raw));
    RationalStream const primes(raw);
    for (;;) {
        std::string const p = text([&](char** s) { return qf_rational_prime_stream_next(primes.get(), s); });
        std::uint64_t const pv = to_u64(p);
        if (pv >= bound)
            break;
        qf_factorization* fraw = nullptr;
        check(qf_split_prime(field, p.c_str(), &fraw));
        Fact const fac(fraw);
        int sum_ef = 0;
        for (size_t i = 0; i < qf_factorization_size(fac.get()); ++i) {
            qf_prime* praw = nullptr;
            check(qf_factorization_prime(fac.get(), i, &praw));
            sum_ef += qf_prime_e(praw) * qf_prime_f(praw);
        }
        for (size_t i = 0; i < qf_factorization_size(fac.get()); ++i) {
            qf_prime* praw = nullptr;
            check(qf_factorization_prime(fac.get(), i, &praw));
            Prime const P(praw);
            IdealH const ideal = prime_ideal(P.get());
            int f = 0;
            check(qf_residue_degree(P.get(), &f));
            std::string const lhs = text([&](char** s) { return qf_relative_norm(ideal.get(), s); });
            std::string const rhs = std::to_string(f == 2 ? pv * pv : pv);
            report.add({{"p", pv}, {"P", ideal_text(ideal.get())}, {"e", qf_prime_e(P.get())}, {"f", f},
                        {"lhs", parse_json(lhs)}, {"rhs", parse_json(rhs)}, {"sum_ef", sum_ef}},
                       lhs == rhs && sum_ef == 2);
        }
    }
}

void verify_escape(qf_field const* field, Options const& opt, Report& report)
{
    qf_prime_ideal_stream* sraw = nullptr;
    check(qf_prime_ideal_stream_create(field, &sraw));
    PrimeStream const stream(sraw);
    std::vector<Prime> list;
    std::vector<qf_prime const*> raw;
    for (std::uint64_t k = 1; k <= opt.trials; ++k) {
        qf_prime* next = nullptr;
        check(qf_prime_ideal_stream_next(stream.get(), &next));
        list.emplace_back(next);
        raw.push_back(next);
        qf_prime* eraw = nullptr;
        check(qf_escape_finite_list(field, raw.data(), raw.size(), &eraw));
        Prime const escaped(eraw);
        IdealH const eideal = prime_ideal(escaped.get());
        bool fresh = true;
        for (auto const* P : raw) {
            IdealH const ideal = prime_ideal(P);
            int same = 0;
            check(qf_ideal_equal(ideal.get(), eideal.get(), &same));
            fresh = fresh && !same;
        }
        report.add({{"k", k}, {"P", ideal_text(eideal.get())}}, fresh);
    }
}

int cmd_verify(Options const& opt)
{
    Field const field = open_field(opt.d);
    if (opt.max_a > kMaxSweep || opt.trials > kMaxSweep)
        throw UsageError{"sweep sizes are limited to " + std::to_string(kMaxSweep)};
    if (opt.identity == "eq2.4") {
        Report report(opt, "EQ2.4");
        verify_extension_norm(field.get(), opt, report);
        return report.finish();
    }
    if (opt.identity == "eq2.2") {
        Report report(opt, "EQ2.2");
        verify_multiplicativity(field.get(), opt, report);
        return report.finish();
    }
    if (opt.identity == "norm-pf") {
        Report report(opt, "NORM-PF");
        verify_norm_pf(field.get(), opt, report);
        return report.finish();
    }
    Report report(opt, "ESCAPE");
    verify_escape(field.get(), opt, report);
    return report.finish();
}

int cmd_primes(Options const& opt)
{
    Field const field = open_field(opt.d);
    qf_prime_ideal_stream* sraw = nullptr;
    check(qf_prime_ideal_stream_create(field.get(), &sraw));
    PrimeStream const stream(sraw);
    std::vector<Prime> primes;
    std::vector<qf_prime const*> raw;
    for (std::uint64_t i = 0; i < opt.count; ++i) {
        qf_prime* next = nullptr;
        check(qf_prime_ideal_stream_next(stream.get(), &next));
        primes.emplace_back(next);
        raw.push_back(next);
    }
    if (opt.json) {
        std::cout << text([&](char** s) { return qf_primes_to_json(field.get(), raw.data(), raw.size(), s); })
                  << "\n";
        return 0;
    }
    for (auto const* P : raw)
        std::cout << prime_line(P) << "\n";
    return 0;
}

int cmd_escape(Options const& opt)
{
    Field const field = open_field(opt.d);
    std::ifstream in(opt.list);
    if (!in)
        throw DomainError{"ParseError", "cannot read " + opt.list};
    std::stringstream buf;
    buf << in.rdbuf();
    std::string const doc = buf.str();

    qf_prime** list = nullptr;
    size_t count = 0;
    check(qf_primes_from_json(field.get(), doc.c_str(), &list, &count));
    std::vector<qf_prime const*> raw(list, list + count);
    qf_prime* eraw = nullptr;
    qf_status const status = qf_escape_finite_list(field.get(), raw.data(), raw.size(), &eraw);
    qf_prime_array_free(list, count);
    check(status);
    Prime const escaped(eraw);
    IdealH const ideal = prime_ideal(escaped.get());

    if (opt.json) {
        qf_factorization* fraw = nullptr;
        check(qf_factor_ideal(ideal.get(), &fraw));
        Fact const fac(fraw);
        std::cout << text([&](char** s) { return qf_factorization_to_json(fac.get(), s); }) << "\n";
        return 0;
    }
    std::cout << prime_line(escaped.get()) << "\n";
    return 0;
}

int cmd_elements(Options const& opt)
{
    Field const field = open_field(opt.d);
    require_small_real(field.get());
    if (opt.count == 0)
        throw DomainError{"NonPositive", "count must be at least 1"};
    qf_elem** elems = nullptr;
    check(qf_nonassociate_prime_elements(field.get(), opt.count, &elems));
    std::vector<std::string> texts;
    std::vector<std::string> norms;
    for (std::uint64_t i = 0; i < opt.count; ++i) {
        texts.push_back(text([&](char** s) { return qf_elem_to_string(elems[i], s); }));
        norms.push_back(text([&](char** s) { return qf_elem_norm(elems[i], s); }));
    }
    qf_elem_array_free(elems, opt.count);
    if (opt.json) {
        Json j;
        j["d"] = parse_json(opt.d);
        j["elements"] = texts;
        std::cout << j.dump() << "\n";
        return 0;
    }
    for (size_t i = 0; i < texts.size(); ++i)
        std::cout << texts[i] << " norm=" << norms[i] << "\n";
    return 0;
}

int cmd_units(Options const& opt)
{
    Field const field = open_field(opt.d);
    require_small_real(field.get());
    qf_unit_kind kind{};
    int order = 0;
    qf_elem* unit = nullptr;
    check(qf_unit_group(field.get(), &kind, &order, &unit));
    Elem const owned(unit);
    bool const finite = kind == QF_UNITS_FINITE_CYCLIC;
    if (opt.json) {
        Json j;
        j["d"] = parse_json(opt.d);
        j["kind"] = finite ? "FiniteCyclic" : "InfiniteRankOne";
        if (finite)
            j["order"] = order;
        else
            j["fundamental_unit"] = text([&](char** s) { return qf_elem_to_string(unit, s); });
        std::cout << j.dump() << "\n";
        return 0;
    }
    if (finite)
        std::cout << "FiniteCyclic order=" << order << "\n";
    else
        std::cout << "InfiniteRankOne fundamental_unit=" << text([&](char** s) { return qf_elem_to_string(unit, s); })
                  << "\n";
    return 0;
}

int cmd_class_number(Options const& opt)
{
    Field const field = open_field(opt.d);
    std::string const h = text([&](char** s) { return qf_class_number_imaginary(field.get(), s); });
    if (opt.json) {
        Json j;
        j["d"] = parse_json(opt.d);
        j["class_number"] = parse_json(h);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << h << "\n";
    }
    return 0;
}

int cmd_ufd(Options const& opt)
{
    Field const field = open_field(opt.d);
    require_small_real(field.get());
    int ufd = 0;
    check(qf_is_ufd(field.get(), &ufd));
    if (opt.json) {
        Json j;
        j["d"] = parse_json(opt.d);
        j["ufd"] = ufd != 0;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << (ufd ? "true" : "false") << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact ideal arithmetic in rings of integers of quadratic fields"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_flag("--json", opt.json, "JSON output");

    auto field_opt = [&](CLI::App* sub) { sub->add_option("-d", opt.d, "squarefree d of Q(sqrt d)")->required(); };
    auto ideal_opts = [&](CLI::App* sub) {
        sub->add_option("--hnf", opt.hnf, "ideal as HNF triple a,b,c");
        sub->add_option("--elem", opt.elem, "principal ideal of an element x+y*w");
        sub->add_option("--gen", opt.gens, "ideal generator x+y*w (repeatable)");
    };

    auto* field = app.add_subcommand("field", "describe Q(sqrt d) and its ring of integers");
    field_opt(field);

    auto* split = app.add_subcommand("split", "factor pO for a rational prime p");
    field_opt(split);
    split->add_option("-p", opt.p, "rational prime")->required();

    auto* factor = app.add_subcommand("factor", "prime ideal factorization of an ideal");
    field_opt(factor);
    ideal_opts(factor);

    auto* norm = app.add_subcommand("norm", "index and relative norm of an ideal");
    field_opt(norm);
    ideal_opts(norm);

    auto* verify = app.add_subcommand("verify", "run a named identity sweep");
    field_opt(verify);
    verify->add_option("--identity", opt.identity, "eq2.2, eq2.4, norm-pf or escape")
        ->required()
        ->check(CLI::IsMember({"eq2.2", "eq2.4", "norm-pf", "escape"}));
    verify->add_option("--trials", opt.trials, "random pairs (eq2.2) or list lengths (escape)");
    verify->add_option("--seed", opt.seed, "seed for eq2.2");
    verify->add_option("--max-a", opt.max_a, "largest a (eq2.4) or prime bound (norm-pf)");

    auto* primes = app.add_subcommand("primes", "first prime ideals of the ring");
    field_opt(primes);
    primes->add_option("--count", opt.count, "number of prime ideals");

    auto* escape = app.add_subcommand("escape", "prime ideal outside a finite list");
    field_opt(escape);
    escape->add_option("--list", opt.list, "JSON file with the prime ideal list")->required();

    auto* elements = app.add_subcommand("elements", "pairwise non-associate prime elements");
    field_opt(elements);
    elements->add_option("--count", opt.count, "number of elements");

    auto* units = app.add_subcommand("units", "unit group");
    field_opt(units);

    auto* class_number = app.add_subcommand("class-number", "class number of an imaginary field");
    field_opt(class_number);

    auto* ufd = app.add_subcommand("ufd", "whether the ring of integers is a UFD");
    field_opt(ufd);

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        int const code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }
    opt.max_a_given = verify->count("--max-a") > 0;

    try {
        if (*field) return cmd_field(opt);
        if (*split) return cmd_split(opt);
        if (*factor) return cmd_factor(opt);
        if (*norm) return cmd_norm(opt);
        if (*verify) return cmd_verify(opt);
        if (*primes) return cmd_primes(opt);
        if (*escape) return cmd_escape(opt);
        if (*elements) return cmd_elements(opt);
        if (*units) return cmd_units(opt);
        if (*class_number) return cmd_class_number(opt);
        if (*ufd) return cmd_ufd(opt);
    } catch (DomainError const& e) {
        if (e.detail.rfind(e.name + ":", 0) == 0)
            std::cerr << e.detail << "\n";
        else
            std::cerr << e.name << ": " << e.detail << "\n";
        return kExitDomainError;
    } catch (UsageError const& e) {
        std::cerr << "usage: " << e.message << "\n";
        return kExitUsage;
    } catch (nlohmann::json::exception const& e) {
        std::cerr << "ParseError: " << e.what() << "\n";
        return kExitDomainError;
    }
    return kExitUsage;
}
