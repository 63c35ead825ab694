#include "charsum.h"

#include <cstring>
#include <new>
#include <string>

#include "core/cantor.hpp"
#include "core/char_sums.hpp"
#include "core/characters.hpp"
#include "core/curves.hpp"
#include "core/field.hpp"
#include "core/hypergeometric.hpp"
#include "core/tables.hpp"
#include "core/verify.hpp"

using namespace charsum;

namespace {

thread_local std::string g_last_error;

cs_status map_errc(Errc c) {
    switch (c) {
    case Errc::Ok: return CS_OK;
    case Errc::CompositeOrEvenP: return CS_ERR_COMPOSITE_OR_EVEN_P;
    case Errc::FieldTooLarge: return CS_ERR_FIELD_TOO_LARGE;
    case Errc::DivisionByZero: return CS_ERR_DIVISION_BY_ZERO;
    case Errc::MixedFields: return CS_ERR_MIXED_FIELDS;
    case Errc::LogOfZero: return CS_ERR_LOG_OF_ZERO;
    case Errc::BadModulus: return CS_ERR_BAD_MODULUS;
    case Errc::OrderDoesNotDivide: return CS_ERR_ORDER_DOES_NOT_DIVIDE;
    case Errc::ZeroParameter: return CS_ERR_ZERO_PARAMETER;
    case Errc::EqualParameters: return CS_ERR_EQUAL_PARAMETERS;
    case Errc::BadResidueClass: return CS_ERR_BAD_RESIDUE_CLASS;
    case Errc::DegenerateDiscriminant: return CS_ERR_DEGENERATE_DISCRIMINANT;
    case Errc::BadLambda: return CS_ERR_BAD_LAMBDA;
    case Errc::SingularLambda: return CS_ERR_SINGULAR_LAMBDA;
    case Errc::SingularModel: return CS_ERR_SINGULAR_MODEL;
    case Errc::EvenDegreeModel: return CS_ERR_EVEN_DEGREE_MODEL;
    case Errc::NonIntegralResult: return CS_ERR_NON_INTEGRAL_RESULT;
    case Errc::UnsupportedGenus: return CS_ERR_UNSUPPORTED_GENUS;
    case Errc::UnsupportedFamily: return CS_ERR_UNSUPPORTED_FAMILY;
    case Errc::NoRepresentation: return CS_ERR_NO_REPRESENTATION;
    case Errc::SnapFailed: return CS_ERR_SNAP_FAILED;
    case Errc::InvalidArgument: return CS_ERR_INVALID_ARGUMENT;
    }
    return CS_ERR_INTERNAL;
}

template <typename Fn> cs_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        g_last_error = e.what();
        return map_errc(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CS_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return CS_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = new (std::nothrow) char[s.size() + 1];
    if (!out) return nullptr;
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

const Field& unwrap(const cs_field* f) {
    if (!f) fail(Errc::InvalidArgument, "null field handle");
    return *reinterpret_cast<const Field*>(f);
}

FieldElement elem(const Field& F, std::int64_t code) {
    if (code < 0 || code >= F.q()) fail(Errc::InvalidArgument, "element code out of range");
    return F.element(code);
}

Poly poly_from_codes(const Field& F, const int64_t* codes, size_t n) {
    if (!codes || n == 0) fail(Errc::InvalidArgument, "empty polynomial");
    std::vector<std::uint32_t> v(n);
    for (size_t i = 0; i < n; ++i) {
        if (codes[i] < 0 || codes[i] >= F.q())
            fail(Errc::InvalidArgument, "coefficient code out of range");
        v[i] = static_cast<std::uint32_t>(codes[i]);
    }
    return Poly(F, std::move(v));
}

} // namespace

extern "C" {

const char* cs_status_name(cs_status s) {
    switch (s) {
    case CS_OK: return "Ok";
    case CS_VERIFY_FAILED: return "VerifyFailed";
    case CS_ERR_COMPOSITE_OR_EVEN_P: return "CompositeOrEvenP";
    case CS_ERR_FIELD_TOO_LARGE: return "FieldTooLarge";
    case CS_ERR_DIVISION_BY_ZERO: return "DivisionByZero";
    case CS_ERR_MIXED_FIELDS: return "MixedFields";
    case CS_ERR_LOG_OF_ZERO: return "LogOfZero";
    case CS_ERR_BAD_MODULUS: return "BadModulus";
    case CS_ERR_ORDER_DOES_NOT_DIVIDE: return "OrderDoesNotDivide";
    case CS_ERR_ZERO_PARAMETER: return "ZeroParameter";
    case CS_ERR_EQUAL_PARAMETERS: return "EqualParameters";
    case CS_ERR_BAD_RESIDUE_CLASS: return "BadResidueClass";
    case CS_ERR_DEGENERATE_DISCRIMINANT: return "DegenerateDiscriminant";
    case CS_ERR_BAD_LAMBDA: return "BadLambda";
    case CS_ERR_SINGULAR_LAMBDA: return "SingularLambda";
    case CS_ERR_SINGULAR_MODEL: return "SingularModel";
    case CS_ERR_EVEN_DEGREE_MODEL: return "EvenDegreeModel";
    case CS_ERR_NON_INTEGRAL_RESULT: return "NonIntegralResult";
    case CS_ERR_UNSUPPORTED_GENUS: return "UnsupportedGenus";
    case CS_ERR_UNSUPPORTED_FAMILY: return "UnsupportedFamily";
    case CS_ERR_NO_REPRESENTATION: return "NoRepresentation";
    case CS_ERR_SNAP_FAILED: return "SnapFailed";
    case CS_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case CS_ERR_INTERNAL: return "Internal";
    }
    return "Unknown";
}

const char* cs_last_error(void) { return g_last_error.c_str(); }

cs_status cs_field_create(int64_t p, int32_t r, cs_field** out) {
    return guarded([&]() -> cs_status {
        if (!out) fail(Errc::InvalidArgument, "null output pointer");
        auto F = Field::make(p, r);
        *out = reinterpret_cast<cs_field*>(F.release());
        return CS_OK;
    });
}

void cs_field_destroy(cs_field* f) { delete reinterpret_cast<Field*>(f); }

int64_t cs_field_p(const cs_field* f) { return f ? unwrap(f).p() : 0; }
int32_t cs_field_r(const cs_field* f) { return f ? unwrap(f).r() : 0; }
int64_t cs_field_q(const cs_field* f) { return f ? unwrap(f).q() : 0; }
int64_t cs_field_generator(const cs_field* f) { return f ? unwrap(f).generator().code() : 0; }

cs_status cs_pair_sum(const cs_field* f, int64_t m, int64_t n, int64_t a_code, int64_t b_code,
                      int flavor, int64_t* out) {
    return guarded([&]() -> cs_status {
        const Field& F = unwrap(f);
        if (!out) fail(Errc::InvalidArgument, "null output pointer");
        if (m < 0 || n < 0) fail(Errc::InvalidArgument, "m, n must be nonnegative");
        auto fl = flavor == CS_FLAVOR_PHI ? PairFlavor::Phi : PairFlavor::Psi;
        *out = brute_pair_sum(F, m, n, elem(F, a_code), elem(F, b_code), fl);
        return CS_OK;
    });
}

cs_status cs_jacobsthal(const cs_field* f, int64_t n, int64_t a_code, int flavor, int64_t* out) {
    return guarded([&]() -> cs_status {
        const Field& F = unwrap(f);
        if (!out) fail(Errc::InvalidArgument, "null output pointer");
        auto fl = flavor == CS_FLAVOR_PHI ? JacobsthalFlavor::PhiN : JacobsthalFlavor::PsiN;
        *out = brute_jacobsthal(F, n, elem(F, a_code), fl);
        return CS_OK;
    });
}

cs_status cs_hyper(const cs_field* f, const int64_t* top_exps, size_t ntop,
                   const int64_t* bottom_exps, size_t nbot, int64_t x_code, double* re, double* im,
                   double* err) {
    return guarded([&]() -> cs_status {
        const Field& F = unwrap(f);
        if (!top_exps || (!bottom_exps && nbot > 0)) fail(Errc::InvalidArgument, "null exponents");
        if (!re || !im || !err) fail(Errc::InvalidArgument, "null output pointer");
        HyperSeries s;
        for (size_t i = 0; i < ntop; ++i) s.top.push_back(MultChar::raw(F, top_exps[i]));
        for (size_t i = 0; i < nbot; ++i) s.bottom.push_back(MultChar::raw(F, bottom_exps[i]));
        s.x = elem(F, x_code);
        ComplexValue v = gaussian_hyper(s);
        *re = v.re;
        *im = v.im;
        *err = v.err;
        return CS_OK;
    });
}

cs_status cs_trace(const cs_field* f, int kind, int64_t lambda_code, int64_t* out) {
    return guarded([&]() -> cs_status {
        const Field& F = unwrap(f);
        if (!out) fail(Errc::InvalidArgument, "null output pointer");
        FieldElement lambda = elem(F, lambda_code);
        *out = (kind == CS_TRACE_CLAUSEN) ? trace_clausen(F, lambda).value
                                          : trace_legendre(F, lambda).value;
        return CS_OK;
    });
}

cs_status cs_count_points(const cs_field* f, const int64_t* f_codes, size_t nf, int64_t* count,
                          int32_t* genus, int32_t* infinity_points) {
    return guarded([&]() -> cs_status {
        const Field& F = unwrap(f);
        if (!count) fail(Errc::InvalidArgument, "null output pointer");
        Poly poly = poly_from_codes(F, f_codes, nf);
        *count = eq1_count(F, poly);
        if (poly.deg() >= 3 && poly.is_monic()) {
            auto curve = make_curve(F, poly);
            if (genus) *genus = curve.genus;
            if (infinity_points) *infinity_points = curve.infinity_points;
        } else {
            if (genus) *genus = -1;
            if (infinity_points) *infinity_points = poly.deg() % 2 == 1 ? 1 : 2;
        }
        return CS_OK;
    });
}

cs_status cs_jacobian(int64_t p, const int64_t* f_codes, size_t nf, int32_t trials, uint64_t seed,
                      int64_t* order, int32_t* annihilation_failures) {
    return guarded([&]() -> cs_status {
        if (!order) fail(Errc::InvalidArgument, "null output pointer");
        auto F = Field::make(p, 1);
        Poly poly = poly_from_codes(*F, f_codes, nf);
        auto res = jacobian_annihilation_check(*F, poly, trials, seed);
        *order = res.order;
        if (annihilation_failures) *annihilation_failures = res.failures;
        return CS_OK;
    });
}

cs_status cs_represent(int64_t p, const char* form, int64_t* first_signed, int64_t* second_abs,
                       int32_t* sign_ambiguous) {
    return guarded([&]() -> cs_status {
        if (!form || !first_signed || !second_abs) fail(Errc::InvalidArgument, "null pointer");
        if (!is_odd_prime(p)) fail(Errc::CompositeOrEvenP, "p must be an odd prime");
        std::string name(form);
        QuadForm qf;
        if (name == "two_squares")
            qf = QuadForm::TwoSquares;
        else if (name == "two_squares_xodd")
            qf = QuadForm::TwoSquaresXOdd;
        else if (name == "a2_3b2")
            qf = QuadForm::SquarePlus3Square;
        else if (name == "a2_2b2")
            qf = QuadForm::SquarePlus2Square;
        else
            fail(Errc::InvalidArgument, "unknown form: " + name);
        auto rep = represent_prime(p, qf);
        *first_signed = rep.first_signed;
        *second_abs = rep.second;
        if (sign_ambiguous) *sign_ambiguous = rep.sign_ambiguity ? 1 : 0;
        return CS_OK;
    });
}

cs_status cs_verify(const char* config_json, char** report_json) {
    return guarded([&]() -> cs_status {
        if (!config_json || !report_json) fail(Errc::InvalidArgument, "null pointer");
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(config_json);
        } catch (const std::exception& e) {
            fail(Errc::InvalidArgument, std::string("bad config JSON: ") + e.what());
        }
        SweepConfig cfg;
        if (j.contains("identities")) cfg.identities = j["identities"].get<std::vector<std::string>>();
        if (j.contains("q_min")) cfg.q_min = j["q_min"].get<std::int64_t>();
        if (j.contains("q_max")) cfg.q_max = j["q_max"].get<std::int64_t>();
        if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("samples")) cfg.samples = j["samples"].get<std::int64_t>();
        if (j.contains("exhaustive")) cfg.exhaustive = j["exhaustive"].get<bool>();
        if (j.contains("tolerance") && !j["tolerance"].is_null())
            cfg.tolerance = j["tolerance"].get<double>();
        if (j.contains("threads")) cfg.threads = j["threads"].get<int>();
        if (j.contains("timing")) cfg.with_timing = j["timing"].get<bool>();
        if (j.contains("corrupt")) cfg.corrupt = j["corrupt"].get<std::string>();
        if (j.contains("q_mod") && !j["q_mod"].is_null()) {
            cfg.q_mod = j["q_mod"].get<std::int64_t>();
            if (j.contains("q_class")) cfg.q_class = j["q_class"].get<std::int64_t>();
        }
        auto outcome = run_verify(cfg);
        *report_json = dup_string(outcome.report.dump(2) + "\n");
        if (!*report_json) fail(Errc::InvalidArgument, "allocation failure");
        return outcome.failed == 0 ? CS_OK : CS_VERIFY_FAILED;
    });
}

cs_status cs_identity_list(char** out) {
    return guarded([&]() -> cs_status {
        if (!out) fail(Errc::InvalidArgument, "null pointer");
        std::string s;
        for (const auto& n : identity_names()) {
            s += n;
            s += "\t";
            s += identity_description(n);
            s += "\n";
        }
        *out = dup_string(s);
        return CS_OK;
    });
}

cs_status cs_table(const char* spec_json, char** out) {
    return guarded([&]() -> cs_status {
        if (!spec_json || !out) fail(Errc::InvalidArgument, "null pointer");
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(spec_json);
        } catch (const std::exception& e) {
            fail(Errc::InvalidArgument, std::string("bad table spec JSON: ") + e.what());
        }
        TableSpec spec;
        if (!j.contains("family") || !j.contains("p"))
            fail(Errc::InvalidArgument, "table spec needs family and p");
        spec.family = j["family"].get<std::string>();
        spec.p = j["p"].get<std::int64_t>();
        if (j.contains("r")) spec.r = j["r"].get<int>();
        if (j.contains("m")) spec.m = j["m"].get<std::int64_t>();
        if (j.contains("n")) spec.n = j["n"].get<std::int64_t>();
        std::string format = j.value("format", std::string("csv"));
        Table t = make_table(spec);
        if (format == "csv")
            *out = dup_string(table_to_csv(t));
        else if (format == "json")
            *out = dup_string(table_to_json(t).dump(2) + "\n");
        else
            fail(Errc::InvalidArgument, "format must be csv or json");
        return CS_OK;
    });
}

void cs_string_free(char* s) { delete[] s; }

} // extern "C"
