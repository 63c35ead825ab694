#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "char_sums.hpp"
#include "complex_value.hpp"
#include "field.hpp"
#include "poly.hpp"

namespace charsum {

// Hyperelliptic model y^2 = f(x) with f monic of degree >= 3. The smooth
// projective model has one point at infinity for odd degree, two for even.
struct CurveSpec {
    const Field* field;
    Poly f;
    int genus;           // floor((deg f - 1)/2)
    int infinity_points; // 1 if deg odd, 2 if even
};

CurveSpec make_curve(const Field& F, Poly f);

// r + q + sum_x phi(f(x)) for any nonconstant f (no curve interpretation
// required); r from the degree parity.
std::int64_t eq1_count(const Field& F, const Poly& f);

std::int64_t count_points(const CurveSpec& c);

// Independent oracle: counts solutions of y^2 = f(x) by enumerating y.
std::int64_t count_points_xy(const Field& F, const Poly& f);

struct FrobeniusTrace {
    std::int64_t value;
};

// Trace of y^2 = x(x-1)(x-lambda); lambda outside {0, 1}.
FrobeniusTrace trace_legendre(const Field& F, FieldElement lambda);
// Trace of y^2 = (x-1)(x^2+lambda); lambda outside {0, -1}.
FrobeniusTrace trace_clausen(const Field& F, FieldElement lambda);

struct HasseWeilResult {
    std::int64_t count;
    double margin; // 2g sqrt(q) - |count - q - 1|, nonnegative on pass
    bool ok;
};

HasseWeilResult hasse_weil_check(const CurveSpec& c);

// |J(F_p)| from point counts over F_p, ..., F_{p^g}; genus 2 or 3 only.
std::int64_t jacobian_order(std::int64_t p, const std::vector<std::int64_t>& counts, int genus);

// Counts of y^2 = f(x) over F_p, F_{p^2}, ..., F_{p^upto} (fresh extension
// fields are built and f lifted; no zeta shortcuts).
std::vector<std::int64_t> extension_counts(const Field& Fp, const Poly& f, int upto);

// Counts of y^2 = (x^m+a)(x^m+b) and y^2 = x(x^m+a)(x^m+b) together with
// their pair-sum identities; hypergeometric sides filled in when
// q = 1 (mod 2m).
struct FamilyCountResult {
    std::int64_t count_c = 0;
    std::int64_t count_cprime = 0;
    SumValue psi = 0;
    SumValue phi = 0;
    bool hyper_available = false;
    ComplexValue count_c_via_hyper;
    ComplexValue count_cprime_via_hyper;
};

FamilyCountResult count_family_mm(const Field& F, std::int64_t m, FieldElement a, FieldElement b);

// y^2 = (x^2+a)(x^4+b): count against the two-trace formula, plus the
// normalized 2F1 bound |...| <= 4/sqrt(q) when q = 1 (mod 4).
struct Psi24CurveResult {
    std::int64_t count = 0;
    std::int64_t via_traces = 0;
    bool bound_available = false;
    double bound_value = 0.0;
    double bound_limit = 0.0;
    bool bound_ok = true;
};

Psi24CurveResult count_psi24_curve(const Field& F, FieldElement a, FieldElement b);

// Quadratic-form representations of primes. "parts" are nonnegative; the
// signed first part satisfies the congruence tag where one applies.
enum class QuadForm {
    TwoSquares,       // p = c^2 + d^2, c odd, sign fixed by c = -1 (mod 4)
    TwoSquaresXOdd,   // p = x^2 + y^2, x odd, both signs left open
    SquarePlus3Square, // p = a^2 + 3b^2, sign fixed by a = -1 (mod 3)
    SquarePlus2Square, // p = a^2 + 2b^2, sign fixed by a = -1 (mod 4)
};

struct QFRepresentation {
    QuadForm form;
    std::int64_t first = 0;        // |first part|
    std::int64_t second = 0;       // |second part|
    std::int64_t first_signed = 0; // sign per normalization tag
    std::string label_first;
    std::string label_second;
    std::string normalization;
    bool sign_ambiguity = false; // second part (and first for XOdd)
};

QFRepresentation represent_prime(std::int64_t p, QuadForm form);

// Explicit point-count formulas for y^2 = x^n + a and y^2 = x(x^n + a)
// over prime fields, as candidate sets when signs are left open by the
// classification.
enum class BerndtFamily { C4, C2Prime, C4Prime, C8, C6 };

struct BerndtResult {
    std::vector<std::int64_t> candidates; // deterministic order
    std::int64_t brute = 0;
    bool brute_in_candidates = false;
    int matched_index = -1;
    std::string residue_case; // e.g. "quartic", "quadratic", "nonresidue"
};

BerndtResult berndt_count(const Field& F, BerndtFamily fam, FieldElement a);

// The cubic case prints two distinct formulas under the same curve label.
// Both are evaluated as candidate sets and matched empirically against the
// brute counts of the four nearby curves; callers report the resolution
// instead of assuming one.
struct BerndtCase1Formulas {
    std::vector<std::int64_t> display1; // the phi(a)-weighted formula
    std::vector<std::int64_t> display3; // the unweighted formula
    // brute counts and per-display match flags, indexed C3, C3', C6, C6'
    std::array<std::int64_t, 4> brute{};
    std::array<bool, 4> d1_matches{};
    std::array<bool, 4> d3_matches{};

    bool d1_any() const { return d1_matches[0] || d1_matches[1] || d1_matches[2] || d1_matches[3]; }
    bool d3_any() const { return d3_matches[0] || d3_matches[1] || d3_matches[2] || d3_matches[3]; }
};

BerndtCase1Formulas berndt_case1_formulas(const Field& F, FieldElement a);

} // namespace charsum
