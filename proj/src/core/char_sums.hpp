#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>

#include "characters.hpp"
#include "complex_value.hpp"
#include "field.hpp"

namespace charsum {

// All sums built from the quadratic character alone are exact integers.
using SumValue = std::int64_t;

enum class PairFlavor { Psi, Phi };

// sum over x of phi(x^m + a) phi(x^n + b)            (Psi)
// sum over x of phi(x) phi(x^m + a) phi(x^n + b)     (Phi)
// x^0 is the constant 1, also at x = 0.
SumValue brute_pair_sum(const Field& F, std::int64_t m, std::int64_t n, FieldElement a,
                        FieldElement b, PairFlavor flavor);

enum class JacobsthalFlavor { PhiN, PsiN };

// phi_n(a) = sum phi(x) phi(x^n + a); psi_n(a) = sum phi(x^n + a).
SumValue brute_jacobsthal(const Field& F, std::int64_t n, FieldElement a, JacobsthalFlavor flavor);

// Both sides of  sum phi(x) f(x) = sum f(x^2) - sum f(x)  for arbitrary f.
std::pair<ComplexValue, ComplexValue>
twist_split_check(const Field& F, const std::function<ComplexValue(FieldElement)>& f);

// Both sides of
//   sum psi(x^2) chi(1 + a x^2)
//     = psi(-1/a) J(psi, chi) + (phi psi)(-1/a) J(phi psi, chi),
// plus, when chi is quadratic, the binomial-symbol restatement
//   q phi(-1) [ psi(-1/a) (psi | phi psi) + (phi psi)(-1/a) (phi psi | psi) ].
struct JacobiDecomposition {
    ComplexValue direct;
    ComplexValue via_jacobi;
    std::optional<ComplexValue> via_binomial; // chi quadratic only
};
JacobiDecomposition weighted_jacobi_decomposition(const Field& F, const MultChar& psi,
                                                  const MultChar& chi, FieldElement a);

// Both sides of the 2^t-power expansion
//   sum psi(x^m) chi(1 + a x^m) = sum_{k<m} (chi_m^k psi)(-1/a) J(chi_m^k psi, chi),
// m = 2^t, plus the binomial form when chi is quadratic. chi_m defaults to
// the canonical order-m character.
struct PowerJacobiExpansion {
    ComplexValue direct;
    ComplexValue via_jacobi;
    std::optional<ComplexValue> via_binomial;
};
PowerJacobiExpansion power_jacobi_expansion(const Field& F, const MultChar& psi,
                                            const MultChar& chi, FieldElement a, int t,
                                            std::optional<MultChar> chi_m = std::nullopt);

// Exact checks of the basic pair-sum identities:
//   (i)   chi_(m,n)(a,b) = chi_(n,m)(b,a)            both flavors
//   (ii)  chi_(n,0)(a,b) = phi(1+b) * chi_n(a)       both flavors
//   (iii) psi_(m,n)(a^m, b) = phi(a^{m+n})   psi_(m,n)(1, b/a^n)
//   (iv)  phi_(m,n)(a^m, b) = phi(a^{m+n+1}) phi_(m,n)(1, b/a^n)
struct PairSumPropertyReport {
    bool i_ok = false, ii_ok = false, iii_ok = false, iv_ok = false;
    bool all_ok() const { return i_ok && ii_ok && iii_ok && iv_ok; }
};
PairSumPropertyReport pair_sum_properties_check(const Field& F, std::int64_t m, std::int64_t n,
                                                FieldElement a, FieldElement b);

// Both sides of the quadratic-pair reduction over a prime field:
//   sum phi(ax^2+bx+c) phi(Ax^2+Bx+C)
//     = sum phi(x) phi(Dx^2 + Delta x + d) - phi(aA)
// with D = B^2-4AC, Delta = 4aC-2bB+4cA, d = b^2-4ac, Delta^2 - 4Dd != 0.
std::pair<SumValue, SumValue> williams_reduce(const Field& F,
                                              const std::array<std::int64_t, 6>& coeffs);

// psi_(2,2)(a,b) against q phi(b) 2F1(phi,phi;eps | a/b) - 1 (a,b nonzero,
// a != b) and, over prime fields, against -phi(-b) a_p(a/b) - 1.
struct Psi22Result {
    SumValue brute;
    ComplexValue via_2f1;
    std::optional<SumValue> via_trace; // r == 1 only
};
Psi22Result psi22_closed(const Field& F, FieldElement a, FieldElement b);

// psi_(2,2)(a,b) for b in {-a, 2a, a/2} over a prime field. For
// p = 3 (mod 4) the sum is -1; for p = 1 (mod 4) its distance from -1 is
// 2|x| where p = x^2 + y^2 with x odd. Signs are reported, not asserted.
struct Psi22SpecialResult {
    SumValue brute;
    bool p1mod4;
    std::int64_t x_part = 0, y_part = 0; // p = x^2 + y^2, x odd (p = 1 mod 4)
    bool magnitude_ok;                   // |brute + 1| == 2|x|, or brute == -1 for 3 mod 4
};
Psi22SpecialResult psi22_special(const Field& F, FieldElement a, FieldElement b);

// psi_(m,m) / phi_(m,m) for q = 1 (mod 2m) against the order-2m character
// decomposition and the 2F1 sums. `via_chars` is the single-variable
// rewrite sum_x phi(x+a) phi(x+b) w(x) with w the x^m-fiber weight; the
// psi-flavor weight at x = 0 is 1 (x = 0 is its own m-th power).
struct PairSumHyperResult {
    SumValue brute;
    ComplexValue via_chars;
    ComplexValue via_2f1_sum;
};
PairSumHyperResult pair_sum_hyper_mm(const Field& F, std::int64_t m, FieldElement a,
                                     FieldElement b, PairFlavor flavor,
                                     std::optional<MultChar> chi_2m = std::nullopt);

// [1 + sum phi(x(x+a)(x^2+b))]^2 against
// q + q^2 phi(lambda+1) 3F2(phi,phi,phi; eps,eps | lambda/(lambda+1)),
// lambda = a^2/b not in {0, -1}.
struct ClausenSquareResult {
    SumValue lhs_squared;
    ComplexValue via_3f2;
};
ClausenSquareResult clausen_square(const Field& F, FieldElement a, FieldElement b);

// psi_(2,4)(a,b) = -phi(-b) a_q(lambda) - phi(-a) a_q(1/lambda) - 1 where
// a_q is the trace of y^2 = (x-1)(x^2 + lambda).
struct Psi24TraceResult {
    SumValue brute;
    SumValue via_traces;
};
Psi24TraceResult psi24_trace(const Field& F, FieldElement a, FieldElement b);

// q = 1 (mod 4): psi_(2,4)(a,b) via the order-4 2F1 values; also returns
// both trace/2F1 pairs so a_q(lambda) = -q 2F1(chi4, chi4^3; eps | -lambda)
// can be asserted on its own.
struct Psi24HyperResult {
    SumValue brute;
    ComplexValue via_2f1;
    SumValue trace_lambda;
    ComplexValue f21_lambda; // -q * 2F1(... | -lambda)
    SumValue trace_inv_lambda;
    ComplexValue f21_inv_lambda;
};
Psi24HyperResult psi24_hyper(const Field& F, FieldElement a, FieldElement b);

// Shared precondition helper: lambda = a^2/b, required outside {0, -1}.
FieldElement clausen_lambda(const Field& F, FieldElement a, FieldElement b);

} // namespace charsum
