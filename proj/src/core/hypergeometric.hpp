#pragma once

#include <array>
#include <vector>

#include "characters.hpp"
#include "complex_value.hpp"
#include "field.hpp"

namespace charsum {

// J(A,B) = sum over x in F_q of A(x) B(1-x), by direct enumeration.
// Results are memoized per field, keyed by the two exponents.
ComplexValue jacobi_sum(const MultChar& A, const MultChar& B);

// (A | B) = B(-1)/q * J(A, B^{-1}).
ComplexValue binomial_symbol(const MultChar& A, const MultChar& B);

// Parameters of a Gaussian hypergeometric series over F_q: n+1 characters
// on top, n on the bottom, evaluated at x.
struct HyperSeries {
    std::vector<MultChar> top;
    std::vector<MultChar> bottom;
    FieldElement x;
};

// (q/(q-1)) * sum over all characters chi of
//   (A0*chi | chi) * prod_i (Ai*chi | Bi*chi) * chi(x).
ComplexValue gaussian_hyper(const HyperSeries& s);

ComplexValue hyper_2f1(const MultChar& a0, const MultChar& a1, const MultChar& b1,
                       FieldElement x);
ComplexValue hyper_3f2(const MultChar& a0, const MultChar& a1, const MultChar& a2,
                       const MultChar& b1, const MultChar& b2, FieldElement x);

// Verification report for the six classical binomial-symbol identities
// ((a) additive expansion, (b) subtractive expansion, (c) bottom reflection,
// (d) top reflection, (e) trivial-bottom values, (f) duplication). Item (f)
// involves an inverse of (phi | phi*B); pairs where that symbol is zero are
// skipped and counted.
struct GreeneReport {
    std::array<double, 6> max_dev{};  // indexed a..f
    std::array<long, 6> checked{};
    long skipped_f = 0;
    double tol = 0.0;

    bool pass() const {
        for (double d : max_dev)
            if (!(d < tol)) return false;
        return true;
    }
};

GreeneReport greene_property_report(const Field& F, double tol);

} // namespace charsum
