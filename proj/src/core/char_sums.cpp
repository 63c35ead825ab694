#include "char_sums.hpp"

#include <array>
#include <cmath>

#include "curves.hpp"
#include "hypergeometric.hpp"

namespace charsum {

namespace {

// x^m as a code; x^0 = 1 for every x, including x = 0.
std::uint32_t pow_code(const Field& F, std::uint32_t x, std::int64_t m) {
    if (m == 0) return 1;
    if (x == 0) return 0;
    return F.pow(x, m);
}

void require_nonzero(FieldElement a, const char* what) {
    if (a.is_zero()) fail(Errc::ZeroParameter, what);
}

} // namespace

SumValue brute_pair_sum(const Field& F, std::int64_t m, std::int64_t n, FieldElement a,
                        FieldElement b, PairFlavor flavor) {
    if (a.field_ptr() != &F || b.field_ptr() != &F) fail(Errc::MixedFields, "pair sum parameters");
    std::int64_t s = 0;
    std::uint32_t ac = a.code(), bc = b.code();
    for (std::int64_t x = 0; x < F.q(); ++x) {
        auto xc = static_cast<std::uint32_t>(x);
        int t = F.quad(F.add(pow_code(F, xc, m), ac)) * F.quad(F.add(pow_code(F, xc, n), bc));
        if (flavor == PairFlavor::Phi) t *= F.quad(xc);
        s += t;
    }
    return s;
}

SumValue brute_jacobsthal(const Field& F, std::int64_t n, FieldElement a,
                          JacobsthalFlavor flavor) {
    if (a.field_ptr() != &F) fail(Errc::MixedFields, "jacobsthal parameter");
    std::int64_t s = 0;
    std::uint32_t ac = a.code();
    for (std::int64_t x = 0; x < F.q(); ++x) {
        auto xc = static_cast<std::uint32_t>(x);
        int t = F.quad(F.add(pow_code(F, xc, n), ac));
        if (flavor == JacobsthalFlavor::PhiN) t *= F.quad(xc);
        s += t;
    }
    return s;
}

std::pair<ComplexValue, ComplexValue>
twist_split_check(const Field& F, const std::function<ComplexValue(FieldElement)>& f) {
    ComplexValue lhs, sq, all;
    for (std::int64_t x = 0; x < F.q(); ++x) {
        auto e = F.element(x);
        ComplexValue v = f(e);
        lhs += v * static_cast<double>(F.quad(e.code()));
        all += v;
        sq += f(e * e);
    }
    return {lhs, sq - all};
}

JacobiDecomposition weighted_jacobi_decomposition(const Field& F, const MultChar& psi,
                                                  const MultChar& chi, FieldElement a) {
    require_nonzero(a, "a must be nonzero");
    if (psi.field_ptr() != &F || chi.field_ptr() != &F || a.field_ptr() != &F)
        fail(Errc::MixedFields, "decomposition inputs");

    JacobiDecomposition out;
    FieldElement one = F.one();
    for (std::int64_t x = 0; x < F.q(); ++x) {
        FieldElement e = F.element(x);
        FieldElement x2 = e * e;
        out.direct += psi.eval(x2) * chi.eval(one + a * x2);
    }

    MultChar phi = MultChar::quadratic(F);
    MultChar phipsi = phi * psi;
    FieldElement ma_inv = -(a.inv());
    out.via_jacobi = psi.eval(ma_inv) * jacobi_sum(psi, chi) +
                     phipsi.eval(ma_inv) * jacobi_sum(phipsi, chi);

    if (chi.is_quadratic()) {
        double qphi = static_cast<double>(F.q()) * phi.sign_at_minus_one();
        out.via_binomial = (psi.eval(ma_inv) * binomial_symbol(psi, phipsi) +
                            phipsi.eval(ma_inv) * binomial_symbol(phipsi, psi)) *
                           qphi;
    }
    return out;
}

PowerJacobiExpansion power_jacobi_expansion(const Field& F, const MultChar& psi,
                                            const MultChar& chi, FieldElement a, int t,
                                            std::optional<MultChar> chi_m) {
    if (t < 1) fail(Errc::InvalidArgument, "t must be positive");
    std::int64_t m = 1;
    for (int i = 0; i < t; ++i) m *= 2;
    if ((F.q() - 1) % m != 0)
        fail(Errc::BadModulus, "2^t = " + std::to_string(m) + " does not divide q-1");
    require_nonzero(a, "a must be nonzero");

    MultChar cm = chi_m ? *chi_m : MultChar::of_order(F, m);
    if (cm.order() != m) fail(Errc::InvalidArgument, "chi_m must have order 2^t");

    PowerJacobiExpansion out;
    FieldElement one = F.one();
    for (std::int64_t x = 0; x < F.q(); ++x) {
        FieldElement e = F.element(x);
        FieldElement xm = F.element(pow_code(F, e.code(), m));
        out.direct += psi.eval(xm) * chi.eval(one + a * xm);
    }

    FieldElement ma_inv = -(a.inv());
    for (std::int64_t k = 0; k < m; ++k) {
        MultChar mu = cm.pow(k) * psi;
        out.via_jacobi += mu.eval(ma_inv) * jacobi_sum(mu, chi);
    }

    if (chi.is_quadratic()) {
        MultChar phi = MultChar::quadratic(F);
        double qphi = static_cast<double>(F.q()) * phi.sign_at_minus_one();
        ComplexValue acc;
        for (std::int64_t k = 0; k < m; ++k) {
            MultChar mu = cm.pow(k) * psi;
            MultChar nu = cm.pow(k - m / 2) * psi;
            acc += mu.eval(ma_inv) * binomial_symbol(mu, nu);
        }
        out.via_binomial = acc * qphi;
    }
    return out;
}

PairSumPropertyReport pair_sum_properties_check(const Field& F, std::int64_t m, std::int64_t n,
                                                FieldElement a, FieldElement b) {
    PairSumPropertyReport rep;
    rep.i_ok = brute_pair_sum(F, m, n, a, b, PairFlavor::Psi) ==
                   brute_pair_sum(F, n, m, b, a, PairFlavor::Psi) &&
               brute_pair_sum(F, m, n, a, b, PairFlavor::Phi) ==
                   brute_pair_sum(F, n, m, b, a, PairFlavor::Phi);

    int phi1b = F.quad(F.add(1, b.code()));
    rep.ii_ok = brute_pair_sum(F, n, 0, a, b, PairFlavor::Phi) ==
                    phi1b * brute_jacobsthal(F, n, a, JacobsthalFlavor::PhiN) &&
                brute_pair_sum(F, n, 0, a, b, PairFlavor::Psi) ==
                    phi1b * brute_jacobsthal(F, n, a, JacobsthalFlavor::PsiN);

    if (!a.is_zero()) {
        FieldElement am = a.pow(m);
        FieldElement ban = b / a.pow(n);
        int s3 = F.quad(a.pow(m + n).code());
        rep.iii_ok = brute_pair_sum(F, m, n, am, b, PairFlavor::Psi) ==
                     s3 * brute_pair_sum(F, m, n, F.one(), ban, PairFlavor::Psi);
        int s4 = F.quad(a.pow(m + n + 1).code());
        rep.iv_ok = brute_pair_sum(F, m, n, am, b, PairFlavor::Phi) ==
                    s4 * brute_pair_sum(F, m, n, F.one(), ban, PairFlavor::Phi);
    } else {
        fail(Errc::ZeroParameter, "a must be nonzero for the scaling identities");
    }
    return rep;
}

std::pair<SumValue, SumValue> williams_reduce(const Field& F,
                                              const std::array<std::int64_t, 6>& coeffs) {
    if (F.r() != 1) fail(Errc::InvalidArgument, "reduction identity is stated over prime fields");
    FieldElement a = F.from_int(coeffs[0]), b = F.from_int(coeffs[1]), c = F.from_int(coeffs[2]);
    FieldElement A = F.from_int(coeffs[3]), B = F.from_int(coeffs[4]), C = F.from_int(coeffs[5]);
    FieldElement four = F.from_int(4), two = F.from_int(2);

    FieldElement D = B * B - four * A * C;
    FieldElement Delta = four * a * C - two * b * B + four * c * A;
    FieldElement d = b * b - four * a * c;
    if ((Delta * Delta - four * D * d).is_zero())
        fail(Errc::DegenerateDiscriminant, "Delta^2 - 4Dd = 0");

    std::int64_t lhs = 0, rhs = 0;
    for (std::int64_t xi = 0; xi < F.q(); ++xi) {
        FieldElement x = F.element(xi);
        lhs += F.quad((a * x * x + b * x + c).code()) * F.quad((A * x * x + B * x + C).code());
        rhs += F.quad(x.code()) * F.quad((D * x * x + Delta * x + d).code());
    }
    rhs -= F.quad((a * A).code());
    return {lhs, rhs};
}

Psi22Result psi22_closed(const Field& F, FieldElement a, FieldElement b) {
    require_nonzero(a, "a must be nonzero");
    require_nonzero(b, "b must be nonzero");
    if (a == b) fail(Errc::EqualParameters, "a and b must differ");

    Psi22Result out;
    out.brute = brute_pair_sum(F, 2, 2, a, b, PairFlavor::Psi);

    MultChar phi = MultChar::quadratic(F);
    MultChar eps = MultChar::trivial(F);
    ComplexValue f = hyper_2f1(phi, phi, eps, a / b);
    out.via_2f1 = f * (static_cast<double>(F.q()) * F.quad(b.code())) - ComplexValue::exact(1.0);

    if (F.r() == 1) {
        auto tr = trace_legendre(F, a / b);
        out.via_trace = -static_cast<SumValue>(F.quad(F.neg(b.code()))) * tr.value - 1;
    }
    return out;
}

Psi22SpecialResult psi22_special(const Field& F, FieldElement a, FieldElement b) {
    if (F.r() != 1) fail(Errc::InvalidArgument, "stated over prime fields");
    require_nonzero(a, "a must be nonzero");
    FieldElement two = F.from_int(2);
    if (b != -a && b != two * a && b != a / two)
        fail(Errc::BadResidueClass, "b must be one of -a, 2a, a/2");
    if (a == b) fail(Errc::EqualParameters, "a and b must differ");

    Psi22SpecialResult out{};
    out.brute = brute_pair_sum(F, 2, 2, a, b, PairFlavor::Psi);
    out.p1mod4 = F.p() % 4 == 1;
    if (!out.p1mod4) {
        out.magnitude_ok = out.brute == -1;
        return out;
    }
    auto rep = represent_prime(F.p(), QuadForm::TwoSquaresXOdd);
    out.x_part = rep.first;
    out.y_part = rep.second;
    out.magnitude_ok = std::llabs(out.brute + 1) == 2 * rep.first;
    return out;
}

PairSumHyperResult pair_sum_hyper_mm(const Field& F, std::int64_t m, FieldElement a,
                                     FieldElement b, PairFlavor flavor,
                                     std::optional<MultChar> chi_2m) {
    if (m < 1) fail(Errc::InvalidArgument, "m must be positive");
    if ((F.q() - 1) % (2 * m) != 0)
        fail(Errc::BadModulus, "q must be 1 mod " + std::to_string(2 * m));
    require_nonzero(a, "a must be nonzero");
    require_nonzero(b, "b must be nonzero");

    MultChar chi = chi_2m ? *chi_2m : MultChar::of_order(F, 2 * m);
    if (chi.order() != 2 * m) fail(Errc::InvalidArgument, "chi_2m must have order 2m");

    PairSumHyperResult out;
    out.brute = brute_pair_sum(F, m, m, a, b, flavor);

    // One-variable rewrite: weight(x) = #(m-th roots of x), expanded over the
    // even (psi) or odd (phi) powers of chi_2m for x != 0. The fiber of 0 is
    // the single point x = 0, so the psi weight at 0 is 1.
    for (std::int64_t xi = 0; xi < F.q(); ++xi) {
        FieldElement x = F.element(xi);
        int outer = F.quad((x + a).code()) * F.quad((x + b).code());
        if (outer == 0) continue;
        ComplexValue w;
        if (x.is_zero()) {
            w = ComplexValue::exact(flavor == PairFlavor::Psi ? 1.0 : 0.0);
        } else {
            for (std::int64_t k = 0; k < m; ++k)
                w += chi.pow(flavor == PairFlavor::Psi ? 2 * k : 2 * k + 1).eval(x);
        }
        out.via_chars += w * static_cast<double>(outer);
    }

    MultChar phi = MultChar::quadratic(F);
    FieldElement ma = -a;
    FieldElement z = a / b;
    double qphi = static_cast<double>(F.q()) * F.quad(F.neg((a * b).code()));
    ComplexValue acc;
    for (std::int64_t k = 0; k < m; ++k) {
        std::int64_t e = flavor == PairFlavor::Psi ? 2 * k : 2 * k + 1;
        MultChar top = chi.pow(e);
        MultChar bot = chi.pow(e + m);
        acc += top.eval(ma) * hyper_2f1(phi, top, bot, z);
    }
    out.via_2f1_sum = acc * qphi;
    if (flavor == PairFlavor::Psi) {
        // The x = 0 term phi(a)phi(b) sits outside the character expansion.
        out.via_2f1_sum += ComplexValue::exact(static_cast<double>(F.quad((a * b).code())));
    }
    return out;
}

FieldElement clausen_lambda(const Field& F, FieldElement a, FieldElement b) {
    if (a.is_zero() || b.is_zero()) fail(Errc::BadLambda, "lambda = a^2/b needs a, b nonzero");
    FieldElement lambda = a * a / b;
    if ((lambda + F.one()).is_zero()) fail(Errc::BadLambda, "lambda = -1 is excluded");
    return lambda;
}

ClausenSquareResult clausen_square(const Field& F, FieldElement a, FieldElement b) {
    FieldElement lambda = clausen_lambda(F, a, b);

    std::int64_t inner = 0;
    for (std::int64_t xi = 0; xi < F.q(); ++xi) {
        FieldElement x = F.element(xi);
        inner += F.quad((x * (x + a) * (x * x + b)).code());
    }
    ClausenSquareResult out;
    out.lhs_squared = (1 + inner) * (1 + inner);

    MultChar phi = MultChar::quadratic(F);
    MultChar eps = MultChar::trivial(F);
    FieldElement lp1 = lambda + F.one();
    ComplexValue f = hyper_3f2(phi, phi, phi, eps, eps, lambda / lp1);
    double q = static_cast<double>(F.q());
    out.via_3f2 = ComplexValue::exact(q) + f * (q * q * F.quad(lp1.code()));
    return out;
}

Psi24TraceResult psi24_trace(const Field& F, FieldElement a, FieldElement b) {
    FieldElement lambda = clausen_lambda(F, a, b);
    Psi24TraceResult out;
    out.brute = brute_pair_sum(F, 2, 4, a, b, PairFlavor::Psi);
    SumValue t1 = trace_clausen(F, lambda).value;
    SumValue t2 = trace_clausen(F, lambda.inv()).value;
    out.via_traces =
        -SumValue(F.quad(F.neg(b.code()))) * t1 - SumValue(F.quad(F.neg(a.code()))) * t2 - 1;
    return out;
}

Psi24HyperResult psi24_hyper(const Field& F, FieldElement a, FieldElement b) {
    if ((F.q() - 1) % 4 != 0) fail(Errc::BadModulus, "q must be 1 mod 4");
    FieldElement lambda = clausen_lambda(F, a, b);

    MultChar chi4 = MultChar::of_order(F, 4);
    MultChar eps = MultChar::trivial(F);
    double q = static_cast<double>(F.q());

    Psi24HyperResult out;
    out.brute = brute_pair_sum(F, 2, 4, a, b, PairFlavor::Psi);
    ComplexValue fa = hyper_2f1(chi4, chi4.pow(3), eps, -lambda);
    ComplexValue fb = hyper_2f1(chi4, chi4.pow(3), eps, -(lambda.inv()));
    out.via_2f1 = fa * (q * F.quad(F.neg(b.code()))) + fb * (q * F.quad(F.neg(a.code()))) -
                  ComplexValue::exact(1.0);
    out.trace_lambda = trace_clausen(F, lambda).value;
    out.f21_lambda = fa * (-q);
    out.trace_inv_lambda = trace_clausen(F, lambda.inv()).value;
    out.f21_inv_lambda = fb * (-q);
    return out;
}

} // namespace charsum
