#include "hypergeometric.hpp"

#include <cmath>

namespace charsum {

namespace {

void require_same(const MultChar& A, const MultChar& B) {
    if (A.field_ptr() != B.field_ptr()) fail(Errc::MixedFields, "characters on different fields");
}

ComplexValue jacobi_sum_direct(const MultChar& A, const MultChar& B) {
    const Field& F = A.field();
    std::int64_t q = F.q();
    ComplexValue acc;
    for (std::int64_t code = 0; code < q; ++code) {
        auto x = F.element(code);
        auto ax = A.eval(x);
        if (ax.re == 0 && ax.im == 0) continue;
        auto bx = B.eval(F.one() - x);
        acc += ax * bx;
    }
    return acc;
}

} // namespace

ComplexValue jacobi_sum(const MultChar& A, const MultChar& B) {
    require_same(A, B);
    const Field& F = A.field();
    std::uint64_t key = static_cast<std::uint64_t>(A.exponent()) * (F.q() - 1) +
                        static_cast<std::uint64_t>(B.exponent());
    std::array<double, 3> hit;
    if (F.cache_get(key, hit)) return {hit[0], hit[1], hit[2]};
    ComplexValue v = jacobi_sum_direct(A, B);
    F.cache_put(key, {v.re, v.im, v.err});
    return v;
}

ComplexValue binomial_symbol(const MultChar& A, const MultChar& B) {
    require_same(A, B);
    double s = static_cast<double>(B.sign_at_minus_one());
    return jacobi_sum(A, B.inverse()) * (s / static_cast<double>(A.field().q()));
}

ComplexValue gaussian_hyper(const HyperSeries& s) {
    if (s.top.size() < 2 || s.bottom.size() + 1 != s.top.size())
        fail(Errc::InvalidArgument, "series needs n+1 top and n bottom characters, n >= 1");
    const Field* fp = s.top[0].field_ptr();
    for (const auto& c : s.top)
        if (c.field_ptr() != fp) fail(Errc::MixedFields, "characters on different fields");
    for (const auto& c : s.bottom)
        if (c.field_ptr() != fp) fail(Errc::MixedFields, "characters on different fields");
    if (s.x.field_ptr() != fp) fail(Errc::MixedFields, "argument in another field");

    const Field& F = *fp;
    std::int64_t q = F.q();
    if (s.x.is_zero()) return ComplexValue::exact(0.0); // chi(0) = 0 kills every term

    ComplexValue acc;
    for (std::int64_t k = 0; k < q - 1; ++k) {
        MultChar chi = MultChar::raw(F, k);
        ComplexValue term = binomial_symbol(s.top[0] * chi, chi);
        for (std::size_t i = 1; i < s.top.size(); ++i)
            term = term * binomial_symbol(s.top[i] * chi, s.bottom[i - 1] * chi);
        term = term * chi.eval(s.x);
        acc += term;
    }
    return acc * (static_cast<double>(q) / static_cast<double>(q - 1));
}

ComplexValue hyper_2f1(const MultChar& a0, const MultChar& a1, const MultChar& b1,
                       FieldElement x) {
    return gaussian_hyper({{a0, a1}, {b1}, x});
}

ComplexValue hyper_3f2(const MultChar& a0, const MultChar& a1, const MultChar& a2,
                       const MultChar& b1, const MultChar& b2, FieldElement x) {
    return gaussian_hyper({{a0, a1, a2}, {b1, b2}, x});
}

GreeneReport greene_property_report(const Field& F, double tol) {
    GreeneReport rep;
    rep.tol = tol;
    std::int64_t q = F.q();
    std::int64_t n = q - 1;
    double qd = static_cast<double>(q);

    auto chi_at = [&](std::int64_t k) { return MultChar::raw(F, k); };

    // Dense binomial table: binom[a][b] = (chi_a | chi_b).
    std::vector<std::vector<ComplexValue>> binom(n, std::vector<ComplexValue>(n));
    for (std::int64_t a = 0; a < n; ++a)
        for (std::int64_t b = 0; b < n; ++b) binom[a][b] = binomial_symbol(chi_at(a), chi_at(b));

    auto mod = [&](std::int64_t v) { return ((v % n) + n) % n; };
    auto note = [&](int item, double dev) {
        rep.checked[item]++;
        if (dev > rep.max_dev[item]) rep.max_dev[item] = dev;
    };

    auto elems = F.elements();

    // (a)  A(1+x) = delta(x) + q/(q-1) * sum_chi (A | chi) chi(x)
    // (b)  A^{-1}(1-x) = delta(x) + q/(q-1) * sum_chi (A chi | chi) chi(x)
    for (std::int64_t a = 0; a < n; ++a) {
        MultChar A = chi_at(a);
        for (auto x : elems) {
            double delta = x.is_zero() ? 1.0 : 0.0;
            ComplexValue sa, sb;
            for (std::int64_t k = 0; k < n; ++k) {
                auto cx = chi_at(k).eval(x);
                sa += binom[a][k] * cx;
                sb += binom[mod(a + k)][k] * cx;
            }
            ComplexValue rhs_a = sa * (qd / (qd - 1.0)) + ComplexValue::exact(delta);
            ComplexValue rhs_b = sb * (qd / (qd - 1.0)) + ComplexValue::exact(delta);
            note(0, deviation(A.eval(F.one() + x), rhs_a));
            note(1, deviation(A.inverse().eval(F.one() - x), rhs_b));
        }
    }

    std::int64_t phi_k = n / 2;
    for (std::int64_t a = 0; a < n; ++a) {
        for (std::int64_t b = 0; b < n; ++b) {
            // (c) (A | B) = (A | A B^{-1})
            note(2, deviation(binom[a][b], binom[a][mod(a - b)]));
            // (d) (A | B) = (B A^{-1} | B) * B(-1)
            double bsign = chi_at(b).sign_at_minus_one();
            note(3, deviation(binom[a][b], binom[mod(b - a)][b] * bsign));
        }
        // (e) (A | eps) = (A | A) = -1/q + (q-1)/q * delta(A)
        double target = (a == 0) ? (qd - 2.0) / qd : -1.0 / qd;
        note(4, std::max(deviation(binom[a][0], ComplexValue::exact(target)),
                         deviation(binom[a][a], ComplexValue::exact(target))));
    }

    // (f) (B^2 chi^2 | chi) = (phi B chi | chi)(B chi | B^2 chi)(phi | phi B)^{-1} * (B chi)(4)
    FieldElement four = F.from_int(4);
    for (std::int64_t b = 0; b < n; ++b) {
        for (std::int64_t k = 0; k < n; ++k) {
            ComplexValue denom = binom[phi_k][mod(phi_k + b)];
            if (denom.abs() <= denom.err + 1e-12) {
                rep.skipped_f++;
                continue;
            }
            ComplexValue lhs = binom[mod(2 * b + 2 * k)][k];
            ComplexValue rhs = binom[mod(phi_k + b + k)][k] * binom[mod(b + k)][mod(2 * b + k)] *
                               denom.recip() * chi_at(mod(b + k)).eval(four);
            note(5, deviation(lhs, rhs));
        }
    }

    return rep;
}

} // namespace charsum
