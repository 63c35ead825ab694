#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>

namespace charsum {

// Complex number carrying an accumulated absolute-error bound. Character
// sums and hypergeometric values live here; quantities that are provably
// integers get snapped at the end.
struct ComplexValue {
    double re = 0.0;
    double im = 0.0;
    double err = 0.0;

    static ComplexValue exact(double x) { return {x, 0.0, 0.0}; }
    static ComplexValue exact(double x, double y) { return {x, y, 0.0}; }

    std::complex<double> value() const { return {re, im}; }
    double abs() const { return std::hypot(re, im); }

    ComplexValue operator+(const ComplexValue& o) const {
        return {re + o.re, im + o.im, err + o.err};
    }
    ComplexValue operator-(const ComplexValue& o) const {
        return {re - o.re, im - o.im, err + o.err};
    }
    ComplexValue operator*(const ComplexValue& o) const {
        auto z = value() * o.value();
        double e = abs() * o.err + o.abs() * err + err * o.err;
        return {z.real(), z.imag(), e};
    }
    ComplexValue operator*(double s) const { return {re * s, im * s, err * std::fabs(s)}; }
    ComplexValue operator-() const { return {-re, -im, err}; }

    ComplexValue& operator+=(const ComplexValue& o) {
        re += o.re;
        im += o.im;
        err += o.err;
        return *this;
    }

    // Reciprocal, defined away from zero (guarded by callers).
    ComplexValue recip() const {
        auto z = 1.0 / value();
        double a = abs();
        double e = (a > 0) ? err / (a * a) * 2.0 : 0.0;
        return {z.real(), z.imag(), e};
    }

    // Nearest integer if this value is within tol + err of one (and the
    // imaginary part is negligible at the same scale).
    std::optional<std::int64_t> snap_int(double tol) const {
        double budget = tol + err;
        if (std::fabs(im) > budget) return std::nullopt;
        double n = std::nearbyint(re);
        if (std::fabs(re - n) > budget) return std::nullopt;
        return static_cast<std::int64_t>(n);
    }

    // "re±err" or "(re+imi)±err" when the imaginary part matters.
    std::string str() const {
        char buf[96];
        if (std::fabs(im) > err + 1e-12)
            std::snprintf(buf, sizeof buf, "(%.12g%+.12gi)±%.3g", re, im, err);
        else
            std::snprintf(buf, sizeof buf, "%.12g±%.3g", re, err);
        return buf;
    }
};

inline ComplexValue operator*(double s, const ComplexValue& v) { return v * s; }

// |a - b| as complex numbers, ignoring error bounds.
inline double deviation(const ComplexValue& a, const ComplexValue& b) {
    return std::abs(a.value() - b.value());
}

} // namespace charsum
