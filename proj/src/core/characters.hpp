#pragma once

#include <cstdint>
#include <numeric>

#include "complex_value.hpp"
#include "error.hpp"
#include "field.hpp"

namespace charsum {

// A multiplicative character on F_q, identified by its exponent k modulo
// q-1: it sends g^j to zeta^{k*j} with zeta = exp(2*pi*i/(q-1)). Every
// character, including the trivial one, vanishes at 0.
class MultChar {
  public:
    MultChar() : field_(nullptr), k_(0) {}

    static MultChar trivial(const Field& F) { return {&F, 0}; }
    static MultChar quadratic(const Field& F) { return {&F, (F.q() - 1) / 2}; }
    static MultChar raw(const Field& F, std::int64_t k) {
        std::int64_t m = F.q() - 1;
        return {&F, ((k % m) + m) % m};
    }
    // Canonical character of order m: exponent (q-1)/m.
    static MultChar of_order(const Field& F, std::int64_t m) {
        if (m <= 0 || (F.q() - 1) % m != 0)
            fail(Errc::OrderDoesNotDivide,
                 "no character of order " + std::to_string(m) + " over F_" + std::to_string(F.q()));
        return {&F, (F.q() - 1) / m};
    }

    const Field& field() const { return *field_; }
    const Field* field_ptr() const { return field_; }
    std::int64_t exponent() const { return k_; }
    bool is_trivial() const { return k_ == 0; }
    bool is_quadratic() const { return k_ == (field_->q() - 1) / 2; }

    std::int64_t order() const {
        std::int64_t m = field_->q() - 1;
        return m / std::gcd(k_, m);
    }

    MultChar operator*(const MultChar& o) const {
        if (field_ != o.field_) fail(Errc::MixedFields, "characters on different fields");
        return raw(*field_, k_ + o.k_);
    }
    MultChar inverse() const { return raw(*field_, -k_); }
    MultChar pow(std::int64_t e) const { return raw(*field_, k_ * (e % (field_->q() - 1))); }

    bool operator==(const MultChar& o) const { return field_ == o.field_ && k_ == o.k_; }
    bool operator!=(const MultChar& o) const { return !(*this == o); }

    ComplexValue operator()(FieldElement x) const { return eval(x); }

    ComplexValue eval(FieldElement x) const {
        if (x.field_ptr() != field_) fail(Errc::MixedFields, "element of another field");
        if (x.is_zero()) return ComplexValue::exact(0.0);
        std::int64_t m = field_->q() - 1;
        std::int64_t t = k_ * field_->dlog(x.code()) % m;
        // Orders 1, 2 and 4 are exact; everything else is one table lookup.
        if (2 * t % m == 0) return ComplexValue::exact(t == 0 ? 1.0 : -1.0);
        if (4 * t % m == 0) return ComplexValue::exact(0.0, 4 * t / m == 1 ? 1.0 : -1.0);
        auto z = field_->unity_roots()[t];
        return {z.real(), z.imag(), 4e-16};
    }

    // Exact evaluation in {-1, 0, +1}; only valid for trivial/quadratic.
    int eval_int(FieldElement x) const {
        if (x.is_zero()) return 0;
        if (k_ == 0) return 1;
        std::int64_t m = field_->q() - 1;
        return (k_ * field_->dlog(x.code()) % m) == 0 ? 1 : -1; // k_ = (q-1)/2 here
    }

    // chi(-1), always exactly +1 or -1.
    int sign_at_minus_one() const {
        if (field_->q() == 0) return 1;
        std::int64_t m = field_->q() - 1;
        return (k_ * (m / 2)) % m == 0 ? 1 : -1;
    }

  private:
    MultChar(const Field* f, std::int64_t k) : field_(f), k_(k) {}

    const Field* field_;
    std::int64_t k_;
};

} // namespace charsum
