#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "field.hpp"

namespace charsum {

// Dense univariate polynomial over a Field, coefficients stored as element
// codes with the constant term first. The zero polynomial has degree -1.
class Poly {
  public:
    Poly() : field_(nullptr) {}
    explicit Poly(const Field& F) : field_(&F) {}
    Poly(const Field& F, std::vector<std::uint32_t> codes) : field_(&F), c_(std::move(codes)) {
        trim();
    }

    static Poly from_ints(const Field& F, std::initializer_list<std::int64_t> coeffs) {
        std::vector<std::uint32_t> v;
        for (auto c : coeffs) v.push_back(F.from_int(c).code());
        return Poly(F, std::move(v));
    }
    static Poly from_elements(const Field& F, const std::vector<FieldElement>& coeffs) {
        std::vector<std::uint32_t> v;
        for (auto e : coeffs) v.push_back(e.code());
        return Poly(F, std::move(v));
    }
    static Poly zero(const Field& F) { return Poly(F); }
    static Poly one(const Field& F) { return Poly(F, {1}); }
    static Poly x(const Field& F) { return Poly(F, {0, 1}); }
    // x - a
    static Poly linear_root(const Field& F, FieldElement a) {
        return Poly(F, {F.neg(a.code()), 1});
    }

    const Field& field() const { return *field_; }
    const Field* field_ptr() const { return field_; }
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    FieldElement coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return field_->zero();
        return {field_, c_[i]};
    }
    FieldElement lead() const { return coeff(deg()); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    FieldElement eval(FieldElement x) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(FieldElement s) const;
    Poly monic() const; // requires nonzero

    // Division with remainder; divisor must be nonzero.
    static void divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem);
    Poly operator%(const Poly& o) const;
    Poly operator/(const Poly& o) const; // exact or truncating per divmod

    Poly derivative() const;
    bool is_squarefree() const; // gcd(f, f') == 1

    static Poly gcd(Poly a, Poly b); // monic gcd
    // g = gcd(a,b) monic, with g = s*a + t*b.
    static Poly xgcd(const Poly& a, const Poly& b, Poly& s, Poly& t);

    // Same-p embedding into a larger field (prime-subfield coefficients only).
    Poly lift_to(const Field& G) const;

    bool operator==(const Poly& o) const { return field_ == o.field_ && c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    std::string str() const; // human-readable, e.g. "x^3 + 2x + 1"

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    const Field* field_;
    std::vector<std::uint32_t> c_;
};

} // namespace charsum
