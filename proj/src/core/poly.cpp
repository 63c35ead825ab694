#include "poly.hpp"

#include <algorithm>

namespace charsum {

FieldElement Poly::eval(FieldElement x) const {
    const Field& F = *field_;
    std::uint32_t acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = F.add(F.mul(acc, x.code()), c_[i]);
    return {field_, acc};
}

Poly Poly::operator+(const Poly& o) const {
    const Field& F = *field_;
    std::vector<std::uint32_t> v(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::uint32_t a = i < c_.size() ? c_[i] : 0;
        std::uint32_t b = i < o.c_.size() ? o.c_[i] : 0;
        v[i] = F.add(a, b);
    }
    return Poly(F, std::move(v));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    const Field& F = *field_;
    std::vector<std::uint32_t> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = F.neg(c_[i]);
    return Poly(F, std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
    const Field& F = *field_;
    if (is_zero() || o.is_zero()) return Poly(F);
    std::vector<std::uint32_t> v(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            v[i + j] = F.add(v[i + j], F.mul(c_[i], o.c_[j]));
    }
    return Poly(F, std::move(v));
}

Poly Poly::scaled(FieldElement s) const {
    const Field& F = *field_;
    std::vector<std::uint32_t> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = F.mul(c_[i], s.code());
    return Poly(F, std::move(v));
}

Poly Poly::monic() const {
    if (is_zero()) fail(Errc::InvalidArgument, "monic() of zero polynomial");
    if (is_monic()) return *this;
    return scaled(lead().inv());
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem) {
    const Field& F = *a.field_;
    if (b.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
    rem = a;
    quot = Poly(F);
    if (a.deg() < b.deg()) return;
    std::vector<std::uint32_t> qv(a.deg() - b.deg() + 1, 0);
    std::uint32_t lead_inv = F.inv(b.c_.back());
    while (!rem.is_zero() && rem.deg() >= b.deg()) {
        int shift = rem.deg() - b.deg();
        std::uint32_t f = F.mul(rem.c_.back(), lead_inv);
        qv[shift] = f;
        for (std::size_t i = 0; i < b.c_.size(); ++i)
            rem.c_[shift + i] = F.sub(rem.c_[shift + i], F.mul(f, b.c_[i]));
        rem.trim();
    }
    quot = Poly(F, std::move(qv));
}

Poly Poly::operator%(const Poly& o) const {
    Poly q, r;
    divmod(*this, o, q, r);
    return r;
}

Poly Poly::operator/(const Poly& o) const {
    Poly q, r;
    divmod(*this, o, q, r);
    return q;
}

Poly Poly::derivative() const {
    const Field& F = *field_;
    if (c_.size() <= 1) return Poly(F);
    std::vector<std::uint32_t> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
        FieldElement k = F.from_int(static_cast<std::int64_t>(i));
        v[i - 1] = F.mul(c_[i], k.code());
    }
    return Poly(F, std::move(v));
}

bool Poly::is_squarefree() const { return gcd(*this, derivative()).is_one(); }

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

Poly Poly::xgcd(const Poly& a, const Poly& b, Poly& s, Poly& t) {
    const Field& F = *a.field_;
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::one(F), s1 = Poly(F);
    Poly t0 = Poly(F), t1 = Poly::one(F);
    while (!r1.is_zero()) {
        Poly q, r;
        divmod(r0, r1, q, r);
        Poly s2 = s0 - q * s1;
        Poly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) {
        s = Poly(F);
        t = Poly(F);
        return r0;
    }
    FieldElement li = r0.lead().inv();
    s = s0.scaled(li);
    t = t0.scaled(li);
    return r0.scaled(li);
}

Poly Poly::lift_to(const Field& G) const {
    if (G.p() != field_->p()) fail(Errc::MixedFields, "lift requires equal characteristic");
    std::vector<std::uint32_t> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] >= G.p())
            fail(Errc::InvalidArgument, "lift only defined for prime-subfield coefficients");
        v[i] = c_[i];
    }
    return Poly(G, std::move(v));
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = deg(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        if (!out.empty()) out += " + ";
        std::string coef;
        if (field_->r() == 1) {
            coef = std::to_string(c_[i]);
        } else {
            auto cs = FieldElement(field_, c_[i]).coeffs();
            coef = "[";
            for (std::size_t j = 0; j < cs.size(); ++j) {
                if (j) coef += ",";
                coef += std::to_string(cs[j]);
            }
            coef += "]";
        }
        if (i == 0) {
            out += coef;
        } else {
            if (coef != "1") out += coef;
            out += (i == 1) ? "x" : "x^" + std::to_string(i);
        }
    }
    return out;
}

} // namespace charsum
