#include "cantor.hpp"

namespace charsum {

JacobianArith::JacobianArith(const Field& F, Poly f) : field_(&F), f_(std::move(f)) {
    if (f_.field_ptr() != &F) fail(Errc::MixedFields, "polynomial over another field");
    if (f_.deg() % 2 == 0) fail(Errc::EvenDegreeModel, "group law needs an odd-degree model");
    if (f_.deg() < 5) fail(Errc::InvalidArgument, "genus must be at least 2");
    if (!f_.is_monic()) fail(Errc::InvalidArgument, "f must be monic");
    if (!f_.is_squarefree()) fail(Errc::SingularModel, "f has a repeated root");
    genus_ = (f_.deg() - 1) / 2;
    if (genus_ > 3) fail(Errc::UnsupportedGenus, "genus above 3 not supported");
    for (std::int64_t x = 0; x < F.q(); ++x) {
        auto c = static_cast<std::uint32_t>(x);
        if (F.quad(f_.eval(F.element(x)).code()) >= 0) affine_x_.push_back(c);
    }
}

MumfordDivisor JacobianArith::identity() const { return {Poly::one(*field_), Poly(*field_)}; }

bool JacobianArith::is_identity(const MumfordDivisor& d) const {
    return d.u.is_one() && d.v.is_zero();
}

bool JacobianArith::is_valid(const MumfordDivisor& d) const {
    if (d.u.is_zero() || !d.u.is_monic()) return false;
    if (d.u.deg() > genus_) return false;
    if (!d.v.is_zero() && d.v.deg() >= d.u.deg()) return false;
    return ((d.v * d.v - f_) % d.u).is_zero();
}

MumfordDivisor JacobianArith::neg(const MumfordDivisor& d) const {
    return {d.u, (-d.v) % d.u};
}

MumfordDivisor JacobianArith::reduce(Poly u, Poly v) const {
    while (u.deg() > genus_) {
        Poly u2 = (f_ - v * v) / u;
        u2 = u2.monic();
        Poly v2 = (-v) % u2;
        u = std::move(u2);
        v = std::move(v2);
    }
    return {u.monic(), v};
}

MumfordDivisor JacobianArith::add(const MumfordDivisor& a, const MumfordDivisor& b) const {
    // Composition: d = gcd(u1, u2, v1+v2) = s1 u1 + s2 u2 + s3 (v1+v2).
    Poly e1, e2;
    Poly d1 = Poly::xgcd(a.u, b.u, e1, e2);
    Poly c1, c2;
    Poly d = Poly::xgcd(d1, a.v + b.v, c1, c2);
    Poly s1 = c1 * e1;
    Poly s2 = c1 * e2;
    Poly u = (a.u * b.u) / (d * d);
    Poly v = (s1 * a.u * b.v + s2 * b.u * a.v + c2 * (a.v * b.v + f_)) / d % u;
    return reduce(std::move(u), std::move(v));
}

MumfordDivisor JacobianArith::scalar_mul(const MumfordDivisor& d, std::uint64_t k) const {
    MumfordDivisor acc = identity();
    MumfordDivisor base = d;
    while (k) {
        if (k & 1) acc = add(acc, base);
        base = add(base, base);
        k >>= 1;
    }
    return acc;
}

MumfordDivisor JacobianArith::random_point_divisor(std::mt19937_64& rng) const {
    const Field& F = *field_;
    if (affine_x_.empty()) fail(Errc::InvalidArgument, "model has no affine rational points");
    std::uniform_int_distribution<std::size_t> dist(0, affine_x_.size() - 1);
    FieldElement x0 = F.element(affine_x_[dist(rng)]);
    FieldElement fx = f_.eval(x0);
    FieldElement y0 = F.element(F.sqrt(fx.code()));
    // flip the sign of y half the time for symmetric sampling
    if (!y0.is_zero() && (rng() & 1)) y0 = -y0;
    Poly u = Poly::linear_root(F, x0);
    Poly v = y0.is_zero() ? Poly(F) : Poly(F, {y0.code()});
    return {u, v};
}

MumfordDivisor JacobianArith::random_divisor(std::mt19937_64& rng) const {
    MumfordDivisor acc = random_point_divisor(rng);
    for (int i = 1; i < genus_; ++i) acc = add(acc, random_point_divisor(rng));
    return acc;
}

AnnihilationResult jacobian_annihilation_check(const Field& Fp, const Poly& f, int trials,
                                               std::uint64_t seed) {
    JacobianArith J(Fp, f);
    auto counts = extension_counts(Fp, f, J.genus());
    AnnihilationResult res;
    res.order = jacobian_order(Fp.p(), counts, J.genus());
    res.trials = J.has_affine_points() ? trials : 0;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < res.trials; ++i) {
        MumfordDivisor d = J.random_divisor(rng);
        if (!J.is_identity(J.scalar_mul(d, static_cast<std::uint64_t>(res.order)))) res.failures++;
    }
    return res;
}

} // namespace charsum
