#pragma once

#include <cstdint>
#include <random>

#include "curves.hpp"
#include "poly.hpp"

namespace charsum {

// Reduced divisor class in Mumford form: u monic with deg u <= g,
// deg v < deg u, and u | v^2 - f.
struct MumfordDivisor {
    Poly u;
    Poly v;
};

// Jacobian arithmetic on an odd-degree (imaginary) model y^2 = f(x),
// f monic squarefree, genus 2 or 3. Composition and reduction follow
// Cantor's algorithm.
class JacobianArith {
  public:
    JacobianArith(const Field& F, Poly f);

    const Field& field() const { return *field_; }
    const Poly& f() const { return f_; }
    int genus() const { return genus_; }

    MumfordDivisor identity() const;
    bool is_identity(const MumfordDivisor& d) const;
    bool is_valid(const MumfordDivisor& d) const;

    MumfordDivisor neg(const MumfordDivisor& d) const;
    MumfordDivisor add(const MumfordDivisor& a, const MumfordDivisor& b) const;
    MumfordDivisor scalar_mul(const MumfordDivisor& d, std::uint64_t k) const;

    // Tiny fields can leave a model without affine rational points; random
    // divisor generation needs at least one.
    bool has_affine_points() const { return !affine_x_.empty(); }

    // Degree-1 divisor above a random affine point (seeded, deterministic).
    MumfordDivisor random_point_divisor(std::mt19937_64& rng) const;
    // Sum of `genus` random point divisors; generic element of the group.
    MumfordDivisor random_divisor(std::mt19937_64& rng) const;

  private:
    MumfordDivisor reduce(Poly u, Poly v) const;

    const Field* field_;
    Poly f_;
    int genus_;
    std::vector<std::uint32_t> affine_x_; // x with f(x) a square (or zero)
};

// scalar_mul(d, order) == identity for `trials` random divisors, where
// order = jacobian_order over the count tower of the same model. `trials`
// reports how many divisors were actually exercised (0 when the model has
// no affine rational points to sample from).
struct AnnihilationResult {
    std::int64_t order = 0;
    int trials = 0;
    int failures = 0;
    bool ok() const { return failures == 0; }
};

AnnihilationResult jacobian_annihilation_check(const Field& Fp, const Poly& f, int trials,
                                               std::uint64_t seed);

} // namespace charsum
