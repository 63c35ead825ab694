#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "error.hpp"

namespace charsum {

class Field;

// Value handle for an element of a specific Field. Elements are stored as
// integer codes in [0, q): code = c0 + c1*p + ... + c_{r-1}*p^{r-1} where
// (c0, ..., c_{r-1}) is the coefficient vector, constant term first.
class FieldElement {
  public:
    FieldElement() : field_(nullptr), code_(0) {}
    FieldElement(const Field* f, std::uint32_t code) : field_(f), code_(code) {}

    const Field& field() const { return *field_; }
    const Field* field_ptr() const { return field_; }
    std::uint32_t code() const { return code_; }
    bool is_zero() const { return code_ == 0; }

    std::vector<std::int64_t> coeffs() const;

    FieldElement operator+(FieldElement o) const;
    FieldElement operator-(FieldElement o) const;
    FieldElement operator*(FieldElement o) const;
    FieldElement operator/(FieldElement o) const;
    FieldElement operator-() const;
    FieldElement inv() const;
    FieldElement pow(std::int64_t e) const;

    bool operator==(FieldElement o) const { return field_ == o.field_ && code_ == o.code_; }
    bool operator!=(FieldElement o) const { return !(*this == o); }

  private:
    const Field* field_;
    std::uint32_t code_;
};

enum class ResidueClass { Zero, Residue, NonResidue };

// A fully materialized finite field F_q, q = p^r with p an odd prime.
// Construction picks the lexicographically first monic irreducible modulus
// (r > 1) and the least primitive element, so rebuilding with the same
// (p, r) reproduces generator and discrete-log table bit for bit.
class Field {
  public:
    // limit == 0 means: $CHARSUM_MAX_Q if set, else 10^6.
    static std::unique_ptr<Field> make(std::int64_t p, int r, std::int64_t limit = 0);

    ~Field();
    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

    std::int64_t p() const { return p_; }
    int r() const { return r_; }
    std::int64_t q() const { return q_; }

    // Modulus coefficients c0..c_{r-1} of x^r + c_{r-1}x^{r-1} + ... + c0
    // (empty when r == 1).
    const std::vector<std::int64_t>& modulus() const { return modulus_; }

    FieldElement zero() const { return {this, 0}; }
    FieldElement one() const { return {this, 1}; }
    FieldElement generator() const { return {this, gen_}; }

    FieldElement element(std::int64_t code) const;
    FieldElement from_coeffs(const std::vector<std::int64_t>& c) const;
    // Embeds an integer via the prime subfield (reduces mod p; negatives ok).
    FieldElement from_int(std::int64_t n) const;

    // Code-level arithmetic. Division by zero and logs of zero throw.
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t div(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, std::int64_t e) const;

    std::int64_t dlog(std::uint32_t code) const; // in [0, q-2]
    std::uint32_t exp(std::int64_t j) const;     // generator^j, any j

    // Quadratic character as an exact integer in {-1, 0, +1}.
    int quad(std::uint32_t code) const {
        if (code == 0) return 0;
        return (dlog_[code] & 1) ? -1 : 1;
    }

    ResidueClass nth_residue_class(FieldElement x, std::int64_t n) const;

    // All q elements in the order 0, g^0, g^1, ..., g^{q-2}.
    std::vector<FieldElement> elements() const;

    bool has_square_root(std::uint32_t code) const { return quad(code) >= 0; }
    std::uint32_t sqrt(std::uint32_t code) const; // requires quad(code) >= 0

    // (q-1)-st roots of unity, index j holds e^{2*pi*i*j/(q-1)}. Built on
    // first use; safe under concurrent readers.
    const std::vector<std::complex<double>>& unity_roots() const;

    // Shared numeric cache keyed by caller-chosen 64-bit keys (used for
    // Jacobi sums). Insert-or-read is idempotent and thread-safe.
    bool cache_get(std::uint64_t key, std::array<double, 3>& out) const;
    void cache_put(std::uint64_t key, const std::array<double, 3>& val) const;

  private:
    Field() = default;

    std::int64_t p_ = 0;
    std::int64_t q_ = 0;
    int r_ = 1;
    std::uint32_t gen_ = 0;
    std::vector<std::int64_t> modulus_;   // without the leading 1
    std::vector<std::uint32_t> exp_;      // exp_[j] = g^j, j in [0, q-1)
    std::vector<std::int64_t> dlog_;      // dlog_[code], dlog_[0] = -1

    mutable std::once_flag roots_once_;
    mutable std::vector<std::complex<double>> roots_;

    mutable std::mutex cache_mu_;
    mutable std::unordered_map<std::uint64_t, std::array<double, 3>> cache_;
};

bool is_odd_prime(std::int64_t p);

// Throws MixedFields unless both elements belong to the same field object.
inline void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (a.field_ptr() != b.field_ptr())
        fail(Errc::MixedFields, "elements belong to different fields");
}

} // namespace charsum
