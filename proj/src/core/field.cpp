#include "field.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>

namespace charsum {

namespace {

constexpr std::int64_t kDefaultMaxQ = 1'000'000;

std::int64_t max_q_limit(std::int64_t requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("CHARSUM_MAX_Q")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end != env && v >= 3) return v;
    }
    return kDefaultMaxQ;
}

// Dense polynomials over Z/p used only during field construction.
using ModPoly = std::vector<std::int64_t>;

void trim(ModPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

ModPoly mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& mod, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    ModPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    // reduce by the monic modulus
    std::size_t r = mod.size() - 1;
    for (std::size_t i = c.size(); i-- > r;) {
        std::int64_t t = c[i];
        if (t == 0) continue;
        c[i] = 0;
        for (std::size_t j = 0; j < r; ++j)
            c[i - r + j] = ((c[i - r + j] - t * mod[j]) % p + p) % p;
    }
    c.resize(r);
    trim(c);
    return c;
}

// Remainder of a by b (b monic not required), coefficients mod p.
ModPoly rem(ModPoly a, const ModPoly& b, std::int64_t p) {
    trim(a);
    std::int64_t lead = b.back();
    std::int64_t lead_inv = 1;
    {
        // Fermat inverse; p prime.
        std::int64_t e = p - 2, base = lead % p, acc = 1;
        while (e) {
            if (e & 1) acc = acc * base % p;
            base = base * base % p;
            e >>= 1;
        }
        lead_inv = acc;
    }
    while (a.size() >= b.size()) {
        std::int64_t f = a.back() * lead_inv % p;
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = ((a[shift + i] - f * b[i]) % p + p) % p;
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

// Monic degree-r polynomial is irreducible over F_p iff no monic polynomial
// of degree 1..r/2 divides it. Exhaustive at desk scale.
bool is_irreducible(const ModPoly& f, std::int64_t p) {
    int r = static_cast<int>(f.size()) - 1;
    for (int d = 1; 2 * d <= r; ++d) {
        std::int64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (std::int64_t code = 0; code < count; ++code) {
            ModPoly g(d + 1, 0);
            std::int64_t c = code;
            for (int i = 0; i < d; ++i) {
                g[i] = c % p;
                c /= p;
            }
            g[d] = 1;
            if (rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

} // namespace

bool is_odd_prime(std::int64_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (std::int64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

std::unique_ptr<Field> Field::make(std::int64_t p, int r, std::int64_t limit) {
    if (!is_odd_prime(p))
        fail(Errc::CompositeOrEvenP, "p = " + std::to_string(p) + " is not an odd prime");
    if (r < 1) fail(Errc::InvalidArgument, "r must be positive");

    std::int64_t max_q = max_q_limit(limit);
    std::int64_t q = 1;
    for (int i = 0; i < r; ++i) {
        q *= p;
        if (q > max_q)
            fail(Errc::FieldTooLarge, "q = " + std::to_string(p) + "^" + std::to_string(r) +
                                          " exceeds limit " + std::to_string(max_q));
    }

    auto F = std::unique_ptr<Field>(new Field());
    F->p_ = p;
    F->r_ = r;
    F->q_ = q;

    ModPoly mod;
    if (r > 1) {
        // x^r + (lower part encoded by `code`), scanned in increasing code
        // order = lexicographic from the top coefficient down.
        for (std::int64_t code = 0;; ++code) {
            if (code >= q) fail(Errc::InvalidArgument, "no irreducible modulus found");
            ModPoly f(r + 1, 0);
            std::int64_t c = code;
            for (int i = 0; i < r; ++i) {
                f[i] = c % p;
                c /= p;
            }
            f[r] = 1;
            if (is_irreducible(f, p)) {
                mod = f;
                break;
            }
        }
        F->modulus_.assign(mod.begin(), mod.end() - 1);
    }

    auto decode = [&](std::uint32_t code) {
        ModPoly v;
        std::int64_t c = code;
        while (c) {
            v.push_back(c % p);
            c /= p;
        }
        return v;
    };
    auto encode = [&](const ModPoly& v) {
        std::int64_t code = 0;
        for (std::size_t i = v.size(); i-- > 0;) code = code * p + v[i];
        return static_cast<std::uint32_t>(code);
    };
    auto raw_mul = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
        if (a == 0 || b == 0) return 0;
        if (r == 1) return static_cast<std::uint32_t>(std::int64_t(a) * b % p);
        return encode(mulmod(decode(a), decode(b), mod, p));
    };
    auto raw_pow = [&](std::uint32_t a, std::int64_t e) -> std::uint32_t {
        std::uint32_t acc = 1, base = a;
        while (e) {
            if (e & 1) acc = raw_mul(acc, base);
            base = raw_mul(base, base);
            e >>= 1;
        }
        return acc;
    };

    // Least element (in code order) of multiplicative order q-1.
    auto factors = prime_factors(q - 1);
    std::uint32_t gen = 0;
    for (std::int64_t cand = 2; cand < q; ++cand) {
        auto c = static_cast<std::uint32_t>(cand);
        bool primitive = true;
        for (auto ell : factors) {
            if (raw_pow(c, (q - 1) / ell) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            gen = c;
            break;
        }
    }
    F->gen_ = gen;

    F->exp_.resize(q - 1);
    F->dlog_.assign(q, -1);
    std::uint32_t acc = 1;
    for (std::int64_t j = 0; j < q - 1; ++j) {
        F->exp_[j] = acc;
        F->dlog_[acc] = j;
        acc = raw_mul(acc, gen);
    }
    return F;
}

Field::~Field() = default;

FieldElement Field::element(std::int64_t code) const {
    if (code < 0 || code >= q_) fail(Errc::InvalidArgument, "element code out of range");
    return {this, static_cast<std::uint32_t>(code)};
}

FieldElement Field::from_coeffs(const std::vector<std::int64_t>& c) const {
    if (static_cast<int>(c.size()) > r_)
        fail(Errc::InvalidArgument, "coefficient vector longer than field degree");
    std::int64_t code = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        std::int64_t ci = ((c[i] % p_) + p_) % p_;
        code = code * p_ + ci;
    }
    return {this, static_cast<std::uint32_t>(code)};
}

FieldElement Field::from_int(std::int64_t n) const {
    std::int64_t c = ((n % p_) + p_) % p_;
    return {this, static_cast<std::uint32_t>(c)};
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
    if (r_ == 1) {
        std::int64_t s = std::int64_t(a) + b;
        if (s >= p_) s -= p_;
        return static_cast<std::uint32_t>(s);
    }
    std::int64_t ca = a, cb = b, code = 0, mult = 1;
    for (int i = 0; i < r_; ++i) {
        std::int64_t s = ca % p_ + cb % p_;
        if (s >= p_) s -= p_;
        code += s * mult;
        mult *= p_;
        ca /= p_;
        cb /= p_;
    }
    return static_cast<std::uint32_t>(code);
}

std::uint32_t Field::neg(std::uint32_t a) const {
    if (r_ == 1) return a == 0 ? 0 : static_cast<std::uint32_t>(p_ - a);
    std::int64_t ca = a, code = 0, mult = 1;
    for (int i = 0; i < r_; ++i) {
        std::int64_t c = ca % p_;
        code += (c == 0 ? 0 : p_ - c) * mult;
        mult *= p_;
        ca /= p_;
    }
    return static_cast<std::uint32_t>(code);
}

std::uint32_t Field::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    std::int64_t j = dlog_[a] + dlog_[b];
    if (j >= q_ - 1) j -= q_ - 1;
    return exp_[j];
}

std::uint32_t Field::inv(std::uint32_t a) const {
    if (a == 0) fail(Errc::DivisionByZero, "inverse of zero");
    std::int64_t j = dlog_[a];
    return exp_[j == 0 ? 0 : q_ - 1 - j];
}

std::uint32_t Field::div(std::uint32_t a, std::uint32_t b) const {
    if (b == 0) fail(Errc::DivisionByZero, "division by zero");
    return mul(a, inv(b));
}

std::uint32_t Field::pow(std::uint32_t a, std::int64_t e) const {
    if (a == 0) {
        if (e > 0) return 0;
        if (e == 0) return 1;
        fail(Errc::DivisionByZero, "0 raised to a negative power");
    }
    std::int64_t m = q_ - 1;
    std::int64_t j = dlog_[a] % m * (e % m) % m;
    j = ((j % m) + m) % m;
    return exp_[j];
}

std::int64_t Field::dlog(std::uint32_t code) const {
    if (code == 0) fail(Errc::LogOfZero, "discrete log of zero");
    return dlog_[code];
}

std::uint32_t Field::exp(std::int64_t j) const {
    std::int64_t m = q_ - 1;
    j = ((j % m) + m) % m;
    return exp_[j];
}

ResidueClass Field::nth_residue_class(FieldElement x, std::int64_t n) const {
    if (n <= 0 || (q_ - 1) % n != 0)
        fail(Errc::BadModulus, "n = " + std::to_string(n) + " does not divide q-1");
    if (x.field_ptr() != this) fail(Errc::MixedFields, "element of another field");
    if (x.is_zero()) return ResidueClass::Zero;
    return dlog_[x.code()] % n == 0 ? ResidueClass::Residue : ResidueClass::NonResidue;
}

std::vector<FieldElement> Field::elements() const {
    std::vector<FieldElement> out;
    out.reserve(q_);
    out.emplace_back(this, 0u);
    for (std::int64_t j = 0; j < q_ - 1; ++j) out.emplace_back(this, exp_[j]);
    return out;
}

std::uint32_t Field::sqrt(std::uint32_t code) const {
    if (code == 0) return 0;
    std::int64_t j = dlog_[code];
    if (j & 1) fail(Errc::InvalidArgument, "element is not a square");
    return exp_[j / 2];
}

const std::vector<std::complex<double>>& Field::unity_roots() const {
    std::call_once(roots_once_, [this] {
        std::int64_t m = q_ - 1;
        roots_.resize(m);
        for (std::int64_t j = 0; j < m; ++j) {
            double theta = 2.0 * std::numbers::pi * double(j) / double(m);
            roots_[j] = {std::cos(theta), std::sin(theta)};
        }
    });
    return roots_;
}

bool Field::cache_get(std::uint64_t key, std::array<double, 3>& out) const {
    std::lock_guard<std::mutex> lk(cache_mu_);
    auto it = cache_.find(key);
    if (it == cache_.end()) return false;
    out = it->second;
    return true;
}

void Field::cache_put(std::uint64_t key, const std::array<double, 3>& val) const {
    std::lock_guard<std::mutex> lk(cache_mu_);
    cache_.emplace(key, val);
}

std::vector<std::int64_t> FieldElement::coeffs() const {
    std::vector<std::int64_t> v(field_->r(), 0);
    std::int64_t c = code_;
    for (int i = 0; i < field_->r(); ++i) {
        v[i] = c % field_->p();
        c /= field_->p();
    }
    return v;
}

FieldElement FieldElement::operator+(FieldElement o) const {
    require_same_field(*this, o);
    return {field_, field_->add(code_, o.code_)};
}

FieldElement FieldElement::operator-(FieldElement o) const {
    require_same_field(*this, o);
    return {field_, field_->sub(code_, o.code_)};
}

FieldElement FieldElement::operator*(FieldElement o) const {
    require_same_field(*this, o);
    return {field_, field_->mul(code_, o.code_)};
}

FieldElement FieldElement::operator/(FieldElement o) const {
    require_same_field(*this, o);
    return {field_, field_->div(code_, o.code_)};
}

FieldElement FieldElement::operator-() const { return {field_, field_->neg(code_)}; }

FieldElement FieldElement::inv() const { return {field_, field_->inv(code_)}; }

FieldElement FieldElement::pow(std::int64_t e) const { return {field_, field_->pow(code_, e)}; }

} // namespace charsum
