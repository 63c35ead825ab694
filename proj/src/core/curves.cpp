#include "curves.hpp"

#include <cmath>

#include "char_sums.hpp"
#include "hypergeometric.hpp"

namespace charsum {

namespace {

std::int64_t isqrt(std::int64_t n) {
    auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (s * s > n) --s;
    while ((s + 1) * (s + 1) <= n) ++s;
    return s;
}

bool perfect_square(std::int64_t n, std::int64_t& root) {
    if (n < 0) return false;
    root = isqrt(n);
    return root * root == n;
}

void require_prime_field(const Field& F, const char* what) {
    if (F.r() != 1) fail(Errc::InvalidArgument, std::string(what) + " is stated over prime fields");
}

} // namespace

CurveSpec make_curve(const Field& F, Poly f) {
    if (f.field_ptr() != &F) fail(Errc::MixedFields, "polynomial over another field");
    if (f.deg() < 3) fail(Errc::InvalidArgument, "deg f must be at least 3");
    if (!f.is_monic()) fail(Errc::InvalidArgument, "f must be monic");
    CurveSpec c{&F, std::move(f), 0, 0};
    c.genus = (c.f.deg() - 1) / 2;
    c.infinity_points = (c.f.deg() % 2 == 1) ? 1 : 2;
    return c;
}

std::int64_t eq1_count(const Field& F, const Poly& f) {
    if (f.deg() < 1) fail(Errc::InvalidArgument, "f must be nonconstant");
    std::int64_t s = 0;
    for (std::int64_t x = 0; x < F.q(); ++x) s += F.quad(f.eval(F.element(x)).code());
    std::int64_t r = (f.deg() % 2 == 1) ? 1 : 2;
    return r + F.q() + s;
}

std::int64_t count_points(const CurveSpec& c) { return eq1_count(*c.field, c.f); }

std::int64_t count_points_xy(const Field& F, const Poly& f) {
    std::int64_t affine = 0;
    for (std::int64_t x = 0; x < F.q(); ++x) {
        FieldElement fx = f.eval(F.element(x));
        for (std::int64_t y = 0; y < F.q(); ++y) {
            FieldElement ye = F.element(y);
            if (ye * ye == fx) ++affine;
        }
    }
    std::int64_t r = (f.deg() % 2 == 1) ? 1 : 2;
    return r + affine;
}

FrobeniusTrace trace_legendre(const Field& F, FieldElement lambda) {
    if (lambda.is_zero() || lambda == F.one())
        fail(Errc::SingularLambda, "lambda must avoid {0, 1}");
    std::int64_t s = 0;
    for (std::int64_t xi = 0; xi < F.q(); ++xi) {
        FieldElement x = F.element(xi);
        s += F.quad((x * (x - F.one()) * (x - lambda)).code());
    }
    return {-s};
}

FrobeniusTrace trace_clausen(const Field& F, FieldElement lambda) {
    if (lambda.is_zero() || lambda == -F.one())
        fail(Errc::SingularLambda, "lambda must avoid {0, -1}");
    std::int64_t s = 0;
    for (std::int64_t xi = 0; xi < F.q(); ++xi) {
        FieldElement x = F.element(xi);
        s += F.quad((x - F.one()).code()) * F.quad((x * x + lambda).code());
    }
    return {-s};
}

HasseWeilResult hasse_weil_check(const CurveSpec& c) {
    if (!c.f.is_squarefree()) fail(Errc::SingularModel, "f has a repeated root");
    std::int64_t n = count_points(c);
    double bound = 2.0 * c.genus * std::sqrt(static_cast<double>(c.field->q()));
    double margin = bound - std::llabs(n - c.field->q() - 1);
    return {n, margin, margin >= 0.0};
}

std::int64_t jacobian_order(std::int64_t p, const std::vector<std::int64_t>& counts, int genus) {
    if (genus != 2 && genus != 3)
        fail(Errc::UnsupportedGenus, "genus must be 2 or 3, got " + std::to_string(genus));
    if (static_cast<int>(counts.size()) < genus)
        fail(Errc::InvalidArgument, "need counts over F_p .. F_{p^genus}");
    std::int64_t n1 = counts[0];
    std::int64_t n2 = counts[1];
    if (genus == 2) {
        std::int64_t num = n1 * n1 + n2;
        if (num % 2 != 0) fail(Errc::NonIntegralResult, "(N1^2+N2)/2 is not an integer");
        return num / 2 - p;
    }
    std::int64_t n3 = counts[2];
    std::int64_t num = n1 * n1 * n1 + 3 * n1 * n2 + 2 * n3;
    if (num % 6 != 0) fail(Errc::NonIntegralResult, "genus-3 numerator not divisible by 6");
    return num / 6 - p * n1;
}

std::vector<std::int64_t> extension_counts(const Field& Fp, const Poly& f, int upto) {
    require_prime_field(Fp, "the extension tower");
    std::vector<std::int64_t> out;
    out.push_back(eq1_count(Fp, f));
    for (int k = 2; k <= upto; ++k) {
        auto Fk = Field::make(Fp.p(), k);
        out.push_back(eq1_count(*Fk, f.lift_to(*Fk)));
    }
    return out;
}

FamilyCountResult count_family_mm(const Field& F, std::int64_t m, FieldElement a,
                                  FieldElement b) {
    if (m < 1) fail(Errc::InvalidArgument, "m must be positive");
    if (a.is_zero() || b.is_zero()) fail(Errc::ZeroParameter, "a, b must be nonzero");

    Poly xm_a = Poly(F, [&] {
        std::vector<std::uint32_t> v(m + 1, 0);
        v[0] = a.code();
        v[m] = 1;
        return v;
    }());
    Poly xm_b = Poly(F, [&] {
        std::vector<std::uint32_t> v(m + 1, 0);
        v[0] = b.code();
        v[m] = 1;
        return v;
    }());

    FamilyCountResult out;
    Poly fc = xm_a * xm_b;
    out.count_c = eq1_count(F, fc);
    out.count_cprime = eq1_count(F, Poly::x(F) * fc);
    out.psi = brute_pair_sum(F, m, m, a, b, PairFlavor::Psi);
    out.phi = brute_pair_sum(F, m, m, a, b, PairFlavor::Phi);

    if ((F.q() - 1) % (2 * m) == 0) {
        out.hyper_available = true;
        double base = 2.0 + static_cast<double>(F.q());
        auto hp = pair_sum_hyper_mm(F, m, a, b, PairFlavor::Psi);
        out.count_c_via_hyper = hp.via_2f1_sum + ComplexValue::exact(base);
        auto hq = pair_sum_hyper_mm(F, m, a, b, PairFlavor::Phi);
        out.count_cprime_via_hyper =
            hq.via_2f1_sum + ComplexValue::exact(1.0 + static_cast<double>(F.q()));
    }
    return out;
}

Psi24CurveResult count_psi24_curve(const Field& F, FieldElement a, FieldElement b) {
    FieldElement lambda = clausen_lambda(F, a, b);

    Poly f = Poly(F, {a.code(), 0, 1}) * Poly(F, {b.code(), 0, 0, 0, 1});
    Psi24CurveResult out;
    out.count = eq1_count(F, f);

    std::int64_t t1 = trace_clausen(F, lambda).value;
    std::int64_t t2 = trace_clausen(F, lambda.inv()).value;
    int sb = F.quad(F.neg(b.code()));
    int sa = F.quad(F.neg(a.code()));
    out.via_traces = 1 + F.q() - sb * t1 - sa * t2;

    if ((F.q() - 1) % 4 == 0) {
        MultChar chi4 = MultChar::of_order(F, 4);
        MultChar eps = MultChar::trivial(F);
        ComplexValue fa = hyper_2f1(chi4, chi4.pow(3), eps, -lambda);
        ComplexValue fb = hyper_2f1(chi4, chi4.pow(3), eps, -(lambda.inv()));
        ComplexValue combo = fa * static_cast<double>(sb) + fb * static_cast<double>(sa);
        out.bound_available = true;
        out.bound_value = combo.abs();
        out.bound_limit = 4.0 / std::sqrt(static_cast<double>(F.q()));
        out.bound_ok = out.bound_value <= out.bound_limit + combo.err;
    }
    return out;
}

QFRepresentation represent_prime(std::int64_t p, QuadForm form) {
    QFRepresentation rep;
    rep.form = form;
    auto search = [&](std::int64_t mult, bool first_odd) -> bool {
        for (std::int64_t u = first_odd ? 1 : 0; u * u <= p; u += first_odd ? 2 : 1) {
            std::int64_t rem = p - u * u;
            if (rem % mult != 0) continue;
            std::int64_t v;
            if (perfect_square(rem / mult, v)) {
                rep.first = u;
                rep.second = v;
                return true;
            }
        }
        return false;
    };

    switch (form) {
    case QuadForm::TwoSquares:
    case QuadForm::TwoSquaresXOdd:
        if (p % 4 != 1) fail(Errc::BadResidueClass, "p must be 1 (mod 4)");
        if (!search(1, true)) fail(Errc::NoRepresentation, "no two-square representation");
        if (form == QuadForm::TwoSquares) {
            rep.first_signed = (rep.first % 4 == 3) ? rep.first : -rep.first;
            rep.label_first = "c4";
            rep.label_second = "d4";
            rep.normalization = "c4 = -1 (mod 4)";
            rep.sign_ambiguity = true; // d4
        } else {
            rep.first_signed = rep.first;
            rep.label_first = "x";
            rep.label_second = "y";
            rep.normalization = "x odd";
            rep.sign_ambiguity = true; // both signs open
        }
        break;
    case QuadForm::SquarePlus3Square:
        if (p % 3 != 1) fail(Errc::BadResidueClass, "p must be 1 (mod 6)");
        if (!search(3, false)) fail(Errc::NoRepresentation, "no a^2+3b^2 representation");
        rep.first_signed = (rep.first % 3 == 2) ? rep.first : -rep.first;
        rep.label_first = "a3";
        rep.label_second = "b3";
        rep.normalization = "a3 = -1 (mod 3)";
        rep.sign_ambiguity = true; // eta3
        break;
    case QuadForm::SquarePlus2Square:
        if (p % 8 != 1) fail(Errc::BadResidueClass, "p must be 1 (mod 8)");
        if (!search(2, true)) fail(Errc::NoRepresentation, "no a^2+2b^2 representation");
        rep.first_signed = (rep.first % 4 == 3) ? rep.first : -rep.first;
        rep.label_first = "a8";
        rep.label_second = "b8";
        rep.normalization = "a8 = -1 (mod 4)";
        rep.sign_ambiguity = true; // b8
        break;
    }
    return rep;
}

namespace {

std::string residue_case_of(const Field& F, FieldElement a, std::int64_t depth) {
    // depth 4: quartic/quadratic split; depth 8 adds the octic level;
    // depth 3: cubic split.
    if (depth == 3)
        return F.nth_residue_class(a, 3) == ResidueClass::Residue ? "cubic" : "noncubic";
    if (F.nth_residue_class(a, 2) != ResidueClass::Residue) return "nonresidue";
    if (depth >= 4 && F.nth_residue_class(a, 4) != ResidueClass::Residue) return "quadratic";
    if (depth >= 8 && F.nth_residue_class(a, 8) != ResidueClass::Residue) return "quartic";
    return depth >= 8 ? "octic" : "quartic";
}

Poly family_poly(const Field& F, int n, FieldElement a, bool with_x) {
    std::vector<std::uint32_t> v(n + 1, 0);
    v[0] = a.code();
    v[n] = 1;
    Poly f(F, std::move(v));
    return with_x ? Poly::x(F) * f : f;
}

} // namespace

BerndtResult berndt_count(const Field& F, BerndtFamily fam, FieldElement a) {
    require_prime_field(F, "the explicit count formula");
    if (a.is_zero()) fail(Errc::ZeroParameter, "a must be nonzero");
    std::int64_t p = F.p();
    BerndtResult out;

    switch (fam) {
    case BerndtFamily::C4:
    case BerndtFamily::C2Prime: {
        if (p % 4 != 1) fail(Errc::BadResidueClass, "needs p = 1 (mod 4)");
        auto rep = represent_prime(p, QuadForm::TwoSquares);
        std::int64_t c4 = rep.first_signed, d4 = rep.second;
        out.residue_case = residue_case_of(F, a, 4);
        if (out.residue_case == "quartic")
            out.candidates = {1 + p + 2 * c4};
        else if (out.residue_case == "quadratic")
            out.candidates = {1 + p - 2 * c4};
        else
            out.candidates = {1 + p + 2 * d4, 1 + p - 2 * d4};
        out.brute = eq1_count(F, fam == BerndtFamily::C4 ? family_poly(F, 4, a, false)
                                                         : family_poly(F, 2, a, true));
        break;
    }
    case BerndtFamily::C4Prime:
    case BerndtFamily::C8: {
        if (p % 8 != 1) fail(Errc::BadResidueClass, "needs p = 1 (mod 8)");
        auto rep2 = represent_prime(p, QuadForm::TwoSquares);
        auto rep8 = represent_prime(p, QuadForm::SquarePlus2Square);
        std::int64_t c4 = rep2.first_signed, d4 = rep2.second;
        std::int64_t a8 = rep8.first_signed, b8 = rep8.second;
        std::int64_t e8 = ((p - 1) / 8) % 2 == 0 ? 1 : -1;
        out.residue_case = residue_case_of(F, a, 8);
        if (fam == BerndtFamily::C4Prime) {
            if (out.residue_case == "octic")
                out.candidates = {1 + p + 4 * e8 * a8};
            else if (out.residue_case == "quartic")
                out.candidates = {1 + p - 4 * e8 * a8};
            else if (out.residue_case == "quadratic")
                out.candidates = {1 + p};
            else
                out.candidates = {1 + p + 4 * b8, 1 + p - 4 * b8};
            out.brute = eq1_count(F, family_poly(F, 4, a, true));
        } else {
            if (out.residue_case == "octic")
                out.candidates = {1 + p + 2 * c4 + 4 * e8 * a8};
            else if (out.residue_case == "quartic")
                out.candidates = {1 + p + 2 * c4 - 4 * e8 * a8};
            else if (out.residue_case == "quadratic")
                out.candidates = {1 + p - 2 * c4};
            else
                out.candidates = {1 + p + 2 * d4 + 4 * b8, 1 + p + 2 * d4 - 4 * b8,
                                  1 + p - 2 * d4 + 4 * b8, 1 + p - 2 * d4 - 4 * b8};
            out.brute = eq1_count(F, family_poly(F, 8, a, false));
        }
        break;
    }
    case BerndtFamily::C6: {
        if (p % 6 != 1) fail(Errc::BadResidueClass, "needs p = 1 (mod 6)");
        auto rep = represent_prime(p, QuadForm::SquarePlus3Square);
        std::int64_t a3 = rep.first_signed, b3 = rep.second;
        int s = F.quad(a.code());
        out.residue_case = residue_case_of(F, a, 3);
        if (out.residue_case == "cubic")
            out.candidates = {1 + p + 2 * (1 + s) * a3};
        else
            out.candidates = {1 + p - s * (a3 + 3 * b3) - (a3 - 3 * b3),
                              1 + p - s * (a3 - 3 * b3) - (a3 + 3 * b3)};
        out.brute = eq1_count(F, family_poly(F, 6, a, false));
        break;
    }
    }

    for (std::size_t i = 0; i < out.candidates.size(); ++i) {
        if (out.candidates[i] == out.brute) {
            out.brute_in_candidates = true;
            out.matched_index = static_cast<int>(i);
            break;
        }
    }
    return out;
}

BerndtCase1Formulas berndt_case1_formulas(const Field& F, FieldElement a) {
    require_prime_field(F, "the explicit count formula");
    if (a.is_zero()) fail(Errc::ZeroParameter, "a must be nonzero");
    if (F.p() % 6 != 1) fail(Errc::BadResidueClass, "needs p = 1 (mod 6)");
    std::int64_t p = F.p();
    auto rep = represent_prime(p, QuadForm::SquarePlus3Square);
    std::int64_t a3 = rep.first_signed, b3 = rep.second;
    int s = F.quad(a.code());

    BerndtCase1Formulas out;
    if (residue_case_of(F, a, 3) == "cubic") {
        out.display1 = {1 + p + 2 * s * a3};
        out.display3 = {1 + p + 2 * a3};
    } else {
        out.display1 = {1 + p - s * (a3 + 3 * b3), 1 + p - s * (a3 - 3 * b3)};
        out.display3 = {1 + p - (a3 - 3 * b3), 1 + p - (a3 + 3 * b3)};
    }

    out.brute[0] = eq1_count(F, family_poly(F, 3, a, false));
    out.brute[1] = eq1_count(F, family_poly(F, 3, a, true));
    out.brute[2] = eq1_count(F, family_poly(F, 6, a, false));
    out.brute[3] = eq1_count(F, family_poly(F, 6, a, true));
    auto in = [](const std::vector<std::int64_t>& cands, std::int64_t v) {
        for (auto c : cands)
            if (c == v) return true;
        return false;
    };
    for (int i = 0; i < 4; ++i) {
        out.d1_matches[i] = in(out.display1, out.brute[i]);
        out.d3_matches[i] = in(out.display3, out.brute[i]);
    }
    return out;
}

} // namespace charsum
