#include <doctest.h>

#include <random>
#include <set>

#include "core/characters.hpp"
#include "core/field.hpp"

using namespace charsum;

TEST_CASE("character construction") {
    auto F13 = Field::make(13, 1);
    auto chi4 = MultChar::of_order(*F13, 4);
    CHECK(chi4.exponent() == 3);
    CHECK(chi4.order() == 4);
    CHECK((chi4 * chi4).order() == 2);             // chi4^2 = phi
    CHECK((chi4 * chi4) == MultChar::quadratic(*F13));
    CHECK(chi4.pow(4).is_trivial());

    auto F7 = Field::make(7, 1);
    CHECK(MultChar::quadratic(*F7).exponent() == 3);
    CHECK_THROWS_AS((void)MultChar::of_order(*F7, 4), Error);
    try {
        (void)MultChar::of_order(*F7, 4);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::OrderDoesNotDivide);
    }
}

TEST_CASE("evaluation fixtures") {
    auto F7 = Field::make(7, 1);
    auto phi = MultChar::quadratic(*F7);
    CHECK(phi.eval(F7->element(2)).re == doctest::Approx(1.0)); // squares mod 7: {1,2,4}
    CHECK(phi.eval(F7->element(2)).err == 0.0);

    auto F5 = Field::make(5, 1);
    CHECK(MultChar::quadratic(*F5).eval(F5->element(0)).abs() == 0.0);
    CHECK(MultChar::trivial(*F5).eval(F5->element(0)).abs() == 0.0);
}

TEST_CASE("quadratic character against the set of squares") {
    for (auto [p, r] : {std::pair<int, int>{13, 1}, {3, 2}, {5, 2}}) {
        auto F = Field::make(p, r);
        std::set<std::uint32_t> squares;
        for (std::int64_t x = 1; x < F->q(); ++x) {
            auto c = static_cast<std::uint32_t>(x);
            squares.insert(F->mul(c, c));
        }
        auto phi = MultChar::quadratic(*F);
        for (std::int64_t x = 1; x < F->q(); ++x) {
            int expected = squares.count(static_cast<std::uint32_t>(x)) ? 1 : -1;
            CHECK(phi.eval(F->element(x)).re == doctest::Approx(expected));
            CHECK(F->quad(static_cast<std::uint32_t>(x)) == expected);
            // same sign as the power criterion x^((q-1)/2)
            CHECK(F->pow(static_cast<std::uint32_t>(x), (F->q() - 1) / 2) ==
                  (expected == 1 ? 1u : F->neg(1)));
        }
    }
}

TEST_CASE("group structure of characters") {
    auto F13 = Field::make(13, 1);
    auto phi = MultChar::quadratic(*F13);
    auto eps = MultChar::trivial(*F13);
    CHECK((phi * phi) == eps);
    CHECK(eps.inverse() == eps);
    CHECK(MultChar::raw(*F13, 3).order() == 4);
    auto chi = MultChar::raw(*F13, 5);
    CHECK((chi * chi.inverse()) == eps);
    CHECK(((chi * phi) * eps) == (phi * chi));
}

TEST_CASE("multiplicativity on random pairs") {
    std::mt19937_64 rng(123);
    for (auto [p, r] : {std::pair<int, int>{17, 1}, {3, 2}, {5, 2}}) {
        auto F = Field::make(p, r);
        std::uniform_int_distribution<std::int64_t> dx(1, F->q() - 1);
        std::uniform_int_distribution<std::int64_t> dk(0, F->q() - 2);
        for (int trial = 0; trial < 200; ++trial) {
            auto chi = MultChar::raw(*F, dk(rng));
            auto x = F->element(dx(rng)), y = F->element(dx(rng));
            auto lhs = chi.eval(x * y);
            auto rhs = chi.eval(x) * chi.eval(y);
            CHECK(deviation(lhs, rhs) < 1e-12);
        }
    }
}

TEST_CASE("orthogonality: character sums over the whole field") {
    for (auto [p, r] : {std::pair<int, int>{11, 1}, {3, 2}}) {
        auto F = Field::make(p, r);
        for (std::int64_t k = 0; k < F->q() - 1; ++k) {
            auto chi = MultChar::raw(*F, k);
            ComplexValue total;
            for (std::int64_t x = 0; x < F->q(); ++x) total += chi.eval(F->element(x));
            double expect = (k == 0) ? static_cast<double>(F->q() - 1) : 0.0;
            CHECK(deviation(total, ComplexValue::exact(expect)) < 1e-10);
        }
    }
}

TEST_CASE("sign at minus one") {
    auto F13 = Field::make(13, 1);
    auto phi = MultChar::quadratic(*F13);
    CHECK(phi.sign_at_minus_one() == 1); // 13 = 1 (mod 4)
    auto F7 = Field::make(7, 1);
    CHECK(MultChar::quadratic(*F7).sign_at_minus_one() == -1);
    for (std::int64_t k = 0; k < 12; ++k) {
        auto chi = MultChar::raw(*F13, k);
        CHECK(chi.eval(F13->from_int(-1)).re == doctest::Approx(chi.sign_at_minus_one()));
    }
}
