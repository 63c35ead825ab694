#include <doctest.h>

#include "core/characters.hpp"
#include "core/field.hpp"
#include "core/hypergeometric.hpp"

using namespace charsum;

TEST_CASE("jacobi sum fixtures") {
    auto F7 = Field::make(7, 1);
    auto eps7 = MultChar::trivial(*F7);
    CHECK(deviation(jacobi_sum(eps7, eps7), ComplexValue::exact(5)) < 1e-12); // q - 2

    auto F5 = Field::make(5, 1);
    auto phi5 = MultChar::quadratic(*F5);
    CHECK(deviation(jacobi_sum(phi5, phi5), ComplexValue::exact(-1)) < 1e-12);

    auto phi7 = MultChar::quadratic(*F7);
    CHECK(deviation(jacobi_sum(phi7, eps7), ComplexValue::exact(-1)) < 1e-12);
}

TEST_CASE("jacobi sums are cached consistently") {
    auto F13 = Field::make(13, 1);
    auto a = MultChar::raw(*F13, 5);
    auto b = MultChar::raw(*F13, 7);
    auto v1 = jacobi_sum(a, b);
    auto v2 = jacobi_sum(a, b);
    CHECK(v1.re == v2.re);
    CHECK(v1.im == v2.im);
}

TEST_CASE("binomial symbol fixtures") {
    auto F5 = Field::make(5, 1);
    auto phi = MultChar::quadratic(*F5);
    auto eps = MultChar::trivial(*F5);
    CHECK(deviation(binomial_symbol(phi, phi), ComplexValue::exact(-1.0 / 5)) < 1e-12);
    CHECK(deviation(binomial_symbol(eps, eps), ComplexValue::exact(3.0 / 5)) < 1e-12);

    // reflection: (A | B) = (A | A B^{-1}) for A = chi4, B = phi over F_13
    auto F13 = Field::make(13, 1);
    auto chi4 = MultChar::of_order(*F13, 4);
    auto phi13 = MultChar::quadratic(*F13);
    CHECK(deviation(binomial_symbol(chi4, phi13),
                    binomial_symbol(chi4, chi4 * phi13.inverse())) < 1e-12);
}

TEST_CASE("series definition fixtures") {
    auto F5 = Field::make(5, 1);
    auto phi = MultChar::quadratic(*F5);
    auto eps = MultChar::trivial(*F5);

    // frozen from independent enumeration of the Jacobi sums over F_5
    CHECK(deviation(hyper_2f1(phi, phi, eps, F5->element(3)), ComplexValue::exact(-0.4)) < 1e-12);
    CHECK(hyper_2f1(phi, phi, eps, F5->element(0)).abs() == 0.0);
    CHECK(deviation(hyper_3f2(phi, phi, phi, eps, eps, F5->element(3)),
                    ComplexValue::exact(0.04)) < 1e-12);
}

TEST_CASE("series argument validation") {
    auto F5 = Field::make(5, 1);
    auto phi = MultChar::quadratic(*F5);
    HyperSeries bad{{phi}, {}, F5->element(1)};
    CHECK_THROWS_AS((void)gaussian_hyper(bad), Error);

    auto F7 = Field::make(7, 1);
    HyperSeries mixed{{phi, MultChar::quadratic(*F7)}, {MultChar::trivial(*F5)}, F5->element(1)};
    CHECK_THROWS_AS((void)gaussian_hyper(mixed), Error);
}

TEST_CASE("binomial property suite passes on small fields") {
    for (auto [p, r] : {std::pair<int, int>{5, 1}, {13, 1}, {3, 2}}) {
        auto F = Field::make(p, r);
        auto rep = greene_property_report(*F, 1e-9);
        for (int i = 0; i < 6; ++i) {
            INFO("field q=", F->q(), " item ", i, " dev=", rep.max_dev[i]);
            CHECK(rep.max_dev[i] < 1e-9);
        }
        CHECK(rep.pass());
        CHECK(rep.skipped_f == 0);
    }
}

TEST_CASE("trivial-bottom value at the trivial character") {
    auto F13 = Field::make(13, 1);
    auto eps = MultChar::trivial(*F13);
    CHECK(deviation(binomial_symbol(eps, eps), ComplexValue::exact(11.0 / 13)) < 1e-12);
}
