#include <doctest.h>

#include <algorithm>
#include <set>

#include "core/field.hpp"

using namespace charsum;

TEST_CASE("prime field construction") {
    auto F = Field::make(5, 1);
    CHECK(F->p() == 5);
    CHECK(F->q() == 5);
    CHECK(F->generator().code() == 2); // order of 2 mod 5 is 4
    CHECK(F->modulus().empty());
}

TEST_CASE("extension field construction picks the first irreducible modulus") {
    auto F = Field::make(3, 2);
    CHECK(F->q() == 9);
    CHECK(F->modulus() == std::vector<std::int64_t>{1, 0}); // x^2 + 1
}

TEST_CASE("rejects non-odd-prime characteristic") {
    CHECK_THROWS_AS((void)Field::make(2, 1), Error);
    CHECK_THROWS_AS((void)Field::make(9, 1), Error);
    CHECK_THROWS_AS((void)Field::make(1, 1), Error);
    try {
        (void)Field::make(2, 1);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::CompositeOrEvenP);
    }
}

TEST_CASE("field size limit") {
    try {
        (void)Field::make(101, 4, 1000); // 101^4 >> 1000
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::FieldTooLarge);
    }
}

TEST_CASE("CHARSUM_MAX_Q overrides the default ceiling") {
    setenv("CHARSUM_MAX_Q", "100", 1);
    CHECK_THROWS_AS((void)Field::make(101, 1), Error);
    CHECK(Field::make(97, 1)->q() == 97);
    setenv("CHARSUM_MAX_Q", "150", 1);
    CHECK(Field::make(101, 1)->q() == 101);
    unsetenv("CHARSUM_MAX_Q");
}

TEST_CASE("arithmetic fixtures") {
    auto F5 = Field::make(5, 1);
    CHECK(F5->mul(3, 4) == 2);
    auto F9 = Field::make(3, 2);
    // x * x = -1 = 2 under the modulus x^2 + 1
    CHECK(F9->mul(3, 3) == 2);
    auto F7 = Field::make(7, 1);
    CHECK(F7->inv(3) == 5);
    CHECK_THROWS_AS((void)F7->inv(0), Error);
    CHECK_THROWS_AS((void)F7->div(1, 0), Error);
}

TEST_CASE("mixed-field elements are rejected") {
    auto F5 = Field::make(5, 1);
    auto F7 = Field::make(7, 1);
    CHECK_THROWS_AS((void)(F5->element(1) + F7->element(1)), Error);
}

TEST_CASE("discrete log fixtures and roundtrip") {
    auto F5 = Field::make(5, 1);
    CHECK(F5->dlog(4) == 2);
    CHECK(F5->dlog(1) == 0);
    auto F7 = Field::make(7, 1);
    CHECK(F7->dlog(6) == 3); // 3^3 = 27 = 6 (mod 7)
    CHECK_THROWS_AS((void)F7->dlog(0), Error);

    for (std::int64_t j = 0; j < F7->q() - 1; ++j) CHECK(F7->dlog(F7->exp(j)) == j);
}

TEST_CASE("n-th residue classes") {
    auto F13 = Field::make(13, 1);
    CHECK(F13->nth_residue_class(F13->element(1), 4) == ResidueClass::Residue);
    CHECK(F13->nth_residue_class(F13->element(2), 2) == ResidueClass::NonResidue);
    auto F7 = Field::make(7, 1);
    CHECK(F7->nth_residue_class(F7->element(0), 3) == ResidueClass::Zero);
    CHECK_THROWS_AS((void)F7->nth_residue_class(F7->element(1), 4), Error);

    // exactly (q-1)/n residues for each n | q-1
    for (std::int64_t n : {2, 3, 4, 6, 12}) {
        std::int64_t residues = 0;
        for (std::int64_t x = 1; x < 13; ++x)
            if (F13->nth_residue_class(F13->element(x), n) == ResidueClass::Residue) ++residues;
        CHECK(residues == 12 / n);
    }
}

TEST_CASE("element enumeration order and coverage") {
    auto F9 = Field::make(3, 2);
    auto elems = F9->elements();
    REQUIRE(elems.size() == 9);
    CHECK(elems[0].is_zero());
    CHECK(elems[1] == F9->one());
    std::set<std::uint32_t> seen;
    for (auto e : elems) seen.insert(e.code());
    CHECK(seen.size() == 9);

    auto F3 = Field::make(3, 1);
    auto e3 = F3->elements();
    std::set<std::uint32_t> s3;
    for (auto e : e3) s3.insert(e.code());
    CHECK(s3 == std::set<std::uint32_t>{0, 1, 2});
}

TEST_CASE("pow satisfies Fermat and field axioms hold on samples") {
    for (auto [p, r] : {std::pair<int, int>{7, 1}, {3, 2}, {5, 2}, {3, 3}}) {
        auto F = Field::make(p, r);
        for (std::int64_t x = 1; x < F->q(); ++x) {
            CHECK(F->pow(static_cast<std::uint32_t>(x), F->q() - 1) == 1);
            CHECK(F->mul(static_cast<std::uint32_t>(x), F->inv(static_cast<std::uint32_t>(x))) ==
                  1);
        }
        for (std::int64_t x = 0; x < F->q(); ++x) {
            for (std::int64_t y = 0; y < F->q(); ++y) {
                auto a = static_cast<std::uint32_t>(x), b = static_cast<std::uint32_t>(y);
                CHECK(F->add(a, b) == F->add(b, a));
                CHECK(F->mul(a, b) == F->mul(b, a));
                CHECK(F->add(a, F->neg(a)) == 0);
            }
        }
    }
}

TEST_CASE("construction is reproducible") {
    auto A = Field::make(7, 2);
    auto B = Field::make(7, 2);
    CHECK(A->generator().code() == B->generator().code());
    CHECK(A->modulus() == B->modulus());
    for (std::int64_t x = 1; x < A->q(); ++x)
        CHECK(A->dlog(static_cast<std::uint32_t>(x)) == B->dlog(static_cast<std::uint32_t>(x)));
}

TEST_CASE("from_int embeds via the prime subfield") {
    auto F9 = Field::make(3, 2);
    CHECK(F9->from_int(-1).code() == 2);
    CHECK(F9->from_int(4).code() == 1);
    CHECK(F9->from_coeffs({1, 2}).code() == 1 + 2 * 3);
}
