// Exercises the extern-C surface exactly as an external client would.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <charsum.h>

#include <cmath>
#include <string>

namespace {

struct Handle {
    cs_field* f = nullptr;
    ~Handle() { cs_field_destroy(f); }
};

} // namespace

TEST_CASE("field lifecycle and getters") {
    Handle h;
    REQUIRE(cs_field_create(5, 1, &h.f) == CS_OK);
    CHECK(cs_field_p(h.f) == 5);
    CHECK(cs_field_r(h.f) == 1);
    CHECK(cs_field_q(h.f) == 5);
    CHECK(cs_field_generator(h.f) == 2);

    cs_field* bad = nullptr;
    CHECK(cs_field_create(2, 1, &bad) == CS_ERR_COMPOSITE_OR_EVEN_P);
    CHECK(std::string(cs_last_error()).find("odd prime") != std::string::npos);
    CHECK(cs_field_create(9, 1, &bad) == CS_ERR_COMPOSITE_OR_EVEN_P);
}

TEST_CASE("pair sums and jacobsthal sums") {
    Handle h;
    REQUIRE(cs_field_create(5, 1, &h.f) == CS_OK);
    int64_t out = 0;
    CHECK(cs_pair_sum(h.f, 2, 4, 1, 1, CS_FLAVOR_PSI, &out) == CS_OK);
    CHECK(out == 3);
    CHECK(cs_pair_sum(h.f, 2, 2, 1, 2, CS_FLAVOR_PSI, &out) == CS_OK);
    CHECK(out == 1);
    CHECK(cs_jacobsthal(h.f, 2, 1, CS_FLAVOR_PSI, &out) == CS_OK);
    CHECK(out == -1);
    CHECK(cs_pair_sum(h.f, 2, 2, 99, 1, CS_FLAVOR_PSI, &out) == CS_ERR_INVALID_ARGUMENT);
}

TEST_CASE("hypergeometric values") {
    Handle h;
    REQUIRE(cs_field_create(5, 1, &h.f) == CS_OK);
    int64_t top[] = {2, 2};    // phi, phi
    int64_t bottom[] = {0};    // eps
    double re = 0, im = 0, err = 0;
    CHECK(cs_hyper(h.f, top, 2, bottom, 1, 3, &re, &im, &err) == CS_OK);
    CHECK(std::fabs(re + 0.4) < 1e-12);
    CHECK(std::fabs(im) < 1e-12);
}

TEST_CASE("traces and counts") {
    Handle h;
    REQUIRE(cs_field_create(5, 1, &h.f) == CS_OK);
    int64_t out = 0;
    CHECK(cs_trace(h.f, CS_TRACE_LEGENDRE, 3, &out) == CS_OK);
    CHECK(out == 2);
    CHECK(cs_trace(h.f, CS_TRACE_CLAUSEN, 1, &out) == CS_OK);
    CHECK(out == -2);
    CHECK(cs_trace(h.f, CS_TRACE_LEGENDRE, 0, &out) == CS_ERR_SINGULAR_LAMBDA);

    Handle h13;
    REQUIRE(cs_field_create(13, 1, &h13.f) == CS_OK);
    int64_t f_codes[] = {1, 0, 0, 0, 1}; // x^4 + 1
    int64_t count = 0;
    int32_t genus = 0, inf = 0;
    CHECK(cs_count_points(h13.f, f_codes, 5, &count, &genus, &inf) == CS_OK);
    CHECK(count == 20);
    CHECK(genus == 1);
    CHECK(inf == 2);
}

TEST_CASE("jacobian order with annihilation") {
    int64_t f_codes[] = {0, 2, 0, 3, 0, 1}; // x(x^2+1)(x^2+2) = x^5 + 3x^3 + 2x
    int64_t order = 0;
    int32_t failures = -1;
    CHECK(cs_jacobian(13, f_codes, 6, 20, 42, &order, &failures) == CS_OK);
    CHECK(failures == 0);
    CHECK(order > 0);

    int64_t even[] = {1, 0, 0, 0, 0, 0, 1};
    CHECK(cs_jacobian(7, even, 7, 5, 1, &order, &failures) == CS_ERR_EVEN_DEGREE_MODEL);
}

TEST_CASE("prime representations") {
    int64_t first = 0, second = 0;
    int32_t amb = 0;
    CHECK(cs_represent(13, "two_squares", &first, &second, &amb) == CS_OK);
    CHECK(first == 3);
    CHECK(second == 2);
    CHECK(amb == 1);
    CHECK(cs_represent(7, "a2_3b2", &first, &second, &amb) == CS_OK);
    CHECK(first == 2);
    CHECK(second == 1);
    CHECK(cs_represent(7, "two_squares", &first, &second, &amb) == CS_ERR_BAD_RESIDUE_CLASS);
    CHECK(cs_represent(13, "bogus", &first, &second, &amb) == CS_ERR_INVALID_ARGUMENT);
}

TEST_CASE("verification runs through the C surface") {
    char* report = nullptr;
    const char* cfg = R"({"identities":["psi22"],"q_max":13,"samples":5,"seed":1,"timing":false})";
    CHECK(cs_verify(cfg, &report) == CS_OK);
    REQUIRE(report != nullptr);
    std::string s(report);
    cs_string_free(report);
    CHECK(s.find("\"failed\": 0") != std::string::npos);

    report = nullptr;
    const char* corrupt =
        R"({"identities":["psi22"],"q_max":13,"samples":5,"seed":1,"corrupt":"psi22"})";
    CHECK(cs_verify(corrupt, &report) == CS_VERIFY_FAILED);
    cs_string_free(report);

    CHECK(cs_verify("{nonsense", &report) == CS_ERR_INVALID_ARGUMENT);
    CHECK(cs_verify(R"({"q_min":10,"q_max":5})", &report) == CS_ERR_INVALID_ARGUMENT);
}

TEST_CASE("identity list") {
    char* text = nullptr;
    REQUIRE(cs_identity_list(&text) == CS_OK);
    std::string s(text);
    cs_string_free(text);
    CHECK(s.find("psi22") != std::string::npos);
    CHECK(s.find("greene_props") != std::string::npos);
}

TEST_CASE("tables through the C surface") {
    char* out = nullptr;
    CHECK(cs_table(R"({"family":"jacobsthal","p":7,"n":3,"format":"csv"})", &out) == CS_OK);
    std::string csv(out);
    cs_string_free(out);
    CHECK(csv.rfind("p,r,n,a,", 0) == 0);
    CHECK(csv.back() == '\n');

    CHECK(cs_table(R"({"family":"bogus","p":7})", &out) == CS_ERR_INVALID_ARGUMENT);
}

TEST_CASE("status names are stable") {
    CHECK(std::string(cs_status_name(CS_OK)) == "Ok");
    CHECK(std::string(cs_status_name(CS_ERR_BAD_MODULUS)) == "BadModulus");
    CHECK(std::string(cs_status_name(CS_ERR_MIXED_FIELDS)) == "MixedFields");
}
