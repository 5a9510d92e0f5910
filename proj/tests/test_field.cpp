#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <vector>

#include "sympair/field.hpp"

using namespace sympair;

namespace {

// Independent multiplication oracle: base-p digit vectors, schoolbook
// product, reduction by the field's own modulus. Shares no code with the
// table-driven path.
elem_t slow_mul(const Field& F, elem_t a, elem_t b) {
    std::uint32_t p = F.p(), e = F.e();
    if (e == 1) return elem_t((std::uint32_t(a) * b) % p);
    std::vector<std::uint32_t> da(e), db(e);
    std::uint32_t ua = a, ub = b;
    for (std::uint32_t i = 0; i < e; ++i, ua /= p, ub /= p) {
        da[i] = ua % p;
        db[i] = ub % p;
    }
    std::vector<std::uint32_t> prod(2 * e - 1, 0);
    for (std::uint32_t i = 0; i < e; ++i) {
        for (std::uint32_t j = 0; j < e; ++j) {
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        }
    }
    const auto& mod = F.modulus();
    for (std::size_t i = prod.size(); i-- > e;) {
        std::uint32_t c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (std::uint32_t j = 0; j < e; ++j) {
            prod[i - e + j] = (prod[i - e + j] + p - (c * mod[j]) % p) % p;
        }
    }
    std::uint32_t v = 0;
    for (std::size_t i = e; i-- > 0;) v = v * p + prod[i];
    return elem_t(v);
}

// Literal helper; keeps comma-separated lists inside macro-safe parentheses.
std::vector<elem_t> vec(std::initializer_list<int> xs) {
    return std::vector<elem_t>(xs.begin(), xs.end());
}

}  // namespace

TEST_CASE("prime field arithmetic spot values") {
    auto F = field_new(7, 1);
    CHECK(F->q() == 7);
    CHECK(F->p() == 7);
    CHECK(F->e() == 1);
    CHECK(F->label() == "GF(7)");
    CHECK(F->modulus().empty());
    CHECK(F->add(3, 5) == 1);
    CHECK(F->sub(2, 5) == 4);
    CHECK(F->neg(2) == 5);
    CHECK(F->mul(3, 5) == 1);
    CHECK(F->inv(3) == 5);
    CHECK(F->div(1, 3) == 5);
    CHECK(F->pow(3, 6) == 1);
    CHECK(F->pow(3, 0) == 1);
    CHECK(F->pow(0, 5) == 0);
    CHECK(F->pow(0, 0) == 1);
}

TEST_CASE("construction rejects bad parameters") {
    CHECK_THROWS_AS(field_new(4, 1), NotPrime);
    CHECK_THROWS_AS(field_new(1, 1), NotPrime);
    CHECK_THROWS_AS(field_new(0, 1), NotPrime);
    CHECK_THROWS_AS(field_new(9, 2), NotPrime);
    CHECK_THROWS_AS(field_new(2, 17), TooLarge);   // 2^17 past the default ceiling
    CHECK_THROWS_AS(field_new(2, 4, 15), TooLarge);
    CHECK_THROWS_AS(field_new(2, 0), Error);
    CHECK_THROWS_AS(field_from_order(6), NotPrimePower);
    CHECK_THROWS_AS(field_from_order(12), NotPrimePower);
    CHECK_THROWS_AS(field_from_order(1), NotPrimePower);
    CHECK_THROWS_AS(field_from_order(0), NotPrimePower);
    CHECK(field_from_order(8)->p() == 2);
    CHECK(field_from_order(8)->e() == 3);
    CHECK(field_from_order(121)->p() == 11);
}

TEST_CASE("modulus is the smallest monic irreducible, constant term first") {
    CHECK(field_new(2, 2)->modulus() == vec({1, 1, 1}));     // x^2+x+1
    CHECK(field_new(3, 2)->modulus() == vec({1, 0, 1}));     // x^2+1
    CHECK(field_new(2, 3)->modulus() == vec({1, 0, 1, 1}));  // x^3+x^2+1
    CHECK(field_new(2, 3)->label() == "GF(2^3)");
}

TEST_CASE("canonical digit encoding in extension fields") {
    auto F8 = field_new(2, 3);
    // 2 encodes x; x*x = x^2 = 4, x*x^2 = x^3 = x^2+1 = 5 under x^3+x^2+1.
    CHECK(F8->mul(2, 2) == 4);
    CHECK(F8->mul(2, 4) == 5);
    CHECK(F8->add(3, 5) == 6);  // (1+x) + (1+x^2) = x + x^2
    auto F9 = field_new(3, 2);
    // 3 encodes x; x^2 = -1 = 2 under x^2+1.
    CHECK(F9->mul(3, 3) == 2);
    CHECK(F9->add(4, 8) == 0);  // (1+x) + (2+2x) = 0 digitwise mod 3
    CHECK(F9->neg(4) == 8);
}

TEST_CASE("field axioms hold exhaustively on small fields") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        auto F = field_from_order(q);
        CAPTURE(q);
        REQUIRE(F->elements().size() == q);
        for (elem_t a : F->elements()) {
            CHECK(F->add(a, 0) == a);
            CHECK(F->mul(a, 1) == a);
            CHECK(F->add(a, F->neg(a)) == 0);
            if (a != 0) {
                CHECK(F->mul(a, F->inv(a)) == 1);
                CHECK(F->pow(a, q - 1) == 1);
            }
            for (elem_t b : F->elements()) {
                CHECK(F->add(a, b) == F->add(b, a));
                CHECK(F->mul(a, b) == F->mul(b, a));
                if (b != 0) CHECK(F->mul(F->div(a, b), b) == a);
                for (elem_t c : F->elements()) {
                    CHECK(F->add(F->add(a, b), c) == F->add(a, F->add(b, c)));
                    CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
                    CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("table multiplication matches the schoolbook oracle") {
    for (std::uint32_t q : {4u, 8u, 9u, 16u, 25u, 27u}) {
        auto F = field_from_order(q);
        CAPTURE(q);
        for (elem_t a : F->elements()) {
            for (elem_t b : F->elements()) {
                CHECK(F->mul(a, b) == slow_mul(*F, a, b));
            }
        }
    }
}

TEST_CASE("powers agree with repeated multiplication") {
    for (std::uint32_t q : {5u, 8u, 9u}) {
        auto F = field_from_order(q);
        for (elem_t a : F->elements()) {
            elem_t acc = 1;
            for (std::uint64_t n = 0; n < 2 * q; ++n) {
                CHECK(F->pow(a, n) == acc);
                acc = F->mul(acc, a);
            }
        }
    }
}

TEST_CASE("division by zero and foreign elements are rejected") {
    auto F = field_new(5, 1);
    CHECK_THROWS_AS(F->inv(0), DivisionByZero);
    CHECK_THROWS_AS(F->div(3, 0), DivisionByZero);
    CHECK_THROWS_AS(F->check_element(5), FieldMismatch);
    CHECK_NOTHROW(F->check_element(4));
}

TEST_CASE("FieldElement checks its field") {
    auto F = field_new(7, 1);
    FieldElement a(F, 3), b(F, 5);
    CHECK((a + b).value() == 1);
    CHECK((a * b).value() == 1);
    CHECK((a - b).value() == 5);
    CHECK((a / b).value() == 2);  // 3 * inv(5) = 3 * 3 = 9 = 2
    CHECK((-a).value() == 4);
    CHECK(a == FieldElement(F, 3));
    CHECK(a != b);
    CHECK_THROWS_AS(FieldElement(F, 7), FieldMismatch);

    // Elements belong to a field instance, not to an abstract GF(7).
    auto G = field_new(7, 1);
    FieldElement c(G, 2);
    CHECK_THROWS_AS(a + c, FieldMismatch);
}

TEST_CASE("GF(2) degenerate tables work") {
    auto F = field_new(2, 1);
    CHECK(F->mul(1, 1) == 1);
    CHECK(F->inv(1) == 1);
    CHECK(F->add(1, 1) == 0);
    CHECK(F->pow(1, 12345) == 1);
}
