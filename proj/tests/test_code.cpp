#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "sympair/code.hpp"
#include "sympair/pair_metric.hpp"

using namespace sympair;

namespace {

// Literal helper; keeps comma-separated lists inside macro-safe parentheses.
std::vector<elem_t> vec(std::initializer_list<int> xs) {
    return std::vector<elem_t>(xs.begin(), xs.end());
}

std::vector<elem_t> layout_values(const CodeSpec& spec) {
    std::vector<elem_t> v;
    for (const EvalPoint& p : spec.layout()) v.push_back(p.value);
    return v;
}

// Restates the layout contract independently of the builder: every block is
// t alphas followed by one beta column, betas alternate beta1/beta2 starting
// with beta1, the alphas appear in order 1..m, and the tail holds the rest.
void check_layout_structure(const CodeSpec& spec) {
    const auto& L = spec.layout();
    REQUIRE(int(L.size()) == spec.n());
    CHECK(spec.n() == spec.m() + spec.blocks());
    CHECK(spec.blocks() % 2 == 0);

    int next_alpha = 1;
    int betas_seen = 0;
    for (int i = 0; i < int(L.size()); ++i) {
        const EvalPoint& p = L[std::size_t(i)];
        bool beta_slot = betas_seen < spec.blocks() &&
                         i == (betas_seen + 1) * (spec.t() + 1) - 1;
        if (beta_slot) {
            ++betas_seen;
            if (betas_seen % 2 == 1) {
                CHECK(p.tag == EvalPoint::Tag::beta1);
                CHECK(p.value == spec.beta1());
            } else {
                CHECK(p.tag == EvalPoint::Tag::beta2);
                CHECK(p.value == spec.beta2());
            }
            CHECK(p.alpha_index == 0);
        } else {
            CHECK(p.tag == EvalPoint::Tag::alpha);
            CHECK(p.alpha_index == next_alpha);
            CHECK(p.value == spec.alphas()[std::size_t(next_alpha - 1)]);
            ++next_alpha;
        }
    }
    CHECK(next_alpha == spec.m() + 1);
    CHECK(betas_seen == spec.blocks());
}

}  // namespace

TEST_CASE("default points take the first field elements") {
    auto F = field_new(7, 1);
    PointSet ps = default_points(F, 4);
    CHECK(ps.beta1 == 0);
    CHECK(ps.beta2 == 1);
    CHECK(ps.alphas == vec({2, 3, 4, 5}));
    CHECK(default_points(F, 5).alphas == vec({2, 3, 4, 5, 6}));
    CHECK_THROWS_AS(default_points(F, 0), BadM);
    CHECK_THROWS_AS(default_points(F, 6), BadM);
}

TEST_CASE("frozen layouts") {
    auto F7 = field_new(7, 1);

    CodeSpec even(F7, 3, 4);
    CHECK(even.t() == 1);
    CHECK(even.m1() == 4);
    CHECK(even.blocks() == 4);
    CHECK(even.n() == 8);
    CHECK(layout_values(even) == vec({2, 0, 3, 1, 4, 0, 5, 1}));
    check_layout_structure(even);

    CodeSpec odd(F7, 3, 5);
    CHECK(odd.m1() == 5);
    CHECK(odd.blocks() == 4);
    CHECK(odd.n() == 9);
    CHECK(layout_values(odd) == vec({2, 0, 3, 1, 4, 0, 5, 1, 6}));
    check_layout_structure(odd);

    auto F11 = field_new(11, 1);
    CodeSpec wide(F11, 5, 7);
    CHECK(wide.t() == 2);
    CHECK(wide.m1() == 3);
    CHECK(wide.blocks() == 2);
    CHECK(wide.n() == 9);
    CHECK(layout_values(wide) == vec({2, 3, 0, 4, 5, 1, 6, 7, 8}));
    check_layout_structure(wide);

    // Explicit points follow the same block pattern.
    CodeSpec custom(F7, 3, 4, 5, 6, std::vector<elem_t>{1, 2, 3, 4});
    CHECK(layout_values(custom) == vec({1, 5, 2, 6, 3, 5, 4, 6}));
    check_layout_structure(custom);
}

TEST_CASE("layout structure across a parameter sweep") {
    for (std::uint64_t q : {7u, 8u, 9u, 11u, 13u}) {
        auto F = field_from_order(q);
        for (int k = 3; k <= 6; ++k) {
            for (int m = k + 1; m <= int(q) - 2; ++m) {
                CAPTURE(q);
                CAPTURE(k);
                CAPTURE(m);
                CodeSpec spec(F, k, m);
                CHECK(spec.t() == (k - 1) / 2);
                CHECK(spec.m1() == m / spec.t());
                check_layout_structure(spec);
                CHECK(theoretical_dp(spec) == spec.n() - k + 2);
            }
        }
    }
}

TEST_CASE("encode evaluates the message at the layout") {
    auto F7 = field_new(7, 1);
    CodeSpec spec(F7, 3, 4);

    Polynomial f(F7, {0, 6, 1});  // x^2 + 6x
    auto cf = encode(spec, f);
    CHECK(cf == vec({2, 0, 6, 0, 5, 0, 6, 0}));
    CHECK(pair_weight(cf) == 8);

    Polynomial g(F7, {0, 5, 1});  // x^2 + 5x, vanishes at 2 (and 0)
    auto cg = encode(spec, g);
    CHECK(cg == vec({0, 0, 3, 6, 1, 0, 1, 6}));
    CHECK(pair_weight(cg) == 7);

    auto zero = encode(spec, Polynomial(F7));
    CHECK(zero == std::vector<elem_t>(8, 0));

    CHECK_THROWS_AS(encode(spec, Polynomial::monomial(F7, 1, 3)), DegreeTooHigh);
    auto F5 = field_new(5, 1);
    CHECK_THROWS_AS(encode(spec, Polynomial(F5, {1, 1})), FieldMismatch);
}

TEST_CASE("generator matrix has full rank and an all-ones first row") {
    for (std::uint64_t q : {7u, 9u, 11u}) {
        auto F = field_from_order(q);
        for (int k = 3; k <= 5; ++k) {
            for (int m = k + 1; m <= int(q) - 2; ++m) {
                CodeSpec spec(F, k, m);
                auto G = generator_matrix(spec);
                REQUIRE(int(G.size()) == k);
                for (const auto& row : G) CHECK(int(row.size()) == spec.n());
                CHECK(G[0] == std::vector<elem_t>(std::size_t(spec.n()), 1));
                CHECK(matrix_rank(*F, G) == k);
            }
        }
    }
}

TEST_CASE("matrix rank basics") {
    auto F = field_new(7, 1);
    std::vector<std::vector<elem_t>> id{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK(matrix_rank(*F, id) == 3);
    std::vector<std::vector<elem_t>> with_zero{{1, 2, 3}, {0, 0, 0}, {2, 4, 6}};
    CHECK(matrix_rank(*F, with_zero) == 1);  // third row = 2 * first
    std::vector<std::vector<elem_t>> dep{{1, 1, 0}, {0, 1, 1}, {1, 2, 1}};
    CHECK(matrix_rank(*F, dep) == 2);  // row3 = row1 + row2
    CHECK(matrix_rank(*F, {}) == 0);
}

TEST_CASE("distance promise and the size cap") {
    auto F7 = field_new(7, 1);
    CodeSpec even(F7, 3, 4);
    CHECK(theoretical_dp(even) == 7);   // m + m1 - k + 2 = 4 + 4 - 3 + 2
    CodeSpec odd(F7, 3, 5);
    CHECK(theoretical_dp(odd) == 8);    // m + m1 - k + 1 = 5 + 5 - 3 + 1
    auto F8 = field_from_order(8);
    CodeSpec mixed(F8, 5, 6);
    CHECK(mixed.n() == 8);
    CHECK(theoretical_dp(mixed) == 5);

    CHECK(singleton_pair_cap(7, 8, 7) == 343);  // 7^3
    CHECK(singleton_pair_cap(7, 8, 2) == BigInt("5764801"));  // 7^8
    CHECK(singleton_pair_cap(13, 15, 12) == 371293);  // 13^5
    CHECK_THROWS_AS(singleton_pair_cap(7, 8, 1), BadDp);
    CHECK_THROWS_AS(singleton_pair_cap(7, 8, 9), BadDp);

    CHECK(is_mds_pair(even, theoretical_dp(even)));
    CHECK_FALSE(is_mds_pair(even, theoretical_dp(even) - 1));
    CHECK(is_mds_pair(mixed, 5));
    CHECK_FALSE(is_mds_pair(mixed, 4));
}

TEST_CASE("parameter validation") {
    auto F7 = field_new(7, 1);
    CHECK_THROWS_AS(CodeSpec(F7, 2, 4), BadDimension);
    CHECK_THROWS_AS(CodeSpec(F7, 3, 3), BadM);   // needs k < m
    CHECK_THROWS_AS(CodeSpec(F7, 3, 6), BadM);   // needs m <= q-2
    CHECK_THROWS_AS(CodeSpec(F7, 4, 4), BadM);

    std::vector<elem_t> alphas{2, 3, 4, 5};
    CHECK_THROWS_AS(CodeSpec(F7, 3, 4, 0, 0, alphas), BadPoints);
    CHECK_THROWS_AS(CodeSpec(F7, 3, 4, 0, 1, std::vector<elem_t>{2, 2, 3, 4}),
                    BadPoints);
    CHECK_THROWS_AS(CodeSpec(F7, 3, 4, 0, 1, std::vector<elem_t>{0, 2, 3, 4}),
                    BadPoints);
    CHECK_THROWS_AS(CodeSpec(F7, 3, 4, 0, 1, std::vector<elem_t>{2, 3, 4}),
                    BadPoints);
    CHECK_THROWS_AS(CodeSpec(F7, 3, 4, 0, 7, alphas), FieldMismatch);
}
