#include "oracles.hpp"
#include "tca/torus.hpp"

#include <doctest.h>

using namespace tca;

namespace {

LaurentPoly a(int d, int i, int pw = 1) { return LaurentPoly::variable(d, i, pw); }

std::vector<Integer> ints(std::initializer_list<long> xs) {
    std::vector<Integer> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

LaurentPoly random_laurent(std::mt19937& rng, int d) {
    LaurentPoly f(d);
    std::uniform_int_distribution<int> e(-2, 2);
    for (int i = 0; i < 4; ++i) {
        Exponent x(static_cast<std::size_t>(d));
        for (auto& v : x) v = e(rng);
        f.add_term(x, oracle::random_rational(rng));
    }
    return f;
}

// Sym^n(C^m tensor C^d) characters as the degree parts of prod (1 - alpha_i)^{-m}
std::vector<LaurentPoly> polynomial_tca_characters(int m, int d, int N) {
    return geometric_expand(LaurentPoly::constant(d, 1), std::vector<int>(static_cast<std::size_t>(d), m), N);
}

}  // namespace

TEST_CASE("constant terms and bar") {
    CHECK(constant_term(LaurentPoly::constant(1, 1)) == 1);
    const LaurentPoly f = a(1, 0) + a(1, 0, -1);
    CHECK(constant_term(f) == 0);
    CHECK(constant_term(f * f) == 2);
    const LaurentPoly g = LaurentPoly::monomial({2, -1});
    CHECK(bar(g) == LaurentPoly::monomial({-2, 1}));
    std::mt19937 rng(43);
    for (int trial = 0; trial < 6; ++trial) {
        const LaurentPoly x = random_laurent(rng, 2), y = random_laurent(rng, 2);
        CHECK(bar(bar(x)) == x);
        CHECK(bar(x + y) == bar(x) + bar(y));
    }
    CHECK(LaurentPoly::monomial({1, -1}).to_string() == "a1*a2^-1");
}

TEST_CASE("Weyl integration orthonormality") {
    CHECK(weyl_inner(LaurentPoly::constant(2, 1), LaurentPoly::constant(2, 1), 2) == 1);
    CHECK(weyl_inner(schur_character(Partition({1}), 2), schur_character(Partition({2}), 2), 2) == 0);
    for (int d = 1; d <= 3; ++d) {
        const auto parts = partitions_up_to(3, d);
        for (const auto& x : parts)
            for (const auto& y : parts)
                CHECK(weyl_inner(schur_character(x, d), schur_character(y, d), d) == (x == y ? 1 : 0));
    }
    CHECK(schur_character(Partition({2, 1}), 3).at_ones() == 8);
    CHECK(power_sum_character(2, 2) == a(2, 0, 2) + a(2, 1, 2));
}

TEST_CASE("invariant dimensions") {
    const LaurentPoly std2 = a(1, 0) + a(1, 0, -1);  // after SL elimination the caller may already pass one variable
    const LaurentPoly e2 = a(2, 0) + a(2, 1);
    CHECK(invariant_dimensions(parse_group("sl2"), e2, 6) == ints({1, 0, 1, 0, 2, 0, 5}));
    const auto cat = invariant_dimensions(parse_group("sl2"), e2, 12);
    for (int n = 0; n <= 12; ++n) CHECK(cat[n] == (n % 2 ? Integer(0) : oracle::catalan(n / 2)));
    // C^2 tensor C^2 for SL2 x SL2: variables (a1, a2 | a3, a4)
    LaurentPoly e22(4);
    for (int i = 0; i < 2; ++i)
        for (int j = 2; j < 4; ++j) e22 += a(4, i) * a(4, j);
    CHECK(invariant_dimensions(parse_group("sl2xsl2"), e22, 8) == ints({1, 0, 1, 0, 4, 0, 25, 0, 196}));
    CHECK(invariant_dimensions({}, LaurentPoly::constant(0, 3), 5) == ints({1, 3, 9, 27, 81, 243}));
    // GL2 on C^2: no invariants in positive degree
    CHECK(invariant_dimensions(parse_group("gl2"), e2, 4) == ints({1, 0, 0, 0, 0}));
    // GL1 on C + C^*: invariants of (a + 1/a)^n are central binomials
    CHECK(invariant_dimensions(parse_group("gl1"), std2, 6) == ints({1, 0, 2, 0, 6, 0, 20}));
    CHECK_THROWS_AS(parse_group("so3"), ParseError);
    CHECK(parse_group("trivial").empty());
}

TEST_CASE("kernel series") {
    const KernelSeries K = kernel_K(2, 3);
    CHECK(K.at({1, 0}).coeff(Partition({1})) == 1);
    CHECK(K.at({0, 1}).coeff(Partition({1})) == 1);
    CHECK(K.at({2, 0}).coeff(Partition({2})) == 1);
    CHECK(K.at({2, 0}).coeff(Partition({1, 1})) == Rational(1, 2));
    CHECK(K.at({1, 1}).coeff(Partition({1, 1})) == 1);  // half of p_1^2 = a1^2 + 2 a1 a2 + a2^2
    CHECK(K.at({1, 1}).coeff(Partition({2})) == 0);
    CHECK(K.at({0, 0}).coeff(Partition()) == 1);
}

TEST_CASE("enhanced series from equivariant characters") {
    for (int m = 0; m <= 2; ++m) {
        const TSeries got = enhanced_from_equivariant(polynomial_tca_characters(m, 2, 5), 2, 5);
        CHECK(got == enhanced_expand(EnhancedExpr::exp_T0(m), 5));
    }
    // S_(2) as a single object in degree 2
    std::vector<LaurentPoly> single(3, LaurentPoly(2));
    single[2] = schur_character(Partition({2}), 2);
    TSeries x2(5);
    x2.add_term(Partition({1, 1}), Rational(1, 2));
    x2.add_term(Partition({2}), 1);
    CHECK(enhanced_from_equivariant(single, 2, 5) == x2);
    CHECK(enhanced_from_equivariant(std::vector<LaurentPoly>(6, LaurentPoly(2)), 2, 5).is_zero());
}

TEST_CASE("kernel generating identity") {
    for (int d = 1; d <= 2; ++d) CHECK(kernel_generating_identity(d, 4, 5));
}

TEST_CASE("t_1 specialization of the kernel is exp of the inverse power sum") {
    // sum_lambda p_lambda(bar a) t^|lambda| / lambda! restricted to lambda = 1^n is (sum bar a_i)^n t^n / n!
    const int d = 2, N = 6;
    const KernelSeries K = kernel_K(d, N);
    std::map<Exponent, CoeffSeries> spec;
    for (const auto& [e, ser] : K.terms) spec[e] = ser.specialize_t1();
    LaurentPoly p1 = a(d, 0) + a(d, 1);
    for (int n = 0; n <= N; ++n) {
        const LaurentPoly pw = p1.pow(static_cast<unsigned>(n));
        for (const auto& [e, q] : pw.terms()) CHECK(spec[e][n] == q / Rational(factorial(n)));
    }
}

TEST_CASE("lattice point exponential generating functions") {
    const CoeffSeries e = hilbert_from_weight_presentation({{1}}, {0}, 8);
    for (int n = 0; n <= 8; ++n) CHECK(e[n] == Rational(1) / Rational(factorial(n)));
    const CoeffSeries sym2 = hilbert_from_weight_presentation({{2, 0}, {1, 1}, {0, 2}}, {0, 0}, 8);
    for (int n = 0; n <= 8; ++n) {
        // brute force: count x in Z^3 by the resulting y = (2x0 + x1, x1 + 2x2)
        Rational expect = 0;
        for (int x0 = 0; 2 * x0 <= n; ++x0)
            for (int x1 = 0; 2 * x0 + x1 <= n; ++x1)
                for (int x2 = 0; 2 * x0 + 2 * x1 + 2 * x2 <= 2 * n; ++x2) {
                    const int y0 = 2 * x0 + x1, y1 = x1 + 2 * x2;
                    if (y0 + y1 != n) continue;
                    expect += Rational(1) / Rational(factorial(y0) * factorial(y1));
                }
        CHECK(sym2[n] == expect);
    }
    CHECK(hilbert_from_weight_presentation({{1}}, {9}, 8) == CoeffSeries(9, Rational(0)));
    CHECK_THROWS_AS(hilbert_from_weight_presentation({{0, 0}}, {0, 0}, 4), PreconditionError);
}
