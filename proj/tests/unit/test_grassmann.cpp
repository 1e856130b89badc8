#include "oracles.hpp"
#include "rank1_reference.hpp"
#include "tca/grassmann.hpp"

#include <doctest.h>

using namespace tca;

namespace {

SigmaExpr fchar1(int d) {
    SigmaExpr e;
    for (int n = 0; n < d; ++n) e += SigmaExpr::sigma(n) * Rational(binomial(d - 1, n));
    return e;
}

// sum_{l(nu) <= r, |nu| <= N} dim S_nu(C^d) s_nu
SymFunc detring_brute(int d, int r, int N) {
    SymFunc out(Basis::schur, N);
    for (const auto& nu : partitions_up_to(N, r)) out.add_term(nu, Rational(dim_schur(nu, d)));
    return out;
}

LambdaGrClass trivial_schur(int d, int r, const Partition& alpha) {
    return LambdaGrClass::trivial(GrClass::schur_class(d, r, alpha));
}

}  // namespace

TEST_CASE("Bott pushforward") {
    const auto a = bott_pushforward(3, 2, {2, 1}, {0});
    REQUIRE(a);
    CHECK(a->degree == 0);
    CHECK(a->weight == std::vector<int>{2, 1, 0});
    CHECK_FALSE(bott_pushforward(2, 1, {0}, {1}));
    const auto b = bott_pushforward(2, 1, {0}, {2});
    REQUIRE(b);
    CHECK(b->degree == 1);
    CHECK(b->weight == std::vector<int>{1, 1});
    CHECK(bott_euler(2, 1, {0}, {2}) == -1);
    // chi(P^1, O(n)) = n + 1
    for (int n = -6; n <= 6; ++n) CHECK(bott_euler(2, 1, {n}, {0}) == n + 1);
    // chi(P^2, O(n)) = binom(n+2, 2)
    for (int n = -6; n <= 6; ++n) CHECK(bott_euler(3, 1, {n}, {0, 0}) == Integer((n + 1) * (n + 2) / 2));
    CHECK_THROWS_AS(bott_pushforward(3, 1, {0}, {0, 1}), PreconditionError);
}

TEST_CASE("pairing") {
    CHECK(pairing(GrClass::structure_sheaf(3, 1), GrClass::structure_sheaf(3, 1)) == 1);
    for (int d = 1; d <= 5; ++d)
        for (int n = 0; n <= 5; ++n)
            CHECK(pairing(GrClass::schur_class(d, 1, Partition({n})), GrClass::structure_sheaf(d, 1)) ==
                  binomial(d + n - 1, n));
    const GrClass q = GrClass::schur_class(4, 2, Partition({1}));
    CHECK(pairing(q, q) == 16);
}

TEST_CASE("classes multiply by the Littlewood-Richardson rule in r rows") {
    const GrClass q = GrClass::schur_class(4, 2, Partition({1, 1}));
    const GrClass prod = q * q;
    CHECK(prod.coeff(Partition({2, 2})) == 1);
    CHECK(prod.terms().size() == 1);
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (const auto& lam : enumerate_partitions(a, 3))
                for (const auto& mu : enumerate_partitions(b, 3)) {
                    const GrClass p = GrClass::schur_class(5, 3, lam) * GrClass::schur_class(5, 3, mu);
                    for (const auto& nu : enumerate_partitions(a + b, 3))
                        CHECK(p.coeff(nu) == oracle::lr_coefficient(lam, mu, nu));
                }
    CHECK_THROWS_AS(GrClass::schur_class(3, 1, Partition({1, 1})), PreconditionError);
}

TEST_CASE("shifted classes") {
    CHECK(m_shifted_class(Partition(), 3, 2) == GrClass::structure_sheaf(3, 2));
    GrClass m1(2, 1);
    m1.add_term(Partition({1}), 1);
    m1.add_term(Partition(), -1);
    CHECK(m_shifted_class(Partition({1}), 2, 1) == m1);
    for (int r = 1; r <= 3; ++r) {
        for (int n = 0; n <= 4; ++n) {
            const GrClass c = m_shifted_class(Partition({n}), 5, r, ShiftKind::schur);
            for (int i = 0; i <= n; ++i)
                CHECK(c.coeff(i ? Partition({i}) : Partition()) == sign_power(n - i) * binomial(n + r - 1, i + r - 1));
        }
    }
    CHECK_THROWS_AS(m_shifted_class(Partition({1, 1}), 3, 1), PreconditionError);
}

TEST_CASE("pairing lemma") {
    for (const auto& [d, r] : std::vector<std::pair<int, int>>{{3, 1}, {4, 2}, {5, 2}}) {
        for (int n = 0; n <= 4 * r; ++n) {
            for (const auto& lam : enumerate_partitions(n, r, 4)) {
                const GrClass s = m_shifted_class(lam, d, r, ShiftKind::schur);
                CHECK(pairing(s, GrClass::structure_sheaf(d, r)) == dim_schur(lam.transpose(), d - r));
            }
        }
    }
}

TEST_CASE("support vanishing beyond the Grassmannian dimension") {
    for (const auto& [d, r] : std::vector<std::pair<int, int>>{{3, 1}, {4, 2}}) {
        const int dim = r * (d - r);
        for (int n = dim + 1; n <= dim + 3; ++n)
            for (const auto& lam : enumerate_partitions(n, r))
                for (const auto& alpha : partitions_up_to(3, r))
                    CHECK(pairing(m_shifted_class(lam, d, r), GrClass::schur_class(d, r, alpha)) == 0);
    }
}

TEST_CASE("theta_r") {
    CHECK(theta_r(LambdaGrClass::trivial(GrClass::structure_sheaf(2, 0))) == SigmaExpr::one());
    for (int d = 1; d <= 5; ++d)
        CHECK(theta_r(LambdaGrClass::trivial(GrClass::structure_sheaf(d, 1))) == fchar1(d));
    for (int d = 1; d <= 3; ++d) {
        SigmaExpr sd = SigmaExpr::one();
        for (int i = 0; i < d; ++i) sd = sd * SigmaExpr::sigma(0);
        const SigmaExpr th = theta_r(LambdaGrClass::trivial(GrClass::structure_sheaf(d, d)));
        CHECK(th == sd);
        CHECK(sigma_expand(th, 8) == sym_algebra_character(SymFunc::basis_element(Basis::schur, Partition({1}), d), 8));
    }
    const SigmaExpr th = theta_r(trivial_schur(4, 2, Partition({1})));
    for (const auto& [m, c] : th.terms()) CHECK(m.sigma.size() == 2);
    // a Lambda-coefficient multiplies through
    LambdaGrClass c(3, 1);
    c.add(Partition({2}), GrClass::structure_sheaf(3, 1));
    CHECK(theta_r(c) == SigmaExpr::schur(Partition({2})) * fchar1(3));
}

TEST_CASE("theta_r matches pushforward characters") {
    for (const auto& [d, r] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}}) {
        for (const auto& alpha : partitions_up_to(2, r)) {
            const SigmaExpr th = theta_r(trivial_schur(d, r, alpha));
            CHECK(sigma_expand(th, 6) == pushforward_module_character(d, r, alpha, 6));
        }
    }
    const SymFunc chi = pushforward_module_character(2, 1, Partition({1}), 3);
    CHECK(chi.coeff(Partition({1})) == 3);
    CHECK(pushforward_module_character(4, 2, Partition(), 6) == detring_brute(4, 2, 6));
    CHECK(pushforward_module_character(3, 3, Partition(), 6) == detring_brute(3, 3, 6));
}

TEST_CASE("mu_r") {
    const ExpPoly h = mu_r(LambdaGrClass::trivial(GrClass::structure_sheaf(3, 1)));
    CHECK(h == ExpPoly::exp(1, UPoly({1, 2, Rational(1, 2)})));
    CHECK(mu_r(LambdaGrClass::trivial(GrClass::structure_sheaf(3, 0))) == ExpPoly::exp(0));
    CHECK(mu_r(LambdaGrClass::trivial(GrClass::structure_sheaf(3, 3))) == ExpPoly::exp(3));
    const ExpPoly g = mu_r(trivial_schur(4, 2, Partition({1})));
    CHECK(g.max_exponent() == 2);
    CHECK(g.parts().size() == 1);
}

TEST_CASE("determinantal formal characters") {
    for (int d = 1; d <= 5; ++d) CHECK(detring_formal_character(d, 1) == fchar1(d));
    for (int d = 0; d <= 3; ++d) {
        SigmaExpr sd = SigmaExpr::one();
        for (int i = 0; i < d; ++i) sd = sd * SigmaExpr::sigma(0);
        CHECK(detring_formal_character(d, d) == sd);
    }
    for (int d = 1; d <= 4; ++d)
        for (int r = 0; r <= d; ++r) {
            CHECK(sigma_expand(detring_formal_character(d, r), 8) == detring_brute(d, r, 8));
            CHECK(detring_formal_character(d, r) == theta_r(LambdaGrClass::trivial(GrClass::structure_sheaf(d, r))));
        }
}

TEST_CASE("Gessel determinant") {
    for (int d = 1; d <= 3; ++d) {
        TSeries a0(6);
        for (const auto& lam : partitions_up_to(6))
            a0.add_term(lam, Rational(binomial(lam.size() + d - 1, lam.size())) / Rational(multiplicity_factorial(lam)));
        CHECK(gessel_enhanced(d, 1, 6) == a0);
    }
    CHECK(gessel_enhanced(3, 2, 6) == phi_enhanced(pushforward_module_character(3, 2, Partition(), 6), 6));
    CHECK(gessel_enhanced(2, 2, 6) == enhanced_expand(EnhancedExpr::exp_T0(2), 6));
    CHECK(gessel_enhanced(2, 2, 6) ==
          phi_enhanced(sym_algebra_character(SymFunc::basis_element(Basis::schur, Partition({1}), 2), 6), 6));
    CHECK(gessel_enhanced(3, 2, 6) == enhanced_expand(phi_sigma(detring_formal_character(3, 2)), 6));
}

TEST_CASE("rank-one closed forms") {
    for (int d = 1; d <= 5; ++d) {
        CHECK(rank1_enhanced_closed(d) == rank1_reference::rank1_table(d));
        CHECK(rank1_enhanced_closed(d) == phi_sigma(fchar1(d)));
        CHECK(enhanced_expand(rank1_enhanced_closed(d), 6) == gessel_enhanced(d, 1, 6));
    }
    CHECK(rank1_enhanced_closed(1).to_string() == "exp(T0)");
}

TEST_CASE("determinantal character polynomials") {
    for (int d = 1; d <= 4; ++d)
        for (int r = 0; r <= std::min(d, 2); ++r) CHECK(detring_char_poly_form(d, r).satisfies_degree_bound());
    const CharPolyForm form = detring_char_poly_form(2, 1);
    // M_n = Sym^n(C^2) tensor Sym^n(C^inf) as S_n-rep is dim S_(n)(C^2) copies of the trivial rep
    for (int n = std::max(form.threshold + 1, 0); n <= 8; ++n)
        for (const auto& lam : enumerate_partitions(n)) CHECK(character_at(form, lam, 8) == n + 1);
}
