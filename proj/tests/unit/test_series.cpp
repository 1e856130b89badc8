#include "oracles.hpp"
#include "tca/series_forms.hpp"

#include <doctest.h>

using namespace tca;

namespace {

SymFunc s(const Partition& lam, const Rational& c = 1) { return SymFunc::basis_element(Basis::schur, lam, c); }

TTPoly T(int i) { return TTPoly::T(i); }
TTPoly t(int i) { return TTPoly::t(i); }
TTPoly c(const Rational& q) { return TTPoly::constant(q); }

SigmaExpr fchar1(int d) {
    SigmaExpr e;
    for (int n = 0; n < d; ++n) e += SigmaExpr::sigma(n) * Rational(binomial(d - 1, n));
    return e;
}

SymFunc random_schur(std::mt19937& rng, int max_deg, int max_terms, std::optional<int> trunc) {
    SymFunc f(Basis::schur, trunc);
    std::uniform_int_distribution<int> deg(0, max_deg);
    for (int i = 0; i < max_terms; ++i) {
        const auto parts = enumerate_partitions(deg(rng));
        std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
        f.add_term(parts[pick(rng)], oracle::random_rational(rng));
    }
    return f;
}

SigmaExpr random_sigma(std::mt19937& rng) {
    SigmaExpr e;
    std::uniform_int_distribution<int> card(0, 2), k(0, 2), sdeg(0, 2), coin(0, 1);
    for (int i = 0; i < 3; ++i) {
        std::vector<int> sig;
        const int n = card(rng);
        for (int j = 0; j < n; ++j) sig.push_back(k(rng));
        const auto parts = enumerate_partitions(sdeg(rng));
        std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
        e += SigmaExpr::monomial(parts[pick(rng)], sig, oracle::random_rational(rng));
    }
    return e;
}

TSeries tpoly_series(const TTPoly& p, int N) {
    TSeries out(N);
    for (const auto& [m, q] : p.terms()) out.add_term(m.t, q);
    return out;
}

ExpPoly random_exppoly(std::mt19937& rng, int d) {
    ExpPoly h;
    std::uniform_int_distribution<int> r(0, d), deg(0, 2);
    for (int i = 0; i < 3; ++i) {
        std::vector<Rational> coeffs;
        const int n = deg(rng);
        for (int j = 0; j <= n; ++j) coeffs.push_back(oracle::random_rational(rng));
        h.add_part(r(rng), UPoly(coeffs));
    }
    return h;
}

CoeffSeries expected_exp(int length) {
    CoeffSeries out;
    for (int n = 0; n < length; ++n) out.push_back(Rational(1) / Rational(factorial(static_cast<unsigned>(n))));
    return out;
}

}  // namespace

TEST_CASE("exponential specialization") {
    SymFunc all(Basis::schur, 6);
    for (int n = 0; n <= 6; ++n) all.add_term(n ? Partition({n}) : Partition(), 1);
    CHECK(ex_specialize(all, 6) == expected_exp(7));
    CHECK(ex_specialize(s(Partition({1, 1})), 2)[2] == Rational(1, 2));
    CHECK_THROWS_AS(ex_specialize(all, 7), PreconditionError);
    std::mt19937 rng(3);
    for (int trial = 0; trial < 6; ++trial) {
        const SymFunc f = random_schur(rng, 3, 3, 6);
        const SymFunc g = random_schur(rng, 3, 3, 6);
        const CoeffSeries a = ex_specialize(f, 6), b = ex_specialize(g, 6), ab = ex_specialize(f * g, 6);
        for (int n = 0; n <= 6; ++n) {
            Rational conv = 0;
            for (int i = 0; i <= n; ++i) conv += a[i] * b[n - i];
            CHECK(ab[n] == conv);
        }
    }
}

TEST_CASE("enhanced map phi") {
    TSeries t1(3);
    t1.add_term(Partition({1}), 1);
    CHECK(phi_enhanced(s(Partition({1})), 3) == t1);
    TSeries x2(3);
    x2.add_term(Partition({1, 1}), Rational(1, 2));
    x2.add_term(Partition({2}), 1);
    CHECK(phi_enhanced(s(Partition({2})), 3) == x2);
    // phi(s_lambda) = X_lambda
    for (int n = 0; n <= 5; ++n) {
        for (const auto& lam : enumerate_partitions(n)) {
            const TSeries x = phi_enhanced(s(lam), 5);
            for (const auto& rho : enumerate_partitions(n))
                CHECK(x.coeff(rho) == Rational(sym_character(lam, rho)) / Rational(multiplicity_factorial(rho)));
        }
    }
    std::mt19937 rng(5);
    for (int trial = 0; trial < 6; ++trial) {
        const SymFunc f = random_schur(rng, 3, 3, std::nullopt);
        const SymFunc g = random_schur(rng, 3, 3, std::nullopt);
        CHECK(phi_enhanced(f * g, 5) == phi_enhanced(f, 5) * phi_enhanced(g, 5));
    }
}

TEST_CASE("setting t_1 = t recovers the exponential specialization") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 6; ++trial) {
        const SymFunc f = random_schur(rng, 5, 4, std::nullopt);
        CHECK(phi_enhanced(f, 6).specialize_t1() == ex_specialize(f.truncated(6), 6));
    }
}

TEST_CASE("sigma expansion") {
    SymFunc expect(Basis::schur, 3);
    expect.add_term(Partition({1}), 1);
    expect.add_term(Partition({2}), 2);
    expect.add_term(Partition({3}), 3);
    CHECK(sigma_expand(SigmaExpr::sigma(1), 3) == expect);
    const SymFunc s0 = sigma_expand(SigmaExpr::sigma(0), 5);
    for (int n = 0; n <= 5; ++n) CHECK(s0.coeff(n ? Partition({n}) : Partition()) == 1);
    const SymFunc cauchy = sym_algebra_character(s(Partition({1}), 2), 7);
    CHECK(sigma_expand(SigmaExpr::sigma(0) * SigmaExpr::sigma(0), 7) == cauchy);
}

TEST_CASE("sigma recognition") {
    const SigmaExpr target = SigmaExpr::sigma(1) * SigmaExpr::schur(Partition({2}));
    const RecognizeBounds bounds;
    const int N = bounds.r_max + bounds.s_deg_max + bounds.sigma_wt_max + 5;
    auto res = sigma_recognize(sigma_expand(target, N), bounds);
    REQUIRE(res.recognized());
    CHECK(*res.expr == target);

    res = sigma_recognize(sigma_expand(SigmaExpr::sigma(0), N), bounds);
    REQUIRE(res.recognized());
    CHECK(*res.expr == SigmaExpr::sigma(0));

    // the determinantal ring of rank one, d = 3, from its brute-force character
    const SymFunc a1 = sym_algebra_character(s(Partition({1}), 3), N);
    SymFunc rank1(Basis::schur, N);
    for (const auto& [lam, q] : a1.terms())
        if (lam.length() <= 1) rank1.add_term(lam, q);
    res = sigma_recognize(rank1, bounds);
    REQUIRE(res.recognized());
    CHECK(*res.expr == fchar1(3));

    // s_(1,1,1) sigma_0^3 lies outside the bounds
    const SymFunc outside = sigma_expand(SigmaExpr::schur(Partition({1, 1, 1})) * SigmaExpr::sigma(0), N);
    CHECK_FALSE(sigma_recognize(outside, bounds).recognized());

    CHECK_THROWS_AS(sigma_recognize(sigma_expand(target, N - 1), bounds), PreconditionError);
}

TEST_CASE("sigma recognition roundtrip on random inputs") {
    std::mt19937 rng(23);
    const RecognizeBounds bounds;
    const int N = 13;
    for (int trial = 0; trial < 3; ++trial) {
        const SigmaExpr e = random_sigma(rng);
        const auto res = sigma_recognize(sigma_expand(e, N), bounds);
        REQUIRE(res.recognized());
        CHECK(*res.expr == e);
    }
}

TEST_CASE("ex of sigma expressions") {
    CHECK(ex_sigma(SigmaExpr::sigma(0)) == ExpPoly::exp(1));
    CHECK(ex_sigma(SigmaExpr::sigma(0) * SigmaExpr::sigma(0)) == ExpPoly::exp(2));
    const ExpPoly h = ex_sigma(fchar1(3));
    CHECK(h == ExpPoly::exp(1, UPoly({1, 2, Rational(1, 2)})));
    const CoeffSeries tay = h.taylor(10);
    for (int n = 0; n <= 10; ++n) CHECK(tay[n] * Rational(factorial(n)) == Rational(binomial(n + 2, 2)));
    std::mt19937 rng(29);
    for (int trial = 0; trial < 6; ++trial) {
        const SigmaExpr e = random_sigma(rng);
        CHECK(ex_sigma(e).taylor(7) == ex_specialize(sigma_expand(e, 7), 7));
    }
}

TEST_CASE("phi of sigma expressions") {
    CHECK(phi_sigma(SigmaExpr::sigma(0)) == EnhancedExpr::exp_T0(1));
    CHECK(phi_sigma_n(1) == EnhancedExpr::exp_T0(1, T(1)));
    CHECK(phi_sigma_n(2) == EnhancedExpr::exp_T0(1, T(2) + T(1).pow(2) * Rational(1, 2)));
    for (int k = 0; k <= 4; ++k)
        CHECK(enhanced_expand(phi_sigma_n(k), 6) == phi_enhanced(sigma_series(k, 6), 6));
    std::mt19937 rng(31);
    for (int trial = 0; trial < 6; ++trial) {
        const SigmaExpr e = random_sigma(rng);
        CHECK(enhanced_expand(phi_sigma(e), 6) == phi_enhanced(sigma_expand(e, 6), 6));
    }
}

TEST_CASE("enhanced expansion") {
    TSeries expect(2);
    expect.add_term(Partition(), 1);
    expect.add_term(Partition({1}), 1);
    expect.add_term(Partition({1, 1}), Rational(1, 2));
    expect.add_term(Partition({2}), 1);
    CHECK(enhanced_expand(EnhancedExpr::exp_T0(1), 2) == expect);
    TSeries t1(3);
    t1.add_term(Partition({1}), 1);
    t1.add_term(Partition({2}), 2);
    t1.add_term(Partition({3}), 3);
    CHECK(enhanced_expand(EnhancedExpr::exp_T0(0, T(1)), 3) == t1);
    CHECK(T_series(1, 3) == t1);
    // rank-one determinantal ring, d = 2
    const EnhancedExpr form = EnhancedExpr::exp_T0(1, T(1) + c(1));
    CHECK(enhanced_expand(form, 4) == phi_enhanced(sigma_expand(fchar1(2), 4), 4));
}

TEST_CASE("Fourier shadow") {
    CHECK(fourier_dual_hilbert(ExpPoly::exp(3), 3) == ExpPoly::exp(0));
    CHECK(fourier_dual_hilbert(ExpPoly::exp(2, UPoly({1, 1})), 3) == ExpPoly::exp(1, UPoly({1, -1})));
    CHECK_THROWS_AS(fourier_dual_hilbert(ExpPoly::exp(4), 3), PreconditionError);
    std::mt19937 rng(37);
    for (int d = 0; d <= 4; ++d) {
        for (int trial = 0; trial < 5; ++trial) {
            const ExpPoly h = random_exppoly(rng, d);
            CHECK(fourier_dual_hilbert(fourier_dual_hilbert(h, d), d) == h);
            // e^{dt} h(-t) on Taylor coefficients
            CoeffSeries hm = h.taylor(8);
            for (std::size_t n = 1; n < hm.size(); n += 2) hm[n] = -hm[n];
            const CoeffSeries ed = ExpPoly::exp(d).taylor(8);
            const CoeffSeries got = fourier_dual_hilbert(h, d).taylor(8);
            for (int n = 0; n <= 8; ++n) {
                Rational conv = 0;
                for (int i = 0; i <= n; ++i) conv += ed[i] * hm[n - i];
                CHECK(got[n] == conv);
            }
        }
    }
}

TEST_CASE("ddag generating function identity") {
    CHECK(sigma_ddag_check(1).holds);
    CHECK(sigma_ddag_check(6).holds);
    // (sum s_n)(sum (-1)^n s_{1^n}) = 1 to degree 8
    SymFunc h(Basis::schur, 8), e(Basis::schur, 8);
    for (int n = 0; n <= 8; ++n) {
        h.add_term(n ? Partition({n}) : Partition(), 1);
        e.add_term(Partition::rectangle(n, 1), sign_power(n));
    }
    CHECK(h * e == SymFunc::one(Basis::schur, 8));
}

TEST_CASE("Poincare series") {
    PoincareSeries a = poincare_series({{0, SymFunc::one(Basis::schur, 6)}}, 2, 6);
    CHECK(a.at_q1() == CoeffSeries{1, 0, 0, 0, 0, 0, 0});
    CHECK(a.hilbert_recovered() == ExpPoly::exp(2).taylor(6));
    const PoincareSeries two = poincare_series({{0, SymFunc::one(Basis::schur, 4)}, {1, s(Partition({1})).truncated(4)}}, 1, 4);
    REQUIRE(two.by_q.size() >= 2);
    CHECK(two.by_q[0] == CoeffSeries{1, 0, 0, 0, 0});
    CHECK(two.by_q[1] == CoeffSeries{0, -1, 0, 0, 0});
    for (int d = 0; d <= 3; ++d) {
        const auto res = koszul_residue_resolution(d, 12);
        CoeffSeries one(13, Rational(0));
        one[0] = 1;
        CHECK(poincare_series(res, d, 12).hilbert_recovered() == one);
    }
}

TEST_CASE("annihilators and differential shadows") {
    CHECK(annihilator(ExpPoly::exp(2, UPoly({1, 1}))) == std::vector<int>{2, 2});
    CHECK(annihilator(ExpPoly::exp(0)) == std::vector<int>{0});
    const ExpPoly h = ex_sigma(fchar1(3));
    CHECK(annihilator(h) == std::vector<int>{1, 1, 1});
    CHECK(apply_annihilator(annihilator(h), h).is_zero());
    CHECK_FALSE(apply_annihilator({1, 1}, h).is_zero());
    CHECK(apply_diff_shadow(ExpPoly::exp(3), 3).is_zero());
    CHECK(apply_diff_shadow(ExpPoly::exp(1, UPoly({0, 1})), 1) == ExpPoly::exp(1));
    std::mt19937 rng(41);
    for (int trial = 0; trial < 6; ++trial) {
        const SymFunc f = random_schur(rng, 5, 4, 6);
        const CoeffSeries lhs = ex_specialize(schur_derivative(f), 5);
        const CoeffSeries ef = ex_specialize(f, 6);
        for (int n = 0; n <= 5; ++n) CHECK(lhs[n] == ef[n + 1] * (n + 1));
    }
}

TEST_CASE("umbral substitution") {
    CHECK(umbral_substitute(t(1).pow(2), 1) ==
          IndexedPoly::variable(1) * IndexedPoly::variable(1) + IndexedPoly::variable(1) * Rational(-1));
    CHECK(umbral_substitute(t(2), 2) == IndexedPoly::variable(2, Rational(1, 2)));
    CHECK(umbral_substitute(t(1) * t(2), 2) == IndexedPoly::variable(1) * IndexedPoly::variable(2) * Rational(1, 4));
    CHECK_THROWS_AS(umbral_substitute(T(1), 1), PreconditionError);
    CHECK(expand_T(T(1), 3) == t(1) + t(2) * 2 + t(3) * 3);
}

TEST_CASE("character polynomial for the polynomial algebra") {
    for (int d = 1; d <= 3; ++d) {
        SigmaExpr sd = SigmaExpr::one();
        for (int i = 0; i < d; ++i) sd = sd * SigmaExpr::sigma(0);
        const CharPolyForm form = char_poly_form(phi_sigma(sd), d);
        CHECK(form.satisfies_degree_bound());
        for (int n = 0; n <= 7; ++n) {
            for (const auto& lam : enumerate_partitions(n)) {
                if (n <= form.threshold) continue;
                Integer expect = 1;
                for (int i = 0; i < lam.length(); ++i) expect *= d;
                CHECK(character_at(form, lam, 7) == expect);
            }
        }
        // identity class gives dim Sym^n(C^d tensor C^d) ... restricted to the degree part
        const SymFunc ch = sym_algebra_character(s(Partition({1}), d), 6);
        for (int n = 1; n <= 6; ++n) {
            Integer dim = 0;
            const SymFunc part = ch.degree_part(n);
            for (const auto& [lam, q] : part.terms()) dim += q.get_num() * dim_specht(lam);
            CHECK(character_at(form, Partition::rectangle(n, 1), 6) == dim);
        }
    }
}

TEST_CASE("enhanced Hilbert series of polynomial tcas") {
    TSeries hv(6);
    hv.add_term(Partition({1, 1}), 1);
    const TSeries direct = tca_enhanced_exp(hv, 2, 6);
    TSeries inner(6);
    for (int n = 1; n <= 3; ++n) inner.add_term(Partition({n, n}), n);
    CHECK(direct == inner.exp());
    TSeries sym2(10);
    sym2.add_term(Partition({1, 1}), Rational(1, 2));
    sym2.add_term(Partition({2}), 1);
    TSeries sym2_log(10);
    for (int n = 1; 2 * n <= 10; ++n) {
        sym2_log.add_term(Partition({n, n}), Rational(n) / 2);
        sym2_log.add_term(Partition({2 * n}), 1);
    }
    CHECK(tca_enhanced_exp(sym2, 2, 10) == sym2_log.exp());
    const CoeffSeries h = tca_enhanced_exp(sym2, 2, 10).specialize_t1();
    CoeffSeries expect(11, Rational(0));
    for (int k = 0; 2 * k <= 10; ++k)
        expect[2 * k] = Rational(1) / (rational_pow(Rational(2), static_cast<unsigned>(k)) * Rational(factorial(k)));
    CHECK(h == expect);
    TSeries bad(4);
    bad.add_term(Partition({1}), 1);
    CHECK_THROWS_AS(tca_enhanced_exp(bad, 2, 4), PreconditionError);
    for (const auto& lam : {Partition({2}), Partition({1, 1})}) {
        const SymFunc v = s(lam);
        CHECK(tca_enhanced_exp(phi_enhanced(v, 6), 2, 6) == phi_enhanced(sym_algebra_character(v, 6), 6));
    }
    const SymFunc v2 = s(Partition({1})) * s(Partition({1}));
    CHECK(tca_enhanced_exp(phi_enhanced(v2, 6), 2, 6) == phi_enhanced(sym_algebra_character(v2, 6), 6));
}

TEST_CASE("text forms") {
    CHECK(ExpPoly::exp(1, UPoly({1, 2, Rational(1, 2)})).to_string() == "(1/2*t^2 + 2*t + 1)*e^t");
    CHECK(EnhancedExpr::exp_T0(1, T(1) + c(1)).to_string() == "(T1 + 1)*exp(T0)");
    OdeOperator op{{UPoly({0, 0, -4}), UPoly({0, 3}), UPoly({0, 0, 1})}};
    CHECK(op.to_string() == "t^2*y'' + 3*t*y' - 4*t^2*y");
    CHECK((SigmaExpr::sigma(1) * SigmaExpr::sigma(1)).to_string() == "sigma1^2");
}
