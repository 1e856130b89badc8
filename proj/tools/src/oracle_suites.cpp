#include "oracle_suites.hpp"

#include "tca/dfinite.hpp"
#include "tca/grassmann.hpp"
#include "tca/series_forms.hpp"
#include "tca/torus.hpp"

#include <atomic>
#include <map>
#include <random>
#include <thread>

namespace tca::cli::suites {

namespace {

CaseResult compare(std::string name, const SymFunc& a, const SymFunc& b) {
    if (a == b) return {std::move(name), true, ""};
    return {std::move(name), false, "difference: " + to_string(a - b)};
}

CaseResult compare(std::string name, const TSeries& a, const TSeries& b) {
    if (a == b) return {std::move(name), true, ""};
    return {std::move(name), false, "difference: " + (a - b).to_string()};
}

CaseResult compare(std::string name, const CoeffSeries& a, const CoeffSeries& b) {
    if (a == b) return {std::move(name), true, ""};
    std::string diff = "lengths " + std::to_string(a.size()) + " and " + std::to_string(b.size());
    for (std::size_t n = 0; n < std::min(a.size(), b.size()); ++n)
        if (a[n] != b[n]) {
            diff = "first difference at t^" + std::to_string(n) + ": " + to_string(a[n]) + " vs " + to_string(b[n]);
            break;
        }
    return {std::move(name), false, diff};
}

CaseResult verdict(std::string name, bool ok, const std::string& diff) { return {std::move(name), ok, ok ? "" : diff}; }

std::string dr(int d, int r) { return "d=" + std::to_string(d) + " r=" + std::to_string(r); }

SigmaExpr sigma0_power(int m) {
    SigmaExpr e = SigmaExpr::one();
    for (int i = 0; i < m; ++i) e = e * SigmaExpr::sigma(0);
    return e;
}

std::vector<Case> theta_vs_pushforward() {
    std::vector<Case> out;
    for (const auto& [d, r] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}, {4, 2}})
        for (const auto& alpha : partitions_up_to(2, r))
            out.push_back([d = d, r = r, alpha] {
                const SigmaExpr th = theta_r(LambdaGrClass::trivial(GrClass::schur_class(d, r, alpha)));
                return compare(dr(d, r) + " alpha=" + alpha.to_string(), sigma_expand(th, 7),
                               pushforward_module_character(d, r, alpha, 7));
            });
    return out;
}

std::vector<Case> enh1_integral() {
    std::vector<Case> out;
    for (int m = 0; m <= 2; ++m)
        out.push_back([m] {
            const int d = 2, N = 5;
            const auto chars = geometric_expand(LaurentPoly::constant(d, 1), std::vector<int>(d, m), N);
            return compare("A(C^" + std::to_string(m) + ") d=2 N=5", enhanced_from_equivariant(chars, d, N),
                           enhanced_expand(phi_sigma(sigma0_power(m)), N));
        });
    for (int d = 1; d <= 2; ++d)
        out.push_back([d] {
            return verdict("kernel identity d=" + std::to_string(d), kernel_generating_identity(d, 4, 5),
                           "u-coefficients differ from the product of exponentials");
        });
    return out;
}

std::vector<Case> kostka_inverse() {
    std::vector<Case> out;
    for (int d = 1; d <= 4; ++d)
        for (int r = 0; r <= d; ++r)
            out.push_back([d, r] {
                return compare(dr(d, r), sigma_expand(detring_formal_character(d, r), 8),
                               pushforward_module_character(d, r, Partition{}, 8));
            });
    return out;
}

std::vector<Case> gessel() {
    std::vector<Case> out;
    for (const auto& [d, r] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {3, 2}, {4, 2}})
        out.push_back([d = d, r = r] {
            return compare(dr(d, r), gessel_enhanced(d, r, 6),
                           phi_enhanced(pushforward_module_character(d, r, Partition{}, 6), 6));
        });
    return out;
}

std::vector<Case> hilbschur() {
    std::vector<Case> out;
    const SymFunc s1 = SymFunc::basis_element(Basis::schur, Partition{1});
    const std::vector<std::pair<std::string, SymFunc>> objects{
        {"Sym2", SymFunc::basis_element(Basis::schur, Partition{2})},
        {"Wedge2", SymFunc::basis_element(Basis::schur, Partition{1, 1})},
        {"Tensor2", s1 * s1},
        {"S[2,1]", SymFunc::basis_element(Basis::schur, Partition{2, 1})}};
    for (const auto& [name, v] : objects)
        out.push_back([name = name, v = v] {
            const int w = v.max_degree();
            return compare(name + " N=6", tca_enhanced_exp(phi_enhanced(v, 6), w, 6),
                           phi_enhanced(sym_algebra_character(v, 6), 6));
        });
    return out;
}

std::vector<Case> pairing_lemma() {
    std::vector<Case> out;
    for (const auto& [d, r] : std::vector<std::pair<int, int>>{{3, 1}, {4, 2}, {5, 2}})
        out.push_back([d = d, r = r] {
            for (const auto& lam : partitions_up_to(4 * r, r, 4)) {
                const Integer got = pairing(m_shifted_class(lam, d, r, ShiftKind::schur), GrClass::structure_sheaf(d, r));
                const Integer want = dim_schur(lam.transpose(), d - r);
                if (got != want)
                    return CaseResult{dr(d, r), false,
                                      "lambda=" + lam.to_string() + ": " + to_string(got) + " vs " + to_string(want)};
            }
            const int dim = r * (d - r);
            for (int n = dim + 1; n <= dim + 3; ++n)
                for (const auto& lam : enumerate_partitions(n, r))
                    for (const auto& alpha : partitions_up_to(3, r))
                        if (pairing(m_shifted_class(lam, d, r), GrClass::schur_class(d, r, alpha)) != 0)
                            return CaseResult{dr(d, r), false,
                                              "support: lambda=" + lam.to_string() + " alpha=" + alpha.to_string()};
            return CaseResult{dr(d, r), true, ""};
        });
    return out;
}

std::vector<Case> ddag() {
    return {[] {
        const DdagReport rep = sigma_ddag_check(10);
        std::string diff = "failing u-degrees:";
        for (int u : rep.failing_u_degrees) diff += " " + std::to_string(u);
        return verdict("N=10", rep.holds, diff);
    }};
}

std::vector<Case> koszul() {
    std::vector<Case> out;
    for (int d = 0; d <= 3; ++d)
        out.push_back([d] {
            CoeffSeries one(13, Rational(0));
            one[0] = 1;
            return compare("d=" + std::to_string(d) + " N=12",
                           poincare_series(koszul_residue_resolution(d, 12), d, 12).hilbert_recovered(), one);
        });
    return out;
}

std::vector<Case> fourier() {
    std::vector<Case> out;
    for (int d = 0; d <= 4; ++d)
        out.push_back([d] {
            std::mt19937 rng(static_cast<unsigned>(100 + d));
            std::uniform_int_distribution<int> r(0, d), num(-6, 6), deg(0, 3);
            for (int trial = 0; trial < 10; ++trial) {
                ExpPoly h;
                for (int k = 0; k < 3; ++k) {
                    std::vector<Rational> c;
                    for (int j = deg(rng); j >= 0; --j) c.emplace_back(num(rng));
                    h.add_part(r(rng), UPoly(c));
                }
                if (!(fourier_dual_hilbert(fourier_dual_hilbert(h, d), d) == h))
                    return CaseResult{"d=" + std::to_string(d), false, "double dual differs for " + h.to_string()};
                ExpPoly shadow;
                for (const auto& [e, p] : h.parts()) shadow.add_part(d - e, p.reflected());
                if (!(fourier_dual_hilbert(h, d) == shadow))
                    return CaseResult{"d=" + std::to_string(d), false, "shadow differs for " + h.to_string()};
            }
            return CaseResult{"d=" + std::to_string(d), true, ""};
        });
    return out;
}

std::vector<Case> charpoly() {
    std::vector<Case> out;
    for (int n = 6; n <= 9; ++n)
        out.push_back([n] {
            const CharPolyForm form = detring_char_poly_form(2, 1);
            const SymFunc ch = pushforward_module_character(2, 1, Partition{}, n).degree_part(n);
            for (const auto& lam : enumerate_partitions(n)) {
                Integer brute = 0;
                for (const auto& [nu, c] : ch.terms()) brute += c.get_num() * sym_character(nu, lam);
                const Integer got = character_at(form, lam, n);
                if (got != brute)
                    return CaseResult{"n=" + std::to_string(n), false,
                                      lam.to_string() + ": " + to_string(got) + " vs " + to_string(brute)};
            }
            return CaseResult{"n=" + std::to_string(n), form.satisfies_degree_bound(), "degree bound violated"};
        });
    return out;
}

std::vector<Case> catalan() {
    return {[] {
        const auto dims = invariant_dimensions(parse_group("sl2"), LaurentPoly::variable(2, 0) + LaurentPoly::variable(2, 1), 12);
        CoeffSeries got, want;
        for (int n = 0; n <= 12; ++n) {
            got.emplace_back(dims[n]);
            want.emplace_back(n % 2 ? Integer(0) : binomial(n, n / 2) / (n / 2 + 1));
        }
        return compare("SL2 on C^2, n <= 12", got, want);
    }};
}

const std::map<std::string, std::function<std::vector<Case>()>>& registry() {
    static const std::map<std::string, std::function<std::vector<Case>()>> r{
        {"empty", [] { return std::vector<Case>{}; }},
        {"theta-vs-pushforward", theta_vs_pushforward},
        {"enh1-integral", enh1_integral},
        {"kostka-inverse", kostka_inverse},
        {"gessel", gessel},
        {"hilbschur", hilbschur},
        {"pairing-lemma", pairing_lemma},
        {"ddag", ddag},
        {"koszul", koszul},
        {"fourier", fourier},
        {"charpoly", charpoly},
        {"catalan", catalan},
    };
    return r;
}

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& [name, f] : registry()) out.push_back(name);
    return out;
}

std::optional<std::vector<Case>> suite_cases(const std::string& name) {
    const auto it = registry().find(name);
    if (it == registry().end()) return std::nullopt;
    return it->second();
}

std::vector<CaseResult> run_cases(const std::vector<Case>& cases, int threads) {
    std::vector<CaseResult> results(cases.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < cases.size(); i = next++) {
            try {
                results[i] = cases[i]();
            } catch (const std::exception& e) {
                results[i] = {"case " + std::to_string(i), false, std::string("threw: ") + e.what()};
            }
        }
    };
    const int n = std::min<int>(threads, static_cast<int>(cases.size()));
    if (n <= 1) {
        worker();
        return results;
    }
    std::vector<std::thread> pool;
    for (int i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return results;
}

}  // namespace tca::cli::suites
