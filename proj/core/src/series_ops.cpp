#include "tca/linalg.hpp"
#include "tca/series_forms.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace tca {

namespace {

void require_truncation(const SymFunc& f, int N, const char* what) {
    if (N < 0) throw PreconditionError(std::string(what) + ": negative degree bound");
    if (f.truncation() && *f.truncation() < N)
        throw PreconditionError(std::string(what) + ": input truncated below requested degree");
}

// prod sigma_{k_i} in the power-sum basis, truncated at N.
SymFunc sigma_product_powersum(const std::vector<int>& sigma, int N) {
    SymFunc acc = SymFunc::one(Basis::powersum, N);
    for (int k : sigma) acc = multiply(acc, change_basis(sigma_series(k, N), Basis::powersum));
    return acc;
}

// X_mu as a polynomial in t: sum_rho chi^mu(rho) t^rho / rho!.
TTPoly schur_enhanced(const Partition& mu) {
    TTPoly out;
    for (const auto& rho : enumerate_partitions(mu.size()))
        out.add_term({rho, Partition{}},
                     Rational(sym_character(mu, rho)) / Rational(multiplicity_factorial(rho)));
    return out;
}

// sigma-multisets of the given cardinality and total weight <= max_weight.
std::vector<std::vector<int>> sigma_multisets(int cardinality, int max_weight) {
    std::vector<std::vector<int>> out;
    for (int w = 0; w <= max_weight; ++w) {
        for (const auto& p : enumerate_partitions(w, cardinality)) {
            std::vector<int> v = p.parts();
            v.resize(static_cast<std::size_t>(cardinality), 0);
            out.push_back(std::move(v));
        }
    }
    return out;
}

Integer int_pow(long base, unsigned e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(std::labs(base)), e);
    if (base < 0 && e % 2) r = -r;
    return r;
}

}  // namespace

CoeffSeries ex_specialize(const SymFunc& f, int N) {
    require_truncation(f, N, "ex_specialize");
    const SymFunc s = change_basis(f, Basis::schur);
    CoeffSeries out(static_cast<std::size_t>(N) + 1, Rational(0));
    for (const auto& [lambda, c] : s.terms()) {
        const int n = lambda.size();
        if (n > N) break;
        out[n] += c * Rational(dim_specht(lambda)) / Rational(factorial(n));
    }
    return out;
}

TSeries phi_enhanced(const SymFunc& f, int N) {
    if (N < 0) throw PreconditionError("phi_enhanced: negative degree bound");
    const int trunc = f.truncation() ? std::min(N, *f.truncation()) : N;
    if (trunc < 0) return TSeries(0);
    const SymFunc p = change_basis(f, Basis::powersum);
    TSeries out(trunc);
    for (const auto& [mu, c] : p.terms()) {
        Integer prod = 1;
        for (int part : mu.parts()) prod *= part;
        out.add_term(mu, c * Rational(prod));
    }
    return out;
}

SymFunc sigma_series(int k, int N) {
    if (k < 0) throw PreconditionError("sigma index must be non-negative");
    SymFunc out(Basis::schur, N);
    for (int n = k; n <= N; ++n)
        out.add_term(n == 0 ? Partition{} : Partition{n}, Rational(binomial(n, k)));
    return out;
}

SymFunc sigma_expand(const SigmaExpr& e, int N) {
    if (N < 0) throw PreconditionError("sigma_expand: negative degree bound");
    std::map<std::vector<int>, SymFunc> cache;
    SymFunc out(Basis::powersum, N);
    for (const auto& [m, c] : e.terms()) {
        auto it = cache.find(m.sigma);
        if (it == cache.end()) it = cache.emplace(m.sigma, sigma_product_powersum(m.sigma, N)).first;
        const SymFunc s = SymFunc::basis_element(Basis::schur, m.s, 1, N);
        out += multiply(change_basis(s, Basis::powersum), it->second) * c;
    }
    return change_basis(out, Basis::schur);
}

RecognizeResult sigma_recognize(const SymFunc& f, const RecognizeBounds& bounds) {
    if (!f.truncation()) throw PreconditionError("sigma_recognize: input must carry a truncation");
    const int N = *f.truncation();
    if (bounds.r_max < 0 || bounds.s_deg_max < 0 || bounds.sigma_wt_max < 0)
        throw PreconditionError("sigma_recognize: negative bound");
    if (N < bounds.s_deg_max + bounds.sigma_wt_max + bounds.r_max + 5)
        throw PreconditionError("sigma_recognize: truncation leaves no overdetermination margin");

    std::vector<SigmaMonomial> unknowns;
    std::vector<SymFunc> columns;
    const auto s_parts = partitions_up_to(bounds.s_deg_max);
    for (int card = 0; card <= bounds.r_max; ++card) {
        for (const auto& sig : sigma_multisets(card, bounds.sigma_wt_max)) {
            const SymFunc sp = sigma_product_powersum(sig, N);
            for (const auto& mu : s_parts) {
                const SymFunc s = change_basis(SymFunc::basis_element(Basis::schur, mu, 1, N), Basis::powersum);
                unknowns.push_back({mu, sig});
                columns.push_back(change_basis(multiply(s, sp), Basis::schur));
            }
        }
    }

    const SymFunc target = change_basis(f, Basis::schur);
    const auto rows = partitions_up_to(N);
    Matrix a;
    std::vector<Rational> b;
    for (const auto& lambda : rows) {
        std::vector<Rational> row(unknowns.size());
        bool any = false;
        for (std::size_t j = 0; j < columns.size(); ++j) {
            row[j] = columns[j].coeff(lambda);
            any = any || row[j] != 0;
        }
        const Rational rhs = target.coeff(lambda);
        if (!any && rhs == 0) continue;
        a.push_back(std::move(row));
        b.push_back(rhs);
    }
    const auto sol = solve_linear(a, b, unknowns.size());
    switch (sol.kind) {
        case LinearSolution::Kind::inconsistent:
            return {std::nullopt, "no sigma-expression within the bounds matches the input"};
        case LinearSolution::Kind::underdetermined:
            return {std::nullopt, "the truncation does not determine a unique sigma-expression"};
        case LinearSolution::Kind::unique: break;
    }
    SigmaExpr e;
    for (std::size_t j = 0; j < unknowns.size(); ++j) e.add_term(unknowns[j], sol.x[j]);
    return {std::move(e), ""};
}

ExpPoly ex_sigma(const SigmaExpr& e) {
    ExpPoly out;
    for (const auto& [m, c] : e.terms()) {
        Rational coeff = c * Rational(dim_specht(m.s)) / Rational(factorial(m.s.size()));
        int degree = m.s.size();
        for (int k : m.sigma) {
            coeff /= Rational(factorial(k));
            degree += k;
        }
        out.add_part(static_cast<int>(m.sigma.size()), UPoly::monomial(coeff, degree));
    }
    return out;
}

EnhancedExpr phi_sigma_n(int n) {
    if (n < 0) throw PreconditionError("sigma index must be non-negative");
    TTPoly p;
    for (const auto& nu : enumerate_partitions(n))
        p.add_term({Partition{}, nu}, Rational(1) / Rational(multiplicity_factorial(nu)));
    return EnhancedExpr::exp_T0(1, p);
}

EnhancedExpr phi_sigma(const SigmaExpr& e) {
    std::map<int, EnhancedExpr> sigma_cache;
    EnhancedExpr out;
    for (const auto& [m, c] : e.terms()) {
        EnhancedExpr term = EnhancedExpr::exp_T0(0, schur_enhanced(m.s));
        for (int k : m.sigma) {
            auto it = sigma_cache.find(k);
            if (it == sigma_cache.end()) it = sigma_cache.emplace(k, phi_sigma_n(k)).first;
            term = term * it->second;
        }
        out += term * c;
    }
    return out;
}

TSeries T_series(int k, int N) {
    if (k < 0) throw PreconditionError("T index must be non-negative");
    TSeries out(N);
    for (int n = std::max(k, 1); n <= N; ++n) out.add_term(Partition{n}, Rational(binomial(n, k)));
    return out;
}

TSeries enhanced_expand(const EnhancedExpr& e, int N) {
    if (N < 0) throw PreconditionError("enhanced_expand: negative degree bound");
    std::map<int, TSeries> T_cache;
    auto T_of = [&](int k) -> const TSeries& {
        auto it = T_cache.find(k);
        if (it == T_cache.end()) it = T_cache.emplace(k, T_series(k, N)).first;
        return it->second;
    };
    TSeries out(N);
    for (const auto& [k, p] : e.parts()) {
        TSeries poly(N);
        for (const auto& [mono, c] : p.terms()) {
            if (mono.t.size() > N) continue;
            TSeries term = TSeries::constant(c, N);
            term = term * [&] {
                TSeries t(N);
                t.add_term(mono.t, 1);
                return t;
            }();
            for (int j : mono.T.parts()) term = term * T_of(j);
            poly += term;
        }
        const TSeries e_k = k == 0 ? TSeries::constant(1, N) : (T_of(0) * Rational(k)).exp();
        out += poly * e_k;
    }
    return out;
}

ExpPoly fourier_dual_hilbert(const ExpPoly& h, int d) {
    if (d < 0) throw PreconditionError("fourier_dual_hilbert: negative rank");
    if (h.max_exponent() > d) throw PreconditionError("fourier_dual_hilbert: exponent exceeds d");
    ExpPoly out;
    for (const auto& [r, p] : h.parts()) out.add_part(d - r, p.reflected());
    return out;
}

DdagReport sigma_ddag_check(int N) {
    if (N < 0) throw PreconditionError("sigma_ddag_check: negative degree bound");
    std::vector<SymFunc> plain;
    std::vector<SymFunc> starred;
    for (int n = 0; n <= N; ++n) {
        const SymFunc s = sigma_series(n, N);
        plain.push_back(change_basis(s, Basis::powersum));
        starred.push_back(change_basis(ddag(s), Basis::powersum));
    }
    DdagReport report;
    report.N = N;
    for (int m = 0; m <= N; ++m) {
        SymFunc acc(Basis::powersum, N);
        for (int i = 0; i <= m; ++i) acc += multiply(starred[i], plain[m - i]);
        const SymFunc expected = m == 0 ? SymFunc::one(Basis::powersum, N) : SymFunc(Basis::powersum, N);
        if (!same_element(acc, expected)) report.failing_u_degrees.push_back(m);
    }
    report.holds = report.failing_u_degrees.empty();
    return report;
}

CoeffSeries PoincareSeries::at_q1() const {
    CoeffSeries out(static_cast<std::size_t>(N) + 1, Rational(0));
    for (const auto& row : by_q)
        for (std::size_t k = 0; k < row.size(); ++k) out[k] += row[k];
    return out;
}

CoeffSeries PoincareSeries::hilbert_recovered() const {
    const CoeffSeries p = at_q1();
    CoeffSeries e(p.size());
    Rational term = 1;
    for (std::size_t k = 0; k < e.size(); ++k) {
        e[k] = term;
        term *= Rational(d, static_cast<long>(k) + 1);
    }
    CoeffSeries out(p.size(), Rational(0));
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; i + j < p.size(); ++j) out[i + j] += p[i] * e[j];
    return out;
}

PoincareSeries poincare_series(const std::vector<TorEntry>& resolution, int d, int N) {
    if (N < 0 || d < 0) throw PreconditionError("poincare_series: negative bound");
    PoincareSeries P;
    P.N = N;
    P.d = d;
    for (const auto& entry : resolution) {
        if (entry.degree < 0) throw PreconditionError("poincare_series: negative homological degree");
        const auto n = static_cast<std::size_t>(entry.degree);
        if (P.by_q.size() <= n) P.by_q.resize(n + 1, CoeffSeries(static_cast<std::size_t>(N) + 1, Rational(0)));
        const CoeffSeries h = ex_specialize(entry.tor, N);
        const int sign = sign_power(entry.degree);
        for (std::size_t k = 0; k < h.size(); ++k) P.by_q[n][k] += sign * h[k];
    }
    return P;
}

std::vector<TorEntry> koszul_residue_resolution(int d, int N) {
    std::vector<TorEntry> out;
    for (int n = 0; n <= N; ++n) {
        SymFunc tor(Basis::schur);
        for (const auto& lambda : enumerate_partitions(n, d))
            tor.add_term(lambda.transpose(), Rational(dim_schur(lambda, d)));
        out.push_back({n, std::move(tor)});
    }
    return out;
}

std::vector<int> annihilator(const ExpPoly& h) {
    std::vector<int> roots;
    for (const auto& [r, p] : h.parts()) roots.insert(roots.end(), static_cast<std::size_t>(p.degree()) + 1, r);
    return roots;
}

ExpPoly apply_annihilator(const std::vector<int>& roots, const ExpPoly& h) {
    ExpPoly out = h;
    for (int r : roots) out = apply_diff_shadow(out, r);
    return out;
}

ExpPoly apply_diff_shadow(const ExpPoly& h, int dimV) {
    ExpPoly out;
    for (const auto& [r, p] : h.parts()) out.add_part(r, p.derivative() + p * Rational(r - dimV));
    return out;
}

TTPoly expand_T(const TTPoly& p, int t_cap) {
    if (t_cap < 0) throw PreconditionError("expand_T: negative cap");
    std::map<int, TTPoly> cache;
    TTPoly out;
    for (const auto& [m, c] : p.terms()) {
        TTPoly term;
        term.add_term({m.t, Partition{}}, c);
        for (int j : m.T.parts()) {
            auto it = cache.find(j);
            if (it == cache.end()) {
                TTPoly Tj;
                for (int n = std::max(j, 1); n <= t_cap; ++n) Tj += TTPoly::t(n) * Rational(binomial(n, j));
                it = cache.emplace(j, std::move(Tj)).first;
            }
            term = term * it->second;
        }
        out += term;
    }
    return out;
}

IndexedPoly umbral_substitute(const TTPoly& p, int k) {
    if (k <= 0) throw PreconditionError("umbral_substitute: k must be positive");
    if (p.has_T()) throw PreconditionError("umbral_substitute: expand T variables first");
    IndexedPoly out;
    for (const auto& [m, c] : p.terms()) {
        IndexedPoly term = IndexedPoly::constant(c);
        const auto mult = m.t.multiplicities();
        for (std::size_t i = 1; i < mult.size(); ++i) {
            for (int j = 0; j < mult[i]; ++j) {
                IndexedPoly factor = IndexedPoly::variable(static_cast<int>(i));
                factor.add_term(Partition{}, -j);
                term = term * factor * Rational(1, k);
            }
        }
        out += term;
    }
    return out;
}

CharPolyForm char_poly_form(const EnhancedExpr& e, int m) {
    CharPolyForm form;
    form.m = m;
    const TTPoly p0 = e.part(0);
    if (p0.has_T()) throw PreconditionError("char_poly_form: p_0 must be a polynomial in t only");
    form.threshold = p0.is_zero() ? -1 : p0.t_weight();
    for (const auto& [k, p] : e.parts())
        if (k >= 1) form.entries.push_back({k, p});
    return form;
}

Integer character_at(const CharPolyForm& form, const Partition& lambda, int t_cap) {
    if (lambda.size() <= form.threshold)
        throw PreconditionError("character_at: |lambda| is below the validity threshold");
    if (lambda.largest() > t_cap) throw PreconditionError("character_at: largest part exceeds t_cap");
    std::vector<Rational> values(static_cast<std::size_t>(t_cap) + 1, Rational(0));
    for (int i = 1; i <= t_cap; ++i) values[i] = lambda.multiplicity(i);
    Rational total = 0;
    for (const auto& [i, p] : form.entries) {
        const IndexedPoly down = umbral_substitute(expand_T(p, t_cap), i);
        total += Rational(int_pow(i, static_cast<unsigned>(lambda.length()))) * down.evaluate(values);
    }
    if (!is_integer(total)) throw PreconditionError("character_at: non-integral trace " + to_string(total));
    return total.get_num();
}

TSeries tca_enhanced_exp(const TSeries& hV, int d, int N) {
    if (d < 1) throw PreconditionError("tca_enhanced_exp: d must be positive");
    if (N < 0) throw PreconditionError("tca_enhanced_exp: negative degree bound");
    for (const auto& [lambda, c] : hV.terms())
        if (lambda.size() != d) throw PreconditionError("tca_enhanced_exp: hV must be concentrated in weight d");
    TSeries sum(N);
    // log of the character is sum_n (1/n) (p_n o ch V); under phi the monomial
    // t^mu of hV contributes n^{l(mu) - 1} t^{n mu}
    for (int n = 1; n * d <= N; ++n)
        for (const auto& [lambda, c] : hV.terms())
            sum.add_term(lambda.scaled(n), c * Rational(int_pow(n, static_cast<unsigned>(lambda.length() - 1))));
    return sum.exp();
}

}  // namespace tca
