#pragma once

// Series containers for Hilbert-series style invariants and the maps
// between them: sigma-expressions, exponential specialization, the enhanced
// map phi, exp-polynomials, enhanced closed forms and character polynomials.

#include "tca/partition.hpp"
#include "tca/polynomial.hpp"
#include "tca/rational.hpp"
#include "tca/symfunc.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tca {

/// Coefficients c_0..c_N of a truncated power series in one variable t.
using CoeffSeries = std::vector<Rational>;

// ---------------------------------------------------------------------------
// SigmaExpr

/// Monomial s_mu * prod sigma_{k_i}. `sigma` is sorted descending and may
/// contain zeros (sigma_0).
struct SigmaMonomial {
    Partition s;
    std::vector<int> sigma;
    friend bool operator==(const SigmaMonomial&, const SigmaMonomial&) = default;
    friend auto operator<=>(const SigmaMonomial&, const SigmaMonomial&) = default;
};

/// Element of Lambda tensor Q[sigma_0, sigma_1, ...]; the Lambda factor of
/// each monomial is a single Schur function s_mu.
class SigmaExpr {
public:
    using Terms = std::map<SigmaMonomial, Rational>;

    SigmaExpr() = default;
    static SigmaExpr one();
    static SigmaExpr sigma(int k);
    static SigmaExpr schur(const Partition& mu);
    static SigmaExpr monomial(const Partition& mu, std::vector<int> sigma, const Rational& c = 1);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coeff(const SigmaMonomial& m) const;
    /// Sorts m.sigma before inserting.
    void add_term(SigmaMonomial m, const Rational& c);

    /// Common sigma-cardinality of all monomials, if homogeneous and nonzero.
    std::optional<int> sigma_degree() const;

    SigmaExpr& operator+=(const SigmaExpr& o);
    SigmaExpr& operator-=(const SigmaExpr& o);
    SigmaExpr& operator*=(const Rational& c);
    friend SigmaExpr operator+(SigmaExpr a, const SigmaExpr& b) { return a += b; }
    friend SigmaExpr operator-(SigmaExpr a, const SigmaExpr& b) { return a -= b; }
    friend SigmaExpr operator*(SigmaExpr a, const Rational& c) { return a *= c; }
    /// s-parts multiply by the Littlewood-Richardson rule.
    friend SigmaExpr operator*(const SigmaExpr& a, const SigmaExpr& b);
    friend bool operator==(const SigmaExpr&, const SigmaExpr&) = default;

    std::string to_string() const;

private:
    Terms terms_;
};

// ---------------------------------------------------------------------------
// ExpPoly

/// sum_r p_r(t) e^{rt}, r >= 0. Zero polynomials are never stored.
class ExpPoly {
public:
    using Parts = std::map<int, UPoly>;

    ExpPoly() = default;
    static ExpPoly exp(int r, const UPoly& p = UPoly::constant(1));

    const Parts& parts() const noexcept { return parts_; }
    bool is_zero() const noexcept { return parts_.empty(); }
    UPoly part(int r) const;
    void add_part(int r, const UPoly& p);
    int max_exponent() const noexcept { return parts_.empty() ? -1 : parts_.rbegin()->first; }

    ExpPoly derivative() const;
    /// Coefficients of t^0..t^N of the Taylor expansion.
    CoeffSeries taylor(int N) const;

    ExpPoly& operator+=(const ExpPoly& o);
    ExpPoly& operator-=(const ExpPoly& o);
    ExpPoly& operator*=(const Rational& c);
    friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
    friend ExpPoly operator-(ExpPoly a, const ExpPoly& b) { return a -= b; }
    friend ExpPoly operator*(ExpPoly a, const Rational& c) { return a *= c; }
    friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);
    friend bool operator==(const ExpPoly&, const ExpPoly&) = default;

    /// "(1/2*t^2 + 2*t + 1)*e^t + e^(2t)".
    std::string to_string() const;

private:
    Parts parts_;
};

// ---------------------------------------------------------------------------
// TSeries

/// Truncated power series in t_1, t_2, ... with deg t_i = i; the key lambda
/// stands for t^lambda = prod t_i^{m_i(lambda)} and has weight |lambda|.
class TSeries {
public:
    using Terms = std::map<Partition, Rational>;

    explicit TSeries(int truncation = 0);
    static TSeries constant(const Rational& c, int truncation);

    int truncation() const noexcept { return truncation_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coeff(const Partition& lambda) const;
    /// Terms of weight above the truncation are dropped.
    void add_term(const Partition& lambda, const Rational& c);
    TSeries truncated(int n) const;

    /// t_1 = t, t_i = 0 for i >= 2.
    CoeffSeries specialize_t1() const;
    /// t^lambda -> t^{n lambda}; the truncation stays the same.
    TSeries substitute_scaled(int n) const;
    /// exp of a series with zero constant term.
    TSeries exp() const;

    TSeries& operator+=(const TSeries& o);
    TSeries& operator-=(const TSeries& o);
    TSeries& operator*=(const Rational& c);
    friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
    friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }
    friend TSeries operator*(TSeries a, const Rational& c) { return a *= c; }
    friend TSeries operator*(const TSeries& a, const TSeries& b);
    friend bool operator==(const TSeries&, const TSeries&) = default;

    std::string to_string() const;

private:
    int truncation_;
    Terms terms_;
};

// ---------------------------------------------------------------------------
// EnhancedExpr

/// sum_k p_k(t, T) exp(k T_0), k >= 0, with T_k = sum_{n >= max(k,1)} binom(n,k) t_n.
class EnhancedExpr {
public:
    using Parts = std::map<int, TTPoly>;

    EnhancedExpr() = default;
    static EnhancedExpr exp_T0(int k, const TTPoly& p = TTPoly::constant(1));

    const Parts& parts() const noexcept { return parts_; }
    bool is_zero() const noexcept { return parts_.empty(); }
    TTPoly part(int k) const;
    void add_part(int k, const TTPoly& p);

    EnhancedExpr& operator+=(const EnhancedExpr& o);
    EnhancedExpr& operator*=(const Rational& c);
    friend EnhancedExpr operator+(EnhancedExpr a, const EnhancedExpr& b) { return a += b; }
    friend EnhancedExpr operator*(EnhancedExpr a, const Rational& c) { return a *= c; }
    friend EnhancedExpr operator*(const EnhancedExpr& a, const EnhancedExpr& b);
    friend bool operator==(const EnhancedExpr&, const EnhancedExpr&) = default;

    /// "(T1 + 1)*exp(T0)".
    std::string to_string() const;

private:
    Parts parts_;
};

// ---------------------------------------------------------------------------
// OdeOperator

/// sum_i p_i(t) (d/dt)^i with p_R != 0.
struct OdeOperator {
    std::vector<UPoly> coeffs;

    int order() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
    friend bool operator==(const OdeOperator&, const OdeOperator&) = default;
    /// "t^2*y'' + 3*t*y' - 4*t^2*y".
    std::string to_string() const;
};

// ---------------------------------------------------------------------------
// CharPolyForm

/// tr(c_lambda | M_{|lambda|}) = sum_i i^{l(lambda)} (down_i p_i)(a_k = m_k(lambda))
/// for |lambda| > threshold.
struct CharPolyForm {
    struct Entry {
        int i;
        TTPoly p;
        friend bool operator==(const Entry&, const Entry&) = default;
    };
    std::vector<Entry> entries;
    int m = 0;
    int threshold = -1;

    /// deg p_i <= i(m - i) with deg T_d = d, deg t_d = 0.
    bool satisfies_degree_bound() const;
    friend bool operator==(const CharPolyForm&, const CharPolyForm&) = default;
};

// ---------------------------------------------------------------------------
// Operations

/// Coefficients of t^0..t^N of ex(f): ex(s_lambda) = dim M_lambda t^n / n!.
CoeffSeries ex_specialize(const SymFunc& f, int N);

/// phi(p_n) = n t_n, truncated at min(N, truncation of f).
TSeries phi_enhanced(const SymFunc& f, int N);

/// s-series of sigma_k truncated at N: sum_{k <= n <= N} binom(n,k) s_n.
SymFunc sigma_series(int k, int N);

SymFunc sigma_expand(const SigmaExpr& e, int N);

struct RecognizeBounds {
    int r_max = 2;
    int s_deg_max = 2;
    int sigma_wt_max = 4;
};

struct RecognizeResult {
    std::optional<SigmaExpr> expr;
    std::string reason;
    bool recognized() const noexcept { return expr.has_value(); }
};

/// Finds the unique SigmaExpr within bounds whose expansion matches f on all
/// degrees <= truncation of f. Throws when the truncation leaves less than
/// the required overdetermination margin.
RecognizeResult sigma_recognize(const SymFunc& f, const RecognizeBounds& bounds);

ExpPoly ex_sigma(const SigmaExpr& e);

/// phi(sigma_n) = exp(T_0) sum_{nu |- n} T^nu / nu!.
EnhancedExpr phi_sigma_n(int n);
EnhancedExpr phi_sigma(const SigmaExpr& e);

/// Weighted-degree-N expansion of T_k (N >= 0); k = 0 gives sum_{n>=1} t_n.
TSeries T_series(int k, int N);
TSeries enhanced_expand(const EnhancedExpr& e, int N);

/// p_r(t) -> p_r(-t) placed at exponent d - r.
ExpPoly fourier_dual_hilbert(const ExpPoly& h, int d);

struct DdagReport {
    int N = 0;
    bool holds = true;
    /// u-degrees whose coefficient differs from the identity.
    std::vector<int> failing_u_degrees;
};

/// (sum sigma_n^dd u^n)(sum sigma_n u^n) = 1 to s-degree N and u-degree N.
DdagReport sigma_ddag_check(int N);

struct TorEntry {
    int degree;
    SymFunc tor;
};

/// P(t, q) = sum_n (-q)^n H_{Tor_n}(t); by_q[n][k] is the coefficient of q^n t^k.
struct PoincareSeries {
    int N = 0;
    int d = 0;
    std::vector<CoeffSeries> by_q;

    CoeffSeries at_q1() const;
    /// P(t, 1) e^{dt}, which recovers the Hilbert series of M.
    CoeffSeries hilbert_recovered() const;
};

PoincareSeries poincare_series(const std::vector<TorEntry>& resolution, int d, int N);

/// Tor_n = sum_{|lambda| = n} dim S_lambda(C^d) s_{lambda^T}, n <= N.
std::vector<TorEntry> koszul_residue_resolution(int d, int N);

/// Roots with multiplicity, ascending, of the minimal annihilating
/// operator prod (d/dt - r).
std::vector<int> annihilator(const ExpPoly& h);
ExpPoly apply_annihilator(const std::vector<int>& roots, const ExpPoly& h);

/// (d/dt - dimV) h.
ExpPoly apply_diff_shadow(const ExpPoly& h, int dimV);

/// Replaces T_k by sum_{n = max(k,1)}^{t_cap} binom(n,k) t_n.
TTPoly expand_T(const TTPoly& p, int t_cap);

/// prod t_i^{d_i} -> prod k^{-d_i} (a_i)_{d_i}; result is a polynomial in a_i.
IndexedPoly umbral_substitute(const TTPoly& p, int k);

/// The form read off an enhanced closed form; entries are the parts k >= 1.
/// Throws if p_0 involves T.
CharPolyForm char_poly_form(const EnhancedExpr& e, int m);

Integer character_at(const CharPolyForm& form, const Partition& lambda, int t_cap);

/// Enhanced Hilbert series of Sym(V) for V concentrated in weight d:
/// exp(sum_{n >= 1} sum_mu n^{l(mu)-1} [t^mu]hV t^{n mu}). When hV is a multiple
/// of t_1^d this is exp(sum_n n^{d-1} hV(t^{[n]})).
TSeries tca_enhanced_exp(const TSeries& hV, int d, int N);

}  // namespace tca
