#pragma once

// Exact torus integration on Laurent polynomials: constant terms, Weyl's
// integration formula, invariant dimensions and the integral route to
// enhanced Hilbert series.

#include "tca/partition.hpp"
#include "tca/rational.hpp"
#include "tca/series_forms.hpp"

#include <map>
#include <string>
#include <vector>

namespace tca {

using Exponent = std::vector<int>;

/// Laurent polynomial in alpha_1..alpha_d over Q.
class LaurentPoly {
public:
    using Terms = std::map<Exponent, Rational>;

    explicit LaurentPoly(int d = 0);
    static LaurentPoly constant(int d, const Rational& c);
    static LaurentPoly variable(int d, int i, int power = 1);
    static LaurentPoly monomial(Exponent e, const Rational& c = 1);

    int nvars() const noexcept { return d_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coeff(const Exponent& e) const;
    void add_term(const Exponent& e, const Rational& c);

    /// Value at alpha = (1, ..., 1).
    Rational at_ones() const;
    LaurentPoly pow(unsigned k) const;
    /// Terms of total degree n.
    LaurentPoly degree_part(int n) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rational& c);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    std::string to_string() const;

private:
    int d_;
    Terms terms_;
};

Rational constant_term(const LaurentPoly& f);
/// alpha_i -> alpha_i^{-1}
LaurentPoly bar(const LaurentPoly& f);
/// prod_{i<j} (alpha_i - alpha_j) in d variables.
LaurentPoly vandermonde(int d);
/// (1/d!) CT(f bar(g) |Delta|^2)
Rational weyl_inner(const LaurentPoly& f, const LaurentPoly& g, int d);
/// s_lambda(alpha_1..alpha_d)
LaurentPoly schur_character(const Partition& lambda, int d);
/// p_k(alpha_1..alpha_d)
LaurentPoly power_sum_character(int k, int d);

struct GroupFactor {
    enum class Kind { gl, sl };
    Kind kind;
    int k;
    friend bool operator==(const GroupFactor&, const GroupFactor&) = default;
};

/// Parses "sl2", "gl3", "sl2xsl2", "trivial".
std::vector<GroupFactor> parse_group(const std::string& text);

/// dim (E^{tensor n})^G for n = 0..n_max, where `weights` is the character of E
/// on the product of the factors' maximal tori (variables in factor order).
std::vector<Integer> invariant_dimensions(const std::vector<GroupFactor>& group, const LaurentPoly& weights,
                                          int n_max);

/// K(t, alpha) = sum_{|lambda| <= N} p_lambda(alpha) t^lambda / lambda!, keyed by alpha-exponent.
struct KernelSeries {
    int d = 0;
    int N = 0;
    std::map<Exponent, TSeries> terms;

    TSeries at(const Exponent& e) const;
};

KernelSeries kernel_K(int d, int N);

/// (1/d!) CT(sum_n hilb[n](alpha) K(t, bar alpha) |Delta|^2), truncated at weight N.
TSeries enhanced_from_equivariant(const std::vector<LaurentPoly>& hilb, int d, int N);

/// Homogeneous parts of degree 0..N of h(alpha) / prod_i (1 - alpha_i)^{powers[i]}.
std::vector<LaurentPoly> geometric_expand(const LaurentPoly& h, const std::vector<int>& powers, int N);

/// Coefficients of u^e (|e| <= u_degree) in CT(prod (1 - alpha_i u_i)^{-1} K(t, bar alpha))
/// against the direct expansion of prod_i exp(sum_n u_i^n t_n).
bool kernel_generating_identity(int d, int u_degree, int N);

/// sum_{x in Z_{>=0}^n, |xA + b| <= N} t^{|xA+b|} / (xA+b)!; coefficients of t^0..t^N.
CoeffSeries hilbert_from_weight_presentation(const std::vector<std::vector<int>>& A, const std::vector<int>& b,
                                             int N);

}  // namespace tca
