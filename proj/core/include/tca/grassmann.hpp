#pragma once

// K-theory of the Grassmannian Gr_r(C^d) of rank-r quotients, over a point:
// Borel-Weil-Bott pushforwards, the pushforward pairing, the maps theta_r
// and mu_r, and the determinantal-ring formulas they produce.

#include "tca/partition.hpp"
#include "tca/rational.hpp"
#include "tca/series_forms.hpp"
#include "tca/symfunc.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tca {

/// Integer combination of the classes [S_alpha(Q)], l(alpha) <= r, where Q is
/// the tautological rank-r quotient bundle on Gr_r(C^d).
class GrClass {
public:
    using Terms = std::map<Partition, Integer>;

    GrClass(int d, int r);
    static GrClass structure_sheaf(int d, int r);
    static GrClass schur_class(int d, int r, const Partition& alpha, const Integer& c = 1);

    int d() const noexcept { return d_; }
    int r() const noexcept { return r_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Integer coeff(const Partition& alpha) const;
    /// Throws if l(alpha) > r.
    void add_term(const Partition& alpha, const Integer& c);

    GrClass& operator+=(const GrClass& o);
    GrClass& operator*=(const Integer& c);
    friend GrClass operator+(GrClass a, const GrClass& b) { return a += b; }
    friend GrClass operator*(GrClass a, const Integer& c) { return a *= c; }
    /// Tensor product: Littlewood-Richardson in r rows.
    friend GrClass operator*(const GrClass& a, const GrClass& b);
    friend bool operator==(const GrClass&, const GrClass&) = default;

    std::string to_string() const;

private:
    int d_;
    int r_;
    Terms terms_;
};

/// Element of Lambda tensor K(Gr_r(C^d)): s_mu -> class.
class LambdaGrClass {
public:
    using Terms = std::map<Partition, GrClass>;

    LambdaGrClass(int d, int r);
    /// s_empty tensor c.
    static LambdaGrClass trivial(const GrClass& c);

    int d() const noexcept { return d_; }
    int r() const noexcept { return r_; }
    const Terms& terms() const noexcept { return terms_; }
    /// Throws on mismatched (d, r).
    void add(const Partition& mu, const GrClass& c);

private:
    int d_;
    int r_;
    Terms terms_;
};

struct BottResult {
    int degree;
    std::vector<int> weight;
    friend bool operator==(const BottResult&, const BottResult&) = default;
};

/// Pushforward of the irreducible bundle with weight (a|b) (a on Q, b on the
/// kernel) to a point: empty when all cohomology vanishes.
std::optional<BottResult> bott_pushforward(int d, int r, const std::vector<int>& a, const std::vector<int>& b);

/// (-1)^degree * dim S_weight(C^d), or zero.
Integer bott_euler(int d, int r, const std::vector<int>& a, const std::vector<int>& b);

/// Euler characteristic of the class on Gr_r(C^d) pushed to a point.
Integer euler_characteristic(const GrClass& c);

/// <x, f> = chi(x tensor f).
Integer pairing(const GrClass& x, const GrClass& f);

enum class ShiftKind { monomial, schur };

/// m_lambda(x_1 - 1, ..., x_r - 1) (or s_lambda, per kind) expanded in
/// Schur polynomials s_mu(x_1..x_r), read as a class on Gr_r(C^d).
GrClass m_shifted_class(const Partition& lambda, int d, int r, ShiftKind kind = ShiftKind::monomial);

/// sum_mu sum_{l(lambda) <= r, |lambda| <= r(d-r)} <M_lambda, c(mu)> s_mu sigma^lambda sigma_0^{r - l(lambda)}.
SigmaExpr theta_r(const LambdaGrClass& c);

/// ex(theta_r(c)); supported on e^{rt}.
ExpPoly mu_r(const LambdaGrClass& c);

/// sum_{|nu| <= N, l(nu) <= r} chi(S_alpha(Q) tensor S_nu(Q)) s_nu, truncated at N.
SymFunc pushforward_module_character(int d, int r, const Partition& alpha, int N);

/// Formal character of C[r x d matrices]/(rank <= r minors), as a sigma-expression.
SigmaExpr detring_formal_character(int d, int r);

/// det(a_{j-i}) with a_i = sum_{|lambda| + i >= 0} binom(|lambda|+i+d-1, |lambda|+i) t^lambda / lambda!.
TSeries gessel_enhanced(int d, int r, int N);

/// Closed form exp(T_0) sum_j binom(d-1, j)/j! B_j(1! T_1, 2! T_2, ...), B_j the complete Bell polynomial.
EnhancedExpr rank1_enhanced_closed(int d);

/// The character-polynomial form of the determinantal ring, bundle rank d.
CharPolyForm detring_char_poly_form(int d, int r);

}  // namespace tca
