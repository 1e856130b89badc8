#pragma once

// The ring of symmetric functions over Q, stored sparsely in one of three
// bases and optionally truncated in degree.

#include "tca/partition.hpp"
#include "tca/rational.hpp"

#include <map>
#include <optional>
#include <string>

namespace tca {

enum class Basis { schur, powersum, monomial };

/// Short tag used in text and JSON: "s", "p", "m".
std::string basis_tag(Basis b);
Basis parse_basis(std::string_view tag);

/// A finite linear combination of basis elements b_lambda with rational
/// coefficients. When truncation() is set to N, coefficients of degree > N
/// are unknown and never stored; binary operations take the smaller bound.
class SymFunc {
public:
    using Terms = std::map<Partition, Rational>;

    explicit SymFunc(Basis basis = Basis::schur, std::optional<int> truncation = std::nullopt);

    static SymFunc one(Basis basis = Basis::schur, std::optional<int> truncation = std::nullopt);
    static SymFunc basis_element(Basis basis, const Partition& lambda, const Rational& coeff = 1,
                                 std::optional<int> truncation = std::nullopt);

    Basis basis() const noexcept { return basis_; }
    std::optional<int> truncation() const noexcept { return truncation_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Rational coeff(const Partition& lambda) const;
    /// Adds c to the coefficient of lambda. Terms beyond the truncation are
    /// silently outside the represented range and dropped.
    void add_term(const Partition& lambda, const Rational& c);

    /// Largest degree with a stored term, or -1 for zero.
    int max_degree() const noexcept;
    /// Smallest degree with a stored term, or -1 for zero.
    int min_degree() const noexcept;

    SymFunc degree_part(int n) const;
    /// Lowers the truncation to min(current, n).
    SymFunc truncated(int n) const;

    SymFunc& operator+=(const SymFunc& other);
    SymFunc& operator-=(const SymFunc& other);
    SymFunc& operator*=(const Rational& scalar);
    SymFunc operator-() const;

    /// Structural equality: same basis, truncation and terms.
    friend bool operator==(const SymFunc&, const SymFunc&) = default;

private:
    Basis basis_;
    std::optional<int> truncation_;
    Terms terms_;
};

SymFunc operator+(SymFunc a, const SymFunc& b);
SymFunc operator-(SymFunc a, const SymFunc& b);
SymFunc operator*(SymFunc a, const Rational& c);
SymFunc operator*(const SymFunc& a, const SymFunc& b);

std::optional<int> min_truncation(std::optional<int> a, std::optional<int> b);

/// Same element of Lambda expressed in `target`.
SymFunc change_basis(const SymFunc& f, Basis target);

/// Product in Lambda, computed in the power-sum basis and returned in the
/// basis of `f`.
SymFunc multiply(const SymFunc& f, const SymFunc& g);

/// s_a * s_b in the Schur basis (memoized).
const SymFunc& schur_product(const Partition& a, const Partition& b);

/// True when f and g agree as elements of Lambda on all degrees both know.
bool same_element(const SymFunc& f, const SymFunc& g);

/// p_k o f: substitute p_j -> p_{jk}. A truncation N becomes k(N+1)-1.
SymFunc plethysm_power(int k, const SymFunc& f);

/// Character of Sym(V) where V has character f, truncated at degree n:
/// exp(sum_k (p_k o f)/k). Returned in the Schur basis. Throws if f has a
/// degree-zero term.
SymFunc sym_algebra_character(const SymFunc& f, int n);

/// s_lambda -> s_{lambda^T}.
SymFunc dagger(const SymFunc& f);
/// s_lambda -> (-1)^{|lambda|} s_{lambda^T}.
SymFunc ddag(const SymFunc& f);

/// Skewing by s_1 (d/dp_1): branching rule in the Schur basis, direct
/// differentiation in the power-sum basis. Truncation N becomes N-1.
SymFunc schur_derivative(const SymFunc& f);

std::string to_string(const SymFunc& f);

}  // namespace tca
