#pragma once

// Small exact polynomial types used by the series containers.

#include "tca/partition.hpp"
#include "tca/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace tca {

/// Dense univariate polynomial, ascending coefficients, no trailing zeros.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs);
    static UPoly constant(const Rational& c) { return UPoly({c}); }
    /// c * t^k
    static UPoly monomial(const Rational& c, int k);

    const std::vector<Rational>& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    Rational operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

    UPoly derivative() const;
    /// p(-t)
    UPoly reflected() const;
    Rational evaluate(const Rational& t) const;

    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    UPoly& operator*=(const Rational& s);
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(UPoly a, const Rational& s) { return a *= s; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    UPoly operator-() const { return *this * Rational(-1); }

    friend bool operator==(const UPoly&, const UPoly&) = default;

    /// Human form, highest degree first: "1/2*t^2 + 2*t + 1".
    std::string to_string(const std::string& var = "t") const;

private:
    void normalize();
    std::vector<Rational> c_;
};

/// Sparse polynomial in one family of indexed variables x_1, x_2, ...; the
/// monomial prod x_i^{m_i} is keyed by the partition with m_i parts equal
/// to i.
class IndexedPoly {
public:
    using Terms = std::map<Partition, Rational>;

    IndexedPoly() = default;
    static IndexedPoly constant(const Rational& c);
    static IndexedPoly variable(int index, const Rational& c = 1);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coeff(const Partition& m) const;
    void add_term(const Partition& m, const Rational& c);

    /// Evaluate with x_i = values[i] (missing indices read as zero).
    Rational evaluate(const std::vector<Rational>& values) const;

    IndexedPoly& operator+=(const IndexedPoly& o);
    IndexedPoly& operator*=(const Rational& s);
    friend IndexedPoly operator+(IndexedPoly a, const IndexedPoly& b) { return a += b; }
    friend IndexedPoly operator*(IndexedPoly a, const Rational& s) { return a *= s; }
    friend IndexedPoly operator*(const IndexedPoly& a, const IndexedPoly& b);
    friend bool operator==(const IndexedPoly&, const IndexedPoly&) = default;

    std::string to_string(const std::string& var) const;

private:
    Terms terms_;
};

/// Monomial t^alpha T^beta in the two variable families {t_i} and {T_i}
/// (i >= 1). Each family is keyed like IndexedPoly.
struct TTMonomial {
    Partition t;
    Partition T;
    friend bool operator==(const TTMonomial&, const TTMonomial&) = default;
    friend auto operator<=>(const TTMonomial&, const TTMonomial&) = default;
};

/// Sparse rational polynomial in {t_i} and {T_i}.
class TTPoly {
public:
    using Terms = std::map<TTMonomial, Rational>;

    TTPoly() = default;
    static TTPoly constant(const Rational& c);
    static TTPoly t(int index);
    static TTPoly T(int index);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coeff(const TTMonomial& m) const;
    void add_term(const TTMonomial& m, const Rational& c);

    bool has_T() const noexcept;
    /// Degree with deg T_d = d and deg t_d = 0.
    int T_degree() const noexcept;
    /// Degree with deg t_d = d, ignoring T (only meaningful when !has_T()).
    int t_weight() const noexcept;

    TTPoly& operator+=(const TTPoly& o);
    TTPoly& operator-=(const TTPoly& o);
    TTPoly& operator*=(const Rational& s);
    friend TTPoly operator+(TTPoly a, const TTPoly& b) { return a += b; }
    friend TTPoly operator-(TTPoly a, const TTPoly& b) { return a -= b; }
    friend TTPoly operator*(TTPoly a, const Rational& s) { return a *= s; }
    friend TTPoly operator*(const TTPoly& a, const TTPoly& b);
    TTPoly pow(unsigned k) const;
    friend bool operator==(const TTPoly&, const TTPoly&) = default;

    /// "T1^2 + 2*T2 + t1" style; highest total degree first.
    std::string to_string() const;

private:
    Terms terms_;
};

}  // namespace tca
