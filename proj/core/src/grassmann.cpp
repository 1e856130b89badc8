#include "tca/grassmann.hpp"

#include <algorithm>
#include <numeric>

namespace tca {

namespace {

void check_dims(int d, int r) {
    if (d < 0 || r < 0 || r > d) throw PreconditionError("Grassmannian needs 0 <= r <= d");
}

bool weakly_decreasing(const std::vector<int>& w) {
    return std::is_sorted(w.begin(), w.end(), std::greater<>());
}

std::vector<int> padded(const Partition& p, int length) {
    std::vector<int> v = p.parts();
    v.resize(static_cast<std::size_t>(length), 0);
    return v;
}

Integer to_integer(const Rational& q) {
    if (!is_integer(q)) throw PreconditionError("expected an integral coefficient, got " + to_string(q));
    return q.get_num();
}

}  // namespace

// ---------------------------------------------------------------------------

GrClass::GrClass(int d, int r) : d_(d), r_(r) { check_dims(d, r); }

GrClass GrClass::structure_sheaf(int d, int r) { return schur_class(d, r, Partition{}); }

GrClass GrClass::schur_class(int d, int r, const Partition& alpha, const Integer& c) {
    GrClass g(d, r);
    g.add_term(alpha, c);
    return g;
}

Integer GrClass::coeff(const Partition& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Integer(0) : it->second;
}

void GrClass::add_term(const Partition& alpha, const Integer& c) {
    if (alpha.length() > r_) throw PreconditionError("GrClass: l(alpha) exceeds r");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(alpha, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GrClass& GrClass::operator+=(const GrClass& o) {
    if (o.d_ != d_ || o.r_ != r_) throw PreconditionError("GrClass: mismatched Grassmannians");
    for (const auto& [alpha, c] : o.terms_) add_term(alpha, c);
    return *this;
}

GrClass& GrClass::operator*=(const Integer& c) {
    if (c == 0) terms_.clear();
    for (auto& [alpha, v] : terms_) v *= c;
    return *this;
}

GrClass operator*(const GrClass& a, const GrClass& b) {
    if (a.d_ != b.d_ || a.r_ != b.r_) throw PreconditionError("GrClass: mismatched Grassmannians");
    GrClass out(a.d_, a.r_);
    for (const auto& [alpha, ca] : a.terms_) {
        for (const auto& [beta, cb] : b.terms_) {
            for (const auto& [nu, lr] : schur_product(alpha, beta).terms())
                if (nu.length() <= a.r_) out.add_term(nu, ca * cb * to_integer(lr));
        }
    }
    return out;
}

std::string GrClass::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [alpha, c] : terms_) {
        const Integer mag = abs(c);
        if (out.empty()) out += c < 0 ? "-" : "";
        else out += c < 0 ? " - " : " + ";
        if (mag != 1) out += tca::to_string(mag) + "*";
        out += "S" + alpha.to_string() + "(Q)";
    }
    return out;
}

LambdaGrClass::LambdaGrClass(int d, int r) : d_(d), r_(r) { check_dims(d, r); }

LambdaGrClass LambdaGrClass::trivial(const GrClass& c) {
    LambdaGrClass l(c.d(), c.r());
    l.add(Partition{}, c);
    return l;
}

void LambdaGrClass::add(const Partition& mu, const GrClass& c) {
    if (c.d() != d_ || c.r() != r_) throw PreconditionError("LambdaGrClass: mismatched Grassmannians");
    auto [it, inserted] = terms_.try_emplace(mu, c);
    if (!inserted) it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

// ---------------------------------------------------------------------------

std::optional<BottResult> bott_pushforward(int d, int r, const std::vector<int>& a, const std::vector<int>& b) {
    check_dims(d, r);
    if (a.size() != static_cast<std::size_t>(r) || b.size() != static_cast<std::size_t>(d - r))
        throw PreconditionError("bott_pushforward: weight lengths must be r and d - r");
    if (!weakly_decreasing(a) || !weakly_decreasing(b))
        throw PreconditionError("bott_pushforward: weights must be weakly decreasing");
    std::vector<int> w = a;
    w.insert(w.end(), b.begin(), b.end());
    for (int i = 0; i < d; ++i) w[i] += d - 1 - i;
    int inversions = 0;
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            if (w[i] == w[j]) return std::nullopt;
            if (w[i] < w[j]) ++inversions;
        }
    }
    std::sort(w.begin(), w.end(), std::greater<>());
    for (int i = 0; i < d; ++i) w[i] -= d - 1 - i;
    return BottResult{inversions, std::move(w)};
}

Integer bott_euler(int d, int r, const std::vector<int>& a, const std::vector<int>& b) {
    const auto res = bott_pushforward(d, r, a, b);
    if (!res) return 0;
    const Integer dim = weyl_dimension(res->weight);
    return res->degree % 2 ? Integer(-dim) : dim;
}

Integer euler_characteristic(const GrClass& c) {
    const std::vector<int> zeros(static_cast<std::size_t>(c.d() - c.r()), 0);
    Integer total = 0;
    for (const auto& [alpha, coeff] : c.terms()) total += coeff * bott_euler(c.d(), c.r(), padded(alpha, c.r()), zeros);
    return total;
}

Integer pairing(const GrClass& x, const GrClass& f) { return euler_characteristic(x * f); }

GrClass m_shifted_class(const Partition& lambda, int d, int r, ShiftKind kind) {
    check_dims(d, r);
    if (lambda.length() > r) throw PreconditionError("m_shifted_class: l(lambda) exceeds r");
    GrClass out(d, r);
    if (kind == ShiftKind::schur) {
        const auto& km = kostka_and_inverse(lambda.size());
        for (const auto& mu : enumerate_partitions(lambda.size(), r)) {
            const Integer& k = km.kostka(lambda, mu);
            if (k != 0) out += m_shifted_class(mu, d, r, ShiftKind::monomial) * k;
        }
        return out;
    }
    // Coefficient of x^nu in prod_i (x_i - 1)^{beta_i}, summed over the
    // distinct rearrangements beta of lambda; nu ranges over partitions.
    std::vector<int> beta = padded(lambda, r);
    std::sort(beta.begin(), beta.end());
    std::map<Partition, Integer> m_coeffs;
    do {
        for (const auto& nu : partitions_up_to(lambda.size(), r)) {
            Integer c = 1;
            for (int i = 0; i < r && c != 0; ++i) {
                const int ni = nu[static_cast<std::size_t>(i)];
                c *= binomial(beta[i], ni) * sign_power(beta[i] - ni);
            }
            if (c != 0) m_coeffs[nu] += c;
        }
    } while (std::next_permutation(beta.begin(), beta.end()));
    for (const auto& [nu, c] : m_coeffs) {
        if (c == 0) continue;
        const auto& km = kostka_and_inverse(nu.size());
        for (const auto& mu : enumerate_partitions(nu.size(), r)) {
            const Integer& k = km.inverse(nu, mu);
            if (k != 0) out.add_term(mu, c * k);
        }
    }
    return out;
}

SigmaExpr theta_r(const LambdaGrClass& c) {
    const int d = c.d();
    const int r = c.r();
    std::vector<std::pair<Partition, GrClass>> shifted;
    for (const auto& lambda : partitions_up_to(r * (d - r), r))
        shifted.emplace_back(lambda, m_shifted_class(lambda, d, r));
    SigmaExpr out;
    for (const auto& [mu, f] : c.terms()) {
        for (const auto& [lambda, M] : shifted) {
            const Integer v = pairing(M, f);
            if (v == 0) continue;
            out.add_term({mu, padded(lambda, r)}, Rational(v));
        }
    }
    return out;
}

ExpPoly mu_r(const LambdaGrClass& c) { return ex_sigma(theta_r(c)); }

SymFunc pushforward_module_character(int d, int r, const Partition& alpha, int N) {
    check_dims(d, r);
    if (alpha.length() > r) throw PreconditionError("pushforward_module_character: l(alpha) exceeds r");
    const GrClass a = GrClass::schur_class(d, r, alpha);
    SymFunc out(Basis::schur, N);
    for (const auto& nu : partitions_up_to(N, r))
        out.add_term(nu, Rational(euler_characteristic(a * GrClass::schur_class(d, r, nu))));
    return out;
}

SigmaExpr detring_formal_character(int d, int r) {
    check_dims(d, r);
    SigmaExpr out;
    for (const auto& lambda : partitions_up_to(r * (d - r), r, d)) {
        const auto& km = kostka_and_inverse(lambda.size());
        Integer c = 0;
        for (const auto& mu : enumerate_partitions(lambda.size(), r, d - r))
            c += km.inverse(lambda, mu) * dim_schur(mu.transpose(), d - r);
        if (c != 0) out.add_term({Partition{}, padded(lambda, r)}, Rational(c));
    }
    return out;
}

TSeries gessel_enhanced(int d, int r, int N) {
    if (r < 1) throw PreconditionError("gessel_enhanced: r must be positive");
    if (d < 0 || N < 0) throw PreconditionError("gessel_enhanced: negative argument");
    const auto all = partitions_up_to(N);
    std::map<int, TSeries> a;
    for (int i = -(r - 1); i <= r - 1; ++i) {
        TSeries s(N);
        for (const auto& lambda : all) {
            const int n = lambda.size() + i;
            if (n < 0) continue;
            s.add_term(lambda, Rational(binomial(n + d - 1, n)) / Rational(multiplicity_factorial(lambda)));
        }
        a.emplace(i, std::move(s));
    }
    std::vector<int> perm(static_cast<std::size_t>(r));
    std::iota(perm.begin(), perm.end(), 0);
    TSeries det(N);
    do {
        int inversions = 0;
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j)
                if (perm[i] > perm[j]) ++inversions;
        TSeries term = TSeries::constant(sign_power(inversions), N);
        for (int i = 0; i < r && !term.is_zero(); ++i) term = term * a.at(perm[i] - i);
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

EnhancedExpr rank1_enhanced_closed(int d) {
    if (d < 1) throw PreconditionError("rank1_enhanced_closed: d must be positive");
    // B_{n+1} = sum_k binom(n,k) B_{n-k} x_{k+1} with x_k = k! T_k.
    std::vector<TTPoly> x(static_cast<std::size_t>(d));
    for (int k = 1; k < d; ++k) x[k] = TTPoly::T(k) * Rational(factorial(k));
    std::vector<TTPoly> bell{TTPoly::constant(1)};
    for (int n = 0; n + 1 < d; ++n) {
        TTPoly next;
        for (int k = 0; k <= n; ++k) next += bell[n - k] * x[k + 1] * Rational(binomial(n, k));
        bell.push_back(std::move(next));
    }
    TTPoly p;
    for (int j = 0; j < d; ++j) p += bell[j] * (Rational(binomial(d - 1, j)) / Rational(factorial(j)));
    return EnhancedExpr::exp_T0(1, p);
}

CharPolyForm detring_char_poly_form(int d, int r) {
    return char_poly_form(phi_sigma(detring_formal_character(d, r)), d);
}

}  // namespace tca
