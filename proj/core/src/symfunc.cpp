#include "tca/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <utility>

namespace tca {

std::string basis_tag(Basis b) {
    switch (b) {
        case Basis::schur: return "s";
        case Basis::powersum: return "p";
        case Basis::monomial: return "m";
    }
    return "?";
}

Basis parse_basis(std::string_view tag) {
    if (tag == "s" || tag == "schur") return Basis::schur;
    if (tag == "p" || tag == "powersum") return Basis::powersum;
    if (tag == "m" || tag == "monomial") return Basis::monomial;
    throw ParseError("unknown basis '" + std::string(tag) + "'");
}

std::optional<int> min_truncation(std::optional<int> a, std::optional<int> b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

SymFunc::SymFunc(Basis basis, std::optional<int> truncation) : basis_(basis), truncation_(truncation) {
    if (truncation_ && *truncation_ < -1) truncation_ = -1;
}

SymFunc SymFunc::one(Basis basis, std::optional<int> truncation) {
    return basis_element(basis, Partition{}, 1, truncation);
}

SymFunc SymFunc::basis_element(Basis basis, const Partition& lambda, const Rational& coeff,
                               std::optional<int> truncation) {
    SymFunc f(basis, truncation);
    f.add_term(lambda, coeff);
    return f;
}

Rational SymFunc::coeff(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SymFunc::add_term(const Partition& lambda, const Rational& c) {
    if (c == 0) return;
    if (truncation_ && lambda.size() > *truncation_) return;
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int SymFunc::max_degree() const noexcept {
    return terms_.empty() ? -1 : terms_.rbegin()->first.size();
}

int SymFunc::min_degree() const noexcept {
    return terms_.empty() ? -1 : terms_.begin()->first.size();
}

SymFunc SymFunc::degree_part(int n) const {
    SymFunc out(basis_, truncation_);
    for (const auto& [lambda, c] : terms_)
        if (lambda.size() == n) out.terms_.emplace(lambda, c);
    return out;
}

SymFunc SymFunc::truncated(int n) const {
    SymFunc out(basis_, min_truncation(truncation_, n));
    for (const auto& [lambda, c] : terms_) out.add_term(lambda, c);
    return out;
}

SymFunc& SymFunc::operator+=(const SymFunc& other) {
    if (other.basis_ != basis_) return *this += change_basis(other, basis_);
    truncation_ = min_truncation(truncation_, other.truncation_);
    if (truncation_) {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = it->first.size() > *truncation_ ? terms_.erase(it) : std::next(it);
    }
    for (const auto& [lambda, c] : other.terms_) add_term(lambda, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& other) { return *this += (-other); }

SymFunc& SymFunc::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [lambda, c] : terms_) c *= scalar;
    return *this;
}

SymFunc SymFunc::operator-() const {
    SymFunc out = *this;
    for (auto& [lambda, c] : out.terms_) c = -c;
    return out;
}

SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
SymFunc operator*(SymFunc a, const Rational& c) { return a *= c; }
SymFunc operator*(const SymFunc& a, const SymFunc& b) { return multiply(a, b); }

namespace {

SymFunc schur_to_powersum(const SymFunc& f) {
    SymFunc out(Basis::powersum, f.truncation());
    for (const auto& [lambda, c] : f.terms()) {
        const auto& table = character_table(lambda.size());
        const auto row = table.index_of(lambda);
        for (std::size_t j = 0; j < table.order.size(); ++j) {
            const auto& chi = table.values[row][j];
            if (chi == 0) continue;
            const auto& mu = table.order[j];
            out.add_term(mu, c * Rational(chi) / Rational(z_of(mu)));
        }
    }
    return out;
}

SymFunc powersum_to_schur(const SymFunc& f) {
    SymFunc out(Basis::schur, f.truncation());
    for (const auto& [mu, c] : f.terms()) {
        const auto& table = character_table(mu.size());
        const auto col = table.index_of(mu);
        for (std::size_t i = 0; i < table.order.size(); ++i) {
            const auto& chi = table.values[i][col];
            if (chi != 0) out.add_term(table.order[i], c * Rational(chi));
        }
    }
    return out;
}

SymFunc schur_to_monomial(const SymFunc& f) {
    SymFunc out(Basis::monomial, f.truncation());
    for (const auto& [lambda, c] : f.terms()) {
        const auto& km = kostka_and_inverse(lambda.size());
        const auto row = km.index_of(lambda);
        for (std::size_t j = row; j < km.order.size(); ++j)
            if (km.K[row][j] != 0) out.add_term(km.order[j], c * Rational(km.K[row][j]));
    }
    return out;
}

SymFunc monomial_to_schur(const SymFunc& f) {
    SymFunc out(Basis::schur, f.truncation());
    for (const auto& [lambda, c] : f.terms()) {
        const auto& km = kostka_and_inverse(lambda.size());
        const auto row = km.index_of(lambda);
        for (std::size_t j = row; j < km.order.size(); ++j)
            if (km.K_inverse[row][j] != 0) out.add_term(km.order[j], c * Rational(km.K_inverse[row][j]));
    }
    return out;
}

SymFunc to_schur(const SymFunc& f) {
    switch (f.basis()) {
        case Basis::schur: return f;
        case Basis::powersum: return powersum_to_schur(f);
        case Basis::monomial: return monomial_to_schur(f);
    }
    return f;
}

}  // namespace

SymFunc change_basis(const SymFunc& f, Basis target) {
    if (f.basis() == target) return f;
    const SymFunc s = to_schur(f);
    switch (target) {
        case Basis::schur: return s;
        case Basis::powersum: return schur_to_powersum(s);
        case Basis::monomial: return schur_to_monomial(s);
    }
    return s;
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
    const SymFunc fp = change_basis(f, Basis::powersum);
    const SymFunc gp = change_basis(g, Basis::powersum);
    SymFunc prod(Basis::powersum, min_truncation(f.truncation(), g.truncation()));
    const auto limit = prod.truncation();
    for (const auto& [a, ca] : fp.terms()) {
        if (limit && a.size() > *limit) continue;
        for (const auto& [b, cb] : gp.terms()) {
            if (limit && a.size() + b.size() > *limit) continue;
            prod.add_term(a.merged(b), ca * cb);
        }
    }
    return change_basis(prod, f.basis());
}

const SymFunc& schur_product(const Partition& a, const Partition& b) {
    static std::mutex mutex;
    static std::map<std::pair<Partition, Partition>, SymFunc> cache;
    auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    SymFunc prod = multiply(SymFunc::basis_element(Basis::schur, a), SymFunc::basis_element(Basis::schur, b));
    std::lock_guard lock(mutex);
    return cache.try_emplace(std::move(key), std::move(prod)).first->second;
}

bool same_element(const SymFunc& f, const SymFunc& g) {
    const auto limit = min_truncation(f.truncation(), g.truncation());
    SymFunc a = to_schur(f);
    SymFunc b = to_schur(g);
    if (limit) {
        a = a.truncated(*limit);
        b = b.truncated(*limit);
    }
    return a.terms() == b.terms();
}

SymFunc plethysm_power(int k, const SymFunc& f) {
    if (k <= 0) throw PreconditionError("plethysm_power: k must be positive");
    const SymFunc fp = change_basis(f, Basis::powersum);
    std::optional<int> trunc;
    if (f.truncation()) trunc = k * (*f.truncation() + 1) - 1;
    SymFunc out(Basis::powersum, trunc);
    for (const auto& [mu, c] : fp.terms()) out.add_term(mu.scaled(k), c);
    return change_basis(out, f.basis());
}

SymFunc sym_algebra_character(const SymFunc& f, int n) {
    if (n < 0) throw PreconditionError("sym_algebra_character: negative degree bound");
    if (f.truncation() && *f.truncation() < n)
        throw PreconditionError("sym_algebra_character: input truncated below requested degree");
    const SymFunc fp = change_basis(f, Basis::powersum);
    if (fp.coeff(Partition{}) != 0)
        throw PreconditionError("sym_algebra_character: degree-zero term makes the series diverge");
    SymFunc log_part(Basis::powersum, n);
    for (int k = 1; k <= n; ++k) {
        SymFunc term = plethysm_power(k, fp.truncated(n / k));
        log_part += term * Rational(1, k);
    }
    // exp(g) = sum_j g^j / j!, and g^j starts in degree >= j.
    SymFunc result = SymFunc::one(Basis::powersum, n);
    SymFunc power = SymFunc::one(Basis::powersum, n);
    for (int j = 1; j <= n; ++j) {
        power = multiply(power, log_part) * Rational(1, j);
        if (power.is_zero()) break;
        result += power;
    }
    return change_basis(result, Basis::schur);
}

SymFunc dagger(const SymFunc& f) {
    const SymFunc s = to_schur(f);
    SymFunc out(Basis::schur, f.truncation());
    for (const auto& [lambda, c] : s.terms()) out.add_term(lambda.transpose(), c);
    return change_basis(out, f.basis());
}

SymFunc ddag(const SymFunc& f) {
    const SymFunc s = to_schur(f);
    SymFunc out(Basis::schur, f.truncation());
    for (const auto& [lambda, c] : s.terms())
        out.add_term(lambda.transpose(), lambda.size() % 2 ? Rational(-c) : c);
    return change_basis(out, f.basis());
}

SymFunc schur_derivative(const SymFunc& f) {
    std::optional<int> trunc;
    if (f.truncation()) trunc = *f.truncation() - 1;
    if (f.basis() == Basis::powersum) {
        SymFunc out(Basis::powersum, trunc);
        for (const auto& [mu, c] : f.terms()) {
            const int ones = mu.multiplicity(1);
            if (ones) out.add_term(mu.without_part(1), c * ones);
        }
        return out;
    }
    const SymFunc s = to_schur(f);
    SymFunc out(Basis::schur, trunc);
    for (const auto& [lambda, c] : s.terms())
        for (const auto& mu : remove_one_box(lambda)) out.add_term(mu, c);
    return change_basis(out, f.basis());
}

std::string to_string(const SymFunc& f) {
    if (f.is_zero()) return "0";
    std::string out;
    const std::string tag = basis_tag(f.basis());
    for (const auto& [lambda, c] : f.terms()) {
        std::string coeff = to_string(c);
        if (!out.empty()) {
            if (c < 0) {
                out += " - ";
                coeff = to_string(Rational(-c));
            } else {
                out += " + ";
            }
        }
        if (coeff == "-1") out += "-";
        else if (coeff != "1") out += coeff + "*";
        out += tag + lambda.to_string();
    }
    if (f.truncation()) out += " + O(deg > " + std::to_string(*f.truncation()) + ")";
    return out;
}

}  // namespace tca
