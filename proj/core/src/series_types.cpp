#include "tca/series_forms.hpp"

#include <algorithm>
#include <functional>

namespace tca {

namespace {

std::string signed_join(const std::vector<std::pair<bool, std::string>>& pieces) {
    std::string out;
    for (const auto& [negative, body] : pieces) {
        if (out.empty()) out += negative ? "-" : "";
        else out += negative ? " - " : " + ";
        out += body;
    }
    return out.empty() ? "0" : out;
}

// Formats c*body with body possibly a parenthesized sum.
std::pair<bool, std::string> scaled_piece(const Rational& c, const std::string& body) {
    const Rational mag = abs(c);
    if (body.empty()) return {c < 0, to_string(mag)};
    return {c < 0, mag == 1 ? body : to_string(mag) + "*" + body};
}

bool single_term(const std::string& poly) {
    return poly.find(" + ") == std::string::npos && poly.find(" - ") == std::string::npos;
}

}  // namespace

// ---------------------------------------------------------------------------
// SigmaExpr

SigmaExpr SigmaExpr::one() { return monomial(Partition{}, {}); }
SigmaExpr SigmaExpr::sigma(int k) { return monomial(Partition{}, {k}); }
SigmaExpr SigmaExpr::schur(const Partition& mu) { return monomial(mu, {}); }

SigmaExpr SigmaExpr::monomial(const Partition& mu, std::vector<int> sigma, const Rational& c) {
    SigmaExpr e;
    e.add_term({mu, std::move(sigma)}, c);
    return e;
}

Rational SigmaExpr::coeff(const SigmaMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SigmaExpr::add_term(SigmaMonomial m, const Rational& c) {
    if (c == 0) return;
    if (std::any_of(m.sigma.begin(), m.sigma.end(), [](int k) { return k < 0; }))
        throw PreconditionError("sigma index must be non-negative");
    std::sort(m.sigma.begin(), m.sigma.end(), std::greater<>());
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::optional<int> SigmaExpr::sigma_degree() const {
    if (terms_.empty()) return std::nullopt;
    const auto deg = terms_.begin()->first.sigma.size();
    for (const auto& [m, c] : terms_)
        if (m.sigma.size() != deg) return std::nullopt;
    return static_cast<int>(deg);
}

SigmaExpr& SigmaExpr::operator+=(const SigmaExpr& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

SigmaExpr& SigmaExpr::operator-=(const SigmaExpr& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

SigmaExpr& SigmaExpr::operator*=(const Rational& c) {
    if (c == 0) terms_.clear();
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

SigmaExpr operator*(const SigmaExpr& a, const SigmaExpr& b) {
    SigmaExpr r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            std::vector<int> sig = ma.sigma;
            sig.insert(sig.end(), mb.sigma.begin(), mb.sigma.end());
            for (const auto& [nu, lr] : schur_product(ma.s, mb.s).terms())
                r.add_term({nu, sig}, ca * cb * lr);
        }
    }
    return r;
}

std::string SigmaExpr::to_string() const {
    std::vector<std::pair<bool, std::string>> pieces;
    for (const auto& [m, c] : terms_) {
        std::string body;
        std::size_t i = 0;
        while (i < m.sigma.size()) {
            std::size_t j = i;
            while (j < m.sigma.size() && m.sigma[j] == m.sigma[i]) ++j;
            if (!body.empty()) body += "*";
            body += "sigma" + std::to_string(m.sigma[i]);
            if (j - i > 1) body += "^" + std::to_string(j - i);
            i = j;
        }
        if (!m.s.empty()) body += (body.empty() ? "s" : "*s") + m.s.to_string();
        pieces.push_back(scaled_piece(c, body));
    }
    return signed_join(pieces);
}

// ---------------------------------------------------------------------------
// ExpPoly

ExpPoly ExpPoly::exp(int r, const UPoly& p) {
    ExpPoly h;
    h.add_part(r, p);
    return h;
}

UPoly ExpPoly::part(int r) const {
    auto it = parts_.find(r);
    return it == parts_.end() ? UPoly{} : it->second;
}

void ExpPoly::add_part(int r, const UPoly& p) {
    if (r < 0) throw PreconditionError("ExpPoly exponents are non-negative");
    if (p.is_zero()) return;
    auto [it, inserted] = parts_.try_emplace(r, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) parts_.erase(it);
    }
}

ExpPoly ExpPoly::derivative() const {
    ExpPoly out;
    for (const auto& [r, p] : parts_) out.add_part(r, p.derivative() + p * Rational(r));
    return out;
}

CoeffSeries ExpPoly::taylor(int N) const {
    CoeffSeries out(static_cast<std::size_t>(std::max(N + 1, 0)), Rational(0));
    for (const auto& [r, p] : parts_) {
        // coefficient of t^n in t^k e^{rt} is r^{n-k}/(n-k)!
        for (int k = 0; k <= p.degree() && k <= N; ++k) {
            if (p[k] == 0) continue;
            Rational term = p[k];
            for (int n = k; n <= N; ++n) {
                out[n] += term;
                term *= Rational(r);
                term /= n - k + 1;
                if (term == 0) break;
            }
        }
    }
    return out;
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& o) {
    for (const auto& [r, p] : o.parts_) add_part(r, p);
    return *this;
}

ExpPoly& ExpPoly::operator-=(const ExpPoly& o) {
    for (const auto& [r, p] : o.parts_) add_part(r, -p);
    return *this;
}

ExpPoly& ExpPoly::operator*=(const Rational& c) {
    if (c == 0) parts_.clear();
    for (auto& [r, p] : parts_) p *= c;
    return *this;
}

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
    ExpPoly out;
    for (const auto& [ra, pa] : a.parts_)
        for (const auto& [rb, pb] : b.parts_) out.add_part(ra + rb, pa * pb);
    return out;
}

std::string ExpPoly::to_string() const {
    std::vector<std::pair<bool, std::string>> pieces;
    for (const auto& [r, p] : parts_) {
        std::string e = r == 0 ? "" : r == 1 ? "e^t" : "e^(" + std::to_string(r) + "t)";
        std::string poly = p.to_string();
        if (e.empty()) {
            pieces.emplace_back(false, poly);
            continue;
        }
        if (p.degree() == 0) {
            pieces.push_back(scaled_piece(p[0], e));
        } else if (single_term(poly)) {
            const bool neg = poly.front() == '-';
            pieces.emplace_back(neg, (neg ? poly.substr(1) : poly) + "*" + e);
        } else {
            pieces.emplace_back(false, "(" + poly + ")*" + e);
        }
    }
    return signed_join(pieces);
}

// ---------------------------------------------------------------------------
// TSeries

TSeries::TSeries(int truncation) : truncation_(truncation) {
    if (truncation < 0) throw PreconditionError("TSeries truncation must be non-negative");
}

TSeries TSeries::constant(const Rational& c, int truncation) {
    TSeries s(truncation);
    s.add_term(Partition{}, c);
    return s;
}

Rational TSeries::coeff(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Rational(0) : it->second;
}

void TSeries::add_term(const Partition& lambda, const Rational& c) {
    if (c == 0 || lambda.size() > truncation_) return;
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TSeries TSeries::truncated(int n) const {
    TSeries out(std::min(n, truncation_));
    for (const auto& [lambda, c] : terms_) out.add_term(lambda, c);
    return out;
}

CoeffSeries TSeries::specialize_t1() const {
    CoeffSeries out(static_cast<std::size_t>(truncation_) + 1, Rational(0));
    for (const auto& [lambda, c] : terms_)
        if (lambda.largest() <= 1) out[lambda.size()] += c;
    return out;
}

TSeries TSeries::substitute_scaled(int n) const {
    if (n <= 0) throw PreconditionError("substitute_scaled: n must be positive");
    TSeries out(truncation_);
    for (const auto& [lambda, c] : terms_) out.add_term(lambda.scaled(n), c);
    return out;
}

TSeries TSeries::exp() const {
    if (coeff(Partition{}) != 0) throw PreconditionError("TSeries::exp needs a zero constant term");
    TSeries result = constant(1, truncation_);
    TSeries power = constant(1, truncation_);
    for (int j = 1; j <= truncation_; ++j) {
        power = power * *this * Rational(1, j);
        if (power.is_zero()) break;
        result += power;
    }
    return result;
}

TSeries& TSeries::operator+=(const TSeries& o) {
    if (o.truncation_ < truncation_) *this = truncated(o.truncation_);
    for (const auto& [lambda, c] : o.terms_) add_term(lambda, c);
    return *this;
}

TSeries& TSeries::operator-=(const TSeries& o) { return *this += o * Rational(-1); }

TSeries& TSeries::operator*=(const Rational& c) {
    if (c == 0) terms_.clear();
    for (auto& [lambda, v] : terms_) v *= c;
    return *this;
}

TSeries operator*(const TSeries& a, const TSeries& b) {
    TSeries out(std::min(a.truncation_, b.truncation_));
    for (const auto& [la, ca] : a.terms_) {
        if (la.size() > out.truncation_) break;
        for (const auto& [lb, cb] : b.terms_) {
            if (la.size() + lb.size() > out.truncation_) break;
            out.add_term(la.merged(lb), ca * cb);
        }
    }
    return out;
}

std::string TSeries::to_string() const {
    IndexedPoly p;
    for (const auto& [lambda, c] : terms_) p.add_term(lambda, c);
    return p.to_string("t") + " + O(wt > " + std::to_string(truncation_) + ")";
}

// ---------------------------------------------------------------------------
// EnhancedExpr

EnhancedExpr EnhancedExpr::exp_T0(int k, const TTPoly& p) {
    EnhancedExpr e;
    e.add_part(k, p);
    return e;
}

TTPoly EnhancedExpr::part(int k) const {
    auto it = parts_.find(k);
    return it == parts_.end() ? TTPoly{} : it->second;
}

void EnhancedExpr::add_part(int k, const TTPoly& p) {
    if (k < 0) throw PreconditionError("EnhancedExpr exponents are non-negative");
    if (p.is_zero()) return;
    auto [it, inserted] = parts_.try_emplace(k, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) parts_.erase(it);
    }
}

EnhancedExpr& EnhancedExpr::operator+=(const EnhancedExpr& o) {
    for (const auto& [k, p] : o.parts_) add_part(k, p);
    return *this;
}

EnhancedExpr& EnhancedExpr::operator*=(const Rational& c) {
    if (c == 0) parts_.clear();
    for (auto& [k, p] : parts_) p *= c;
    return *this;
}

EnhancedExpr operator*(const EnhancedExpr& a, const EnhancedExpr& b) {
    EnhancedExpr out;
    for (const auto& [ka, pa] : a.parts_)
        for (const auto& [kb, pb] : b.parts_) out.add_part(ka + kb, pa * pb);
    return out;
}

std::string EnhancedExpr::to_string() const {
    std::vector<std::pair<bool, std::string>> pieces;
    for (const auto& [k, p] : parts_) {
        const std::string e = k == 0 ? "" : k == 1 ? "exp(T0)" : "exp(" + std::to_string(k) + "*T0)";
        const std::string poly = p.to_string();
        if (e.empty()) {
            pieces.emplace_back(false, poly);
        } else if (p.terms().size() == 1 && p.terms().begin()->first == TTMonomial{}) {
            pieces.push_back(scaled_piece(p.terms().begin()->second, e));
        } else if (p.terms().size() == 1) {
            const bool neg = poly.front() == '-';
            pieces.emplace_back(neg, (neg ? poly.substr(1) : poly) + "*" + e);
        } else {
            pieces.emplace_back(false, "(" + poly + ")*" + e);
        }
    }
    return signed_join(pieces);
}

// ---------------------------------------------------------------------------
// OdeOperator

std::string OdeOperator::to_string() const {
    std::vector<std::pair<bool, std::string>> pieces;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        const UPoly& p = coeffs[i];
        if (p.is_zero()) continue;
        std::string y = "y";
        if (i <= 3) y += std::string(i, '\'');
        else y += "^(" + std::to_string(i) + ")";
        const std::string poly = p.to_string();
        if (p.degree() == 0) {
            pieces.push_back(scaled_piece(p[0], y));
        } else if (single_term(poly)) {
            const bool neg = poly.front() == '-';
            pieces.emplace_back(neg, (neg ? poly.substr(1) : poly) + "*" + y);
        } else {
            pieces.emplace_back(false, "(" + poly + ")*" + y);
        }
    }
    return signed_join(pieces);
}

// ---------------------------------------------------------------------------
// CharPolyForm

bool CharPolyForm::satisfies_degree_bound() const {
    return std::all_of(entries.begin(), entries.end(),
                       [this](const Entry& e) { return e.p.T_degree() <= e.i * (m - e.i); });
}

}  // namespace tca
