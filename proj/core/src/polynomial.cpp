#include "tca/polynomial.hpp"

#include <algorithm>

namespace tca {

namespace {

// Appends "c*body" to out with a sign-aware separator; body may be empty.
void append_term(std::string& out, const Rational& c, const std::string& body) {
    Rational mag = abs(c);
    if (out.empty()) {
        if (c < 0) out += "-";
    } else {
        out += c < 0 ? " - " : " + ";
    }
    if (body.empty()) {
        out += to_string(mag);
    } else {
        if (mag != 1) out += to_string(mag) + "*";
        out += body;
    }
}

std::string indexed_monomial(const Partition& m, const std::string& var) {
    std::string body;
    const auto mult = m.multiplicities();
    for (std::size_t i = mult.size(); i-- > 1;) {
        if (mult[i] == 0) continue;
        if (!body.empty()) body += "*";
        body += var + std::to_string(i);
        if (mult[i] > 1) body += "^" + std::to_string(mult[i]);
    }
    return body;
}

}  // namespace

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

UPoly UPoly::monomial(const Rational& c, int k) {
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1, Rational(0));
    v.back() = c;
    return UPoly(std::move(v));
}

void UPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return UPoly{};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
    return UPoly(std::move(d));
}

UPoly UPoly::reflected() const {
    UPoly r = *this;
    for (std::size_t k = 1; k < r.c_.size(); k += 2) r.c_[k] = -r.c_[k];
    return r;
}

Rational UPoly::evaluate(const Rational& t) const {
    Rational acc = 0;
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * t + c_[k];
    return acc;
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    normalize();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) { return *this += -o; }

UPoly& UPoly::operator*=(const Rational& s) {
    for (auto& x : c_) x *= s;
    normalize();
    return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly{};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(r));
}

std::string UPoly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k] == 0) continue;
        std::string body;
        if (k == 1) body = var;
        else if (k > 1) body = var + "^" + std::to_string(k);
        append_term(out, c_[k], body);
    }
    return out;
}

// ---------------------------------------------------------------------------

IndexedPoly IndexedPoly::constant(const Rational& c) {
    IndexedPoly p;
    p.add_term(Partition{}, c);
    return p;
}

IndexedPoly IndexedPoly::variable(int index, const Rational& c) {
    IndexedPoly p;
    p.add_term(Partition{index}, c);
    return p;
}

Rational IndexedPoly::coeff(const Partition& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void IndexedPoly::add_term(const Partition& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational IndexedPoly::evaluate(const std::vector<Rational>& values) const {
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (int idx : m.parts()) {
            const auto i = static_cast<std::size_t>(idx);
            term *= i < values.size() ? values[i] : Rational(0);
            if (term == 0) break;
        }
        total += term;
    }
    return total;
}

IndexedPoly& IndexedPoly::operator+=(const IndexedPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

IndexedPoly& IndexedPoly::operator*=(const Rational& s) {
    if (s == 0) terms_.clear();
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

IndexedPoly operator*(const IndexedPoly& a, const IndexedPoly& b) {
    IndexedPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma.merged(mb), ca * cb);
    return r;
}

std::string IndexedPoly::to_string(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        append_term(out, it->second, indexed_monomial(it->first, var));
    return out;
}

// ---------------------------------------------------------------------------

TTPoly TTPoly::constant(const Rational& c) {
    TTPoly p;
    p.add_term({}, c);
    return p;
}

TTPoly TTPoly::t(int index) {
    TTPoly p;
    p.add_term({Partition{index}, Partition{}}, 1);
    return p;
}

TTPoly TTPoly::T(int index) {
    if (index < 1) throw PreconditionError("T_0 only appears through exp(k T_0)");
    TTPoly p;
    p.add_term({Partition{}, Partition{index}}, 1);
    return p;
}

Rational TTPoly::coeff(const TTMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void TTPoly::add_term(const TTMonomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool TTPoly::has_T() const noexcept {
    return std::any_of(terms_.begin(), terms_.end(), [](const auto& kv) { return !kv.first.T.empty(); });
}

int TTPoly::T_degree() const noexcept {
    int deg = terms_.empty() ? -1 : 0;
    for (const auto& [m, c] : terms_) deg = std::max(deg, m.T.size());
    return deg;
}

int TTPoly::t_weight() const noexcept {
    int deg = terms_.empty() ? -1 : 0;
    for (const auto& [m, c] : terms_) deg = std::max(deg, m.t.size());
    return deg;
}

TTPoly& TTPoly::operator+=(const TTPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

TTPoly& TTPoly::operator-=(const TTPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

TTPoly& TTPoly::operator*=(const Rational& s) {
    if (s == 0) terms_.clear();
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

TTPoly operator*(const TTPoly& a, const TTPoly& b) {
    TTPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term({ma.t.merged(mb.t), ma.T.merged(mb.T)}, ca * cb);
    return r;
}

TTPoly TTPoly::pow(unsigned k) const {
    TTPoly r = constant(1);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

std::string TTPoly::to_string() const {
    if (terms_.empty()) return "0";
    // Highest T-degree first, then by t-part, so printed forms read like
    // the usual descending presentation.
    std::vector<std::pair<TTMonomial, Rational>> items(terms_.begin(), terms_.end());
    std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        const int da = a.first.T.size() + a.first.t.size();
        const int db = b.first.T.size() + b.first.t.size();
        if (da != db) return da > db;
        return a.first > b.first;
    });
    std::string out;
    for (const auto& [m, c] : items) {
        std::string body = indexed_monomial(m.T, "T");
        const std::string tb = indexed_monomial(m.t, "t");
        if (!tb.empty()) body = body.empty() ? tb : body + "*" + tb;
        append_term(out, c, body);
    }
    return out;
}

}  // namespace tca
