#include "tca/torus.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

namespace tca {

namespace {

void require_same_vars(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.nvars() != b.nvars()) throw PreconditionError("LaurentPoly: variable counts differ");
}

// Distinct rearrangements of a partition padded to d entries.
std::vector<Exponent> rearrangements(const Partition& mu, int d) {
    Exponent e = mu.parts();
    e.resize(static_cast<std::size_t>(d), 0);
    std::sort(e.begin(), e.end());
    std::vector<Exponent> out;
    do out.push_back(e);
    while (std::next_permutation(e.begin(), e.end()));
    return out;
}

}  // namespace

LaurentPoly::LaurentPoly(int d) : d_(d) {
    if (d < 0) throw PreconditionError("LaurentPoly: negative variable count");
}

LaurentPoly LaurentPoly::constant(int d, const Rational& c) {
    LaurentPoly f(d);
    f.add_term(Exponent(static_cast<std::size_t>(d), 0), c);
    return f;
}

LaurentPoly LaurentPoly::variable(int d, int i, int power) {
    if (i < 0 || i >= d) throw PreconditionError("LaurentPoly: variable index out of range");
    Exponent e(static_cast<std::size_t>(d), 0);
    e[i] = power;
    return monomial(std::move(e));
}

LaurentPoly LaurentPoly::monomial(Exponent e, const Rational& c) {
    LaurentPoly f(static_cast<int>(e.size()));
    f.add_term(e, c);
    return f;
}

Rational LaurentPoly::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const Exponent& e, const Rational& c) {
    if (e.size() != static_cast<std::size_t>(d_)) throw PreconditionError("LaurentPoly: exponent length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational LaurentPoly::at_ones() const {
    Rational s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
    LaurentPoly result = constant(d_, 1);
    LaurentPoly base = *this;
    while (k) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return result;
}

LaurentPoly LaurentPoly::degree_part(int n) const {
    LaurentPoly out(d_);
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0) == n) out.terms_.emplace(e, c);
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    require_same_vars(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    require_same_vars(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
    if (c == 0) terms_.clear();
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    require_same_vars(a, b);
    LaurentPoly out(a.d_);
    Exponent e(static_cast<std::size_t>(a.d_));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.d_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string body;
        for (int i = 0; i < d_; ++i) {
            if (e[i] == 0) continue;
            if (!body.empty()) body += "*";
            body += "a" + std::to_string(i + 1);
            if (e[i] != 1) body += "^" + std::to_string(e[i]);
        }
        const Rational mag = abs(c);
        if (out.empty()) out += c < 0 ? "-" : "";
        else out += c < 0 ? " - " : " + ";
        if (body.empty()) out += tca::to_string(mag);
        else out += (mag == 1 ? "" : tca::to_string(mag) + "*") + body;
    }
    return out;
}

Rational constant_term(const LaurentPoly& f) { return f.coeff(Exponent(static_cast<std::size_t>(f.nvars()), 0)); }

LaurentPoly bar(const LaurentPoly& f) {
    LaurentPoly out(f.nvars());
    for (const auto& [key, c] : f.terms()) {
        Exponent e = key;
        for (auto& x : e) x = -x;
        out.add_term(e, c);
    }
    return out;
}

LaurentPoly vandermonde(int d) {
    LaurentPoly delta = LaurentPoly::constant(d, 1);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) delta = delta * (LaurentPoly::variable(d, i) - LaurentPoly::variable(d, j));
    return delta;
}

Rational weyl_inner(const LaurentPoly& f, const LaurentPoly& g, int d) {
    if (f.nvars() != d || g.nvars() != d) throw PreconditionError("weyl_inner: inputs must have d variables");
    const LaurentPoly delta = vandermonde(d);
    return constant_term(f * bar(g) * delta * bar(delta)) / Rational(factorial(static_cast<unsigned>(d)));
}

LaurentPoly schur_character(const Partition& lambda, int d) {
    LaurentPoly out(d);
    if (lambda.length() > d) return out;
    const auto& km = kostka_and_inverse(lambda.size());
    for (const auto& mu : enumerate_partitions(lambda.size(), d)) {
        const Integer& k = km.kostka(lambda, mu);
        if (k == 0) continue;
        for (const auto& e : rearrangements(mu, d)) out.add_term(e, Rational(k));
    }
    return out;
}

LaurentPoly power_sum_character(int k, int d) {
    LaurentPoly out(d);
    for (int i = 0; i < d; ++i) out += LaurentPoly::variable(d, i, k);
    return out;
}

std::vector<GroupFactor> parse_group(const std::string& text) {
    std::vector<GroupFactor> out;
    if (text == "trivial" || text.empty()) return out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto next = text.find('x', pos);
        const std::string piece = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (piece.size() < 3) throw ParseError("bad group factor '" + piece + "'");
        const std::string head = piece.substr(0, 2);
        const std::string digits = piece.substr(2);
        if (!std::all_of(digits.begin(), digits.end(), [](unsigned char ch) { return std::isdigit(ch); }))
            throw ParseError("bad group factor '" + piece + "'");
        const int k = std::stoi(digits);
        if (k < 1) throw ParseError("group factor rank must be positive");
        if (head == "gl") out.push_back({GroupFactor::Kind::gl, k});
        else if (head == "sl") out.push_back({GroupFactor::Kind::sl, k});
        else throw ParseError("bad group factor '" + piece + "'");
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

std::vector<Integer> invariant_dimensions(const std::vector<GroupFactor>& group, const LaurentPoly& weights,
                                          int n_max) {
    if (n_max < 0) throw PreconditionError("invariant_dimensions: negative n_max");
    if (group.empty()) {
        const Rational m = weights.at_ones();
        if (!is_integer(m) || m < 0) throw PreconditionError("invariant_dimensions: dimension must be a natural number");
        std::vector<Integer> dims;
        Integer p = 1;
        for (int n = 0; n <= n_max; ++n, p *= m.get_num()) dims.push_back(p);
        return dims;
    }
    int total = 0;
    for (const auto& g : group) total += g.k;
    if (weights.nvars() != total) throw PreconditionError("invariant_dimensions: weights use the wrong number of variables");

    // SL(k): alpha_last = (prod of the other k-1)^{-1}; the last slot becomes 0.
    auto restrict_torus = [&](const LaurentPoly& f) {
        LaurentPoly out(total);
        for (const auto& [key, c] : f.terms()) {
            Exponent e = key;
            int offset = 0;
            for (const auto& g : group) {
                if (g.kind == GroupFactor::Kind::sl) {
                    const int last = offset + g.k - 1;
                    for (int j = offset; j < last; ++j) e[j] -= e[last];
                    e[last] = 0;
                }
                offset += g.k;
            }
            out.add_term(e, c);
        }
        return out;
    };

    LaurentPoly delta2 = LaurentPoly::constant(total, 1);
    Integer weyl_order = 1;
    int offset = 0;
    for (const auto& g : group) {
        LaurentPoly delta = LaurentPoly::constant(total, 1);
        for (int i = 0; i < g.k; ++i)
            for (int j = i + 1; j < g.k; ++j)
                delta = delta * (LaurentPoly::variable(total, offset + i) - LaurentPoly::variable(total, offset + j));
        delta2 = delta2 * delta * bar(delta);
        weyl_order *= factorial(static_cast<unsigned>(g.k));
        offset += g.k;
    }
    delta2 = restrict_torus(delta2);
    const LaurentPoly chi = restrict_torus(weights);

    std::vector<Integer> dims;
    LaurentPoly power = LaurentPoly::constant(total, 1);
    for (int n = 0; n <= n_max; ++n) {
        if (n > 0) power = power * chi;
        // CT(power * delta2) without forming the product.
        Rational ct = 0;
        for (const auto& [e, c] : delta2.terms()) {
            Exponent neg = e;
            for (auto& x : neg) x = -x;
            ct += c * power.coeff(neg);
        }
        ct /= Rational(weyl_order);
        if (!is_integer(ct)) throw PreconditionError("invariant_dimensions: non-integral result; weights are not a G-character");
        dims.push_back(ct.get_num());
    }
    return dims;
}

TSeries KernelSeries::at(const Exponent& e) const {
    auto it = terms.find(e);
    return it == terms.end() ? TSeries(N) : it->second;
}

KernelSeries kernel_K(int d, int N) {
    if (d < 0 || N < 0) throw PreconditionError("kernel_K: negative argument");
    KernelSeries K;
    K.d = d;
    K.N = N;
    std::vector<LaurentPoly> p(static_cast<std::size_t>(N) + 1, LaurentPoly(d));
    for (int k = 1; k <= N; ++k) p[k] = power_sum_character(k, d);
    for (const auto& lambda : partitions_up_to(N)) {
        LaurentPoly pl = LaurentPoly::constant(d, 1);
        for (int part : lambda.parts()) pl = pl * p[part];
        const Rational scale = Rational(1) / Rational(multiplicity_factorial(lambda));
        for (const auto& [e, c] : pl.terms()) {
            auto it = K.terms.try_emplace(e, TSeries(N)).first;
            it->second.add_term(lambda, c * scale);
        }
    }
    return K;
}

TSeries enhanced_from_equivariant(const std::vector<LaurentPoly>& hilb, int d, int N) {
    if (d < 0 || N < 0) throw PreconditionError("enhanced_from_equivariant: negative argument");
    const LaurentPoly delta = vandermonde(d);
    const LaurentPoly delta2 = delta * bar(delta);
    const KernelSeries K = kernel_K(d, N);
    TSeries out(N);
    for (std::size_t n = 0; n < hilb.size() && n <= static_cast<std::size_t>(N); ++n) {
        if (hilb[n].nvars() != d) throw PreconditionError("enhanced_from_equivariant: character has wrong variable count");
        const LaurentPoly g = hilb[n] * delta2;
        for (const auto& [e, c] : g.terms()) {
            auto it = K.terms.find(e);
            if (it != K.terms.end()) out += it->second * c;
        }
    }
    return out * (Rational(1) / Rational(factorial(static_cast<unsigned>(d))));
}

std::vector<LaurentPoly> geometric_expand(const LaurentPoly& h, const std::vector<int>& powers, int N) {
    const int d = h.nvars();
    if (powers.size() != static_cast<std::size_t>(d)) throw PreconditionError("geometric_expand: one power per variable");
    if (N < 0) throw PreconditionError("geometric_expand: negative degree bound");
    // prod_i (1 - alpha_i)^{-n_i} = sum_e prod_i binom(e_i + n_i - 1, e_i) alpha^e
    std::vector<LaurentPoly> geo(static_cast<std::size_t>(N) + 1, LaurentPoly(d));
    Exponent e(static_cast<std::size_t>(d), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == d) {
            Integer c = 1;
            int deg = 0;
            for (int j = 0; j < d; ++j) {
                c *= binomial(e[j] + powers[j] - 1, e[j]);
                deg += e[j];
            }
            geo[deg].add_term(e, Rational(c));
            return;
        }
        for (int k = 0; k <= left; ++k) {
            e[i] = k;
            rec(i + 1, left - k);
        }
        e[i] = 0;
    };
    rec(0, N);
    std::vector<LaurentPoly> out(static_cast<std::size_t>(N) + 1, LaurentPoly(d));
    for (const auto& [eh, ch] : h.terms()) {
        const int dh = std::accumulate(eh.begin(), eh.end(), 0);
        const LaurentPoly mono = LaurentPoly::monomial(eh, ch);
        for (int k = 0; k <= N; ++k)
            if (dh + k >= 0 && dh + k <= N) out[dh + k] += mono * geo[k];
    }
    return out;
}

bool kernel_generating_identity(int d, int u_degree, int N) {
    const KernelSeries K = kernel_K(d, N);
    // [u^k] exp(sum_n u^n t_n) = sum_{lambda |- k} t^lambda / lambda!
    std::vector<TSeries> h;
    for (int k = 0; k <= u_degree; ++k) {
        TSeries s(N);
        for (const auto& lambda : enumerate_partitions(k))
            s.add_term(lambda, Rational(1) / Rational(multiplicity_factorial(lambda)));
        h.push_back(std::move(s));
    }
    for (int total = 0; total <= u_degree; ++total) {
        for (const auto& mu : enumerate_partitions(total, d)) {
            for (const auto& e : rearrangements(mu, d)) {
                TSeries rhs = TSeries::constant(1, N);
                for (int i = 0; i < d; ++i) rhs = rhs * h[e[i]];
                if (!(K.at(e) == rhs)) return false;
            }
        }
    }
    return true;
}

CoeffSeries hilbert_from_weight_presentation(const std::vector<std::vector<int>>& A, const std::vector<int>& b,
                                             int N) {
    if (N < 0) throw PreconditionError("hilbert_from_weight_presentation: negative degree bound");
    const std::size_t d = b.size();
    std::vector<int> row_size;
    for (const auto& row : A) {
        if (row.size() != d) throw PreconditionError("hilbert_from_weight_presentation: row length must match b");
        int s = 0;
        for (int v : row) {
            if (v < 0) throw PreconditionError("hilbert_from_weight_presentation: negative weight");
            s += v;
        }
        if (s == 0) throw PreconditionError("hilbert_from_weight_presentation: zero row gives an infinite fiber");
        row_size.push_back(s);
    }
    for (int v : b)
        if (v < 0) throw PreconditionError("hilbert_from_weight_presentation: negative offset");
    CoeffSeries out(static_cast<std::size_t>(N) + 1, Rational(0));
    std::vector<int> y = b;
    const int base = std::accumulate(b.begin(), b.end(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t row, int size) {
        if (row == A.size()) {
            Integer denom = 1;
            for (int v : y) denom *= factorial(static_cast<unsigned>(v));
            out[size] += Rational(1) / Rational(denom);
            return;
        }
        int taken = 0;
        while (size + taken * row_size[row] <= N) {
            rec(row + 1, size + taken * row_size[row]);
            for (std::size_t j = 0; j < d; ++j) y[j] += A[row][j];
            ++taken;
        }
        for (std::size_t j = 0; j < d; ++j) y[j] -= taken * A[row][j];
    };
    if (base <= N) rec(0, base);
    return out;
}

}  // namespace tca
