#include "builtin_series.hpp"

#include "tca/dfinite.hpp"

#include <charconv>

namespace tca::cli::builtin {

namespace {

std::optional<int> parse_int(const std::string& s) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

// Character of the named GL(k) representation in variables offset..offset+k-1
// of a torus with n variables.
std::optional<LaurentPoly> factor_rep(const std::string& rep, int k, int offset, int n) {
    const auto var = [&](int i, int pw = 1) { return LaurentPoly::variable(n, offset + i, pw); };
    LaurentPoly std_(n), dual(n);
    for (int i = 0; i < k; ++i) {
        std_ += var(i);
        dual += var(i, -1);
    }
    if (rep == "standard") return std_;
    if (rep == "dual") return dual;
    if (rep == "standard+dual") return std_ + dual;
    if (rep == "sym2" || rep == "wedge2") {
        LaurentPoly out(n);
        for (int i = 0; i < k; ++i)
            for (int j = i; j < k; ++j)
                if (i != j || rep == "sym2") out += var(i) * var(j);
        return out;
    }
    return std::nullopt;
}

CoeffSeries catalan_ogf(int length) {
    if (length <= 0) return {};
    const LaurentPoly e = LaurentPoly::variable(2, 0) + LaurentPoly::variable(2, 1);
    CoeffSeries out;
    for (const auto& x : invariant_dimensions(parse_group("sl2"), e, length - 1)) out.emplace_back(x);
    return out;
}

}  // namespace

std::optional<LaurentPoly> representation(const std::vector<GroupFactor>& group, const std::string& rep) {
    if (group.empty()) {
        const auto m = parse_int(rep);
        if (!m || *m < 0) return std::nullopt;
        return LaurentPoly::constant(0, *m);
    }
    int n = 0;
    for (const auto& g : group) n += g.k;
    LaurentPoly out = LaurentPoly::constant(n, 1);
    int offset = 0;
    for (const auto& g : group) {
        const auto f = factor_rep(rep, g.k, offset, n);
        if (!f) return std::nullopt;
        out = out * *f;
        offset += g.k;
    }
    return out;
}

std::optional<CoeffSeries> named_series(const std::string& name, int length) {
    if (name == "catalan-egf") {
        CoeffSeries c = catalan_ogf(length);
        return hadamard(c, inverse_factorial_sequence(length));
    }
    if (name == "catalan-sq-ogf") {
        const CoeffSeries c = catalan_ogf(length);
        return hadamard(c, c);
    }
    if (name == "bell-egf") {
        // B_{n+1} = sum_k binom(n, k) B_k
        std::vector<Integer> bell;
        for (int n = 0; n < length; ++n) {
            if (n == 0) {
                bell.emplace_back(1);
                continue;
            }
            Integer b = 0;
            for (int k = 0; k < n; ++k) b += binomial(n - 1, k) * bell[static_cast<std::size_t>(k)];
            bell.push_back(b);
        }
        CoeffSeries out;
        for (int n = 0; n < length; ++n) out.push_back(Rational(bell[n]) / Rational(factorial(n)));
        return out;
    }
    return std::nullopt;
}

std::optional<SymFunc> object_character(const std::string& rep) {
    if (rep == "sym2") return SymFunc::basis_element(Basis::schur, Partition{2});
    if (rep == "wedge2") return SymFunc::basis_element(Basis::schur, Partition{1, 1});
    if (rep.rfind("tensor", 0) == 0) {
        const auto k = parse_int(rep.substr(6));
        if (!k || *k < 1) return std::nullopt;
        SymFunc out = SymFunc::one();
        const SymFunc s1 = SymFunc::basis_element(Basis::schur, Partition{1});
        for (int i = 0; i < *k; ++i) out = out * s1;
        return out;
    }
    try {
        const Partition lambda = Partition::parse(rep);
        if (lambda.empty()) return std::nullopt;
        return SymFunc::basis_element(Basis::schur, lambda);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

}  // namespace tca::cli::builtin
