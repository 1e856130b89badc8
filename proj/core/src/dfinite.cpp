#include "tca/dfinite.hpp"

#include "tca/linalg.hpp"

#include <algorithm>

namespace tca {

namespace {

// Coefficient of t^n in t^j f^{(i)}: f_m m!/(n-j)! with m = n - j + i.
Rational shifted_coeff(const CoeffSeries& f, long n, int i, int j) {
    if (n < j) return 0;
    const long m = n - j + i;
    if (m >= static_cast<long>(f.size()) || f[m] == 0) return 0;
    Rational c = f[m];
    for (long k = n - j + 1; k <= m; ++k) c *= k;
    return c;
}

OdeOperator normalize(std::vector<Rational> v, int order, int degree) {
    Integer lcm = 1;
    for (const auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    Integer g = 0;
    for (const auto& x : v) {
        const Integer num = Rational(x * lcm).get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    }
    const Rational scale = Rational(lcm) / Rational(g);
    OdeOperator op;
    for (int i = 0; i <= order; ++i) {
        std::vector<Rational> c(v.begin() + i * (degree + 1), v.begin() + (i + 1) * (degree + 1));
        for (auto& x : c) x *= scale;
        op.coeffs.emplace_back(std::move(c));
    }
    const UPoly& lead = op.coeffs.back();
    if (lead[static_cast<std::size_t>(lead.degree())] < 0)
        for (auto& p : op.coeffs) p = -p;
    int ord0 = 0;
    while (lead[static_cast<std::size_t>(ord0)] == 0) ++ord0;
    if (ord0 > 0 && ord0 < order) {
        const UPoly shift = UPoly::monomial(1, order - ord0);
        for (auto& p : op.coeffs) p = p * shift;
    }
    return op;
}

}  // namespace

GuessResult guess_ode(const CoeffSeries& f, int R, int D) {
    if (R < 0 || D < 0) throw PreconditionError("guess_ode: negative search bound");
    const long need = static_cast<long>(R + 1) * (D + 1) + R + kGuessMargin;
    if (static_cast<long>(f.size()) < need)
        throw InsufficientCoefficients("guess_ode: need at least " + std::to_string(need) + " coefficients, got " +
                                       std::to_string(f.size()));
    const long L = static_cast<long>(f.size());
    for (int order = 0; order <= R; ++order) {
        for (int degree = 0; degree <= D; ++degree) {
            const std::size_t cols = static_cast<std::size_t>(order + 1) * (degree + 1);
            Matrix rows;
            for (long n = 0; n + order < L; ++n) {
                std::vector<Rational> row(cols);
                bool any = false;
                for (int i = 0; i <= order; ++i) {
                    for (int j = 0; j <= degree; ++j) {
                        auto& x = row[static_cast<std::size_t>(i) * (degree + 1) + j];
                        x = shifted_coeff(f, n, i, j);
                        any = any || x != 0;
                    }
                }
                if (any) rows.push_back(std::move(row));
            }
            const Matrix kernel = nullspace(std::move(rows), cols);
            const auto lead_nonzero = [&](const std::vector<Rational>& v) {
                return std::any_of(v.end() - (degree + 1), v.end(), [](const Rational& x) { return x != 0; });
            };
            const auto hit = std::find_if(kernel.begin(), kernel.end(), lead_nonzero);
            if (hit == kernel.end()) continue;
            OdeOperator op = normalize(*hit, order, degree);
            const CoeffSeries residual = apply_ode(op, f);
            if (std::any_of(residual.begin(), residual.end(), [](const Rational& x) { return x != 0; }))
                continue;
            return {std::move(op), ""};
        }
    }
    return {std::nullopt, "no operator with order <= " + std::to_string(R) + " and degree <= " + std::to_string(D) +
                              " annihilates the series; this is not a proof that the series is not D-finite"};
}

CoeffSeries apply_ode(const OdeOperator& op, const CoeffSeries& f) {
    const long R = op.order();
    const long L = static_cast<long>(f.size()) - std::max(R, 0L);
    CoeffSeries out(static_cast<std::size_t>(std::max(L, 0L)), Rational(0));
    for (long n = 0; n < L; ++n) {
        for (long i = 0; i <= R; ++i) {
            const UPoly& p = op.coeffs[static_cast<std::size_t>(i)];
            for (int j = 0; j <= p.degree(); ++j)
                if (p[j] != 0) out[n] += p[j] * shifted_coeff(f, n, static_cast<int>(i), j);
        }
    }
    return out;
}

CoeffSeries hadamard(const CoeffSeries& f, const CoeffSeries& g) {
    CoeffSeries out(std::min(f.size(), g.size()));
    for (std::size_t n = 0; n < out.size(); ++n) out[n] = f[n] * g[n];
    return out;
}

CoeffSeries factorial_sequence(int length) {
    CoeffSeries out;
    Rational v = 1;
    for (int n = 0; n < length; ++n) {
        if (n > 0) v *= n;
        out.push_back(v);
    }
    return out;
}

CoeffSeries inverse_factorial_sequence(int length) {
    CoeffSeries out = factorial_sequence(length);
    for (auto& x : out) x = 1 / x;
    return out;
}

}  // namespace tca
