#pragma once

// Brute-force reference computations used only by the tests. Each one
// avoids the library routine it checks.

#include "tca/partition.hpp"
#include "tca/rational.hpp"

#include <functional>
#include <map>
#include <random>
#include <vector>

namespace oracle {

using tca::Integer;
using tca::Partition;
using tca::Rational;

/// p(n) by Euler's pentagonal recurrence.
inline std::vector<long> partition_counts(int n_max) {
    std::vector<long> p(static_cast<std::size_t>(n_max) + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= n_max; ++n) {
        long acc = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > n) break;
            const long sign = (k % 2) ? 1 : -1;
            acc += sign * p[n - g1];
            if (g2 <= n) acc += sign * p[n - g2];
        }
        p[n] = acc;
    }
    return p;
}

/// Number of SSYT of shape lambda with content `content`, by filling cells
/// one at a time in row-major order.
inline long count_ssyt(const Partition& lambda, const std::vector<int>& content) {
    std::vector<std::vector<int>> t;
    for (int len : lambda.parts()) t.emplace_back(static_cast<std::size_t>(len), 0);
    std::vector<int> left = content;
    const int k = static_cast<int>(content.size());
    long count = 0;
    std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t c) {
        if (r == t.size()) {
            for (int x : left)
                if (x) return;
            ++count;
            return;
        }
        const std::size_t nr = c + 1 == t[r].size() ? r + 1 : r;
        const std::size_t nc = c + 1 == t[r].size() ? 0 : c + 1;
        for (int v = 1; v <= k; ++v) {
            if (left[v - 1] == 0) continue;
            if (c > 0 && t[r][c - 1] > v) continue;
            if (r > 0 && t[r - 1][c] >= v) continue;
            t[r][c] = v;
            --left[v - 1];
            fill(nr, nc);
            ++left[v - 1];
        }
        t[r][c] = 0;
    };
    if (lambda.empty()) {
        for (int x : content)
            if (x) return 0;
        return 1;
    }
    fill(0, 0);
    return count;
}

/// Coefficient of m_nu in p_mu: ways to assign each part of mu to a row so
/// that the row sums equal nu.
inline long powersum_to_monomial(const Partition& mu, const Partition& nu) {
    if (mu.size() != nu.size()) return 0;
    std::vector<int> rows = nu.parts();
    long count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == mu.parts().size()) {
            for (int x : rows)
                if (x) return;
            ++count;
            return;
        }
        for (auto& row : rows) {
            if (row >= mu.parts()[i]) {
                row -= mu.parts()[i];
                rec(i + 1);
                row += mu.parts()[i];
            }
        }
    };
    rec(0);
    return count;
}

/// Littlewood-Richardson coefficient c^nu_{lambda mu}: skew tableaux of
/// shape nu/lambda, content mu, reverse reading word a lattice word.
inline long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.size() + mu.size() != nu.size() || !nu.contains(lambda)) return 0;
    const std::size_t rows = static_cast<std::size_t>(nu.length());
    std::vector<std::vector<int>> t(rows);
    for (std::size_t r = 0; r < rows; ++r) t[r].assign(static_cast<std::size_t>(nu[r]), 0);
    std::vector<std::pair<std::size_t, std::size_t>> cells;  // reading order: rows top-down, right to left
    for (std::size_t r = 0; r < rows; ++r)
        for (int c = nu[r] - 1; c >= lambda[r]; --c) cells.emplace_back(r, static_cast<std::size_t>(c));
    const int k = mu.length();
    std::vector<int> used(static_cast<std::size_t>(k) + 1, 0);
    long count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == cells.size()) {
            ++count;
            return;
        }
        const auto [r, c] = cells[idx];
        for (int v = 1; v <= k; ++v) {
            if (used[v] == mu[static_cast<std::size_t>(v - 1)]) continue;
            if (v > 1 && used[v] + 1 > used[v - 1]) continue;  // lattice condition
            if (c + 1 < t[r].size() && t[r][c + 1] != 0 && t[r][c + 1] < v) continue;  // rows weakly increase
            if (r > 0 && static_cast<int>(c) >= lambda[r - 1] && t[r - 1][c] >= v) continue;  // columns strict
            t[r][c] = v;
            ++used[v];
            rec(idx + 1);
            --used[v];
            t[r][c] = 0;
        }
    };
    rec(0);
    return count;
}

/// 1/(k!(k+1)!) at t^{2k}: the EGF of dim (E^{tensor n})^{SL2} for E = C^2.
inline std::vector<Rational> catalan_egf(int length) {
    std::vector<Rational> out(static_cast<std::size_t>(length), Rational(0));
    for (int n = 0; n < length; n += 2) {
        const unsigned k = static_cast<unsigned>(n / 2);
        out[n] = Rational(1) / Rational(tca::factorial(k) * tca::factorial(k + 1));
    }
    return out;
}

inline Integer catalan(unsigned k) { return tca::binomial(2 * k, k) / (k + 1); }

/// Bell numbers as sums of Stirling numbers of the second kind.
inline std::vector<Integer> bell_numbers(int length) {
    std::vector<std::vector<Integer>> S(static_cast<std::size_t>(length) + 1,
                                        std::vector<Integer>(static_cast<std::size_t>(length) + 1, 0));
    S[0][0] = 1;
    for (int n = 1; n <= length; ++n)
        for (int k = 1; k <= n; ++k) S[n][k] = k * S[n - 1][k] + S[n - 1][k - 1];
    std::vector<Integer> out;
    for (int n = 0; n < length; ++n) {
        Integer b = 0;
        for (int k = 0; k <= n; ++k) b += S[n][k];
        out.push_back(b);
    }
    return out;
}

inline Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 3);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

}  // namespace oracle
