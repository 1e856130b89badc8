#include "tca/rational.hpp"

namespace tca {

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto trim = [](std::string& v) {
        while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.pop_back();
        std::size_t i = 0;
        while (i < v.size() && (v[i] == ' ' || v[i] == '\t')) ++i;
        v.erase(0, i);
    };
    trim(s);
    if (s.empty()) throw ParseError("empty rational");
    if (s.front() == '+') s.erase(0, 1);
    Rational q;
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) {
            q = Rational(Integer(s, 10));
        } else {
            Integer num(s.substr(0, slash), 10);
            Integer den(s.substr(slash + 1), 10);
            if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
            q = Rational(num, den);
            q.canonicalize();
        }
    } catch (const std::invalid_argument&) {
        throw ParseError("not a rational: '" + std::string(text) + "'");
    }
    return q;
}

Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(long n, long k) {
    if (k < 0) return 0;
    Integer r;
    if (n >= 0) {
        if (k > n) return 0;
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    } else {
        // binom(n, k) = (-1)^k binom(k - n - 1, k)
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(k - n - 1), static_cast<unsigned long>(k));
        if (k % 2 != 0) r = -r;
    }
    return r;
}

Integer falling_factorial(const Integer& x, unsigned k) {
    Integer r = 1;
    for (unsigned i = 0; i < k; ++i) r *= (x - i);
    return r;
}

Rational rational_pow(const Rational& base, unsigned exp) {
    Rational r = 1;
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace tca
