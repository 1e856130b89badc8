#include "tca/partition.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>

namespace tca {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw PreconditionError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw PreconditionError("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    for (int p : parts)
        if (p < 0) throw PreconditionError("negative part");
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::rectangle(int count, int k) {
    if (k == 0) return Partition{};
    return Partition(std::vector<int>(static_cast<std::size_t>(count), k));
}

int Partition::multiplicity(int value) const noexcept {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

std::vector<int> Partition::multiplicities() const {
    std::vector<int> m(static_cast<std::size_t>(largest()) + 1, 0);
    for (int p : parts_) ++m[static_cast<std::size_t>(p)];
    return m;
}

Partition Partition::transpose() const {
    std::vector<int> t(static_cast<std::size_t>(largest()), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++t[static_cast<std::size_t>(j)];
    return Partition(std::move(t));
}

bool Partition::contains(const Partition& other) const noexcept {
    if (other.length() > length()) return false;
    for (std::size_t i = 0; i < other.parts_.size(); ++i)
        if (other.parts_[i] > parts_[i]) return false;
    return true;
}

Partition Partition::merged(const Partition& other) const {
    std::vector<int> all;
    all.reserve(parts_.size() + other.parts_.size());
    std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
               std::back_inserter(all), std::greater<>());
    return Partition(std::move(all));
}

Partition Partition::scaled(int k) const {
    if (k <= 0) throw PreconditionError("scale factor must be positive");
    std::vector<int> s = parts_;
    for (int& p : s) p *= k;
    return Partition(std::move(s));
}

Partition Partition::without_part(int value) const {
    auto it = std::find(parts_.begin(), parts_.end(), value);
    if (it == parts_.end()) throw PreconditionError("part not present");
    std::vector<int> s = parts_;
    s.erase(s.begin() + (it - parts_.begin()));
    return Partition(std::move(s));
}

Partition Partition::with_part(int value) const {
    return merged(Partition{value});
}

std::string Partition::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s + "]";
}

Partition Partition::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t' && c != '\n') s += c;
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw ParseError("partition must look like [3,1,1]: '" + std::string(text) + "'");
    std::vector<int> parts;
    std::string body = s.substr(1, s.size() - 2);
    std::size_t pos = 0;
    while (pos < body.size()) {
        auto comma = body.find(',', pos);
        auto tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad partition part in '" + std::string(text) + "'");
        parts.push_back(std::stoi(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
        if (pos == body.size()) throw ParseError("trailing comma in '" + std::string(text) + "'");
    }
    try {
        return Partition(std::move(parts));
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept {
    if (a.size_ != b.size_) return a.size_ <=> b.size_;
    // Reverse lexicographic: the lexicographically larger partition sorts first.
    return std::lexicographical_compare_three_way(b.parts_.begin(), b.parts_.end(), a.parts_.begin(),
                                                  a.parts_.end());
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int x : p.parts()) h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

namespace {

void enumerate_rec(int remaining, int max_part, int max_length, std::vector<int>& current,
                   std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    if (static_cast<int>(current.size()) == max_length) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        current.push_back(p);
        enumerate_rec(remaining - p, p, max_length, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n, std::optional<int> max_length, std::optional<int> max_part) {
    if (n < 0) throw PreconditionError("partition size must be non-negative");
    std::vector<Partition> out;
    std::vector<int> current;
    enumerate_rec(n, max_part.value_or(n), max_length.value_or(n), current, out);
    return out;
}

std::vector<Partition> partitions_up_to(int max_size, std::optional<int> max_length, std::optional<int> max_part) {
    std::vector<Partition> out;
    for (int n = 0; n <= max_size; ++n) {
        auto level = enumerate_partitions(n, max_length, max_part);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

Integer multiplicity_factorial(const Partition& lambda) {
    Integer r = 1;
    auto m = lambda.multiplicities();
    for (std::size_t i = 1; i < m.size(); ++i) r *= factorial(static_cast<unsigned>(m[i]));
    return r;
}

Integer z_of(const Partition& lambda) {
    Integer r = multiplicity_factorial(lambda);
    for (int p : lambda.parts()) r *= p;
    return r;
}

bool dominates(const Partition& a, const Partition& b) noexcept {
    if (a.size() != b.size()) return false;
    int sa = 0, sb = 0;
    const auto len = static_cast<std::size_t>(std::max(a.length(), b.length()));
    for (std::size_t i = 0; i < len; ++i) {
        sa += a[i];
        sb += b[i];
        if (sa < sb) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Murnaghan-Nakayama on beta-sets.

namespace {

std::vector<int> beta_set(const Partition& lambda) {
    const int l = lambda.length();
    std::vector<int> beta(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (l - 1 - i);
    return beta;  // strictly decreasing
}

Partition from_beta_set(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    const int l = static_cast<int>(beta.size());
    std::vector<int> parts(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) parts[static_cast<std::size_t>(i)] = beta[static_cast<std::size_t>(i)] - (l - 1 - i);
    return Partition(std::move(parts));
}

struct CharacterCache {
    std::mutex mutex;
    std::map<std::pair<Partition, Partition>, Integer> values;
};

CharacterCache& character_cache() {
    static CharacterCache cache;
    return cache;
}

Integer mn_rec(const Partition& lambda, const Partition& mu) {
    if (mu.empty()) return lambda.empty() ? 1 : 0;
    auto& cache = character_cache();
    auto key = std::make_pair(lambda, mu);
    {
        std::lock_guard lock(cache.mutex);
        auto it = cache.values.find(key);
        if (it != cache.values.end()) return it->second;
    }
    const int k = mu.largest();
    const Partition rest = mu.without_part(k);
    const auto beta = beta_set(lambda);
    const std::set<int> occupied(beta.begin(), beta.end());
    Integer total = 0;
    for (std::size_t idx = 0; idx < beta.size(); ++idx) {
        const int b = beta[idx];
        const int target = b - k;
        if (target < 0 || occupied.count(target)) continue;
        int between = 0;
        for (int other : beta)
            if (other > target && other < b) ++between;
        auto moved = beta;
        moved[idx] = target;
        Integer sub = mn_rec(from_beta_set(std::move(moved)), rest);
        if (between % 2) total -= sub;
        else total += sub;
    }
    std::lock_guard lock(cache.mutex);
    cache.values.emplace(std::move(key), total);
    return total;
}

}  // namespace

Integer sym_character(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw PreconditionError("sym_character: |lambda| = " + std::to_string(lambda.size()) +
                                " but |mu| = " + std::to_string(mu.size()));
    return mn_rec(lambda, mu);
}

std::size_t CharTable::index_of(const Partition& p) const {
    auto it = std::find(order.begin(), order.end(), p);
    if (it == order.end()) throw PreconditionError("partition " + p.to_string() + " not of size " + std::to_string(n));
    return static_cast<std::size_t>(it - order.begin());
}

const Integer& CharTable::at(const Partition& lambda, const Partition& mu) const {
    return values[index_of(lambda)][index_of(mu)];
}

namespace {

template <typename T>
struct PerSizeCache {
    std::mutex mutex;
    std::map<int, std::unique_ptr<T>> entries;

    template <typename Build>
    const T& get(int n, Build&& build) {
        {
            std::lock_guard lock(mutex);
            auto it = entries.find(n);
            if (it != entries.end()) return *it->second;
        }
        auto value = std::make_unique<T>(build(n));
        std::lock_guard lock(mutex);
        auto [it, inserted] = entries.emplace(n, std::move(value));
        return *it->second;
    }
};

}  // namespace

const CharTable& character_table(int n) {
    static PerSizeCache<CharTable> cache;
    return cache.get(n, [](int size) {
        CharTable t;
        t.n = size;
        t.order = enumerate_partitions(size);
        t.values.resize(t.order.size());
        for (std::size_t i = 0; i < t.order.size(); ++i)
            for (const auto& mu : t.order) t.values[i].push_back(sym_character(t.order[i], mu));
        return t;
    });
}

// ---------------------------------------------------------------------------
// Kostka numbers: peel off the horizontal strip holding the largest entry.

namespace {

void horizontal_strips(const Partition& lambda, int strip, std::size_t row, std::vector<int>& inner,
                       std::vector<Partition>& out) {
    const std::size_t len = lambda.parts().size();
    if (row == len) {
        if (strip == 0) out.push_back(Partition(inner));
        return;
    }
    const int hi = lambda[row];
    const int lo = lambda[row + 1];
    for (int v = hi; v >= lo; --v) {
        const int removed = hi - v;
        if (removed > strip) break;
        inner[row] = v;
        horizontal_strips(lambda, strip - removed, row + 1, inner, out);
    }
}

struct KostkaCache {
    std::mutex mutex;
    std::map<std::pair<Partition, std::vector<int>>, Integer> values;
};

Integer kostka_rec(const Partition& lambda, const std::vector<int>& content) {
    if (content.empty()) return lambda.empty() ? 1 : 0;
    static KostkaCache cache;
    auto key = std::make_pair(lambda, content);
    {
        std::lock_guard lock(cache.mutex);
        auto it = cache.values.find(key);
        if (it != cache.values.end()) return it->second;
    }
    std::vector<int> rest(content.begin(), content.end() - 1);
    const int strip = content.back();
    Integer total = 0;
    if (strip >= 0) {
        std::vector<Partition> inner_shapes;
        std::vector<int> inner(lambda.parts().size(), 0);
        horizontal_strips(lambda, strip, 0, inner, inner_shapes);
        for (const auto& nu : inner_shapes) total += kostka_rec(nu, rest);
    }
    std::lock_guard lock(cache.mutex);
    cache.values.emplace(std::move(key), total);
    return total;
}

}  // namespace

Integer kostka_number(const Partition& lambda, const std::vector<int>& content) {
    int total = 0;
    for (int c : content) {
        if (c < 0) throw PreconditionError("negative content entry");
        total += c;
    }
    if (total != lambda.size()) return 0;
    return kostka_rec(lambda, content);
}

std::size_t KostkaMatrices::index_of(const Partition& p) const {
    auto it = std::find(order.begin(), order.end(), p);
    if (it == order.end()) throw PreconditionError("partition " + p.to_string() + " not of size " + std::to_string(n));
    return static_cast<std::size_t>(it - order.begin());
}

const Integer& KostkaMatrices::kostka(const Partition& lambda, const Partition& mu) const {
    return K[index_of(lambda)][index_of(mu)];
}

const Integer& KostkaMatrices::inverse(const Partition& lambda, const Partition& mu) const {
    return K_inverse[index_of(lambda)][index_of(mu)];
}

const KostkaMatrices& kostka_and_inverse(int n) {
    static PerSizeCache<KostkaMatrices> cache;
    return cache.get(n, [](int size) {
        KostkaMatrices km;
        km.n = size;
        km.order = enumerate_partitions(size);
        const std::size_t p = km.order.size();
        km.K.assign(p, std::vector<Integer>(p, 0));
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = i; j < p; ++j) km.K[i][j] = kostka_number(km.order[i], km.order[j]);
        for (std::size_t i = 0; i < p; ++i) {
            if (km.K[i][i] != 1) throw std::logic_error("Kostka matrix is not unitriangular");
            for (std::size_t j = 0; j < i; ++j)
                if (kostka_number(km.order[i], km.order[j]) != 0)
                    throw std::logic_error("Kostka matrix is not upper triangular");
        }
        // Back substitution for the upper unitriangular inverse; integral by construction.
        km.K_inverse.assign(p, std::vector<Integer>(p, 0));
        for (std::size_t j = 0; j < p; ++j) {
            km.K_inverse[j][j] = 1;
            for (std::size_t ii = j; ii-- > 0;) {
                Integer acc = 0;
                for (std::size_t k = ii + 1; k <= j; ++k) acc += km.K[ii][k] * km.K_inverse[k][j];
                km.K_inverse[ii][j] = -acc;
            }
        }
        return km;
    });
}

Integer weyl_dimension(const std::vector<int>& weight) {
    const std::size_t d = weight.size();
    for (std::size_t i = 1; i < d; ++i)
        if (weight[i] > weight[i - 1]) throw PreconditionError("weyl_dimension: weight is not dominant");
    Rational r = 1;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            r *= Rational(weight[i] - weight[j] + static_cast<int>(j - i), static_cast<int>(j - i));
    r.canonicalize();
    if (!is_integer(r)) throw std::logic_error("Weyl dimension is not integral");
    return r.get_num();
}

Integer dim_schur(const Partition& lambda, int d) {
    if (d < 0) throw PreconditionError("dimension must be non-negative");
    if (lambda.length() > d) return 0;
    std::vector<int> w(static_cast<std::size_t>(d), 0);
    for (int i = 0; i < lambda.length(); ++i) w[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)];
    return weyl_dimension(w);
}

Integer dim_specht(const Partition& lambda) {
    const Partition conj = lambda.transpose();
    Integer hooks = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[static_cast<std::size_t>(i)]; ++j)
            hooks *= (lambda[static_cast<std::size_t>(i)] - j - 1) + (conj[static_cast<std::size_t>(j)] - i - 1) + 1;
    Integer n = factorial(static_cast<unsigned>(lambda.size()));
    return n / hooks;
}

std::vector<Partition> remove_one_box(const Partition& lambda) {
    std::vector<Partition> out;
    const auto& p = lambda.parts();
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i + 1 < p.size() && p[i + 1] == p[i]) continue;
        auto q = p;
        --q[i];
        out.emplace_back(std::move(q));
    }
    return out;
}

std::vector<Partition> add_one_box(const Partition& lambda) {
    std::vector<Partition> out;
    const auto& p = lambda.parts();
    for (std::size_t i = 0; i <= p.size(); ++i) {
        if (i > 0 && i < p.size() && p[i] == p[i - 1]) continue;
        auto q = p;
        if (i == p.size()) q.push_back(1);
        else ++q[i];
        out.emplace_back(std::move(q));
    }
    return out;
}

}  // namespace tca
