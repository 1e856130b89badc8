#pragma once

// Integer partitions and the symmetric-group combinatorics built on them:
// class sizes, Murnaghan-Nakayama characters, Kostka matrices and the two
// classical dimension formulas.

#include "tca/rational.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tca {

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// never stored, so structural equality is equality of partitions.
///
/// The ordering is the canonical one used for every map and matrix in the
/// library: by size first, then reverse lexicographic among partitions of
/// the same size, so (3) < (2,1) < (1,1,1).
class Partition {
public:
    Partition() = default;

    /// Throws PreconditionError unless `parts` is weakly decreasing; zeros
    /// at the end are dropped, zeros elsewhere are rejected.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Sorts and drops zeros; negative entries are rejected.
    static Partition from_unsorted(std::vector<int> parts);

    /// The partition (k, k, ..., k) with `count` parts.
    static Partition rectangle(int count, int k);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    /// The i-th part (0-based), zero past the end.
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }
    int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    int multiplicity(int value) const noexcept;
    /// m[i] = multiplicity of i, for i = 0..largest().
    std::vector<int> multiplicities() const;

    Partition transpose() const;
    /// Young-diagram containment.
    bool contains(const Partition& other) const noexcept;
    bool fits_in_box(int rows, int cols) const noexcept {
        return length() <= rows && largest() <= cols;
    }
    /// Multiset union of parts (lambda ∪ mu).
    Partition merged(const Partition& other) const;
    /// Every part multiplied by k.
    Partition scaled(int k) const;
    /// Remove a single part equal to `value`; throws if absent.
    Partition without_part(int value) const;
    Partition with_part(int value) const;

    std::string to_string() const;
    /// Parses "[3,1,1]" or "[]"; whitespace tolerated.
    static Partition parse(std::string_view text);

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

/// All partitions of n in reverse lexicographic order, optionally limited
/// in length and/or largest part.
std::vector<Partition> enumerate_partitions(int n, std::optional<int> max_length = std::nullopt,
                                            std::optional<int> max_part = std::nullopt);

/// Partitions of every size 0..max_size, concatenated in canonical order.
std::vector<Partition> partitions_up_to(int max_size, std::optional<int> max_length = std::nullopt,
                                        std::optional<int> max_part = std::nullopt);

/// lambda! = prod_i m_i(lambda)!
Integer multiplicity_factorial(const Partition& lambda);

/// z_lambda = lambda! * prod_i i^{m_i(lambda)}; n!/z_lambda is the size of
/// the conjugacy class of cycle type lambda.
Integer z_of(const Partition& lambda);

/// Dominance order: |a| = |b| and every prefix sum of a is >= that of b.
bool dominates(const Partition& a, const Partition& b) noexcept;

/// tr(c_mu | M_lambda) by the Murnaghan-Nakayama rule. Results are memoized
/// in a process-wide cache guarded by a mutex.
Integer sym_character(const Partition& lambda, const Partition& mu);

/// The character table of S_n, rows lambda and columns mu both in
/// reverse lexicographic order.
struct CharTable {
    int n = 0;
    std::vector<Partition> order;
    std::vector<std::vector<Integer>> values;  // values[row lambda][col mu]

    const Integer& at(const Partition& lambda, const Partition& mu) const;
    std::size_t index_of(const Partition& p) const;
};

const CharTable& character_table(int n);

/// Number of semistandard tableaux of shape `lambda` and content `content`.
/// The content may be any composition; Kostka numbers are symmetric in it.
Integer kostka_number(const Partition& lambda, const std::vector<int>& content);
inline Integer kostka_number(const Partition& lambda, const Partition& content) {
    return kostka_number(lambda, content.parts());
}

/// K and K^{-1} for partitions of n in reverse lexicographic order. K is
/// upper unitriangular in that order, so its inverse is integral.
struct KostkaMatrices {
    int n = 0;
    std::vector<Partition> order;
    std::vector<std::vector<Integer>> K;
    std::vector<std::vector<Integer>> K_inverse;

    std::size_t index_of(const Partition& p) const;
    const Integer& kostka(const Partition& lambda, const Partition& mu) const;
    const Integer& inverse(const Partition& lambda, const Partition& mu) const;
};

const KostkaMatrices& kostka_and_inverse(int n);

/// Weyl dimension of the GL(w.size()) irreducible with dominant weight w
/// (negative entries allowed). Throws if w is not weakly decreasing.
Integer weyl_dimension(const std::vector<int>& weight);

/// dim S_lambda(C^d); zero when l(lambda) > d.
Integer dim_schur(const Partition& lambda, int d);

/// dim M_lambda by the hook-length formula.
Integer dim_specht(const Partition& lambda);

/// Partitions obtained from lambda by deleting one corner box.
std::vector<Partition> remove_one_box(const Partition& lambda);
/// Partitions obtained from lambda by adding one box.
std::vector<Partition> add_one_box(const Partition& lambda);

}  // namespace tca

template <>
struct std::hash<tca::Partition> {
    std::size_t operator()(const tca::Partition& p) const noexcept { return tca::PartitionHash{}(p); }
};
