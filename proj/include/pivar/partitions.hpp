#pragma once

#include "pivar/word.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

namespace pivar {

// Weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    int operator[](int i) const { return i < length() ? parts_[i] : 0; }

    MultiDegree as_multidegree() const { return MultiDegree(parts_); }
    bool dominates(const Partition& other) const;

    // "(3,1,1)"
    std::string to_string() const;
    static Partition parse(const std::string& text);

    friend bool operator==(const Partition&, const Partition&) = default;
    // Lexicographic, shorter partition padded with zeros.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

private:
    std::vector<int> parts_;
};

// Partitions of n with at most max_parts parts, in decreasing lexicographic order.
std::vector<Partition> partitions_of(int n, int max_parts);
inline std::vector<Partition> partitions_of(int n) { return partitions_of(n, n); }

// Number of standard Young tableaux of the shape (hook-length formula).
std::uint64_t hook_dim(const Partition& lambda);

// Memoized semistandard tableau counts. Readers share a lock; inserts are exclusive.
class KostkaTable {
public:
    std::uint64_t get(const Partition& shape, const MultiDegree& content);
    std::size_t size() const;

    static KostkaTable& global();

private:
    mutable std::shared_mutex mutex_;
    std::map<std::pair<Partition, MultiDegree>, std::uint64_t> memo_;
};

// Number of SSYT of the given shape and content; throws WeightMismatch.
std::uint64_t kostka(const Partition& shape, const MultiDegree& content);

// Direct backtracking count, no memo.
std::uint64_t count_semistandard_tableaux(const Partition& shape, const MultiDegree& content);

} // namespace pivar
