#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace pivar {

using Letter = std::uint8_t;

// Per-variable degree vector (k_1, ..., k_m). Trailing zeros are insignificant
// for comparisons.
class MultiDegree {
public:
    MultiDegree() = default;
    MultiDegree(std::initializer_list<int> degrees) : degrees_(degrees) {}
    explicit MultiDegree(std::vector<int> degrees) : degrees_(std::move(degrees)) {}

    static MultiDegree ones(int n) { return MultiDegree(std::vector<int>(n, 1)); }

    const std::vector<int>& degrees() const { return degrees_; }
    int size() const { return static_cast<int>(degrees_.size()); }
    int operator[](int i) const { return i < size() ? degrees_[i] : 0; }
    int total() const;
    // Number of variables actually used (index of last non-zero entry + 1).
    int support_size() const;
    MultiDegree trimmed() const;

    // "2,1,1"
    std::string to_string() const;
    static MultiDegree parse(const std::string& text);

    friend bool operator==(const MultiDegree& a, const MultiDegree& b);
    friend std::strong_ordering operator<=>(const MultiDegree& a, const MultiDegree& b);

private:
    std::vector<int> degrees_;
};

// A monomial of the free non-unitary algebra: a non-empty sequence of 1-based
// generator indices.
class Word {
public:
    explicit Word(std::vector<Letter> letters);
    Word(std::initializer_list<int> letters);

    static Word letter(int index);

    std::size_t size() const { return letters_.size(); }
    std::span<const Letter> letters() const { return letters_; }
    int operator[](std::size_t i) const { return letters_[i]; }
    int max_letter() const;
    int count(int letter) const;
    MultiDegree multidegree() const;
    bool has_multidegree(const MultiDegree& k) const;

    Word operator*(const Word& rhs) const;
    Word& operator*=(const Word& rhs);

    // Degree-lexicographic: shorter words first, then letter by letter.
    friend std::strong_ordering operator<=>(const Word& a, const Word& b);
    friend bool operator==(const Word& a, const Word& b) = default;

    std::size_t hash() const;

private:
    std::vector<Letter> letters_;
};

struct WordHash {
    std::size_t operator()(const Word& w) const { return w.hash(); }
};

} // namespace pivar
