#include "pivar/word.hpp"

#include "pivar/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pivar {

int MultiDegree::total() const { return std::accumulate(degrees_.begin(), degrees_.end(), 0); }

int MultiDegree::support_size() const {
    int s = size();
    while (s > 0 && degrees_[s - 1] == 0)
        --s;
    return s;
}

MultiDegree MultiDegree::trimmed() const {
    return MultiDegree(std::vector<int>(degrees_.begin(), degrees_.begin() + support_size()));
}

std::string MultiDegree::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(degrees_[i]);
    }
    return out;
}

MultiDegree MultiDegree::parse(const std::string& text) {
    std::vector<int> degrees;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw Error("bad multidegree entry '" + item + "'");
        }
        if (value < 0 || item.find_first_not_of(" \t", used) != std::string::npos)
            throw Error("bad multidegree entry '" + item + "'");
        degrees.push_back(value);
    }
    if (degrees.empty())
        throw Error("empty multidegree");
    return MultiDegree(std::move(degrees));
}

bool operator==(const MultiDegree& a, const MultiDegree& b) {
    int n = std::max(a.size(), b.size());
    for (int i = 0; i < n; ++i)
        if (a[i] != b[i])
            return false;
    return true;
}

std::strong_ordering operator<=>(const MultiDegree& a, const MultiDegree& b) {
    int n = std::max(a.size(), b.size());
    for (int i = 0; i < n; ++i)
        if (auto c = a[i] <=> b[i]; c != 0)
            return c;
    return std::strong_ordering::equal;
}

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
    if (letters_.empty())
        throw Error("words of the non-unitary algebra are non-empty");
    for (Letter l : letters_)
        if (l == 0)
            throw Error("generator indices are 1-based");
}

Word::Word(std::initializer_list<int> letters) : Word(std::vector<Letter>(letters.begin(), letters.end())) {}

Word Word::letter(int index) {
    if (index < 1 || index > 255)
        throw Error("generator index out of range: " + std::to_string(index));
    return Word(std::vector<Letter>{static_cast<Letter>(index)});
}

int Word::max_letter() const { return *std::max_element(letters_.begin(), letters_.end()); }

int Word::count(int letter) const {
    return static_cast<int>(std::count(letters_.begin(), letters_.end(), letter));
}

MultiDegree Word::multidegree() const {
    std::vector<int> k(max_letter(), 0);
    for (Letter l : letters_)
        ++k[l - 1];
    return MultiDegree(std::move(k));
}

bool Word::has_multidegree(const MultiDegree& k) const {
    std::vector<int> seen(std::max(k.size(), max_letter()), 0);
    for (Letter l : letters_)
        ++seen[l - 1];
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (seen[i] != k[static_cast<int>(i)])
            return false;
    return true;
}

Word Word::operator*(const Word& rhs) const {
    Word out = *this;
    out *= rhs;
    return out;
}

Word& Word::operator*=(const Word& rhs) {
    letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
    return *this;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0)
        return c;
    return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
                                                  b.letters_.end());
}

std::size_t Word::hash() const {
    std::size_t h = 1469598103934665603ull;
    for (Letter l : letters_) {
        h ^= l;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace pivar
