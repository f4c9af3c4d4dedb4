#include "pivar/partitions.hpp"

#include "pivar/errors.hpp"
#include "pivar/rational.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

namespace pivar {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw Error("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw Error("partition parts must be weakly decreasing");
    }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::dominates(const Partition& other) const {
    int a = 0, b = 0;
    int n = std::max(length(), other.length());
    for (int i = 0; i < n; ++i) {
        a += (*this)[i];
        b += other[i];
        if (a < b)
            return false;
    }
    return a == b;
}

std::string Partition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

Partition Partition::parse(const std::string& text) {
    std::string body = text;
    body.erase(std::remove_if(body.begin(), body.end(), [](char c) { return c == '(' || c == ')' || c == ' '; }),
               body.end());
    MultiDegree k = MultiDegree::parse(body);
    return Partition(k.degrees());
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    int n = std::max(a.length(), b.length());
    for (int i = 0; i < n; ++i)
        if (auto c = a[i] <=> b[i]; c != 0)
            return c;
    return std::strong_ordering::equal;
}

std::vector<Partition> partitions_of(int n, int max_parts) {
    if (n < 1)
        throw Error("partitions_of needs n >= 1");
    std::vector<Partition> out;
    std::vector<int> parts;
    // Largest first part first gives decreasing lexicographic order.
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(parts);
            return;
        }
        if (static_cast<int>(parts.size()) == max_parts)
            return;
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            parts.push_back(p);
            self(self, remaining - p, p);
            parts.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::uint64_t hook_dim(const Partition& lambda) {
    const int n = lambda.weight();
    std::vector<int> hooks;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[i]; ++j) {
            int arm = lambda[i] - j - 1;
            int leg = 0;
            while (i + leg + 1 < lambda.length() && lambda[i + leg + 1] > j)
                ++leg;
            hooks.push_back(arm + leg + 1);
        }
    Integer num = 1, den = 1;
    for (int i = 2; i <= n; ++i)
        num *= i;
    for (int h : hooks)
        den *= h;
    Integer q = num / den;
    return q.get_ui();
}

std::uint64_t count_semistandard_tableaux(const Partition& shape, const MultiDegree& content) {
    if (shape.weight() != content.total())
        throw WeightMismatch(shape.weight(), content.total());
    // Place letters 1, 2, ... in turn; letter i fills a horizontal strip of size content[i].
    // current[r] = length of row r filled so far.
    std::vector<int> current(shape.length(), 0);
    const int letters = content.size();
    std::uint64_t count = 0;

    // Distribute `left` cells of the current letter over rows r.., each row r gaining
    // at most min(shape[r], previous[r-1]) - current[r] cells (horizontal strip).
    auto place = [&](auto&& self, int letter) -> void {
        if (letter == letters) {
            ++count;
            return;
        }
        const std::vector<int> before = current;
        auto strip = [&](auto&& fill, int row, int left) -> void {
            if (left == 0) {
                self(self, letter + 1);
                return;
            }
            if (row == shape.length())
                return;
            int cap = shape[row] - before[row];
            if (row > 0)
                cap = std::min(cap, before[row - 1] - before[row]);
            for (int take = std::min(cap, left); take >= 0; --take) {
                current[row] = before[row] + take;
                fill(fill, row + 1, left - take);
            }
            current[row] = before[row];
        };
        strip(strip, 0, content[letter]);
        current = before;
    };
    place(place, 0);
    return count;
}

std::uint64_t KostkaTable::get(const Partition& shape, const MultiDegree& content) {
    auto key = std::make_pair(shape, content);
    {
        std::shared_lock lock(mutex_);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
    }
    std::uint64_t value = count_semistandard_tableaux(shape, content);
    std::unique_lock lock(mutex_);
    memo_.emplace(std::move(key), value);
    return value;
}

std::size_t KostkaTable::size() const {
    std::shared_lock lock(mutex_);
    return memo_.size();
}

KostkaTable& KostkaTable::global() {
    static KostkaTable table;
    return table;
}

std::uint64_t kostka(const Partition& shape, const MultiDegree& content) {
    return KostkaTable::global().get(shape, content);
}

} // namespace pivar
