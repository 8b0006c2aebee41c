#include "tiso/diagrams.hpp"

#include <algorithm>
#include <numeric>

namespace tiso {

Word::Word(RectConfig rect, std::string letters) : rect_(rect), letters_(std::move(letters)) {
    int r = 0, d = 0;
    for (char c : letters_) {
        if (c == 'r')
            ++r;
        else if (c == 'd')
            ++d;
        else
            throw std::invalid_argument("word letters must be 'r' or 'd'");
    }
    if (r != rect_.m() || d != rect_.n())
        throw std::invalid_argument("word needs exactly m 'r's and n 'd's");
}

Partition::Partition(RectConfig rect, std::vector<int> parts)
    : rect_(rect), parts_(std::move(parts)) {
    if (static_cast<int>(parts_.size()) != rect_.n())
        throw std::invalid_argument("partition needs exactly n parts");
    int prev = rect_.m();
    for (int p : parts_) {
        if (p < 0 || p > prev)
            throw std::invalid_argument("parts must be weakly decreasing within [0, m]");
        prev = p;
    }
}

Partition Partition::empty(const RectConfig& rect) {
    return {rect, std::vector<int>(rect.n(), 0)};
}

Partition Partition::full(const RectConfig& rect) {
    return {rect, std::vector<int>(rect.n(), rect.m())};
}

Int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), Int{0});
}

Partition Partition::dual() const {
    std::vector<int> cols(rect_.m(), 0);
    for (int j = 1; j <= rect_.m(); ++j)
        cols[j - 1] = static_cast<int>(
            std::count_if(parts_.begin(), parts_.end(), [j](int p) { return p >= j; }));
    return {RectConfig(rect_.m(), rect_.n()), std::move(cols)};
}

Word Partition::word() const {
    std::string letters;
    letters.reserve(rect_.n() + rect_.m());
    int x = 0;
    for (int i = 1; i <= rect_.n(); ++i) {
        letters.append(boxes_in_row(i) - x, 'r');
        x = boxes_in_row(i);
        letters.push_back('d');
    }
    letters.append(rect_.m() - x, 'r');
    return {rect_, letters};
}

Partition Partition::from_word(const Word& word) {
    const RectConfig& rect = word.rect();
    std::vector<int> parts(rect.n(), 0);
    int x = 0, row = 0;
    for (char c : word.letters()) {
        if (c == 'r') {
            ++x;
        } else {
            // row of the rectangle just closed; its box count is part n-row
            parts[rect.n() - 1 - row] = x;
            ++row;
        }
    }
    return {rect, std::move(parts)};
}

std::vector<Partition> Partition::all(const RectConfig& rect) {
    std::vector<Partition> out;
    std::vector<int> parts(rect.n(), 0);
    // odometer over weakly decreasing tuples, lexicographic
    while (true) {
        out.emplace_back(rect, parts);
        int t = rect.n() - 1;
        while (t >= 0 && parts[t] == (t == 0 ? rect.m() : parts[t - 1])) --t;
        if (t < 0) break;
        ++parts[t];
        std::fill(parts.begin() + t + 1, parts.end(), 0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Root> Partition::corners(Sign sign) const {
    const Partition d = dual();
    std::vector<Root> out;
    for (int i = 1; i <= rect_.n(); ++i) {
        if (sign == Sign::plus) {
            int j = boxes_in_row(i) + 1;
            if (j <= rect_.m() && d.part(j) == rect_.n() - i) out.push_back({i, j, sign});
        } else {
            int j = boxes_in_row(i);
            if (j >= 1 && d.part(j) == rect_.n() + 1 - i) out.push_back({i, j, sign});
        }
    }
    return out;
}

bool Partition::is_corner(const Root& root) const {
    const Partition d = dual();
    if (root.sign == Sign::plus)
        return boxes_in_row(root.i) == root.j - 1 && d.part(root.j) == rect_.n() - root.i;
    return boxes_in_row(root.i) == root.j && d.part(root.j) == rect_.n() + 1 - root.i;
}

Partition Partition::apply(const Root& root) const {
    if (!is_corner(root))
        throw NotACorner("box " + root.label() + " is not a corner of " + str());
    std::vector<int> parts = parts_;
    parts[rect_.n() - root.i] += root.sign == Sign::plus ? 1 : -1;
    return {rect_, std::move(parts)};
}

Partition Partition::drop_row() const {
    if (!row_full()) throw PredicateViolated("drop_row needs a full bottom row: " + str());
    std::vector<int> parts(parts_.begin() + 1, parts_.end());
    parts.push_back(0);
    return {rect_, std::move(parts)};
}

Partition Partition::add_row() const {
    if (!row_empty()) throw PredicateViolated("add_row needs an empty top row: " + str());
    std::vector<int> parts;
    parts.reserve(parts_.size());
    parts.push_back(rect_.m());
    parts.insert(parts.end(), parts_.begin(), parts_.end() - 1);
    return {rect_, std::move(parts)};
}

Partition Partition::drop_col() const {
    if (!col_full()) throw PredicateViolated("drop_col needs a full first column: " + str());
    std::vector<int> parts = parts_;
    for (int& p : parts) --p;
    return {rect_, std::move(parts)};
}

Partition Partition::add_col() const {
    if (!col_empty()) throw PredicateViolated("add_col needs an empty last column: " + str());
    std::vector<int> parts = parts_;
    for (int& p : parts) ++p;
    return {rect_, std::move(parts)};
}

bool Partition::contains(const Partition& other) const {
    for (std::size_t t = 0; t < parts_.size(); ++t)
        if (parts_[t] < other.parts_[t]) return false;
    return true;
}

std::string Partition::str() const {
    std::string out = "(";
    for (std::size_t t = 0; t < parts_.size(); ++t) {
        if (t) out += ",";
        out += std::to_string(parts_[t]);
    }
    return out + ")";
}

}  // namespace tiso
