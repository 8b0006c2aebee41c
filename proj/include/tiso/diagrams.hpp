#pragma once

#include <string>
#include <vector>

#include "tiso/base.hpp"

namespace tiso {

class Partition;

/// Border word of a diagram: the {r,d}-sequence tracing the upper border of
/// the diagram from the top-left to the bottom-right corner of the rectangle.
/// Always m letters 'r' and n letters 'd'.
class Word {
  public:
    Word(RectConfig rect, std::string letters);

    const RectConfig& rect() const { return rect_; }
    const std::string& letters() const { return letters_; }

    friend bool operator==(const Word& x, const Word& y) {
        return x.letters_ == y.letters_;
    }

  private:
    RectConfig rect_;
    std::string letters_;
};

/// A Young diagram inside the n x m rectangle, stored largest part first:
/// parts() = (l_1 >= ... >= l_n), each in [0, m]. The diagram sits in the
/// bottom-left corner, so row i of the rectangle (top-down) holds the
/// (n+1-i)-th part; boxes_in_row() encapsulates that reversal.
class Partition {
  public:
    Partition(RectConfig rect, std::vector<int> parts);

    static Partition empty(const RectConfig& rect);
    static Partition full(const RectConfig& rect);
    static Partition from_word(const Word& word);
    /// All diagrams inside the rectangle, lexicographically by parts.
    static std::vector<Partition> all(const RectConfig& rect);

    const RectConfig& rect() const { return rect_; }
    const std::vector<int>& parts() const { return parts_; }
    int part(int t) const { return parts_[t - 1]; }                 // 1-based
    int boxes_in_row(int i) const { return parts_[rect_.n() - i]; } // row of R
    Int size() const;

    /// Dual diagram in the transposed rectangle: part j counts rows with at
    /// least j boxes.
    Partition dual() const;
    Word word() const;

    /// Boxes whose addition (plus) or removal (minus) yields another diagram.
    /// Outer corner at (i,j): row i holds j-1 boxes and column j stops at row
    /// i; inner corner: row i ends at column j and column j ends at row i.
    std::vector<Root> corners(Sign sign) const;
    bool is_corner(const Root& root) const;

    /// Toggle the box of a signed root; inverse pairs compose to the identity.
    Partition apply(const Root& root) const;

    bool row_full() const { return parts_.front() == rect_.m(); }
    bool row_empty() const { return parts_.back() == 0; }
    bool col_full() const { return parts_.back() >= 1; }
    bool col_empty() const { return parts_.front() < rect_.m(); }

    Partition drop_row() const;  // needs row_full: shift rows down, top empty
    Partition add_row() const;   // needs row_empty: inverse of drop_row
    Partition drop_col() const;  // needs col_full: delete the first column
    Partition add_col() const;   // needs col_empty: inverse of drop_col

    /// (m,1^{n-1}) fits inside the diagram; then the bottom-left box acts as
    /// an outer pseudo-corner.
    bool has_outer_pseudo() const { return row_full() && col_full(); }
    /// Bottom row and last column empty; then the top-right box acts as an
    /// inner pseudo-corner.
    bool is_reduced() const { return row_empty() && col_empty(); }

    bool contains(const Partition& other) const;

    friend bool operator==(const Partition& x, const Partition& y) {
        return x.parts_ == y.parts_;
    }
    friend std::strong_ordering operator<=>(const Partition& x, const Partition& y) {
        return x.parts_ <=> y.parts_;
    }

    std::string str() const;  // "(3,1)"

  private:
    RectConfig rect_;
    std::vector<int> parts_;
};

}  // namespace tiso
