#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tiso/base.hpp"
#include "tiso/diagrams.hpp"

namespace tiso {

/// A pair (lambda, k); two pairs are equivalent when one arises from the
/// other by trading a full bottom row for k+m or a full first column for k+n.
struct LabeledDiagram {
    Partition lambda;
    Int k = 0;

    Int degree() const { return lambda.size() + k; }

    friend bool operator==(const LabeledDiagram& x, const LabeledDiagram& y) {
        return x.k == y.k && x.lambda == y.lambda;
    }
    friend std::strong_ordering operator<=>(const LabeledDiagram& x, const LabeledDiagram& y) {
        if (auto c = x.k <=> y.k; c != 0) return c;
        return x.lambda <=> y.lambda;
    }

    std::string str() const;  // "[(3,1), 0]"
};

/// One rotation step: the first letter moves to the end; k drops by m for a
/// leading 'd' (a row is added to the diagram) and grows by n for a leading
/// 'r' (the first column is deleted).
std::pair<Word, Int> rotate_once(const Word& word, Int k);

/// Label after `steps` rotations, read off the original word in closed form:
/// k + n*(r's consumed) - m*(d's consumed).
Int label_after_rotations(const Word& word, Int k, int steps);

/// Unique split k = i*n + j*m with 0 <= i < m (coprime n, m).
struct KSplit {
    Int i = 0;
    Int j = 0;
};
KSplit split_label(const RectConfig& rect, Int k);

/// A member of a class that lets a signed root act: the box of the root,
/// moved by eta^i nu^j for the member's label split, is a corner of the
/// member's diagram.
struct ClassWitness {
    LabeledDiagram member;
    KSplit split;
    Root box;          // transported root acting on the member's diagram
    int position = 0;  // index in rotation order from the canonical member
};

/// Equivalence class of (lambda, k): exactly m+n members, enumerated by
/// rotating the border word starting from the seed. Identity (equality,
/// ordering, hashing) goes through the canonical member: minimal k, ties by
/// lexicographically smallest word.
class EquivClass {
  public:
    explicit EquivClass(const LabeledDiagram& seed);

    const RectConfig& rect() const { return members_.front().lambda.rect(); }
    /// Rotation order from the seed; witness scans follow this order.
    const std::vector<LabeledDiagram>& members() const { return members_; }
    const LabeledDiagram& canonical() const { return members_[canonical_]; }
    Int degree() const { return members_.front().degree(); }

    /// First member, in rotation order, on which the signed root acts.
    std::optional<ClassWitness> witness(const Root& root) const;

    /// Act by the signed root; degree moves by +1 (plus) or -1 (minus).
    EquivClass apply(const Root& root) const;

    friend bool operator==(const EquivClass& x, const EquivClass& y) {
        return x.canonical() == y.canonical();
    }
    friend std::strong_ordering operator<=>(const EquivClass& x, const EquivClass& y) {
        return x.canonical() <=> y.canonical();
    }

  private:
    std::vector<LabeledDiagram> members_;
    int canonical_ = 0;
};

/// All classes with degree in [lo, hi], ascending by (degree, canonical).
std::vector<EquivClass> classes_in_degree_range(const RectConfig& rect, Int lo, Int hi);

enum class PosetStatus { found, not_comparable, cap_exceeded };

struct PosetResult {
    PosetStatus status = PosetStatus::not_comparable;
    std::vector<Root> chain;  // positive roots carrying lo to hi
};

/// Search for a chain of positive morphisms from lo to hi. The frontier is
/// bounded by degree(hi); search_cap bounds the number of classes visited.
PosetResult poset_leq(const EquivClass& lo, const EquivClass& hi, std::size_t search_cap);

}  // namespace tiso
