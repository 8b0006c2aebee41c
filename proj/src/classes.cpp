#include "tiso/classes.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tiso {

std::string LabeledDiagram::str() const {
    return "[" + lambda.str() + ", " + std::to_string(k) + "]";
}

std::pair<Word, Int> rotate_once(const Word& word, Int k) {
    const std::string& w = word.letters();
    std::string rotated = w.substr(1) + w.front();
    Int next = w.front() == 'd' ? k - word.rect().m() : k + word.rect().n();
    return {Word(word.rect(), std::move(rotated)), next};
}

Int label_after_rotations(const Word& word, Int k, int steps) {
    const RectConfig& rect = word.rect();
    if (steps < 0 || steps > rect.n() + rect.m())
        throw std::out_of_range("rotation count must stay within one full cycle");
    for (int t = 0; t < steps; ++t)
        k += word.letters()[t] == 'r' ? rect.n() : -rect.m();
    return k;
}

KSplit split_label(const RectConfig& rect, Int k) {
    rect.require_coprime();
    if (k > max_label || k < -max_label)
        throw std::out_of_range("class label " + std::to_string(k) + " out of supported range");
    const Int m = rect.m();
    Int i = mod_floor(mod_floor(k, m) * inverse_mod(rect.n(), m), m);
    return {i, (k - i * rect.n()) / m};
}

namespace {

void check_label(Int k) {
    if (k > max_label || k < -max_label)
        throw std::out_of_range("class label " + std::to_string(k) + " out of supported range");
}

}  // namespace

EquivClass::EquivClass(const LabeledDiagram& seed) {
    const RectConfig& rect = seed.lambda.rect();
    rect.require_coprime();
    check_label(seed.k);

    const int count = rect.n() + rect.m();
    members_.reserve(count);
    std::vector<std::string> words;
    words.reserve(count);

    Word w = seed.lambda.word();
    Int k = seed.k;
    for (int t = 0; t < count; ++t) {
        members_.push_back({Partition::from_word(w), k});
        words.push_back(w.letters());
        std::tie(w, k) = rotate_once(w, k);
    }

    canonical_ = 0;
    for (int t = 1; t < count; ++t) {
        if (members_[t].k < members_[canonical_].k ||
            (members_[t].k == members_[canonical_].k && words[t] < words[canonical_]))
            canonical_ = t;
    }
}

std::optional<ClassWitness> EquivClass::witness(const Root& root) const {
    const RectConfig& rc = rect();
    for (int t = 0; t < static_cast<int>(members_.size()); ++t) {
        const LabeledDiagram& s = members_[t];
        KSplit split = split_label(rc, s.k);
        Root box = transported(root, split.i, split.j, rc);
        if (s.lambda.is_corner(box)) return ClassWitness{s, split, box, t};
    }
    return std::nullopt;
}

EquivClass EquivClass::apply(const Root& root) const {
    auto w = witness(root);
    if (!w)
        throw NotInDomain("class of " + canonical().str() + " is not in the domain of " +
                          root.label());
    return EquivClass({w->member.lambda.apply(w->box), w->member.k});
}

std::vector<EquivClass> classes_in_degree_range(const RectConfig& rect, Int lo, Int hi) {
    std::vector<EquivClass> out;
    std::set<LabeledDiagram> seen;
    for (Int d = lo; d <= hi; ++d) {
        for (const Partition& lambda : Partition::all(rect)) {
            EquivClass c(LabeledDiagram{lambda, d - lambda.size()});
            if (seen.insert(c.canonical()).second) out.push_back(std::move(c));
        }
    }
    std::sort(out.begin(), out.end(), [](const EquivClass& x, const EquivClass& y) {
        if (x.degree() != y.degree()) return x.degree() < y.degree();
        return x < y;
    });
    return out;
}

PosetResult poset_leq(const EquivClass& lo, const EquivClass& hi, std::size_t search_cap) {
    if (lo == hi) return {PosetStatus::found, {}};
    if (lo.degree() >= hi.degree()) return {PosetStatus::not_comparable, {}};

    const RectConfig& rect = lo.rect();
    std::vector<Root> roots;
    for (int i = 1; i <= rect.n(); ++i)
        for (int j = 1; j <= rect.m(); ++j) roots.push_back({i, j, Sign::plus});

    std::map<EquivClass, std::vector<Root>> frontier{{lo, {}}};
    std::size_t visited = 1;
    for (Int d = lo.degree(); d < hi.degree(); ++d) {
        std::map<EquivClass, std::vector<Root>> next;
        for (const auto& [c, chain] : frontier) {
            for (const Root& root : roots) {
                if (!c.witness(root)) continue;
                EquivClass image = c.apply(root);
                if (next.contains(image)) continue;
                std::vector<Root> grown = chain;
                grown.push_back(root);
                if (image == hi) return {PosetStatus::found, std::move(grown)};
                if (++visited > search_cap) return {PosetStatus::cap_exceeded, {}};
                next.emplace(std::move(image), std::move(grown));
            }
        }
        if (next.empty()) return {PosetStatus::not_comparable, {}};
        frontier = std::move(next);
    }
    return {PosetStatus::not_comparable, {}};
}

}  // namespace tiso
