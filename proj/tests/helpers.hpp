#pragma once

#include <set>
#include <vector>

#include "tiso/base.hpp"
#include "tiso/diagrams.hpp"

namespace tiso::test {

inline Partition make(const RectConfig& rect, std::vector<int> parts) {
    return {rect, std::move(parts)};
}

inline Root plus(int i, int j) { return {i, j, Sign::plus}; }
inline Root minus(int i, int j) { return {i, j, Sign::minus}; }

// Independent corner oracle, straight from the definition: a box can be
// added (removed) exactly when the new box multiset is again left-justified
// with row counts weakly increasing down the rectangle. No duals involved.
inline bool oracle_outer_corner(const Partition& p, int i, int j) {
    const RectConfig& rect = p.rect();
    if (j != p.boxes_in_row(i) + 1 || j > rect.m()) return false;
    return i == rect.n() || p.boxes_in_row(i) + 1 <= p.boxes_in_row(i + 1);
}

inline bool oracle_inner_corner(const Partition& p, int i, int j) {
    if (j != p.boxes_in_row(i) || j < 1) return false;
    return i == 1 || p.boxes_in_row(i - 1) <= p.boxes_in_row(i) - 1;
}

inline std::set<Root> oracle_corners(const Partition& p, Sign sign) {
    std::set<Root> out;
    for (int i = 1; i <= p.rect().n(); ++i)
        for (int j = 1; j <= p.rect().m(); ++j) {
            bool hit = sign == Sign::plus ? oracle_outer_corner(p, i, j)
                                          : oracle_inner_corner(p, i, j);
            if (hit) out.insert({i, j, sign});
        }
    return out;
}

inline std::vector<Root> all_signed_roots(const RectConfig& rect) {
    std::vector<Root> out;
    for (Sign sign : {Sign::plus, Sign::minus})
        for (int i = 1; i <= rect.n(); ++i)
            for (int j = 1; j <= rect.m(); ++j) out.push_back({i, j, sign});
    return out;
}

}  // namespace tiso::test
