#include "tiso/base.hpp"

#include <numeric>
#include <utility>

namespace tiso {

Int inverse_mod(Int a, Int m) {
    if (m == 1) return 0;
    Int r0 = mod_floor(a, m), r1 = m;
    Int s0 = 1, s1 = 0;
    while (r1 != 0) {
        Int q = r0 / r1;
        r0 = std::exchange(r1, r0 - q * r1);
        s0 = std::exchange(s1, s0 - q * s1);
    }
    return mod_floor(s0, m);
}

RectConfig::RectConfig(int rows, int cols) : n_(rows), m_(cols) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("rectangle needs at least one row and one column");
    coprime_ = std::gcd(rows, cols) == 1;
}

void RectConfig::require_coprime() const {
    if (!coprime_)
        throw NonCoprimeConfig("n=" + std::to_string(n_) + ", m=" + std::to_string(m_) +
                               " are not coprime");
}

std::string Root::label() const {
    std::string out(sign == Sign::plus ? "+" : "-");
    out += "e(" + std::to_string(i) + ")-d(" + std::to_string(j) + ")";
    return out;
}

Root transported(const Root& root, Int i, Int j, const RectConfig& rect) {
    int row = static_cast<int>(mod_floor(root.i - 1 + j, rect.n())) + 1;
    int col = static_cast<int>(mod_floor(root.j - 1 - i, rect.m())) + 1;
    return {row, col, root.sign};
}

}  // namespace tiso
