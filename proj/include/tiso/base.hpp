#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tiso {

using Int = std::int64_t;

// Largest |k| accepted as a class label; keeps in+jm splits and degree sums
// far away from 64-bit overflow.
inline constexpr Int max_label = Int{1} << 40;

struct NotACorner : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PredicateViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonCoprimeConfig : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotInDomain : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotOnHyperplane : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct AmbiguousPath : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct WindowEmpty : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// x mod m in [0, m) for any sign of x; m > 0.
constexpr Int mod_floor(Int x, Int m) {
    Int r = x % m;
    return r < 0 ? r + m : r;
}

// Smallest q with q*m >= x; m > 0.
constexpr Int ceil_div(Int x, Int m) {
    Int q = x / m;
    return q + (x % m > 0 ? 1 : 0);
}

// Inverse of a mod m (gcd(a, m) = 1); returns 0 when m = 1.
Int inverse_mod(Int a, Int m);

/// The ambient rectangle: n rows (top-down) by m columns (left-right).
class RectConfig {
  public:
    RectConfig(int rows, int cols);

    int n() const { return n_; }
    int m() const { return m_; }
    bool coprime() const { return coprime_; }
    void require_coprime() const;

    friend bool operator==(const RectConfig&, const RectConfig&) = default;

  private:
    int n_;
    int m_;
    bool coprime_;
};

enum class Sign { plus, minus };

constexpr Sign opposite(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

/// A signed isotropic root ±(e_i - d_j); the positive one labels the box of
/// the rectangle in row i, column j.
struct Root {
    int i = 1;
    int j = 1;
    Sign sign = Sign::plus;

    Root negated() const { return {i, j, opposite(sign)}; }
    bool positive() const { return sign == Sign::plus; }
    std::string label() const;  // "+e(i)-d(j)" / "-e(i)-d(j)"

    auto operator<=>(const Root&) const = default;
};

// eta^i nu^j acting on roots: nu shifts the row index up by one, eta shifts
// the column index down by one; indices wrap inside [n] and [m].
Root transported(const Root& root, Int i, Int j, const RectConfig& rect);

}  // namespace tiso
