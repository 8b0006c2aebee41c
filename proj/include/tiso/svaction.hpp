#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tiso/base.hpp"
#include "tiso/classes.hpp"
#include "tiso/diagrams.hpp"

namespace tiso {

/// An integer supervector (a_1..a_n | b_1..b_m); the block sizes carry the
/// rectangle shape.
struct SuperVector {
    std::vector<Int> a;
    std::vector<Int> b;

    int n() const { return static_cast<int>(a.size()); }
    int m() const { return static_cast<int>(b.size()); }

    /// Componentwise shift by c (the constant vector c*(1,..,1|1,..,1)).
    SuperVector shifted(Int c) const;

    friend bool operator==(const SuperVector&, const SuperVector&) = default;
    friend std::strong_ordering operator<=>(const SuperVector& x, const SuperVector& y) {
        if (auto c = x.a <=> y.a; c != 0) return c;
        return x.b <=> y.b;
    }

    std::string str() const;  // "(3,0|0,2,4)"
};

/// Bilinear pairing with a signed root: +-(a_i - b_j).
Int pairing(const SuperVector& v, const Root& root);

// Cyclic block rotations: nu moves every a-entry down one slot (entry i
// becomes a_{i-1}), eta moves every b-entry up one slot (entry j becomes
// b_{j+1}); nu^n = eta^m = id.
SuperVector rotate_nu(const SuperVector& v);
SuperVector rotate_nu_inv(const SuperVector& v);
SuperVector rotate_eta(const SuperVector& v);
SuperVector rotate_eta_inv(const SuperVector& v);
SuperVector nu_pow(const SuperVector& v, Int t);
SuperVector eta_pow(const SuperVector& v, Int t);

/// Deformation parameter +-p/q, stored exactly. For sign minus and p,q in
/// range ([m],[n]) this is the negative special case with infinite orbits.
struct Kappa {
    Int p = 1;
    Int q = 1;
    Sign sign = Sign::minus;

    Kappa(Int p, Int q, Sign sign);
    static Kappa parse(const std::string& text);  // "-3/2", "+3/2", "3/2"
    static Kappa principal(const RectConfig& rect) {
        return {rect.m(), rect.n(), Sign::minus};
    }

    bool negative_special(const RectConfig& rect) const {
        return sign == Sign::minus && p <= rect.m() && q <= rect.n();
    }

    /// Step applied to the b-entry by a positive move: +p when kappa < 0,
    /// -p when kappa > 0 (the a-entry always steps by +q).
    Int step_b() const { return sign == Sign::minus ? p : -p; }
    /// Pairing value on the lower hyperplane (image of a positive move).
    Int lower_threshold() const { return q - step_b(); }

    std::string str() const;
};

/// Membership of the hyperplane selected by the root's sign: pairing 0 for
/// plus, lower_threshold for minus.
bool on_hyperplane(const SuperVector& v, const Root& root, const Kappa& kappa);

/// The morphism of the root: plus adds (q to a_i, step_b to b_j), minus
/// subtracts; lands on the opposite hyperplane. Throws NotOnHyperplane.
SuperVector apply_tau(const SuperVector& v, const Root& root, const Kappa& kappa);

/// The pairing matrix core[i][j] = a_i - b_j bordered by the blocks of the
/// supervector (left column a, top row b).
struct AugMatrix {
    std::vector<Int> left;
    std::vector<Int> top;
    std::vector<std::vector<Int>> core;

    static AugMatrix of(const SuperVector& v);
    /// Boxes with zero pairing, as positive roots, row-major.
    std::vector<Root> zero_boxes() const;
    std::string text() const;  // block layout, left/top borders
};

/// Base orbit representative (m(n-1),...,m,0 | 0,n,...,n(m-1)).
SuperVector base_point(const RectConfig& rect);

/// x(lambda): a_i = m(n-i) + n*boxes_in_row(i), b_j = n(j-1) + m*dual_j.
/// Sends corners to hyperplane membership and intertwines the box moves with
/// the supervector moves.
SuperVector build_x(const Partition& lambda);

/// x on a labeled diagram, constant on classes: for k = i*n + j*m,
/// eta^{-i} nu^{-j} x(lambda) shifted by k.
SuperVector build_x_hat(const LabeledDiagram& s);

/// Left inverse of build_x: the diagram whose border path supports the most
/// zeros of the pairing matrix, among candidates of the size given by the
/// degree functional; ties resolve to the containment-maximal diagram or
/// throw AmbiguousPath. Caller is responsible for v lying on the orbit.
Partition recover_a(const RectConfig& rect, const SuperVector& v);

/// The shift c with x = y + c*(1,..,1|1,..,1), if any; exists exactly when
/// the two pairing matrices agree.
std::optional<Int> translation_offset(const SuperVector& x, const SuperVector& y);

/// True when the a-entries hit every residue mod n and the b-entries every
/// residue mod m; invariant along orbits of the principal action.
bool residue_complete(const SuperVector& v);

/// Degree functional sum(a)/n - m(n-1)/2 (= sum(b)/m - n(m-1)/2 on the
/// orbit); integer there and equal to the degree of the preimage class.
/// Empty when the two sides disagree or are not integers.
std::optional<Int> sv_degree(const SuperVector& v);

}  // namespace tiso
