#pragma once

// Mukai-vector calculus on an abelian surface: the cohomological
// Fourier-Mukai transform as a signed degree swap, the Mukai pairing,
// moduli/Kummer-fiber dimensions, and the slope test for pure
// one-dimensional sheaves.
//
// NS(A) and NS(A^) are identified once and for all with a single shared
// coordinate basis (the cohomological duality sends [C] to [C^]); the
// transform below carries the whole sign bookkeeping of that convention.

#include <utility>

#include "abelian_surface.hpp"
#include "error.hpp"
#include "integer.hpp"
#include "lattice.hpp"

namespace kumlat {

// (rank, first Chern class, Euler characteristic) of a sheaf.
struct MukaiVector {
    Int r;
    DivisorClass c1;
    Int chi;

    friend bool operator==(const MukaiVector&, const MukaiVector&) = default;
};

inline MukaiVector operator+(const MukaiVector& a, const MukaiVector& b) {
    return MukaiVector{a.r + b.r, a.c1 + b.c1, a.chi + b.chi};
}

// Index of the weak index theorem; 0..2 on a surface.
class WitIndex {
public:
    explicit WitIndex(int i) : i_(i) {
        if (i < 0 || i > 2) {
            throw OutOfRange("WIT index must be 0, 1 or 2");
        }
    }

    int value() const { return i_; }
    WitIndex dual() const { return WitIndex(2 - i_); }

    friend bool operator==(const WitIndex&, const WitIndex&) = default;

private:
    int i_;
};

// Transform of the invariants of a WIT-i sheaf: degree p picks up the sign
// (-1)^(i+p) and swaps with degree 2-p, so
//   (r, c1, chi) -> ((-1)^i chi, (-1)^(i+1) c1, (-1)^i r).
inline MukaiVector fm_transform(const MukaiVector& v, WitIndex i) {
    const int s = (i.value() % 2 == 0) ? 1 : -1;
    return MukaiVector{s * v.chi, Int(-s) * v.c1, s * v.r};
}

// Transform twice, the second time with the dual index 2-i. The signs cancel
// exactly: (-1)_A^* acts trivially on even cohomology, so this is the
// identity on invariants.
inline MukaiVector fm_double_transform(const MukaiVector& v, WitIndex i) {
    return fm_transform(fm_transform(v, i), i.dual());
}

// <v, w> = c1(v).c1(w) - r(v) chi(w) - r(w) chi(v).
inline Int mukai_pairing(const MukaiVector& v, const MukaiVector& w, const GramMatrix& g) {
    return inner_product(g, v.c1, w.c1) - v.r * w.chi - w.r * v.chi;
}

struct KummerFiberDim {
    Int dim;        // <v,v> - 2
    bool in_regime; // moduli dimension <v,v> + 2 >= 8, where the deformation
                    // results apply

    friend bool operator==(const KummerFiberDim&, const KummerFiberDim&) = default;
};

// Dimension of the Kummer-type fiber K_A(v) of the Albanese map on the
// moduli space of stable sheaves with invariants v.
inline KummerFiberDim kummer_fiber_dim(const MukaiVector& v, const GramMatrix& g) {
    const Int p = mukai_pairing(v, v, g);
    return KummerFiberDim{p - 2, p >= 6};
}

// Slope comparison for pure one-dimensional sheaves: a subsheaf with
// chi/deg >= that of the whole violates strict stability. Cross-multiplied,
// no rational arithmetic.
inline bool slope_destabilizes(const Int& sub_deg, const Int& sub_chi,
                               const Int& whole_deg, const Int& whole_chi) {
    if (sub_deg <= 0 || whole_deg <= 0) {
        throw InvalidDegree("degrees of one-dimensional sheaves must be positive");
    }
    return sub_chi * whole_deg >= whole_chi * sub_deg;
}

// Invariants of the twisted ideal sheaf I_xi(C) of n generic points on a
// curve class with C^2 = 2n: rank one, c1 = [C], and chi = chi(O_A(C)) - n
// = 0. Generically such a sheaf transforms concentrated in degree 1.
inline std::pair<MukaiVector, WitIndex> generic_ideal_twist_invariants(
    const PolarizedSurface& s, const CurveClass& c, const Int& n) {
    const Int csq = inner_product(s.ns(), c.divisor(), c.divisor());
    if (csq != 2 * n) {
        throw GenusMismatch("curve class must satisfy C^2 = 2n (genus n+1)");
    }
    return {MukaiVector{1, c.divisor(), 0}, WitIndex(1)};
}

} // namespace kumlat
