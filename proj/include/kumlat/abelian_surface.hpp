#pragma once

// Riemann-Roch numerology on a polarized abelian surface: Euler
// characteristics, genus, linear-system dimensions, and the incidence
// dimension count behind the genericity argument.

#include <optional>
#include <utility>

#include "error.hpp"
#include "integer.hpp"
#include "lattice.hpp"

namespace kumlat {

// Neron-Severi lattice of an abelian surface together with an ample class.
// Validates the Hodge index constraint, signature (1, rank-1), and h^2 > 0.
class PolarizedSurface {
public:
    PolarizedSurface(GramMatrix ns, DivisorClass h)
        : ns_(std::move(ns)), h_(std::move(h)) {
        const Signature sig = signature(ns_);
        if (sig.positives != 1) {
            throw InvalidSurface("surface lattice must have signature (1, rank-1)");
        }
        if (inner_product(ns_, h_, h_) <= 0) {
            throw InvalidSurface("polarization class must have positive square");
        }
    }

    const GramMatrix& ns() const { return ns_; }
    const DivisorClass& polarization() const { return h_; }
    std::size_t picard_rank() const { return ns_.rank(); }

private:
    GramMatrix ns_;
    DivisorClass h_;
};

// Divisor class of a curve. Effectiveness cannot be read off the lattice and
// is carried as a caller-asserted assumption; the nonnegative-self-
// intersection constraint is checked.
class CurveClass {
public:
    CurveClass(const PolarizedSurface& s, DivisorClass c) : c_(std::move(c)) {
        if (inner_product(s.ns(), c_, c_) < 0) {
            throw OutOfRegime("curve class must have nonnegative self-intersection");
        }
    }

    const DivisorClass& divisor() const { return c_; }

private:
    DivisorClass c_;
};

// chi(O_A(L)) = L^2 / 2; an integer because the lattice is even.
inline Int euler_characteristic(const PolarizedSurface& s, const DivisorClass& L) {
    return inner_product(s.ns(), L, L) / 2;
}

// Adjunction on an abelian surface: g(C) = C^2/2 + 1.
inline Int genus(const PolarizedSurface& s, const CurveClass& c) {
    return inner_product(s.ns(), c.divisor(), c.divisor()) / 2 + 1;
}

// dim |C| = chi(O_A(C)) - 1, valid once genus > 1 kills higher cohomology.
inline Int linear_system_dim(const PolarizedSurface& s, const CurveClass& c) {
    const Int chi = euler_characteristic(s, c.divisor());
    if (chi <= 0) { // genus = chi + 1 <= 1
        throw OutOfRegime("linear system dimension needs a curve of genus > 1");
    }
    return chi - 1;
}

struct IncidenceCount {
    Int family_dim;  // subschemes lying on a curve of the linear system
    Int hilbert_dim; // dim of the full Hilbert scheme of n points
    bool generic_free;

    friend bool operator==(const IncidenceCount&, const IncidenceCount&) = default;
};

// Dimension count for length-n subschemes contained in a curve of an
// (n-1)-dimensional linear system: (n-1) + n = 2n - 1 versus 2n, so the
// generic subscheme lies on no such curve.
inline IncidenceCount incidence_dimension_count(const Int& n) {
    if (n < 2) {
        throw OutOfRange("incidence count needs n >= 2");
    }
    return IncidenceCount{(n - 1) + n, 2 * n, true};
}

// On a principally polarized surface of Picard number one, the curve class
// mH has genus m^2 + 1; a genus-(n+1) curve exists iff n is a perfect
// square, in which case m = sqrt(n).
inline std::optional<Int> curve_for_kummer_principal(const Int& n) {
    if (n <= 2) {
        throw OutOfRange("fibration criterion is stated for n > 2");
    }
    return exact_sqrt(n);
}

} // namespace kumlat
