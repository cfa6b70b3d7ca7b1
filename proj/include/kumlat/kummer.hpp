#pragma once

// The Beauville-Bogomolov lattice of a generalized Kummer variety:
// NS(K^nA) = NS(A) + Z*epsilon with q restricting to the intersection form
// on the surface part and q(epsilon) = -2n, the two summands orthogonal.
// On top of that: existence of square-zero divisor classes and the
// perfect-square fibration criterion for principal surfaces.

#include <optional>
#include <utility>
#include <vector>

#include "abelian_surface.hpp"
#include "error.hpp"
#include "integer.hpp"
#include "lattice.hpp"

namespace kumlat {

// NS(K^nA) as a lattice: the surface form extended by the epsilon summand
// of square -2n, epsilon always the last basis vector.
class KummerLattice {
public:
    KummerLattice(GramMatrix ns, Int n)
        : ns_(std::move(ns)),
          n_(std::move(n)),
          form_(ns_.direct_sum(GramMatrix::diagonal({-2 * n_}))) {
        if (n_ < 2) {
            throw OutOfRange("Kummer variety K^nA needs n >= 2");
        }
        if (signature(ns_).positives != 1) {
            throw InvalidSurface("surface lattice must have signature (1, rank-1)");
        }
    }

    KummerLattice(const PolarizedSurface& s, Int n) : KummerLattice(s.ns(), std::move(n)) {}

    const GramMatrix& surface_form() const { return ns_; }
    const GramMatrix& form() const { return form_; }
    const Int& n() const { return n_; }
    std::size_t picard_rank() const { return ns_.rank(); }

private:
    GramMatrix ns_;
    Int n_;
    GramMatrix form_;
};

// Divisor part in NS(A) plus an integer multiple of epsilon.
struct KummerClass {
    DivisorClass d;
    Int s;

    friend bool operator==(const KummerClass&, const KummerClass&) = default;
};

inline DivisorClass embed(const KummerLattice& k, const KummerClass& x) {
    if (x.d.size() != k.picard_rank()) {
        throw DimensionMismatch("Kummer class incompatible with surface lattice");
    }
    std::vector<Int> coords = x.d.coords();
    coords.push_back(x.s);
    return DivisorClass(std::move(coords));
}

inline KummerClass split(const KummerLattice& k, const DivisorClass& v) {
    if (v.size() != k.picard_rank() + 1) {
        throw DimensionMismatch("vector incompatible with Kummer lattice");
    }
    std::vector<Int> d(v.coords().begin(), v.coords().end() - 1);
    return KummerClass{DivisorClass(std::move(d)), v[v.size() - 1]};
}

// q(d + s*epsilon) = d.d - 2n s^2.
inline Int bb_square(const KummerLattice& k, const KummerClass& x) {
    if (x.d.size() != k.picard_rank()) {
        throw DimensionMismatch("Kummer class incompatible with surface lattice");
    }
    return inner_product(k.surface_form(), x.d, x.d) - 2 * k.n() * x.s * x.s;
}

// Bilinear polarization of bb_square; the two summands are orthogonal.
inline Int bb_pairing(const KummerLattice& k, const KummerClass& x, const KummerClass& y) {
    if (x.d.size() != k.picard_rank() || y.d.size() != k.picard_rank()) {
        throw DimensionMismatch("Kummer class incompatible with surface lattice");
    }
    return inner_product(k.surface_form(), x.d, y.d) - 2 * k.n() * x.s * y.s;
}

struct KummerSearchOutcome {
    OutcomeKind kind;
    std::optional<KummerClass> witness;
    Int bound;
};

// Existence of a nonzero square-zero class in NS(K^nA), by isotropic search
// on the extended form.
inline KummerSearchOutcome square_zero_class_exists(const KummerLattice& k, const Int& bound) {
    SearchOutcome raw = isotropic_search(k.form(), bound);
    KummerSearchOutcome out{raw.kind, std::nullopt, raw.bound};
    if (raw.witness) {
        out.witness = split(k, *raw.witness);
    }
    return out;
}

struct FibrationCheck {
    bool fibration_exists;
    std::optional<Int> m; // integer square root of n, when it exists
    Int base_dim;         // dimension of the projective base |C^|

    friend bool operator==(const FibrationCheck&, const FibrationCheck&) = default;
};

// Rational-fibration criterion for K^nA over a principally polarized
// surface of Picard number one: a fibration over P^(n-1) exists iff n is a
// perfect square (the curve mH then has genus n+1).
inline FibrationCheck fibration_check_principal(const Int& n) {
    if (n <= 2) {
        throw OutOfRange("fibration criterion is stated for n > 2");
    }
    std::optional<Int> m = exact_sqrt(n);
    return FibrationCheck{m.has_value(), m, n - 1};
}

inline KummerLattice principal_kummer(const Int& n) {
    return KummerLattice(GramMatrix::parse("2"), n);
}

struct SurveyRow {
    Int n;
    bool fibration_exists;
    std::optional<Int> m;
    std::optional<KummerClass> witness;       // set when the cross-check found one
    std::optional<OutcomeKind> outcome_kind;  // set when the cross-check ran
};

// Batch run of the criterion for n = 3..n_max. For n <= cross_check_limit
// the lattice-side search is run independently at cross_check_bound and its
// existence verdict compared against the perfect-square criterion; any
// disagreement is a library bug, reported as ConsistencyFailure.
// FoundWitness and ExistsNoWitness both assert existence (the latter means
// the smallest witness lies beyond the bound); ProvablyNone denies it.
inline std::vector<SurveyRow> survey_principal(const Int& n_max,
                                               const Int& cross_check_bound,
                                               const Int& cross_check_limit) {
    if (n_max < 3) {
        throw OutOfRange("survey needs max n >= 3");
    }
    if (cross_check_bound <= 0) {
        throw OutOfRange("cross-check bound must be positive");
    }
    std::vector<SurveyRow> rows;
    for (Int n = 3; n <= n_max; ++n) {
        const FibrationCheck check = fibration_check_principal(n);
        SurveyRow row{n, check.fibration_exists, check.m, std::nullopt, std::nullopt};
        if (n <= cross_check_limit) {
            const KummerLattice k = principal_kummer(n);
            const KummerSearchOutcome search = square_zero_class_exists(k, cross_check_bound);
            row.outcome_kind = search.kind;
            row.witness = search.witness;
            switch (search.kind) {
                case OutcomeKind::FoundWitness:
                    if (!check.fibration_exists) {
                        throw ConsistencyFailure(
                            "square-zero witness found but n is not a perfect square");
                    }
                    if (bb_square(k, *search.witness) != 0) {
                        throw ConsistencyFailure("search witness is not square-zero");
                    }
                    break;
                case OutcomeKind::ProvablyNone:
                    if (check.fibration_exists) {
                        throw ConsistencyFailure(
                            "no square-zero class although n is a perfect square");
                    }
                    break;
                case OutcomeKind::ExistsNoWitness:
                    if (!check.fibration_exists) {
                        throw ConsistencyFailure(
                            "square-zero class exists although n is not a perfect square");
                    }
                    break;
                case OutcomeKind::UnknownBelowBound:
                    break; // no verdict, nothing to compare
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace kumlat
