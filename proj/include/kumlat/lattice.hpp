#pragma once

// Exact arithmetic for even integral symmetric bilinear forms: form
// evaluation, signature by congruent diagonalization over the rationals,
// primitive parts, and the bounded/decided search for isotropic vectors.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "integer.hpp"

namespace kumlat {

// Integer coordinate vector in a fixed lattice basis.
class DivisorClass {
public:
    DivisorClass() = default;
    explicit DivisorClass(std::vector<Int> coords) : coords_(std::move(coords)) {}
    DivisorClass(std::initializer_list<Int> coords) : coords_(coords) {}

    std::size_t size() const { return coords_.size(); }
    const Int& operator[](std::size_t i) const { return coords_[i]; }
    const std::vector<Int>& coords() const { return coords_; }

    bool is_zero() const {
        for (const Int& c : coords_) {
            if (c != 0) return false;
        }
        return true;
    }

    Int sup_norm() const {
        Int m = 0;
        for (const Int& c : coords_) {
            Int a = abs_int(c);
            if (a > m) m = a;
        }
        return m;
    }

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

private:
    std::vector<Int> coords_;
};

inline DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
    if (a.size() != b.size()) {
        throw DimensionMismatch("divisor class sizes differ");
    }
    std::vector<Int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return DivisorClass(std::move(out));
}

inline DivisorClass operator-(const DivisorClass& a) {
    std::vector<Int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
    return DivisorClass(std::move(out));
}

inline DivisorClass operator*(const Int& t, const DivisorClass& a) {
    std::vector<Int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = t * a[i];
    return DivisorClass(std::move(out));
}

// Even symmetric integer matrix of intersection numbers. Construction
// enforces the structural invariants (square, symmetric, even diagonal);
// nondegeneracy is checked by the operations that rely on it.
class GramMatrix {
public:
    explicit GramMatrix(std::vector<std::vector<Int>> rows) : rows_(std::move(rows)) {
        const std::size_t n = rows_.size();
        if (n == 0) {
            throw InvalidLattice("gram matrix must be nonempty");
        }
        for (const auto& row : rows_) {
            if (row.size() != n) {
                throw InvalidLattice("gram matrix must be square");
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (rows_[i][i] % 2 != 0) {
                throw InvalidLattice("gram matrix must have even diagonal");
            }
            for (std::size_t j = i + 1; j < n; ++j) {
                if (rows_[i][j] != rows_[j][i]) {
                    throw InvalidLattice("gram matrix must be symmetric");
                }
            }
        }
    }

    static GramMatrix diagonal(std::vector<Int> entries) {
        const std::size_t n = entries.size();
        std::vector<std::vector<Int>> rows(n, std::vector<Int>(n, Int(0)));
        for (std::size_t i = 0; i < n; ++i) rows[i][i] = std::move(entries[i]);
        return GramMatrix(std::move(rows));
    }

    // Text form: rows separated by ';', entries by ',', e.g. "2,1;1,-2".
    static GramMatrix parse(const std::string& text);

    std::size_t rank() const { return rows_.size(); }
    const Int& at(std::size_t i, std::size_t j) const { return rows_[i][j]; }
    const std::vector<std::vector<Int>>& rows() const { return rows_; }

    // Exact determinant, fraction-free Bareiss elimination.
    Int determinant() const {
        const std::size_t n = rank();
        std::vector<std::vector<Int>> m = rows_;
        Int prev = 1;
        int sign = 1;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (m[k][k] == 0) {
                std::size_t p = k + 1;
                while (p < n && m[p][k] == 0) ++p;
                if (p == n) return 0;
                std::swap(m[k], m[p]);
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i) {
                for (std::size_t j = k + 1; j < n; ++j) {
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
                }
                m[i][k] = 0;
            }
            prev = m[k][k];
        }
        return sign * m[n - 1][n - 1];
    }

    // Orthogonal direct sum, `other` appended after this block.
    GramMatrix direct_sum(const GramMatrix& other) const {
        const std::size_t n = rank(), m = other.rank();
        std::vector<std::vector<Int>> rows(n + m, std::vector<Int>(n + m, Int(0)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) rows[i][j] = rows_[i][j];
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) rows[n + i][n + j] = other.rows_[i][j];
        return GramMatrix(std::move(rows));
    }

    friend bool operator==(const GramMatrix&, const GramMatrix&) = default;

private:
    std::vector<std::vector<Int>> rows_;
};

namespace detail {

inline std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

inline std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t')) ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t')) --e;
    return s.substr(b, e - b);
}

} // namespace detail

inline GramMatrix GramMatrix::parse(const std::string& text) {
    std::vector<std::vector<Int>> rows;
    for (const std::string& row_text : detail::split(text, ';')) {
        std::vector<Int> row;
        for (const std::string& cell : detail::split(row_text, ',')) {
            row.push_back(parse_int(detail::trim(cell)));
        }
        rows.push_back(std::move(row));
    }
    return GramMatrix(std::move(rows));
}

// u^T g v, exact.
inline Int inner_product(const GramMatrix& g, const DivisorClass& u, const DivisorClass& v) {
    if (u.size() != g.rank() || v.size() != g.rank()) {
        throw DimensionMismatch("divisor class incompatible with gram matrix");
    }
    Int total = 0;
    for (std::size_t i = 0; i < g.rank(); ++i) {
        if (u[i] == 0) continue;
        Int row = 0;
        for (std::size_t j = 0; j < g.rank(); ++j) {
            row += g.at(i, j) * v[j];
        }
        total += u[i] * row;
    }
    return total;
}

struct Signature {
    std::size_t positives = 0;
    std::size_t negatives = 0;

    friend bool operator==(const Signature&, const Signature&) = default;
};

// Signature by symmetric Gaussian elimination over exact rationals. A zero
// diagonal pivot with some g[i][j] != 0 is repaired by the basis change
// e_i <- e_i +/- e_j; the two signs give new diagonal entries differing by
// 4*g[i][j], so at least one is nonzero.
inline Signature signature(const GramMatrix& g) {
    const std::size_t n = g.rank();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(g.at(i, j));

    Signature sig;
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i][i] == 0) {
            std::size_t j = i + 1;
            while (j < n && m[i][j] == 0) ++j;
            if (j == n) {
                throw DegenerateLattice("gram matrix is degenerate");
            }
            const Rat with_plus = 2 * m[i][j] + m[j][j];
            const int s = (with_plus != 0) ? 1 : -1;
            for (std::size_t k = 0; k < n; ++k) m[i][k] += s * m[j][k];
            for (std::size_t k = 0; k < n; ++k) m[k][i] += s * m[k][j];
        }
        const Rat pivot = m[i][i];
        if (pivot > 0) {
            ++sig.positives;
        } else {
            ++sig.negatives;
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            if (m[j][i] == 0) continue;
            const Rat f = m[j][i] / pivot;
            for (std::size_t k = 0; k < n; ++k) m[j][k] -= f * m[i][k];
            for (std::size_t k = 0; k < n; ++k) m[k][j] -= f * m[k][i];
        }
    }
    return sig;
}

// v / gcd(coords). Sign pattern is preserved; the gcd divisor is positive.
inline DivisorClass primitive_part(const DivisorClass& v) {
    if (v.is_zero()) {
        throw ZeroVector("primitive part of the zero vector is undefined");
    }
    const Int g = vector_gcd(v.coords());
    std::vector<Int> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
    return DivisorClass(std::move(out));
}

enum class OutcomeKind {
    FoundWitness,      // explicit square-zero vector within the bound
    ProvablyNone,      // no nonzero isotropic vector exists, at any bound
    ExistsNoWitness,   // one exists, but none within the bound
    UnknownBelowBound, // exhausted the bound without a decision
};

inline const char* to_string(OutcomeKind k) {
    switch (k) {
        case OutcomeKind::FoundWitness: return "FoundWitness";
        case OutcomeKind::ProvablyNone: return "ProvablyNone";
        case OutcomeKind::ExistsNoWitness: return "ExistsNoWitness";
        case OutcomeKind::UnknownBelowBound: return "UnknownBelowBound";
    }
    return "?";
}

struct SearchOutcome {
    OutcomeKind kind;
    std::optional<DivisorClass> witness;
    Int bound;
};

// Enumeration order for search witnesses: coordinates compare by the key
// 0 < 1 < -1 < 2 < -2 < ..., vectors lexicographically over that key.
inline bool coordinate_key_less(const Int& a, const Int& b) {
    const Int aa = abs_int(a), ab = abs_int(b);
    if (aa != ab) return aa < ab;
    return a > b; // same magnitude: positive first
}

inline bool enumeration_order_less(const DivisorClass& a, const DivisorClass& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return coordinate_key_less(a[i], b[i]);
    }
    return a.size() < b.size();
}

namespace detail {

// Flip sign so the first nonzero coordinate is positive, then reduce to the
// primitive vector on the same ray.
inline DivisorClass normalize_ray(DivisorClass v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] != 0) {
            if (v[i] < 0) v = -v;
            break;
        }
    }
    return primitive_part(v);
}

// Depth-first scan of all vectors with sup-norm <= bound in enumeration
// order; returns the first isotropic one. The first hit is automatically
// primitive: any multiple t*w is preceded by w itself.
class IsotropicScan {
public:
    IsotropicScan(const GramMatrix& g, const Int& bound) : g_(g), bound_(bound) {}

    std::optional<DivisorClass> run() {
        const std::size_t n = g_.rank();
        coords_.assign(n, Int(0));
        std::vector<Int> lin(n, Int(0));
        descend(0, true, Int(0), lin);
        return hit_;
    }

private:
    // quad = q(prefix); lin[j] = sum_{i<depth} g(i,j) * v_i for j >= depth.
    bool descend(std::size_t depth, bool all_zero, const Int& quad, const std::vector<Int>& lin) {
        const std::size_t n = g_.rank();
        if (depth == n) {
            if (!all_zero && quad == 0) {
                hit_ = DivisorClass(coords_);
                return true;
            }
            return false;
        }
        for (Int mag = 0; mag <= bound_; ++mag) {
            for (int s : {+1, -1}) {
                if (mag == 0 && s < 0) continue;
                if (all_zero && s < 0) continue;
                const Int t = s > 0 ? mag : Int(-mag);
                Int next_quad = quad + 2 * t * lin[depth] + g_.at(depth, depth) * t * t;
                std::vector<Int> next_lin = lin;
                for (std::size_t j = depth + 1; j < n; ++j) {
                    next_lin[j] += g_.at(depth, j) * t;
                }
                coords_[depth] = t;
                if (descend(depth + 1, all_zero && t == 0, next_quad, next_lin)) {
                    return true;
                }
            }
        }
        return false;
    }

    const GramMatrix& g_;
    Int bound_;
    std::vector<Int> coords_;
    std::optional<DivisorClass> hit_;
};

// Exact decision for rank 2. q(x,y) = a x^2 + 2b xy + c y^2 represents zero
// nontrivially over the integers iff b^2 - ac is a perfect square; when it
// is, the isotropic vectors form at most two rays through rational roots.
inline SearchOutcome rank2_isotropic(const GramMatrix& g, const Int& bound) {
    const Int a = g.at(0, 0), b = g.at(0, 1), c = g.at(1, 1);
    const auto k = exact_sqrt(b * b - a * c);
    if (!k) {
        return {OutcomeKind::ProvablyNone, std::nullopt, bound};
    }
    std::vector<DivisorClass> rays;
    if (a == 0) {
        rays.push_back(DivisorClass{1, 0});
        rays.push_back(normalize_ray(DivisorClass{-c, 2 * b}));
    } else {
        rays.push_back(normalize_ray(DivisorClass{-b + *k, a}));
        rays.push_back(normalize_ray(DivisorClass{-b - *k, a}));
    }
    DivisorClass best = rays[0];
    for (const DivisorClass& r : rays) {
        if (enumeration_order_less(r, best)) best = r;
    }
    if (best.sup_norm() <= bound) {
        return {OutcomeKind::FoundWitness, best, bound};
    }
    return {OutcomeKind::ExistsNoWitness, std::nullopt, bound};
}

} // namespace detail

// Search for a nonzero square-zero vector. Decision tiers, in order:
//   definite form           -> ProvablyNone (q is sign-definite)
//   rank 2                  -> exact decision via the discriminant
//   rank >= 3               -> scan sup-norm <= bound in enumeration order;
//                              on a miss, rank >= 5 indefinite forms still
//                              represent zero (Meyer), so ExistsNoWitness,
//                              while ranks 3-4 stay UnknownBelowBound.
// A FoundWitness is always the enumeration-order-first primitive witness.
inline SearchOutcome isotropic_search(const GramMatrix& g, const Int& bound) {
    if (bound <= 0) {
        throw OutOfRange("search bound must be positive");
    }
    Signature sig;
    try {
        sig = signature(g);
    } catch (const DegenerateLattice& e) {
        throw InvalidLattice(e.what());
    }
    if (sig.positives == 0 || sig.negatives == 0) {
        return {OutcomeKind::ProvablyNone, std::nullopt, bound};
    }
    if (g.rank() == 2) {
        return detail::rank2_isotropic(g, bound);
    }
    detail::IsotropicScan scan(g, bound);
    if (auto w = scan.run()) {
        return {OutcomeKind::FoundWitness, std::move(*w), bound};
    }
    if (g.rank() >= 5) {
        return {OutcomeKind::ExistsNoWitness, std::nullopt, bound};
    }
    return {OutcomeKind::UnknownBelowBound, std::nullopt, bound};
}

} // namespace kumlat
