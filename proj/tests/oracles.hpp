#pragma once

// Test-only reference implementations. Deliberately independent of the
// library's decision and search code paths: plain loops, no shortcuts.

#include <optional>
#include <utility>
#include <vector>

#include "kumlat/integer.hpp"

namespace oracle {

using kumlat::Int;

inline Int quad_value(const std::vector<std::vector<Int>>& g, const std::vector<Int>& v) {
    Int total = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) total += v[i] * g[i][j] * v[j];
    return total;
}

inline Int pair_value(const std::vector<std::vector<Int>>& g, const std::vector<Int>& u,
                      const std::vector<Int>& v) {
    Int total = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) total += u[i] * g[i][j] * v[j];
    return total;
}

// Comparator for the search's witness order: coordinatewise by the key
// 0 < 1 < -1 < 2 < -2 < ...
inline bool key_less(const std::vector<Int>& a, const std::vector<Int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == b[i]) continue;
        Int aa = a[i] < 0 ? Int(-a[i]) : a[i];
        Int ab = b[i] < 0 ? Int(-b[i]) : b[i];
        if (aa != ab) return aa < ab;
        return a[i] > b[i];
    }
    return false;
}

// All primitive isotropic vectors with sup-norm <= bound and positive
// leading coordinate, by a full odometer walk over the box.
inline std::vector<std::vector<Int>> all_isotropic(const std::vector<std::vector<Int>>& g,
                                                   long bound) {
    const std::size_t n = g.size();
    std::vector<std::vector<Int>> found;
    std::vector<long> idx(n, -bound);
    while (true) {
        std::vector<Int> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = idx[i];

        bool nonzero = false;
        bool leading_positive = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (v[i] != 0) {
                nonzero = true;
                leading_positive = v[i] > 0;
                break;
            }
        }
        if (nonzero && leading_positive && kumlat::vector_gcd(v) == 1 &&
            quad_value(g, v) == 0) {
            found.push_back(v);
        }

        std::size_t k = n;
        while (k > 0) {
            if (idx[k - 1] < bound) {
                ++idx[k - 1];
                break;
            }
            idx[k - 1] = -bound;
            --k;
        }
        if (k == 0) break;
    }
    return found;
}

// The witness the bounded search is contracted to return: minimal under the
// key order among all primitive isotropic vectors in the box.
inline std::optional<std::vector<Int>> first_isotropic(const std::vector<std::vector<Int>>& g,
                                                       long bound) {
    auto all = all_isotropic(g, bound);
    if (all.empty()) return std::nullopt;
    std::vector<Int> best = all[0];
    for (const auto& v : all)
        if (key_less(v, best)) best = v;
    return best;
}

// Minimal solution of d r^2 = n s^2 with 1 <= r, s <= bound, by an
// increasing merge of the two value sequences. Exhausts the bounded search
// space without any square-root computation.
inline std::optional<std::pair<Int, Int>> diag_rank2_witness(const Int& d, const Int& n,
                                                             long bound) {
    Int r = 1, s = 1;
    while (r <= bound && s <= bound) {
        const Int left = d * r * r;
        const Int right = n * s * s;
        if (left == right) return std::make_pair(r, s);
        if (left < right) {
            ++r;
        } else {
            ++s;
        }
    }
    return std::nullopt;
}

// Perfect-square test by trial multiplication.
inline bool is_square_trial(const Int& n) {
    if (n < 0) return false;
    Int m = 0;
    while (m * m < n) ++m;
    return m * m == n;
}

} // namespace oracle
