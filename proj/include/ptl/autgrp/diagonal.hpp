#pragma once

#include <cstdlib>
#include <numeric>
#include <utility>
#include <vector>

#include "ptl/polyalg/curve.hpp"

namespace ptl {

// Diagonal automorphisms diag(1, z^a, z^b) with z a primitive n-th root of
// unity, n the exponent of the group. Elements are exponent pairs mod n.
struct DiagonalAutoSet {
    std::uint64_t n = 1;
    // Invariant factors d1 | d2 of the character group; order = d1 * d2.
    std::uint64_t d1 = 1, d2 = 1;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> elements;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> generators;

    std::size_t order() const { return elements.size(); }
    bool cyclic() const { return d1 == 1; }
    bool contains(std::uint64_t a, std::uint64_t b) const {
        for (auto& e : elements)
            if (e.first == a % n && e.second == b % n) return true;
        return false;
    }
};

namespace detail {

// Invariant factors of the subgroup of Z^2 spanned by the rows.
inline std::pair<long, long> smith_2col(std::vector<std::array<long, 2>> rows) {
    // Column-style Euclid to a lower-triangular basis, then gcd of entries.
    std::vector<std::array<long, 2>> basis;
    auto reduce_col = [&](std::size_t col) {
        // Bring the gcd of column `col` (over remaining rows) into one row.
        for (;;) {
            std::size_t best = rows.size();
            for (std::size_t i = 0; i < rows.size(); ++i)
                if (rows[i][col] != 0 && (best == rows.size() || std::labs(rows[i][col]) < std::labs(rows[best][col])))
                    best = i;
            if (best == rows.size()) return std::array<long, 2>{0, 0};
            bool done = true;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i == best || rows[i][col] == 0) continue;
                long q = rows[i][col] / rows[best][col];
                rows[i][0] -= q * rows[best][0];
                rows[i][1] -= q * rows[best][1];
                if (rows[i][col] != 0) done = false;
            }
            if (done) {
                auto piv = rows[best];
                rows.erase(rows.begin() + static_cast<long>(best));
                return piv;
            }
        }
    };
    auto p0 = reduce_col(0);
    auto p1 = reduce_col(1);
    // Lattice basis {p0, p1}: [[a, b], [0, c]]; invariant factors d1 = gcd(a,b,c), d2 = |a c| / d1.
    long a = std::labs(p0[0]), b = std::labs(p0[1]), c = std::labs(p1[1]);
    if (a == 0 || c == 0) return {0, 0};
    long g = std::gcd(std::gcd(a, b), c);
    return {g, a * c / g};
}

}  // namespace detail

// Solves s^(e2 - e2') t^(e3 - e3') = 1 over all pairs of monomials of F.
template <class Base>
DiagonalAutoSet enumerate_diagonal_autos(const MultiPoly<Base>& F) {
    if (!F.is_homogeneous() || F.nvars() != 3 || F.is_zero())
        throw PreconditionError("diagonal automorphisms need a nonzero ternary form");
    std::vector<std::array<long, 2>> diffs;
    const auto& e0 = F.terms().front().first;
    for (auto& [m, c] : F.terms())
        if (m != e0) diffs.push_back({static_cast<long>(m[1]) - e0[1], static_cast<long>(m[2]) - e0[2]});
    auto [d1, d2] = detail::smith_2col(diffs);
    if (d2 == 0) throw PreconditionError("the diagonal automorphism group is infinite");
    DiagonalAutoSet out;
    out.d1 = static_cast<std::uint64_t>(d1);
    out.d2 = static_cast<std::uint64_t>(d2);
    out.n = out.d2;
    std::uint64_t ch = F.field()->characteristic();
    if (ch && out.n % ch == 0) throw PreconditionError("characteristic divides a root-of-unity order");
    long n = static_cast<long>(out.n);
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b) {
            bool ok = true;
            for (auto& d : diffs)
                if (((a * d[0] + b * d[1]) % n + n) % n != 0) {
                    ok = false;
                    break;
                }
            if (ok) out.elements.push_back({static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b)});
        }
    // Greedy generating set: add the first element outside the current span.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> span{{0, 0}};
    auto in_span = [&](std::pair<std::uint64_t, std::uint64_t> x) {
        for (auto& s : span)
            if (s == x) return true;
        return false;
    };
    for (auto& e : out.elements) {
        if (in_span(e)) continue;
        out.generators.push_back(e);
        for (std::size_t i = 0; i < span.size(); ++i) {
            auto x = span[i];
            for (;;) {
                x = {(x.first + e.first) % out.n, (x.second + e.second) % out.n};
                if (in_span(x)) break;
                span.push_back(x);
            }
        }
    }
    return out;
}

template <class Base>
DiagonalAutoSet enumerate_diagonal_autos(const PlaneCurve<Base>& C) {
    return enumerate_diagonal_autos(C.form());
}

}  // namespace ptl
