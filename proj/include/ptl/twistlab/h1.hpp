#pragma once

#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "ptl/projlin/projmatrix.hpp"

namespace ptl {

struct H1Result {
    // Each class as indices into the group's element list.
    std::vector<std::vector<std::size_t>> classes;
    std::size_t count() const { return classes.size(); }
    // |A / (pi - 1)A| when A is abelian, computed separately.
    std::optional<std::size_t> coinvariants;
};

struct ActionError : Error {
    using Error::Error;
};

// Twisted conjugacy classes x ~ a^-1 x pi(a) of a finite group under an
// automorphism pi (in practice the Frobenius acting entrywise).
template <class Base>
H1Result h1_frobenius(const MatrixGroup<Base>& A,
                      const std::function<ProjMatrix<Base>(const ProjMatrix<Base>&)>& pi) {
    const auto& el = A.elements();
    std::size_t n = el.size();
    std::vector<std::size_t> img(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto y = pi(el[i]);
        if (!A.contains(y)) throw ActionError("the action does not preserve the group");
        img[i] = A.index_of(y);
    }
    std::vector<std::size_t> inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[i] = A.index_of(el[i].inverse());
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t a = 0; a < n; ++a) {
            std::size_t y = A.index_of(el[inv[a]] * el[x] * el[img[a]]);
            parent[find(x)] = find(y);
        }
    H1Result res;
    std::vector<long> slot(n, -1);
    for (std::size_t x = 0; x < n; ++x) {
        std::size_t r = find(x);
        if (slot[r] < 0) {
            slot[r] = static_cast<long>(res.classes.size());
            res.classes.emplace_back();
        }
        res.classes[static_cast<std::size_t>(slot[r])].push_back(x);
    }
    if (A.is_abelian()) {
        std::set<std::size_t> B;
        for (std::size_t a = 0; a < n; ++a) B.insert(A.index_of(el[inv[a]] * el[img[a]]));
        res.coinvariants = n / B.size();
    }
    return res;
}

}  // namespace ptl
