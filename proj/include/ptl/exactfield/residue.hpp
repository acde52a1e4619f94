#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ptl/exactfield/irreducible.hpp"

namespace ptl {

// Residues of the generators of a rational tower defining a degree-one
// prime above p at which every level is unramified (simple roots).
inline std::optional<std::vector<std::uint64_t>> find_residue_prime(const FieldPtr<Rationals>& K, std::uint64_t p) {
    std::vector<std::uint64_t> images;
    std::function<bool(std::size_t)> search = [&](std::size_t level) -> bool {
        if (level > K->depth()) return true;
        for (std::uint64_t r = 0; r < p; ++r) {
            images.push_back(r);
            std::vector<std::uint64_t> prefix(images);
            if (check_residue_prime(K->prefix(level), p, prefix).empty() && search(level + 1)) return true;
            images.pop_back();
        }
        return false;
    };
    if (search(1)) return images;
    return std::nullopt;
}

inline TowerHom<Rationals, PrimeField> residue_hom(const FieldPtr<Rationals>& K, std::uint64_t p,
                                                   const std::vector<std::uint64_t>& images) {
    return detail::residue_map(K, p, images);
}

}  // namespace ptl
