#pragma once

#include <numeric>
#include <optional>
#include <string>

#include "ptl/error.hpp"

namespace ptl {

enum class FieldKind { finite, real, general };
enum class PlaneVerdict { must_be_plane, possibly_obstructed };

inline const char* to_string(PlaneVerdict v) {
    return v == PlaneVerdict::must_be_plane ? "must-be-plane" : "possibly-obstructed";
}

struct ObstructionReport {
    PlaneVerdict verdict = PlaneVerdict::must_be_plane;
    std::string reason;
};

// Whether a twist of a smooth plane curve of degree d over a field of the
// given kind must itself admit a smooth plane model over that field.
inline ObstructionReport obstruction_classifier(unsigned d, FieldKind kind,
                                                std::optional<bool> has_rational_point = std::nullopt) {
    if (d < 4) throw PreconditionError("degree must be at least 4");
    if (std::gcd(d, 3u) == 1)
        return {PlaneVerdict::must_be_plane, "degree prime to 3: the Brauer-Severi class is 3-torsion and trivial"};
    if (kind == FieldKind::finite)
        return {PlaneVerdict::must_be_plane, "finite field: the 3-torsion of the Brauer group is trivial"};
    if (kind == FieldKind::real)
        return {PlaneVerdict::must_be_plane, "real field: the 3-torsion of the Brauer group is trivial"};
    if (has_rational_point.value_or(false))
        return {PlaneVerdict::must_be_plane, "a rational point trivializes the Brauer-Severi surface"};
    return {PlaneVerdict::possibly_obstructed,
            "a smooth plane model exists over an extension L with [L:k] dividing 3"};
}

}  // namespace ptl
