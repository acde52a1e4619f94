#pragma once

#include "ptl/polyalg/multipoly.hpp"

namespace ptl {

// A plane curve F(X, Y, Z) = 0 of degree d >= 4.
template <class Base>
class PlaneCurve {
  public:
    PlaneCurve() = default;
    explicit PlaneCurve(MultiPoly<Base> F) : F_(std::move(F)) {
        if (F_.nvars() != 3) throw PreconditionError("a plane curve needs exactly three variables");
        if (F_.is_zero()) throw PreconditionError("the zero form does not define a curve");
        if (!F_.is_homogeneous()) throw PreconditionError("the defining form is not homogeneous");
        if (F_.degree() < 4) throw PreconditionError("plane curves here have degree at least 4");
    }

    const MultiPoly<Base>& form() const { return F_; }
    const FieldPtr<Base>& field() const { return F_.field(); }
    unsigned degree() const { return static_cast<unsigned>(F_.degree()); }
    unsigned genus() const { return (degree() - 1) * (degree() - 2) / 2; }

  private:
    MultiPoly<Base> F_;
};

}  // namespace ptl
