#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "ptl/exactfield/hom.hpp"

namespace ptl {

struct GaloisReport {
    bool ok = true;
    std::vector<std::string> failures;
};

// A field automorphism given by generator images, with a declared order.
// The invariants are checked once at construction and the outcome kept.
template <class Base>
class GaloisMap {
  public:
    using E = Element<Base>;

    GaloisMap() = default;
    GaloisMap(FieldPtr<Base> f, std::vector<E> images, std::size_t order, std::string name = "g")
        : hom_(f, f, std::move(images)), order_(order), name_(std::move(name)) {
        report_ = check();
    }

    static GaloisMap identity(FieldPtr<Base> f) {
        std::vector<E> im;
        for (std::size_t l = 1; l <= f->depth(); ++l) im.push_back(f->generator(l));
        return GaloisMap(f, std::move(im), 1, "id");
    }

    const FieldPtr<Base>& field() const { return hom_.source(); }
    const std::vector<E>& images() const { return hom_.images(); }
    std::size_t order() const { return order_; }
    const std::string& name() const { return name_; }
    bool verified() const { return report_.ok; }
    const GaloisReport& report() const { return report_; }

    E operator()(const E& x) const { return hom_(x); }

    // Composite (*this) after h.
    GaloisMap compose(const GaloisMap& h) const {
        std::vector<E> im;
        for (auto& g : h.images()) im.push_back((*this)(g));
        return GaloisMap(field(), std::move(im), 0, name_ + "*" + h.name_, true);
    }
    GaloisMap power(long k) const {
        long m = static_cast<long>(order_ ? order_ : 1);
        k %= m;
        if (k < 0) k += m;
        GaloisMap r = identity(field());
        for (long i = 0; i < k; ++i) r = compose(r);
        return r.with_order(order_ / std::gcd<std::size_t>(order_, static_cast<std::size_t>(k ? k : order_)));
    }
    GaloisMap inverse() const { return power(static_cast<long>(order_) - 1); }

    bool fixes_generators() const {
        for (std::size_t l = 1; l <= field()->depth(); ++l)
            if (!(images()[l - 1] == field()->generator(l))) return false;
        return true;
    }
    bool same_action(const GaloisMap& o) const { return images() == o.images(); }

  private:
    GaloisMap(FieldPtr<Base> f, std::vector<E> images, std::size_t order, std::string name, bool)
        : hom_(f, f, std::move(images)), order_(order), name_(std::move(name)) {}

    GaloisMap with_order(std::size_t m) const {
        GaloisMap r(field(), images(), m, name_);
        return r;
    }

    GaloisReport check() const {
        GaloisReport rep;
        auto f = field();
        for (std::size_t l = 1; l <= f->depth(); ++l) {
            if (!hom_.relation_residual(l).is_zero()) {
                rep.ok = false;
                rep.failures.push_back("image of " + f->prefix(l)->generator_name() +
                                       " is not a root of its minimal polynomial");
            }
        }
        if (!rep.ok) return rep;
        if (order_ == 0) {
            rep.ok = false;
            rep.failures.push_back("declared order must be positive");
            return rep;
        }
        GaloisMap unchecked(f, images(), 0, name_, true);
        GaloisMap acc = unchecked;
        for (std::size_t k = 1; k <= order_; ++k) {
            bool fixes = acc.fixes_generators();
            if (fixes && k < order_) {
                rep.ok = false;
                rep.failures.push_back("power " + std::to_string(k) + " is already the identity");
                return rep;
            }
            if (!fixes && k == order_) {
                rep.ok = false;
                rep.failures.push_back("power " + std::to_string(order_) + " is not the identity");
                return rep;
            }
            acc = unchecked.compose(acc);
        }
        return rep;
    }

    TowerHom<Base, Base> hom_;
    std::size_t order_ = 1;
    std::string name_;
    GaloisReport report_;
};

template <class Base>
GaloisReport verify_galois_map(const GaloisMap<Base>& g) {
    return g.report();
}

// x * g(x) * ... * g^{m-1}(x).
template <class Base>
Element<Base> norm_cyclic(const GaloisMap<Base>& g, const Element<Base>& x) {
    if (!g.verified()) throw PreconditionError("norm requested along an unverified Galois map");
    Element<Base> acc = x, y = x;
    for (std::size_t i = 1; i < g.order(); ++i) {
        y = g(y);
        acc = acc * y;
    }
    return acc;
}

}  // namespace ptl
