#pragma once

#include <vector>

#include "ptl/exactfield/tower.hpp"

namespace ptl {

inline mpq_class map_scalar(const Rationals&, const mpq_class& v, const Rationals&) { return v; }
inline std::uint64_t map_scalar(const Rationals&, const mpq_class& v, const PrimeField& to) {
    return to.from_rational(v);
}
inline std::uint64_t map_scalar(const PrimeField& from, std::uint64_t v, const PrimeField& to) {
    if (from.p != to.p) throw FieldMismatch();
    return v;
}

// Ring homomorphism between towers, fixed by the images of the source
// generators (one per level, lowest first) and the canonical map on scalars.
template <class From, class To>
class TowerHom {
  public:
    TowerHom() = default;
    TowerHom(FieldPtr<From> src, FieldPtr<To> dst, std::vector<Element<To>> images)
        : src_(std::move(src)), dst_(std::move(dst)), images_(std::move(images)) {
        if (images_.size() != src_->depth()) throw PreconditionError("one image per generator level is required");
        for (auto& i : images_)
            if (!i.field()->same_as(*dst_)) throw FieldMismatch();
        powers_.resize(images_.size());
        for (std::size_t l = 0; l < images_.size(); ++l) {
            std::size_t deg = src_->prefix(l + 1)->degree();
            powers_[l].push_back(Element<To>::one(dst_));
            for (std::size_t j = 1; j < deg; ++j) powers_[l].push_back(powers_[l].back() * images_[l]);
        }
    }

    const FieldPtr<From>& source() const { return src_; }
    const FieldPtr<To>& target() const { return dst_; }
    const std::vector<Element<To>>& images() const { return images_; }

    Element<To> operator()(const Element<From>& x) const {
        if (!x.field()->same_as(*src_)) throw FieldMismatch();
        return apply(src_->depth(), x.data());
    }

    // Image of the i-th level's minimal polynomial evaluated at the i-th image.
    // Zero exactly when the generator images satisfy the defining relations.
    Element<To> relation_residual(std::size_t level) const {
        auto lv = src_->prefix(level);
        auto m = lv->minpoly();
        Element<To> acc = Element<To>::zero(dst_);
        for (std::size_t j = m.size(); j-- > 0;) acc = acc * images_[level - 1] + apply(level - 1, m[j].data());
        return acc;
    }

  private:
    Element<To> apply(std::size_t level, const typename From::value_type* a) const {
        if (level == 0) {
            return Element<To>::from_scalar(dst_, map_scalar(src_->base(), a[0], dst_->base()));
        }
        auto lv = src_->prefix(level);
        std::size_t blk = lv->parent()->dimension();
        Element<To> acc = Element<To>::zero(dst_);
        for (std::size_t j = 0; j < lv->degree(); ++j) {
            if (lv->parent()->raw_is_zero(a + j * blk)) continue;
            acc += apply(level - 1, a + j * blk) * powers_[level - 1][j];
        }
        return acc;
    }

    FieldPtr<From> src_;
    FieldPtr<To> dst_;
    std::vector<Element<To>> images_;
    std::vector<std::vector<Element<To>>> powers_;
};

}  // namespace ptl
