#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ptl/error.hpp"
#include "ptl/exactfield/scalar.hpp"

namespace ptl {

template <class Base>
class Element;

// How irreducibility of a level's minimal polynomial was established.
struct IrreducibilityWitness {
    enum class Kind { none, rabin, prime_reduction, cyclotomic };
    Kind kind = Kind::none;
    std::uint64_t prime = 0;
    // Residues mod prime of the lower generators, one per lower level.
    std::vector<std::uint64_t> images;
    std::uint64_t cyclotomic_n = 0;

    std::string describe() const {
        switch (kind) {
            case Kind::rabin: return "Rabin test over the prime field tower";
            case Kind::prime_reduction: {
                std::string s = "irreducible mod " + std::to_string(prime);
                if (!images.empty()) {
                    s += " at generator residues (";
                    for (std::size_t i = 0; i < images.size(); ++i)
                        s += (i ? ", " : "") + std::to_string(images[i]);
                    s += ")";
                }
                return s;
            }
            case Kind::cyclotomic: return "cyclotomic polynomial of order " + std::to_string(cyclotomic_n);
            default: return "none";
        }
    }
};

// A field K_0 = base, K_i = K_{i-1}[t_i]/(m_i). Elements are stored as flat
// vectors of base scalars; index = sum_i e_i * dim(K_{i-1}), so lower levels
// are the least significant digits. Instances are immutable and shared.
template <class Base>
class Tower : public std::enable_shared_from_this<Tower<Base>> {
  public:
    using Scalar = typename Base::value_type;
    using Ptr = std::shared_ptr<const Tower>;

    static Ptr make_base(Base b) {
        auto t = std::shared_ptr<Tower>(new Tower());
        t->base_ = std::move(b);
        t->dim_ = 1;
        t->deg_ = 1;
        t->depth_ = 0;
        return t;
    }

    // Adds a level without any irreducibility check; see adjoin() in
    // irreducible.hpp for the validating entry point.
    Ptr extend_unchecked(std::string name, const std::vector<Element<Base>>& minpoly,
                         IrreducibilityWitness witness,
                         std::map<std::string, std::string> meta = {}) const;

    const Base& base() const { return base_; }
    std::size_t depth() const { return depth_; }
    std::size_t dimension() const { return dim_; }
    std::size_t degree() const { return deg_; }
    std::uint64_t characteristic() const { return base_.characteristic(); }
    bool is_finite() const { return base_.characteristic() != 0; }
    mpz_class order() const {
        if (!is_finite()) throw PreconditionError("field is infinite");
        mpz_class q;
        mpz_ui_pow_ui(q.get_mpz_t(), base_.characteristic(), dim_);
        return q;
    }
    const std::string& generator_name() const { return name_; }
    const Ptr& parent() const { return parent_; }
    const IrreducibilityWitness& witness() const { return witness_; }
    const std::map<std::string, std::string>& metadata() const { return meta_; }
    std::optional<std::string> meta(const std::string& key) const {
        auto it = meta_.find(key);
        if (it == meta_.end()) return std::nullopt;
        return it->second;
    }

    Ptr self() const { return this->shared_from_this(); }

    Ptr prefix(std::size_t d) const {
        if (d > depth_) throw PreconditionError("prefix deeper than the tower");
        Ptr t = self();
        while (t->depth_ > d) t = t->parent_;
        return t;
    }

    // Generator names from the lowest level up.
    std::vector<std::string> generator_names() const {
        std::vector<std::string> out;
        for (Ptr t = self(); t->depth_ > 0; t = t->parent_) out.insert(out.begin(), t->name_);
        return out;
    }

    // Minimal polynomial coefficients (without the leading 1) as parent elements.
    std::vector<Element<Base>> minpoly() const;
    Element<Base> generator() const;
    // The generator of level `level` (1-based), embedded in this field.
    Element<Base> generator(std::size_t level) const;

    bool same_as(const Tower& o) const {
        if (this == &o) return true;
        if (depth_ != o.depth_ || !(base_ == o.base_)) return false;
        if (depth_ == 0) return true;
        if (name_ != o.name_ || deg_ != o.deg_ || minflat_ != o.minflat_) return false;
        return parent_->same_as(*o.parent_);
    }
    // True when `sub` is (structurally) one of this tower's prefixes.
    bool contains_prefix(const Tower& sub) const {
        if (sub.depth_ > depth_) return false;
        return prefix(sub.depth_)->same_as(sub);
    }

    // Raw arithmetic on flat coefficient arrays of length dimension().
    bool raw_is_zero(const Scalar* a) const {
        for (std::size_t i = 0; i < dim_; ++i)
            if (!base_.is_zero(a[i])) return false;
        return true;
    }
    void raw_add(Scalar* acc, const Scalar* b) const {
        for (std::size_t i = 0; i < dim_; ++i) acc[i] = base_.add(acc[i], b[i]);
    }
    void raw_sub(Scalar* acc, const Scalar* b) const {
        for (std::size_t i = 0; i < dim_; ++i) acc[i] = base_.sub(acc[i], b[i]);
    }
    void raw_mul(const Scalar* a, const Scalar* b, Scalar* out) const;
    // out = a^{-1}; throws DivisionByZero.
    void raw_inv(const Scalar* a, Scalar* out) const;

  private:
    Tower() = default;

    Base base_{};
    Ptr parent_;
    std::string name_;
    std::size_t deg_ = 1, dim_ = 1, depth_ = 0;
    // deg_ blocks of parent dimension: m = t^deg + sum_j c_j t^j.
    std::vector<Scalar> minflat_;
    IrreducibilityWitness witness_;
    std::map<std::string, std::string> meta_;
};

template <class Base>
using FieldPtr = std::shared_ptr<const Tower<Base>>;

template <class Base>
class Element {
  public:
    using Field = Tower<Base>;
    using Scalar = typename Base::value_type;

    Element() = default;
    explicit Element(FieldPtr<Base> f) : f_(std::move(f)), c_(f_->dimension(), f_->base().zero()) {}
    Element(FieldPtr<Base> f, std::vector<Scalar> c) : f_(std::move(f)), c_(std::move(c)) {
        if (c_.size() != f_->dimension()) throw PreconditionError("coefficient vector has the wrong length");
    }

    static Element from_int(FieldPtr<Base> f, long v) {
        Element e(f);
        e.c_[0] = f->base().from_int(v);
        return e;
    }
    static Element from_rational(FieldPtr<Base> f, const mpq_class& q) {
        Element e(f);
        e.c_[0] = f->base().from_rational(q);
        return e;
    }
    static Element from_scalar(FieldPtr<Base> f, const Scalar& s) {
        Element e(f);
        e.c_[0] = s;
        return e;
    }
    static Element zero(FieldPtr<Base> f) { return Element(f); }
    static Element one(FieldPtr<Base> f) { return from_int(f, 1); }

    bool valid() const { return static_cast<bool>(f_); }
    const FieldPtr<Base>& field() const { return f_; }
    const Base& base() const { return f_->base(); }
    const std::vector<Scalar>& coeffs() const { return c_; }
    const Scalar* data() const { return c_.data(); }

    bool is_zero() const { return f_->raw_is_zero(c_.data()); }
    bool is_one() const {
        if (!base().is_one(c_[0])) return false;
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (!base().is_zero(c_[i])) return false;
        return true;
    }
    // True when the element lies in the base scalar domain.
    bool is_scalar() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (!base().is_zero(c_[i])) return false;
        return true;
    }
    const Scalar& scalar_part() const { return c_[0]; }

    Element operator-() const {
        Element r(f_);
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = base().neg(c_[i]);
        return r;
    }
    Element& operator+=(const Element& o) {
        check(o);
        f_->raw_add(c_.data(), o.c_.data());
        return *this;
    }
    Element& operator-=(const Element& o) {
        check(o);
        f_->raw_sub(c_.data(), o.c_.data());
        return *this;
    }
    Element& operator*=(const Element& o) { return *this = *this * o; }
    Element& operator/=(const Element& o) { return *this = *this / o; }

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Element& a, const Element& b) {
        a.check(b);
        Element r(a.f_);
        a.f_->raw_mul(a.c_.data(), b.c_.data(), r.c_.data());
        return r;
    }
    friend Element operator/(const Element& a, const Element& b) { return a * b.inverse(); }

    Element inverse() const {
        Element r(f_);
        f_->raw_inv(c_.data(), r.c_.data());
        return r;
    }

    Element pow(const mpz_class& e) const {
        if (e < 0) return inverse().pow(-e);
        Element r = one(f_), b = *this;
        std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
        for (std::size_t i = 0; i < bits; ++i) {
            if (mpz_tstbit(e.get_mpz_t(), i)) r = r * b;
            if (i + 1 < bits) b = b * b;
        }
        return r;
    }
    Element pow(long e) const { return pow(mpz_class(e)); }

    // Coefficient of t^j of the top level, as an element of the parent field.
    Element top_coeff(std::size_t j) const {
        if (f_->depth() == 0) throw PreconditionError("base field has no generator levels");
        const auto& par = f_->parent();
        std::size_t blk = par->dimension();
        return Element(par, std::vector<Scalar>(c_.begin() + j * blk, c_.begin() + (j + 1) * blk));
    }
    // Inverse of top_coeff: assemble sum_j parts[j] t^j.
    static Element from_top_coeffs(FieldPtr<Base> f, const std::vector<Element>& parts) {
        Element r(f);
        std::size_t blk = f->parent()->dimension();
        if (parts.size() != f->degree()) throw PreconditionError("wrong number of level coefficients");
        for (std::size_t j = 0; j < parts.size(); ++j)
            for (std::size_t i = 0; i < blk; ++i) r.c_[j * blk + i] = parts[j].c_[i];
        return r;
    }

    // Zero-padding embedding into a tower that has this field as a prefix.
    Element embed(const FieldPtr<Base>& super) const {
        if (f_ == super) return *this;
        if (!super->contains_prefix(*f_)) throw FieldMismatch();
        std::vector<Scalar> c(super->dimension(), base().zero());
        std::copy(c_.begin(), c_.end(), c.begin());
        return Element(super, std::move(c));
    }
    // The element as a member of the prefix `sub`, when it lies there.
    std::optional<Element> restrict_to(const FieldPtr<Base>& sub) const {
        if (!f_->contains_prefix(*sub)) throw FieldMismatch();
        for (std::size_t i = sub->dimension(); i < c_.size(); ++i)
            if (!base().is_zero(c_[i])) return std::nullopt;
        return Element(sub, std::vector<Scalar>(c_.begin(), c_.begin() + sub->dimension()));
    }

    friend bool operator==(const Element& a, const Element& b) {
        a.check(b);
        return a.c_ == b.c_;
    }
    // Total order for use as container keys; not compatible with field structure.
    friend std::strong_ordering operator<=>(const Element& a, const Element& b) {
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            int c = a.base().compare(a.c_[i], b.c_[i]);
            if (c) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }

    // Nested coefficient list, collapsed to a bare scalar when possible.
    std::string to_string() const {
        if (is_scalar()) return base().to_string(c_[0]);
        return nested(*f_, c_.data());
    }

  private:
    void check(const Element& o) const {
        if (f_ != o.f_ && !(f_ && o.f_ && f_->same_as(*o.f_))) throw FieldMismatch();
    }
    static std::string nested(const Field& f, const Scalar* a) {
        if (f.depth() == 0) return f.base().to_string(a[0]);
        std::size_t blk = f.parent()->dimension();
        std::string s = "[";
        for (std::size_t j = 0; j < f.degree(); ++j) {
            if (j) s += ",";
            s += nested(*f.parent(), a + j * blk);
        }
        return s + "]";
    }

    FieldPtr<Base> f_;
    std::vector<Scalar> c_;
};

template <class Base>
typename Tower<Base>::Ptr Tower<Base>::extend_unchecked(std::string name,
                                                        const std::vector<Element<Base>>& minpoly,
                                                        IrreducibilityWitness witness,
                                                        std::map<std::string, std::string> meta) const {
    if (minpoly.size() < 3) throw PreconditionError("minimal polynomial must have degree at least 2");
    for (auto& c : minpoly)
        if (!c.field()->same_as(*this)) throw FieldMismatch();
    if (!minpoly.back().is_one()) throw PreconditionError("minimal polynomial must be monic");
    auto t = std::shared_ptr<Tower>(new Tower());
    t->base_ = base_;
    t->parent_ = self();
    t->name_ = std::move(name);
    t->deg_ = minpoly.size() - 1;
    t->dim_ = dim_ * t->deg_;
    t->depth_ = depth_ + 1;
    for (std::size_t j = 0; j < t->deg_; ++j)
        t->minflat_.insert(t->minflat_.end(), minpoly[j].coeffs().begin(), minpoly[j].coeffs().end());
    t->witness_ = std::move(witness);
    t->meta_ = std::move(meta);
    return t;
}

template <class Base>
std::vector<Element<Base>> Tower<Base>::minpoly() const {
    std::vector<Element<Base>> out;
    std::size_t blk = parent_->dimension();
    for (std::size_t j = 0; j < deg_; ++j)
        out.emplace_back(parent_, std::vector<Scalar>(minflat_.begin() + j * blk, minflat_.begin() + (j + 1) * blk));
    out.push_back(Element<Base>::one(parent_));
    return out;
}

template <class Base>
Element<Base> Tower<Base>::generator() const {
    if (depth_ == 0) throw PreconditionError("base field has no generator");
    std::vector<Scalar> c(dim_, base_.zero());
    c[parent_->dimension()] = base_.one();
    return Element<Base>(self(), std::move(c));
}

template <class Base>
Element<Base> Tower<Base>::generator(std::size_t level) const {
    if (level == 0 || level > depth_) throw PreconditionError("no such generator level");
    return prefix(level)->generator().embed(self());
}

template <class Base>
void Tower<Base>::raw_mul(const Scalar* a, const Scalar* b, Scalar* out) const {
    if (depth_ == 0) {
        out[0] = base_.mul(a[0], b[0]);
        return;
    }
    const Tower& par = *parent_;
    std::size_t blk = par.dim_;
    std::vector<Scalar> prod((2 * deg_ - 1) * blk, base_.zero()), tmp(blk);
    std::vector<bool> az(deg_), bz(deg_);
    for (std::size_t i = 0; i < deg_; ++i) {
        az[i] = par.raw_is_zero(a + i * blk);
        bz[i] = par.raw_is_zero(b + i * blk);
    }
    for (std::size_t i = 0; i < deg_; ++i) {
        if (az[i]) continue;
        for (std::size_t j = 0; j < deg_; ++j) {
            if (bz[j]) continue;
            par.raw_mul(a + i * blk, b + j * blk, tmp.data());
            par.raw_add(prod.data() + (i + j) * blk, tmp.data());
        }
    }
    for (std::size_t k = 2 * deg_ - 2; k >= deg_; --k) {
        const Scalar* top = prod.data() + k * blk;
        if (par.raw_is_zero(top)) continue;
        std::vector<Scalar> lead(top, top + blk);
        for (std::size_t j = 0; j < deg_; ++j) {
            const Scalar* mj = minflat_.data() + j * blk;
            if (par.raw_is_zero(mj)) continue;
            par.raw_mul(lead.data(), mj, tmp.data());
            par.raw_sub(prod.data() + (k - deg_ + j) * blk, tmp.data());
        }
    }
    std::copy(prod.begin(), prod.begin() + dim_, out);
}

template <class Base>
void Tower<Base>::raw_inv(const Scalar* a, Scalar* out) const {
    if (raw_is_zero(a)) throw DivisionByZero();
    if (depth_ == 0) {
        out[0] = base_.inv(a[0]);
        return;
    }
    // Solve (multiplication by a) * x = 1 over the parent field.
    const Tower& par = *parent_;
    std::size_t blk = par.dim_, n = deg_;
    // mat[r][c]: coefficient r of a * t^c; augmented with the unit vector.
    std::vector<std::vector<Scalar>> mat(n, std::vector<Scalar>((n + 1) * blk, base_.zero()));
    std::vector<Scalar> col(a, a + dim_), t(dim_, base_.zero()), nxt(dim_);
    t[blk] = base_.one();
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < n; ++r)
            std::copy(col.begin() + r * blk, col.begin() + (r + 1) * blk, mat[r].begin() + c * blk);
        raw_mul(col.data(), t.data(), nxt.data());
        col = nxt;
    }
    mat[0][n * blk] = base_.one();
    std::vector<Scalar> piv(blk), tmp(blk), f(blk);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t r = c;
        while (r < n && par.raw_is_zero(mat[r].data() + c * blk)) ++r;
        if (r == n) throw DivisionByZero();  // reducible modulus
        std::swap(mat[r], mat[c]);
        par.raw_inv(mat[c].data() + c * blk, piv.data());
        for (std::size_t k = 0; k <= n; ++k) {
            par.raw_mul(mat[c].data() + k * blk, piv.data(), tmp.data());
            std::copy(tmp.begin(), tmp.end(), mat[c].begin() + k * blk);
        }
        for (std::size_t r2 = 0; r2 < n; ++r2) {
            if (r2 == c || par.raw_is_zero(mat[r2].data() + c * blk)) continue;
            std::copy(mat[r2].begin() + c * blk, mat[r2].begin() + (c + 1) * blk, f.begin());
            for (std::size_t k = 0; k <= n; ++k) {
                par.raw_mul(f.data(), mat[c].data() + k * blk, tmp.data());
                par.raw_sub(mat[r2].data() + k * blk, tmp.data());
            }
        }
    }
    for (std::size_t r = 0; r < n; ++r)
        std::copy(mat[r].begin() + n * blk, mat[r].begin() + (n + 1) * blk, out + r * blk);
}

template <class Base>
std::ostream& operator<<(std::ostream& os, const Element<Base>& x) {
    return os << x.to_string();
}

}  // namespace ptl
