#pragma once

#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ptl/exactfield/tower.hpp"

namespace ptl {

// Dense univariate polynomial over a tower field, low to high, no trailing zeros.
template <class Base>
class UPoly {
  public:
    using E = Element<Base>;

    UPoly() = default;
    explicit UPoly(FieldPtr<Base> f) : f_(std::move(f)) {}
    UPoly(FieldPtr<Base> f, std::vector<E> c) : f_(std::move(f)), c_(std::move(c)) { trim(); }

    static UPoly x(FieldPtr<Base> f) { return UPoly(f, {E::zero(f), E::one(f)}); }
    static UPoly constant(const E& c) { return UPoly(c.field(), {c}); }

    const FieldPtr<Base>& field() const { return f_; }
    const std::vector<E>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const E& lead() const { return c_.back(); }
    E coeff(std::size_t i) const { return i < c_.size() ? c_[i] : E::zero(f_); }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<E> r(std::max(a.c_.size(), b.c_.size()), E::zero(a.f_));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return UPoly(a.f_, std::move(r));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) {
        std::vector<E> r(std::max(a.c_.size(), b.c_.size()), E::zero(a.f_));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return UPoly(a.f_, std::move(r));
    }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly(a.f_);
        std::vector<E> r(a.c_.size() + b.c_.size() - 1, E::zero(a.f_));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return UPoly(a.f_, std::move(r));
    }
    UPoly scaled(const E& s) const {
        std::vector<E> r;
        for (auto& c : c_) r.push_back(c * s);
        return UPoly(f_, std::move(r));
    }

    // Quotient and remainder; the divisor's leading coefficient must be invertible.
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
        if (d.is_zero()) throw DivisionByZero();
        std::vector<E> r = c_;
        long dd = d.degree();
        if (degree() < dd) return {UPoly(f_), *this};
        std::vector<E> q(c_.size() - d.c_.size() + 1, E::zero(f_));
        E li = d.lead().inverse();
        for (long k = degree(); k >= dd; --k) {
            if (r[k].is_zero()) continue;
            E m = r[k] * li;
            q[k - dd] = m;
            for (long j = 0; j <= dd; ++j) r[k - dd + j] -= m * d.c_[j];
        }
        r.resize(dd);
        return {UPoly(f_, std::move(q)), UPoly(f_, std::move(r))};
    }
    UPoly operator%(const UPoly& d) const { return divmod(d).second; }

    UPoly monic() const {
        if (is_zero()) return *this;
        return scaled(lead().inverse());
    }

    UPoly derivative() const {
        std::vector<E> r;
        for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * E::from_int(f_, static_cast<long>(i)));
        return UPoly(f_, std::move(r));
    }

    E eval(const E& x) const {
        E acc = E::zero(x.field());
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i].embed(x.field());
        return acc;
    }

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    FieldPtr<Base> f_;
    std::vector<E> c_;
};

template <class Base>
UPoly<Base> gcd(UPoly<Base> a, UPoly<Base> b) {
    while (!b.is_zero()) {
        auto r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

template <class Base>
UPoly<Base> powmod(UPoly<Base> b, const mpz_class& e, const UPoly<Base>& m) {
    UPoly<Base> r = UPoly<Base>::constant(Element<Base>::one(m.field())) % m;
    b = b % m;
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) r = (r * b) % m;
        if (i + 1 < bits) b = (b * b) % m;
    }
    return r;
}

}  // namespace ptl
