#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ptl/exactfield/tower.hpp"

namespace ptl {

inline constexpr std::size_t kMaxVars = 12;

using Exponents = std::array<std::uint16_t, kMaxVars>;

enum class TermOrder { grevlex, lex };

struct VarSet {
    std::vector<std::string> names;

    std::size_t size() const { return names.size(); }
    std::optional<std::size_t> index(const std::string& n) const {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == n) return i;
        return std::nullopt;
    }
    bool operator==(const VarSet&) const = default;
};

using VarsPtr = std::shared_ptr<const VarSet>;

inline VarsPtr make_vars(std::vector<std::string> names) {
    if (names.size() > kMaxVars) throw PreconditionError("too many variables");
    return std::make_shared<const VarSet>(VarSet{std::move(names)});
}

inline unsigned total_degree(const Exponents& e, std::size_t n) {
    unsigned d = 0;
    for (std::size_t i = 0; i < n; ++i) d += e[i];
    return d;
}

// Three-way comparison under the term order, over the first n variables.
inline int compare_monomials(const Exponents& a, const Exponents& b, std::size_t n, TermOrder ord) {
    if (ord == TermOrder::grevlex) {
        unsigned da = total_degree(a, n), db = total_degree(b, n);
        if (da != db) return da < db ? -1 : 1;
        for (std::size_t i = n; i-- > 0;)
            if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
        return 0;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

inline bool divides(const Exponents& a, const Exponents& b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Exponents lcm(const Exponents& a, const Exponents& b) {
    Exponents r{};
    for (std::size_t i = 0; i < kMaxVars; ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

inline Exponents operator+(const Exponents& a, const Exponents& b) {
    Exponents r{};
    for (std::size_t i = 0; i < kMaxVars; ++i) r[i] = static_cast<std::uint16_t>(a[i] + b[i]);
    return r;
}

inline Exponents operator-(const Exponents& a, const Exponents& b) {
    Exponents r{};
    for (std::size_t i = 0; i < kMaxVars; ++i) r[i] = static_cast<std::uint16_t>(a[i] - b[i]);
    return r;
}

// Sparse polynomial; terms are kept sorted in decreasing term order.
template <class Base>
class MultiPoly {
  public:
    using E = Element<Base>;
    using Term = std::pair<Exponents, E>;

    MultiPoly() = default;
    MultiPoly(FieldPtr<Base> f, VarsPtr v, TermOrder ord = TermOrder::grevlex)
        : f_(std::move(f)), v_(std::move(v)), ord_(ord) {}

    static MultiPoly constant(const E& c, VarsPtr v, TermOrder ord = TermOrder::grevlex) {
        MultiPoly p(c.field(), std::move(v), ord);
        if (!c.is_zero()) p.t_.push_back({Exponents{}, c});
        return p;
    }
    static MultiPoly variable(FieldPtr<Base> f, VarsPtr v, std::size_t i, TermOrder ord = TermOrder::grevlex) {
        MultiPoly p(f, v, ord);
        Exponents e{};
        e[i] = 1;
        p.t_.push_back({e, E::one(f)});
        return p;
    }
    static MultiPoly monomial(const E& c, const Exponents& e, VarsPtr v, TermOrder ord = TermOrder::grevlex) {
        MultiPoly p(c.field(), std::move(v), ord);
        if (!c.is_zero()) p.t_.push_back({e, c});
        return p;
    }
    // Build from unsorted terms; like terms are combined.
    static MultiPoly from_terms(FieldPtr<Base> f, VarsPtr v, std::vector<Term> terms,
                                TermOrder ord = TermOrder::grevlex) {
        MultiPoly p(f, v, ord);
        p.t_ = std::move(terms);
        p.normalize();
        return p;
    }

    const FieldPtr<Base>& field() const { return f_; }
    const VarsPtr& vars() const { return v_; }
    std::size_t nvars() const { return v_->size(); }
    TermOrder order() const { return ord_; }
    const std::vector<Term>& terms() const { return t_; }
    std::size_t size() const { return t_.size(); }
    bool is_zero() const { return t_.empty(); }

    const Exponents& lead_exp() const { return t_.front().first; }
    const E& lead_coeff() const { return t_.front().second; }

    E coefficient(const Exponents& e) const {
        for (auto& [m, c] : t_)
            if (m == e) return c;
        return E::zero(f_);
    }

    long degree() const {
        long d = -1;
        for (auto& [m, c] : t_) d = std::max<long>(d, total_degree(m, nvars()));
        return d;
    }
    bool is_homogeneous() const {
        for (auto& [m, c] : t_)
            if (static_cast<long>(total_degree(m, nvars())) != degree()) return false;
        return true;
    }

    MultiPoly with_order(TermOrder ord) const {
        MultiPoly p(f_, v_, ord);
        p.t_ = t_;
        p.sort();
        return p;
    }

    MultiPoly operator-() const {
        MultiPoly p(f_, v_, ord_);
        for (auto& [m, c] : t_) p.t_.push_back({m, -c});
        return p;
    }
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return merge(a, b, false); }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return merge(a, b, true); }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check(b);
        if (a.is_zero() || b.is_zero()) return MultiPoly(a.f_, a.v_, a.ord_);
        std::size_t n = a.nvars();
        TermOrder ord = a.ord_;
        auto less = [n, ord](const Exponents& x, const Exponents& y) { return compare_monomials(x, y, n, ord) > 0; };
        std::map<Exponents, E, decltype(less)> acc(less);
        for (auto& [ma, ca] : a.t_)
            for (auto& [mb, cb] : b.t_) {
                auto e = ma + mb;
                auto it = acc.find(e);
                if (it == acc.end())
                    acc.emplace(e, ca * cb);
                else
                    it->second += ca * cb;
            }
        MultiPoly p(a.f_, a.v_, ord);
        for (auto& [m, c] : acc)
            if (!c.is_zero()) p.t_.push_back({m, c});
        return p;
    }
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly scaled(const E& s) const {
        MultiPoly p(f_, v_, ord_);
        if (s.is_zero()) return p;
        for (auto& [m, c] : t_) p.t_.push_back({m, c * s});
        return p;
    }
    // c * x^e * (*this)
    MultiPoly mul_term(const E& c, const Exponents& e) const {
        MultiPoly p(f_, v_, ord_);
        if (c.is_zero()) return p;
        for (auto& [m, k] : t_) p.t_.push_back({m + e, k * c});
        return p;
    }
    MultiPoly monic() const {
        if (is_zero()) return *this;
        return scaled(lead_coeff().inverse());
    }
    MultiPoly pow(unsigned k) const {
        MultiPoly r = constant(E::one(f_), v_, ord_);
        for (unsigned i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    MultiPoly derivative(std::size_t i) const {
        std::vector<Term> out;
        for (auto& [m, c] : t_) {
            if (m[i] == 0) continue;
            Exponents e = m;
            --e[i];
            out.push_back({e, c * E::from_int(f_, m[i])});
        }
        MultiPoly p(f_, v_, ord_);
        p.t_ = std::move(out);
        p.normalize();
        return p;
    }

    // Coefficients mapped through a function into another (or the same) field.
    template <class Fn>
    auto map_coeffs(Fn&& fn, FieldPtr<Base> target) const {
        MultiPoly p(target, v_, ord_);
        for (auto& [m, c] : t_) {
            auto d = fn(c);
            if (!d.is_zero()) p.t_.push_back({m, d});
        }
        return p;
    }
    template <class To, class Fn>
    MultiPoly<To> map_to(Fn&& fn, FieldPtr<To> target) const {
        std::vector<typename MultiPoly<To>::Term> terms;
        for (auto& [m, c] : t_) terms.push_back({m, fn(c)});
        return MultiPoly<To>::from_terms(target, v_, std::move(terms), ord_);
    }

    // Coefficients embedded into a tower having this field as a prefix.
    MultiPoly embed(const FieldPtr<Base>& super) const {
        if (f_ == super) return *this;
        return map_coeffs([&](const E& c) { return c.embed(super); }, super);
    }
    // Coefficients restricted to a prefix subfield, when they all lie there.
    std::optional<MultiPoly> restrict_to(const FieldPtr<Base>& sub) const {
        MultiPoly p(sub, v_, ord_);
        for (auto& [m, c] : t_) {
            auto r = c.restrict_to(sub);
            if (!r) return std::nullopt;
            p.t_.push_back({m, *r});
        }
        return p;
    }
    // Same terms viewed over a larger variable list (names must extend ours).
    MultiPoly with_vars(VarsPtr v) const {
        for (std::size_t i = 0; i < nvars(); ++i)
            if (i >= v->size() || v->names[i] != v_->names[i]) throw PreconditionError("incompatible variable lists");
        MultiPoly p(f_, v, ord_);
        p.t_ = t_;
        p.sort();
        return p;
    }

    // F(args): substitute a polynomial for every variable.
    MultiPoly compose(const std::vector<MultiPoly>& args) const {
        if (args.size() != nvars()) throw PreconditionError("wrong number of substitution arguments");
        const auto& tf = args.front().field();
        MultiPoly out(tf, args.front().vars(), args.front().order());
        std::vector<std::vector<MultiPoly>> pw(args.size());
        for (auto& [m, c] : t_) {
            MultiPoly term = constant(c.embed(tf), out.vars(), out.order());
            for (std::size_t i = 0; i < args.size(); ++i) {
                if (m[i] == 0) continue;
                auto& cache = pw[i];
                if (cache.empty()) cache.push_back(constant(E::one(tf), out.vars(), out.order()));
                while (cache.size() <= m[i]) cache.push_back(cache.back() * args[i]);
                term = term * cache[m[i]];
            }
            out += term;
        }
        return out;
    }

    E evaluate(const std::vector<E>& point) const {
        if (point.size() != nvars()) throw PreconditionError("wrong number of coordinates");
        const auto& tf = point.front().field();
        E acc = E::zero(tf);
        for (auto& [m, c] : t_) {
            E t = c.embed(tf);
            for (std::size_t i = 0; i < nvars(); ++i)
                if (m[i]) t = t * point[i].pow(static_cast<long>(m[i]));
            acc += t;
        }
        return acc;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        if (a.t_.size() != b.t_.size()) return false;
        for (std::size_t i = 0; i < a.t_.size(); ++i)
            if (a.t_[i].first != b.t_[i].first || !(a.t_[i].second == b.t_[i].second)) return false;
        return true;
    }

    // Canonical text: `c * X^i*Y^j` terms joined by " + ".
    std::string to_string() const {
        if (t_.empty()) return "0";
        std::string s;
        for (std::size_t k = 0; k < t_.size(); ++k) {
            if (k) s += " + ";
            s += t_[k].second.to_string();
            std::string mono = monomial_string(t_[k].first);
            if (!mono.empty()) s += " * " + mono;
        }
        return s;
    }
    std::string monomial_string(const Exponents& e) const {
        std::string s;
        for (std::size_t i = 0; i < nvars(); ++i) {
            if (!e[i]) continue;
            if (!s.empty()) s += "*";
            s += v_->names[i];
            if (e[i] > 1) s += "^" + std::to_string(e[i]);
        }
        return s;
    }

    void check(const MultiPoly& o) const {
        if (!(*v_ == *o.v_)) throw PreconditionError("inconsistent variable sets");
        if (f_ != o.f_ && !f_->same_as(*o.f_)) throw FieldMismatch();
    }

  private:
    void sort() {
        std::size_t n = nvars();
        TermOrder ord = ord_;
        std::sort(t_.begin(), t_.end(),
                  [n, ord](const Term& a, const Term& b) { return compare_monomials(a.first, b.first, n, ord) > 0; });
    }
    void normalize() {
        sort();
        std::vector<Term> out;
        for (auto& t : t_) {
            if (!out.empty() && out.back().first == t.first)
                out.back().second += t.second;
            else
                out.push_back(t);
        }
        t_.clear();
        for (auto& t : out)
            if (!t.second.is_zero()) t_.push_back(std::move(t));
    }

    static MultiPoly merge(const MultiPoly& a, const MultiPoly& b, bool subtract) {
        a.check(b);
        MultiPoly p(a.f_, a.v_, a.ord_);
        std::size_t n = a.nvars(), i = 0, j = 0;
        p.t_.reserve(a.t_.size() + b.t_.size());
        while (i < a.t_.size() || j < b.t_.size()) {
            int c = i == a.t_.size()   ? -1
                    : j == b.t_.size() ? 1
                                       : compare_monomials(a.t_[i].first, b.t_[j].first, n, a.ord_);
            if (c > 0) {
                p.t_.push_back(a.t_[i++]);
            } else if (c < 0) {
                p.t_.push_back(subtract ? Term{b.t_[j].first, -b.t_[j].second} : b.t_[j]);
                ++j;
            } else {
                E s = subtract ? a.t_[i].second - b.t_[j].second : a.t_[i].second + b.t_[j].second;
                if (!s.is_zero()) p.t_.push_back({a.t_[i].first, std::move(s)});
                ++i;
                ++j;
            }
        }
        return p;
    }

    FieldPtr<Base> f_;
    VarsPtr v_;
    TermOrder ord_ = TermOrder::grevlex;
    std::vector<Term> t_;
};

template <class Base>
std::ostream& operator<<(std::ostream& os, const MultiPoly<Base>& f) {
    return os << f.to_string();
}

}  // namespace ptl
