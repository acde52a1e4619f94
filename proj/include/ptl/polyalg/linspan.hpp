#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ptl/polyalg/multipoly.hpp"

namespace ptl {

// Row-reduced echelon form of a list of vectors over a field.
template <class Base>
class RowSpace {
  public:
    using E = Element<Base>;
    using Vec = std::vector<E>;

    RowSpace(FieldPtr<Base> f, std::size_t dim) : f_(std::move(f)), dim_(dim) {}

    std::size_t rank() const { return rows_.size(); }
    std::size_t dim() const { return dim_; }
    const std::vector<Vec>& rows() const { return rows_; }

    // Remainder of v after elimination against the current rows.
    Vec reduce(Vec v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const E& c = v[pivots_[r]];
            if (c.is_zero()) continue;
            E m = c;
            for (std::size_t k = 0; k < dim_; ++k)
                if (!rows_[r][k].is_zero()) v[k] -= m * rows_[r][k];
        }
        return v;
    }
    bool contains(const Vec& v) const {
        for (auto& c : reduce(v))
            if (!c.is_zero()) return false;
        return true;
    }
    // Adds v; returns false when v was already in the span.
    bool insert(const Vec& v) {
        Vec w = reduce(v);
        std::size_t p = 0;
        while (p < dim_ && w[p].is_zero()) ++p;
        if (p == dim_) return false;
        E inv = w[p].inverse();
        for (auto& c : w) c = c * inv;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            E c = rows_[r][p];
            if (c.is_zero()) continue;
            for (std::size_t k = 0; k < dim_; ++k)
                if (!w[k].is_zero()) rows_[r][k] -= c * w[k];
        }
        rows_.push_back(std::move(w));
        pivots_.push_back(p);
        return true;
    }
    bool contains_space(const RowSpace& o) const {
        for (auto& r : o.rows_)
            if (!contains(r)) return false;
        return true;
    }

  private:
    FieldPtr<Base> f_;
    std::size_t dim_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
};

// Fixed coordinates for the degree-`deg` forms in n variables.
class MonomialIndex {
  public:
    MonomialIndex(std::size_t nvars, unsigned deg) : n_(nvars) {
        Exponents e{};
        build(e, 0, deg);
    }
    std::size_t size() const { return list_.size(); }
    std::size_t at(const Exponents& e) const {
        auto it = index_.find(e);
        if (it == index_.end()) throw PreconditionError("monomial of unexpected degree");
        return it->second;
    }
    const std::vector<Exponents>& monomials() const { return list_; }

  private:
    void build(Exponents& e, std::size_t i, unsigned left) {
        if (i + 1 == n_) {
            e[i] = static_cast<std::uint16_t>(left);
            index_[e] = list_.size();
            list_.push_back(e);
            e[i] = 0;
            return;
        }
        for (unsigned k = left + 1; k-- > 0;) {
            e[i] = static_cast<std::uint16_t>(k);
            build(e, i + 1, left - k);
        }
        e[i] = 0;
    }
    std::size_t n_;
    std::vector<Exponents> list_;
    std::map<Exponents, std::size_t> index_;
};

template <class Base>
std::vector<Element<Base>> coefficient_vector(const MultiPoly<Base>& f, const MonomialIndex& idx,
                                              const FieldPtr<Base>& K) {
    std::vector<Element<Base>> v(idx.size(), Element<Base>::zero(K));
    for (auto& [m, c] : f.terms()) v[idx.at(m)] = c.embed(K);
    return v;
}

template <class Base>
MultiPoly<Base> from_coefficient_vector(const std::vector<Element<Base>>& v, const MonomialIndex& idx,
                                        const FieldPtr<Base>& K, const VarsPtr& vars) {
    std::vector<typename MultiPoly<Base>::Term> t;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) t.push_back({idx.monomials()[i], v[i]});
    return MultiPoly<Base>::from_terms(K, vars, std::move(t));
}

template <class Base>
RowSpace<Base> span_of(const std::vector<MultiPoly<Base>>& fs, const MonomialIndex& idx, const FieldPtr<Base>& K) {
    RowSpace<Base> rs(K, idx.size());
    for (auto& f : fs) rs.insert(coefficient_vector(f, idx, K));
    return rs;
}

// Fast path for sets of forms of one common degree: ideals generated in a
// single degree are equal iff the spans in that degree agree.
template <class Base>
std::optional<bool> same_degree_span_equal(const std::vector<MultiPoly<Base>>& A,
                                           const std::vector<MultiPoly<Base>>& B) {
    long d = -1;
    for (auto* S : {&A, &B})
        for (auto& f : *S) {
            if (f.is_zero()) continue;
            if (!f.is_homogeneous()) return std::nullopt;
            if (d >= 0 && f.degree() != d) return std::nullopt;
            d = f.degree();
        }
    if (d < 0) return true;
    const auto& any = A.empty() ? B.front() : A.front();
    FieldPtr<Base> K = any.field();
    for (auto* S : {&A, &B})
        for (auto& f : *S) K = (K->contains_prefix(*f.field())) ? K : f.field();
    MonomialIndex idx(any.nvars(), static_cast<unsigned>(d));
    auto sa = span_of(A, idx, K), sb = span_of(B, idx, K);
    return sa.rank() == sb.rank() && sa.contains_space(sb);
}

}  // namespace ptl
