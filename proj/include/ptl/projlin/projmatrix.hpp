#pragma once

#include <compare>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "ptl/exactfield/galois.hpp"
#include "ptl/polyalg/ops.hpp"

namespace ptl {

template <class Base>
SquareMatrix<Base> mat_mul(const SquareMatrix<Base>& A, const SquareMatrix<Base>& B) {
    std::size_t n = A.size();
    auto K = common_field(A[0][0].field(), B[0][0].field());
    SquareMatrix<Base> C(n, std::vector<Element<Base>>(n, Element<Base>::zero(K)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (A[i][k].is_zero()) continue;
            auto a = A[i][k].embed(K);
            for (std::size_t j = 0; j < n; ++j)
                if (!B[k][j].is_zero()) C[i][j] += a * B[k][j].embed(K);
        }
    return C;
}

template <class Base>
SquareMatrix<Base> identity_matrix(const FieldPtr<Base>& K, std::size_t n) {
    SquareMatrix<Base> I(n, std::vector<Element<Base>>(n, Element<Base>::zero(K)));
    for (std::size_t i = 0; i < n; ++i) I[i][i] = Element<Base>::one(K);
    return I;
}

template <class Base>
Element<Base> determinant(SquareMatrix<Base> A) {
    std::size_t n = A.size();
    auto K = A[0][0].field();
    Element<Base> det = Element<Base>::one(K);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t r = c;
        while (r < n && A[r][c].is_zero()) ++r;
        if (r == n) return Element<Base>::zero(K);
        if (r != c) {
            std::swap(A[r], A[c]);
            det = -det;
        }
        det = det * A[c][c];
        auto inv = A[c][c].inverse();
        for (std::size_t r2 = c + 1; r2 < n; ++r2) {
            if (A[r2][c].is_zero()) continue;
            auto f = A[r2][c] * inv;
            for (std::size_t k = c; k < n; ++k) A[r2][k] -= f * A[c][k];
        }
    }
    return det;
}

template <class Base>
SquareMatrix<Base> mat_inverse(const SquareMatrix<Base>& A) {
    std::size_t n = A.size();
    auto K = A[0][0].field();
    SquareMatrix<Base> M = A, I = identity_matrix(K, n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t r = c;
        while (r < n && M[r][c].is_zero()) ++r;
        if (r == n) throw PreconditionError("singular matrix");
        std::swap(M[r], M[c]);
        std::swap(I[r], I[c]);
        auto inv = M[c][c].inverse();
        for (std::size_t k = 0; k < n; ++k) {
            M[c][k] = M[c][k] * inv;
            I[c][k] = I[c][k] * inv;
        }
        for (std::size_t r2 = 0; r2 < n; ++r2) {
            if (r2 == c || M[r2][c].is_zero()) continue;
            auto f = M[r2][c];
            for (std::size_t k = 0; k < n; ++k) {
                M[r2][k] -= f * M[c][k];
                I[r2][k] -= f * I[c][k];
            }
        }
    }
    return I;
}

// Invertible matrix modulo scalars, scaled so that the first nonzero entry
// in row-major order is 1.
template <class Base>
class ProjMatrix {
  public:
    using E = Element<Base>;

    ProjMatrix() = default;
    explicit ProjMatrix(SquareMatrix<Base> rows) : m_(std::move(rows)) {
        std::size_t n = m_.size();
        if (n == 0) throw PreconditionError("empty matrix");
        for (auto& r : m_)
            if (r.size() != n) throw PreconditionError("matrix is not square");
        auto K = m_[0][0].field();
        for (auto& r : m_)
            for (auto& e : r) K = common_field(K, e.field());
        for (auto& r : m_)
            for (auto& e : r) e = e.embed(K);
        if (determinant(m_).is_zero()) throw PreconditionError("singular matrix");
        canonicalize();
    }

    static ProjMatrix identity(const FieldPtr<Base>& K, std::size_t n) { return ProjMatrix(identity_matrix(K, n)); }
    static ProjMatrix diagonal(const std::vector<E>& d) {
        auto K = d[0].field();
        SquareMatrix<Base> m(d.size(), std::vector<E>(d.size(), E::zero(K)));
        for (std::size_t i = 0; i < d.size(); ++i) m[i][i] = d[i];
        return ProjMatrix(std::move(m));
    }

    std::size_t dim() const { return m_.size(); }
    const FieldPtr<Base>& field() const { return m_[0][0].field(); }
    const SquareMatrix<Base>& rows() const { return m_; }
    const E& operator()(std::size_t i, std::size_t j) const { return m_[i][j]; }

    friend ProjMatrix operator*(const ProjMatrix& A, const ProjMatrix& B) {
        if (A.dim() != B.dim()) throw PreconditionError("dimension mismatch");
        return ProjMatrix(mat_mul(A.m_, B.m_), true);
    }
    ProjMatrix inverse() const { return ProjMatrix(mat_inverse(m_), true); }
    ProjMatrix pow(long k) const {
        ProjMatrix b = k < 0 ? inverse() : *this, r = identity(field(), dim());
        for (long e = k < 0 ? -k : k; e; e >>= 1) {
            if (e & 1) r = r * b;
            b = b * b;
        }
        return r;
    }

    bool is_identity() const { return *this == identity(field(), dim()); }

    // Projective order, or 0 when larger than cap.
    std::size_t order(std::size_t cap = 10000) const {
        ProjMatrix x = *this;
        for (std::size_t k = 1; k <= cap; ++k) {
            if (x.is_identity()) return k;
            x = x * *this;
        }
        return 0;
    }

    bool is_monomial() const {
        for (auto& r : m_) {
            int nz = 0;
            for (auto& e : r) nz += !e.is_zero();
            if (nz != 1) return false;
        }
        return true;
    }
    bool is_diagonal() const {
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < dim(); ++j)
                if (i != j && !m_[i][j].is_zero()) return false;
        return true;
    }

    ProjMatrix embed(const FieldPtr<Base>& super) const {
        SquareMatrix<Base> m = m_;
        for (auto& r : m)
            for (auto& e : r) e = e.embed(super);
        return ProjMatrix(std::move(m), true);
    }
    std::optional<ProjMatrix> restrict_to(const FieldPtr<Base>& sub) const {
        SquareMatrix<Base> m = m_;
        for (auto& r : m)
            for (auto& e : r) {
                auto x = e.restrict_to(sub);
                if (!x) return std::nullopt;
                e = *x;
            }
        return ProjMatrix(std::move(m), true);
    }

    template <class Fn>
    ProjMatrix map_entries(Fn&& fn) const {
        SquareMatrix<Base> m = m_;
        for (auto& r : m)
            for (auto& e : r) e = fn(e);
        return ProjMatrix(std::move(m));
    }

    friend bool operator==(const ProjMatrix& a, const ProjMatrix& b) {
        if (a.dim() != b.dim()) return false;
        return a.m_ == b.m_;
    }
    friend std::strong_ordering operator<=>(const ProjMatrix& a, const ProjMatrix& b) {
        if (a.dim() != b.dim()) return a.dim() <=> b.dim();
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j) {
                auto c = a.m_[i][j] <=> b.m_[i][j];
                if (c != 0) return c;
            }
        return std::strong_ordering::equal;
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < dim(); ++i) {
            s += i ? ",[" : "[";
            for (std::size_t j = 0; j < dim(); ++j) s += (j ? "," : "") + m_[i][j].to_string();
            s += "]";
        }
        return s + "]";
    }

  private:
    ProjMatrix(SquareMatrix<Base> rows, bool) : m_(std::move(rows)) { canonicalize(); }

    void canonicalize() {
        for (auto& r : m_)
            for (auto& e : r)
                if (!e.is_zero()) {
                    if (e.is_one()) return;
                    auto inv = e.inverse();
                    for (auto& r2 : m_)
                        for (auto& x : r2)
                            if (!x.is_zero()) x = x * inv;
                    return;
                }
    }

    SquareMatrix<Base> m_;
};

template <class Base>
bool proj_eq(const ProjMatrix<Base>& A, const ProjMatrix<Base>& B) {
    return A == B;
}

template <class Base>
ProjMatrix<Base> galois_on_matrix(const GaloisMap<Base>& g, const ProjMatrix<Base>& A) {
    return A.map_entries([&](const Element<Base>& x) { return g(x); });
}

template <class Base>
MultiPoly<Base> substitute_linear(const MultiPoly<Base>& F, const ProjMatrix<Base>& M) {
    return substitute_linear(F, M.rows());
}

struct GroupCapExceeded : Error {
    explicit GroupCapExceeded(std::size_t cap)
        : Error("group closure exceeded the cap of " + std::to_string(cap) + " elements") {}
};

template <class Base>
class MatrixGroup {
  public:
    MatrixGroup() = default;
    MatrixGroup(std::vector<ProjMatrix<Base>> gens, std::vector<ProjMatrix<Base>> elems)
        : gens_(std::move(gens)), elems_(std::move(elems)) {
        for (std::size_t i = 0; i < elems_.size(); ++i) index_.emplace(elems_[i], i);
    }

    const std::vector<ProjMatrix<Base>>& generators() const { return gens_; }
    const std::vector<ProjMatrix<Base>>& elements() const { return elems_; }
    std::size_t order() const { return elems_.size(); }
    bool contains(const ProjMatrix<Base>& x) const { return index_.count(x) > 0; }
    std::size_t index_of(const ProjMatrix<Base>& x) const {
        auto it = index_.find(x);
        if (it == index_.end()) throw PreconditionError("not a group element");
        return it->second;
    }
    bool is_abelian() const {
        for (auto& a : gens_)
            for (auto& b : gens_)
                if (!(a * b == b * a)) return false;
        return true;
    }

  private:
    std::vector<ProjMatrix<Base>> gens_, elems_;
    std::map<ProjMatrix<Base>, std::size_t> index_;
};

// Breadth-first closure under right multiplication by the generators.
template <class Base>
MatrixGroup<Base> group_closure(const std::vector<ProjMatrix<Base>>& gens, std::size_t cap = 10000,
                                const FieldPtr<Base>& K = nullptr, std::size_t n = 0) {
    if (gens.empty() && !K) throw PreconditionError("closure of an empty list needs a field");
    FieldPtr<Base> F = gens.empty() ? K : gens.front().field();
    std::size_t dim = gens.empty() ? n : gens.front().dim();
    for (auto& g : gens) F = common_field(F, g.field());
    std::vector<ProjMatrix<Base>> G;
    for (auto& g : gens) G.push_back(g.embed(F));
    std::vector<ProjMatrix<Base>> elems{ProjMatrix<Base>::identity(F, dim)};
    std::set<ProjMatrix<Base>> seen(elems.begin(), elems.end());
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (auto& g : G) {
            auto y = elems[i] * g;
            if (seen.insert(y).second) {
                if (elems.size() >= cap) throw GroupCapExceeded(cap);
                elems.push_back(y);
            }
        }
    return MatrixGroup<Base>(std::move(G), std::move(elems));
}

template <class Base>
std::ostream& operator<<(std::ostream& os, const ProjMatrix<Base>& m) {
    return os << m.to_string();
}

}  // namespace ptl
