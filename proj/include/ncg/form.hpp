#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ncg/ncpoly.hpp"

namespace ncg {

/// Square matrix over NCPoly (value semantics, row-major).
class NCMat {
public:
    NCMat() = default;
    explicit NCMat(int n) : n_(n), e_(static_cast<std::size_t>(n) * n) {}

    static NCMat identity(int n) {
        NCMat m(n);
        for (int i = 0; i < n; ++i) m(i, i) = NCPoly::one();
        return m;
    }

    int dim() const { return n_; }
    NCPoly& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    const NCPoly& operator()(int i, int j) const {
        return e_[static_cast<std::size_t>(i) * n_ + j];
    }

    bool is_zero() const {
        for (const auto& p : e_)
            if (!p.is_zero()) return false;
        return true;
    }

    friend NCMat operator+(const NCMat& a, const NCMat& b) {
        NCMat r(a.n_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
        return r;
    }
    friend NCMat operator-(const NCMat& a, const NCMat& b) {
        NCMat r(a.n_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
        return r;
    }
    friend NCMat operator*(const NCMat& a, const NCMat& b) {
        NCMat r(a.n_);
        for (int i = 0; i < a.n_; ++i)
            for (int j = 0; j < a.n_; ++j) {
                NCPoly s;
                for (int k = 0; k < a.n_; ++k) s += a(i, k) * b(k, j);
                r(i, j) = std::move(s);
            }
        return r;
    }
    NCMat operator-() const {
        NCMat r(n_);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
        return r;
    }
    friend bool operator==(const NCMat& a, const NCMat& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }

    NCMat scaled(const TrigPoly& t) const {
        NCMat r(n_);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].scaled(t);
        return r;
    }
    NCMat star() const {
        NCMat r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r(i, j) = (*this)(j, i).star();
        return r;
    }
    NCMat map(NCPoly (NCPoly::*f)() const) const {
        NCMat r(n_);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = (e_[i].*f)();
        return r;
    }

    NCPoly matrix_trace() const {
        NCPoly s;
        for (int i = 0; i < n_; ++i) s += (*this)(i, i);
        return s;
    }

private:
    int n_{0};
    std::vector<NCPoly> e_;
};

/// Exterior basis subsets over {ep_X, ep_theta} as a bitmask:
/// bit 0 = ep_X (Lie direction), bit 1 = ep_theta (circle direction).
enum BasisSubset : unsigned { kScalar = 0, kX = 1, kTheta = 2, kXTheta = 3 };

/// Graded form: matrix coefficients indexed by exterior basis subsets.
/// Degree = popcount of the subset; everything above degree 2 is identically
/// absent since the basis is two-dimensional.
class NCForm {
public:
    NCForm() = default;
    explicit NCForm(int dim) : dim_(dim) {}

    static NCForm from_matrix(NCMat m) {
        NCForm f(m.dim());
        f.comp_[kScalar] = std::move(m);
        return f;
    }

    int dim() const { return dim_; }

    bool has(unsigned s) const { return comp_[s].has_value(); }
    const NCMat& at(unsigned s) const {
        if (!comp_[s]) throw std::out_of_range("absent form component");
        return *comp_[s];
    }
    /// Component as a matrix, zero if absent.
    NCMat component(unsigned s) const { return comp_[s] ? *comp_[s] : NCMat(dim_); }
    void set(unsigned s, NCMat m) {
        if (m.is_zero()) {
            comp_[s].reset();
        } else {
            comp_[s] = std::move(m);
        }
    }

    bool is_zero() const {
        for (const auto& c : comp_)
            if (c && !c->is_zero()) return false;
        return true;
    }
    /// Top degree present, -1 when zero.
    int degree() const {
        int d = -1;
        for (unsigned s = 0; s < 4; ++s)
            if (comp_[s] && !comp_[s]->is_zero()) d = std::max(d, std::popcount(s));
        return d;
    }
    bool homogeneous(int deg) const {
        for (unsigned s = 0; s < 4; ++s)
            if (comp_[s] && !comp_[s]->is_zero() && std::popcount(s) != deg) return false;
        return true;
    }

    friend NCForm operator+(const NCForm& a, const NCForm& b) {
        NCForm r(a.dim_);
        for (unsigned s = 0; s < 4; ++s) r.set(s, a.component(s) + b.component(s));
        return r;
    }
    friend NCForm operator-(const NCForm& a, const NCForm& b) {
        NCForm r(a.dim_);
        for (unsigned s = 0; s < 4; ++s) r.set(s, a.component(s) - b.component(s));
        return r;
    }
    friend bool operator==(const NCForm& a, const NCForm& b) {
        for (unsigned s = 0; s < 4; ++s)
            if (!(a.component(s) == b.component(s))) return false;
        return true;
    }

private:
    int dim_{0};
    std::array<std::optional<NCMat>, 4> comp_;
};

/// Graded wedge product. Degrees must sum to at most 2 (the basis has two
/// directions); exceeding top degree is an error rather than a silent
/// truncation.
inline NCForm wedge(const NCForm& a, const NCForm& b) {
    int da = std::max(a.degree(), 0);
    int db = std::max(b.degree(), 0);
    if (da + db > 2)
        throw std::domain_error("wedge: degrees sum beyond the top exterior degree");
    NCForm r(a.dim());
    // ep_X ^ ep_theta = - ep_theta ^ ep_X; matching generators annihilate.
    auto sign = [](unsigned s1, unsigned s2) -> int {
        // number of transpositions to sort the concatenation (s1 bits then s2 bits)
        // over two generators: only crossing is ep_theta (in s1) before ep_X (in s2).
        return ((s1 & kTheta) && (s2 & kX)) ? -1 : 1;
    };
    for (unsigned s1 = 0; s1 < 4; ++s1) {
        if (!a.has(s1)) continue;
        for (unsigned s2 = 0; s2 < 4; ++s2) {
            if (!b.has(s2)) continue;
            if (s1 & s2) continue;  // repeated generator
            unsigned s = s1 | s2;
            NCMat prod = a.at(s1) * b.at(s2);
            if (sign(s1, s2) < 0) prod = -prod;
            r.set(s, r.component(s) + prod);
        }
    }
    return r;
}

/// Exterior derivative: on 0-forms, d a = delta(a) ep_X + dtheta(a) ep_theta;
/// on 1-forms the mixed component is delta(w_theta) - dtheta(w_X) (the two
/// directions commute); top-degree forms map to zero.
inline NCForm exterior_d(const NCForm& w) {
    NCForm r(w.dim());
    if (w.has(kScalar)) {
        const NCMat& a = w.at(kScalar);
        r.set(kX, a.map(&NCPoly::delta));
        r.set(kTheta, a.map(&NCPoly::dtheta));
    }
    if (w.has(kX) || w.has(kTheta)) {
        NCMat mixed =
            w.component(kTheta).map(&NCPoly::delta) - w.component(kX).map(&NCPoly::dtheta);
        r.set(kXTheta, r.component(kXTheta) + mixed);
    }
    // d of the {X,theta} component is zero by degree.
    return r;
}

/// Left/right module action of 0-degree matrices on forms.
inline NCForm mat_times_form(const NCMat& m, const NCForm& w) {
    NCForm r(w.dim());
    for (unsigned s = 0; s < 4; ++s)
        if (w.has(s)) r.set(s, m * w.at(s));
    return r;
}
inline NCForm form_times_mat(const NCForm& w, const NCMat& m) {
    NCForm r(w.dim());
    for (unsigned s = 0; s < 4; ++s)
        if (w.has(s)) r.set(s, w.at(s) * m);
    return r;
}

}  // namespace ncg
