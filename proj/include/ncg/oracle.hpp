#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <random>

#include <Eigen/Dense>

#include "ncg/form.hpp"
#include "ncg/trace.hpp"

namespace ncg {

using CMat = Eigen::MatrixXcd;

/// Deterministic standard normal from raw mt19937_64 bits (Box-Muller), so a
/// seed pins the same model on every standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform() {
        return (gen_() >> 11) * 0x1.0p-53;  // [0, 1)
    }
    double normal() {
        if (have_) {
            have_ = false;
            return spare_;
        }
        double u1 = 0;
        while (u1 == 0.0) u1 = uniform();
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(2.0 * std::numbers::pi * u2);
        have_ = true;
        return r * std::cos(2.0 * std::numbers::pi * u2);
    }
    std::complex<double> cnormal() { return {normal(), normal()}; }

    CMat gaussian_matrix(int n) {
        CMat m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = cnormal();
        return m;
    }
    /// Haar-ish unitary: Q factor of a complex Gaussian.
    CMat unitary(int n) {
        Eigen::HouseholderQR<CMat> qr(gaussian_matrix(n));
        CMat q = qr.householderQ();
        return q;
    }
    CMat anti_hermitian(int n) {
        CMat a = gaussian_matrix(n);
        return (a - a.adjoint().eval()) / 2.0;
    }
    /// Rank-k orthogonal projection from k random directions.
    CMat projection(int n, int k) {
        CMat a = gaussian_matrix(n).leftCols(k);
        Eigen::HouseholderQR<CMat> qr(a);
        CMat q = CMat(qr.householderQ()).leftCols(k);
        return q * q.adjoint();
    }

private:
    std::mt19937_64 gen_;
    bool have_{false};
    double spare_{0};
};

inline CMat commutator(const CMat& a, const CMat& b) { return a * b - b * a; }

/// Matrix substitution model: u -> seeded unitary, du -> [K, U] for a seeded
/// anti-Hermitian K, free symbols -> seeded general matrices, dg -> [K, G].
class MatrixModel {
public:
    MatrixModel(std::uint64_t seed, int dim) : dim_(dim) {
        Rng rng(seed);
        u_ = rng.unitary(dim);
        k_ = rng.anti_hermitian(dim);
        // free symbols materialize lazily from an offset stream
        seed_ = seed;
    }

    int dim() const { return dim_; }
    const CMat& u() const { return u_; }
    const CMat& k() const { return k_; }
    CMat du() const { return commutator(k_, u_); }

    const CMat& free_symbol(int id) const {
        auto it = free_.find(id);
        if (it == free_.end()) {
            Rng rng(seed_ ^ (0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(id + 1)));
            it = free_.emplace(id, rng.gaussian_matrix(dim_)).first;
        }
        return it->second;
    }

    CMat eval(const Word& w) const {
        CMat m = CMat::Identity(dim_, dim_);
        for (const auto& l : w.letters()) {
            switch (l.tag) {
                case Tag::U: m *= u_; break;
                case Tag::Ustar: m *= u_.adjoint(); break;
                case Tag::Du: m *= du(); break;
                case Tag::Free: m *= free_symbol(l.id); break;
                case Tag::DFree: m *= commutator(k_, free_symbol(l.id)); break;
            }
        }
        return m;
    }

    CMat eval(const NCPoly& p, double theta) const {
        CMat m = CMat::Zero(dim_, dim_);
        for (auto& [w, c] : p.terms()) m += c.eval(theta) * eval(w);
        return m;
    }

    /// Blockwise evaluation of a matrix of polynomials.
    CMat eval(const NCMat& m, double theta) const {
        int n = m.dim();
        CMat r = CMat::Zero(n * dim_, n * dim_);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                r.block(i * dim_, j * dim_, dim_, dim_) = eval(m(i, j), theta);
        return r;
    }

    std::complex<double> eval_trace(const TraceClass& t, double theta) const {
        std::complex<double> s = 0;
        for (auto& [w, c] : t.terms) s += c.eval(theta) * eval(w).trace();
        return s;
    }

private:
    int dim_;
    std::uint64_t seed_;
    CMat u_, k_;
    mutable std::map<int, CMat> free_;
};

/// Quadrature over [0, 2pi] on 2^10 uniform panels (composite Simpson; the
/// integrands here are trig polynomials far below the resolvable bandwidth).
template <typename F>
std::complex<double> integrate_0_2pi(F&& f, int panels = 1024) {
    const double h = 2.0 * std::numbers::pi / panels;
    std::complex<double> s = f(0.0) + f(2.0 * std::numbers::pi);
    for (int i = 1; i < panels; ++i) s += (i % 2 ? 4.0 : 2.0) * f(i * h);
    return s * (h / 3.0);
}

}  // namespace ncg
