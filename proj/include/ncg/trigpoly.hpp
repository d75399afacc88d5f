#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <string>

#include "ncg/gauss.hpp"

namespace ncg {

/// Exact integral over [0, 2pi]: a multiple of 2pi plus an exact remainder
/// collected from the non-constant harmonics.
struct IntegralValue {
    Gauss two_pi_coeff;
    Gauss remainder;

    std::complex<double> to_complex() const {
        return two_pi_coeff.to_complex() * (2.0 * std::numbers::pi) + remainder.to_complex();
    }
};

/// Laurent polynomial in e^{i theta/4} over Gauss: sum_k c_k e^{ik theta/4}.
/// Frequencies are integers in quarter-angle units, so sin(theta/2), cos(theta/4)
/// and friends are exactly representable. Zero coefficients are never stored.
class TrigPoly {
public:
    using Map = std::map<long, Gauss>;

    TrigPoly() = default;
    explicit TrigPoly(Gauss c) {
        if (!c.is_zero()) coeffs_[0] = std::move(c);
    }

    static TrigPoly zero() { return TrigPoly(); }
    static TrigPoly one() { return TrigPoly(Gauss(1)); }
    static TrigPoly constant(Gauss c) { return TrigPoly(std::move(c)); }
    static TrigPoly harmonic(long k, Gauss c) {
        TrigPoly t;
        if (!c.is_zero()) t.coeffs_[k] = std::move(c);
        return t;
    }
    /// cos(m theta/4) = (e^{im theta/4} + e^{-im theta/4})/2
    static TrigPoly cos_quarter(long m) {
        TrigPoly t;
        t.coeffs_[m] = Gauss::rational(1, 2);
        t.coeffs_[-m] += Gauss::rational(1, 2);
        t.prune();
        return t;
    }
    /// sin(m theta/4) = (e^{im theta/4} - e^{-im theta/4})/(2i)
    static TrigPoly sin_quarter(long m) {
        TrigPoly t;
        t.coeffs_[m] = Gauss::imaginary(-1, 2);
        t.coeffs_[-m] += Gauss::imaginary(1, 2);
        t.prune();
        return t;
    }

    const Map& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    Gauss coeff(long k) const {
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? Gauss() : it->second;
    }
    long bandwidth() const {
        long b = 0;
        for (auto& [k, c] : coeffs_) b = std::max(b, std::labs(k));
        return b;
    }

    TrigPoly& operator+=(const TrigPoly& o) {
        for (auto& [k, c] : o.coeffs_) {
            auto& dst = coeffs_[k];
            dst += c;
            if (dst.is_zero()) coeffs_.erase(k);
        }
        return *this;
    }
    TrigPoly& operator-=(const TrigPoly& o) {
        for (auto& [k, c] : o.coeffs_) {
            auto& dst = coeffs_[k];
            dst -= c;
            if (dst.is_zero()) coeffs_.erase(k);
        }
        return *this;
    }
    friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
    friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }
    friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
        TrigPoly r;
        for (auto& [ka, ca] : a.coeffs_)
            for (auto& [kb, cb] : b.coeffs_) {
                auto& dst = r.coeffs_[ka + kb];
                dst += ca * cb;
                if (dst.is_zero()) r.coeffs_.erase(ka + kb);
            }
        return r;
    }
    TrigPoly operator-() const {
        TrigPoly r;
        for (auto& [k, c] : coeffs_) r.coeffs_[k] = -c;
        return r;
    }
    TrigPoly scaled(const Gauss& g) const {
        TrigPoly r;
        if (g.is_zero()) return r;
        for (auto& [k, c] : coeffs_) r.coeffs_[k] = c * g;
        return r;
    }
    friend bool operator==(const TrigPoly& a, const TrigPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }

    /// Complex conjugate: theta is real, so e^{ik theta/4} -> e^{-ik theta/4}.
    TrigPoly conj() const {
        TrigPoly r;
        for (auto& [k, c] : coeffs_) r.coeffs_[-k] = c.conj();
        return r;
    }

    /// d/dtheta: multiplies harmonic k by ik/4.
    TrigPoly dtheta() const {
        TrigPoly r;
        for (auto& [k, c] : coeffs_)
            if (k != 0) r.coeffs_[k] = c * Gauss::imaginary(k, 4);
        return r;
    }

    /// Pointwise value is real for all theta iff c_{-k} = conj(c_k).
    bool is_real_valued() const {
        for (auto& [k, c] : coeffs_)
            if (coeff(-k) != c.conj()) return false;
        return true;
    }

    /// Substitute theta = 0 (every harmonic is 1).
    Gauss value_at_zero() const {
        Gauss s;
        for (auto& [k, c] : coeffs_) s += c;
        return s;
    }
    /// Substitute theta = 2pi (harmonic k evaluates to i^k).
    Gauss value_at_two_pi() const {
        Gauss s;
        for (auto& [k, c] : coeffs_) s += c * Gauss::i_pow(k);
        return s;
    }

    std::complex<double> eval(double theta) const {
        std::complex<double> s = 0;
        for (auto& [k, c] : coeffs_)
            s += c.to_complex() * std::polar(1.0, static_cast<double>(k) * theta / 4.0);
        return s;
    }

    /// Exact integral over [0, 2pi]. Frequency 0 contributes 2pi*c_0; frequency
    /// k != 0 contributes c_k (4/(ik)) (i^k - 1) since the antiderivative of
    /// e^{ik theta/4} is (4/(ik)) e^{ik theta/4}.
    IntegralValue integrate() const {
        IntegralValue v;
        for (auto& [k, c] : coeffs_) {
            if (k == 0) {
                v.two_pi_coeff += c;
            } else {
                v.remainder += c * Gauss::imaginary(-4, k) * (Gauss::i_pow(k) - Gauss(1));
            }
        }
        return v;
    }

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::string s;
        for (auto& [k, c] : coeffs_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.str() + ")";
            if (k != 0) s += "*q^" + std::to_string(k);
        }
        return s;
    }

private:
    void prune() {
        for (auto it = coeffs_.begin(); it != coeffs_.end();)
            it = it->second.is_zero() ? coeffs_.erase(it) : std::next(it);
    }

    Map coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const TrigPoly& t) { return os << t.str(); }

}  // namespace ncg
