#pragma once

#include <complex>
#include <cstdint>
#include <sstream>
#include <string>

#include <gmpxx.h>

namespace ncg {

/// Exact complex rational a + b*i with mpq components.
/// mpq_class keeps fractions canonical (lowest terms, positive denominator).
class Gauss {
public:
    Gauss() : re_(0), im_(0) {}
    Gauss(long re) : re_(re), im_(0) {}
    Gauss(const mpq_class& re) : re_(re), im_(0) {}
    Gauss(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

    static Gauss rational(long num, long den) {
        mpq_class q(num, den);
        q.canonicalize();
        return Gauss(q);
    }
    static Gauss imaginary(long num, long den) {
        mpq_class q(num, den);
        q.canonicalize();
        return Gauss(mpq_class(0), q);
    }
    static Gauss i() { return Gauss(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    Gauss conj() const { return Gauss(re_, -im_); }

    Gauss operator-() const { return Gauss(-re_, -im_); }
    Gauss& operator+=(const Gauss& o) { re_ += o.re_; im_ += o.im_; return *this; }
    Gauss& operator-=(const Gauss& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    Gauss& operator*=(const Gauss& o) {
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        mpq_class i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    Gauss& operator/=(const Gauss& o) {
        mpq_class n = o.re_ * o.re_ + o.im_ * o.im_;  // |o|^2, nonzero for o != 0
        mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
        mpq_class i = (im_ * o.re_ - re_ * o.im_) / n;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }

    friend Gauss operator+(Gauss a, const Gauss& b) { return a += b; }
    friend Gauss operator-(Gauss a, const Gauss& b) { return a -= b; }
    friend Gauss operator*(Gauss a, const Gauss& b) { return a *= b; }
    friend Gauss operator/(Gauss a, const Gauss& b) { return a /= b; }
    friend bool operator==(const Gauss& a, const Gauss& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Gauss& a, const Gauss& b) { return !(a == b); }

    /// i^k for any integer k.
    static Gauss i_pow(long k) {
        switch (((k % 4) + 4) % 4) {
            case 0: return Gauss(1);
            case 1: return Gauss(mpq_class(0), mpq_class(1));
            case 2: return Gauss(-1);
            default: return Gauss(mpq_class(0), mpq_class(-1));
        }
    }

    std::complex<double> to_complex() const {
        return {re_.get_d(), im_.get_d()};
    }

    std::string str() const {
        std::ostringstream os;
        if (im_ == 0) {
            os << re_;
        } else if (re_ == 0) {
            os << im_ << "i";
        } else {
            os << re_ << (im_ > 0 ? "+" : "") << im_ << "i";
        }
        return os.str();
    }

private:
    mpq_class re_, im_;
};

inline std::ostream& operator<<(std::ostream& os, const Gauss& g) { return os << g.str(); }

}  // namespace ncg
