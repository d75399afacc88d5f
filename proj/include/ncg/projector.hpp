#pragma once

#include "ncg/form.hpp"

namespace ncg {

/// The homotopy data realizing a K1 class as a difference of projections over
/// the suspension: p(theta) = w(theta) p_n w(theta)*, here for one unitary
/// generator (n = 1, 2x2 matrices).
struct HomotopyProjection {
    NCMat p;        // the displayed 2x2 projection entries
    NCMat w;        // the unitary conjugator
    NCMat p_n;      // diag(1, 0)
};

/// The four displayed entries of p(theta) over quarter-angle harmonics:
///   p11 = 1 - sin^2(th/2)/4 (1-u)(1-u*)
///   p12 = (u-1) sin(th/2)/2 [cos^2(th/4) + u sin^2(th/4)]
///   p21 = (u*-1) sin(th/2)/2 [cos^2(th/4) + u* sin^2(th/4)]
///   p22 = sin^2(th/2)/4 (1-u)(1-u*)
inline HomotopyProjection build_p_theta() {
    const NCPoly one = NCPoly::one();
    const NCPoly u = NCPoly::u();
    const NCPoly us = NCPoly::ustar();

    const TrigPoly s2 = TrigPoly::sin_quarter(2);          // sin(theta/2)
    const TrigPoly c4 = TrigPoly::cos_quarter(1);          // cos(theta/4)
    const TrigPoly s4 = TrigPoly::sin_quarter(1);          // sin(theta/4)
    const TrigPoly quarter = TrigPoly::constant(Gauss::rational(1, 4));
    const TrigPoly half = TrigPoly::constant(Gauss::rational(1, 2));
    const TrigPoly s2sq4 = s2 * s2 * quarter;              // sin^2(theta/2)/4
    const TrigPoly s2h = s2 * half;                        // sin(theta/2)/2
    const TrigPoly c4sq = c4 * c4;
    const TrigPoly s4sq = s4 * s4;

    const NCPoly one_mu = one - u;
    const NCPoly one_mus = one - us;

    NCMat p(2);
    p(0, 0) = one - (one_mu * one_mus).scaled(s2sq4);
    p(0, 1) = (u - one).scaled(s2h) * (NCPoly::scalar(c4sq) + u.scaled(s4sq));
    p(1, 0) = (us - one).scaled(s2h) * (NCPoly::scalar(c4sq) + us.scaled(s4sq));
    p(1, 1) = (one_mu * one_mus).scaled(s2sq4);

    // w = diag(u,1) R(theta/4) diag(u*,1) R(-theta/4)
    NCMat rot(2), roti(2), du(2), dus(2);
    rot(0, 0) = NCPoly::scalar(c4);
    rot(0, 1) = NCPoly::scalar(-s4);
    rot(1, 0) = NCPoly::scalar(s4);
    rot(1, 1) = NCPoly::scalar(c4);
    roti(0, 0) = NCPoly::scalar(c4);
    roti(0, 1) = NCPoly::scalar(s4);
    roti(1, 0) = NCPoly::scalar(-s4);
    roti(1, 1) = NCPoly::scalar(c4);
    du(0, 0) = u;
    du(1, 1) = one;
    dus(0, 0) = us;
    dus(1, 1) = one;

    NCMat pn(2);
    pn(0, 0) = one;

    return {std::move(p), du * rot * dus * roti, std::move(pn)};
}

}  // namespace ncg
