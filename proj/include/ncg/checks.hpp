#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ncg/oracle.hpp"
#include "ncg/projector.hpp"
#include "ncg/trace.hpp"

namespace ncg {

/// Named verification outcome. symbolic_residual is "0" when everything
/// cancels exactly, otherwise the canonical form of the offending difference.
struct CheckReport {
    std::string name;
    std::string thesis_ref;
    bool pass{false};
    std::string symbolic_residual{"0"};
    double numeric_residual{0.0};
    std::vector<std::uint64_t> seeds;
    std::vector<std::string> notes;

    void fail_symbolic(const std::string& what, const std::string& residual) {
        pass = false;
        symbolic_residual = what + ": " + residual;
    }
};

namespace detail {

inline std::string mat_str(const NCMat& m) {
    std::string s;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
            if (!m(i, j).is_zero())
                s += "(" + std::to_string(i) + "," + std::to_string(j) + ") " +
                     m(i, j).str() + "; ";
    return s.empty() ? "0" : s;
}

inline std::string form_str(const NCForm& f) {
    static const char* names[4] = {"1", "eX", "eTh", "eX^eTh"};
    std::string s;
    for (unsigned b = 0; b < 4; ++b)
        if (f.has(b)) s += std::string(names[b]) + ": " + mat_str(f.at(b)) + " ";
    return s.empty() ? "0" : s;
}

}  // namespace detail

/// Lemma-style identity checks on the concrete projection p(theta).
/// Items with degree beyond the two-dimensional exterior basis hold as 0 = 0
/// and are reported vacuous. The numeric leg checks the curvature shortcut
/// Theta0 = p dp ^ dp with two independent commutator derivations.
inline CheckReport verify_projection_identities(const NCMat& p,
                                                std::uint64_t seed = 1,
                                                int num_seeds = 5,
                                                int dim = 4) {
    CheckReport rep;
    rep.name = "projection_identities";
    rep.thesis_ref = "Lemma 1.7 (1)-(5); Obs 1.5";
    rep.pass = true;

    NCForm p0 = NCForm::from_matrix(p);
    NCForm dp = exterior_d(p0);
    NCForm dpdp = wedge(dp, dp);

    // (1) p dp p = 0
    NCForm i1 = form_times_mat(mat_times_form(p, dp), p);
    if (!i1.is_zero())
        rep.fail_symbolic("p dp p", detail::form_str(i1));
    else
        rep.notes.push_back("(1) p dp p = 0");

    // (2) p (dp^dp) = (dp^dp) p
    NCForm i2 = mat_times_form(p, dpdp) - form_times_mat(dpdp, p);
    if (!i2.is_zero())
        rep.fail_symbolic("p(dp^dp) - (dp^dp)p", detail::form_str(i2));
    else
        rep.notes.push_back("(2) p(dp^dp) = (dp^dp)p");

    // (3) (2p-1) dp = -dp (2p-1)
    NCMat two_p_m1 = p + p - NCMat::identity(p.dim());
    NCForm i3 = mat_times_form(two_p_m1, dp) + form_times_mat(dp, two_p_m1);
    if (!i3.is_zero())
        rep.fail_symbolic("(2p-1)dp + dp(2p-1)", detail::form_str(i3));
    else
        rep.notes.push_back("(3) (2p-1)dp = -dp(2p-1)");

    // (4) (p dp^dp)^k = p (dp^dp)^k for k >= 2: degree 4 over a 2-dimensional
    // exterior basis, both sides identically absent.
    rep.notes.push_back("(4) vacuous at top degree (degree-4 components identically 0)");
    // (5) d(p dp^dp): degree 3, same situation.
    rep.notes.push_back("(5) vacuous at top degree (degree-3 components identically 0)");

    // Obs 1.5 numerically: Theta0 xi = p(d1(p) d2(p) - d2(p) d1(p)) xi matches
    // the connection-commutator definition for commutator derivations.
    double worst = 0;
    for (int s = 0; s < num_seeds; ++s) {
        std::uint64_t sd = seed + static_cast<std::uint64_t>(s);
        rep.seeds.push_back(sd);
        Rng rng(sd);
        CMat proj = rng.projection(dim, dim / 2);
        CMat k1 = rng.anti_hermitian(dim);
        CMat k2 = rng.anti_hermitian(dim);
        CMat xi = proj * rng.gaussian_matrix(dim);
        auto d1 = [&](const CMat& m) { return commutator(k1, m); };
        auto d2 = [&](const CMat& m) { return commutator(k2, m); };
        CMat lhs = proj * d1(proj * d2(xi)) - proj * d2(proj * d1(xi)) -
                   proj * commutator(commutator(k1, k2), xi);
        CMat rhs = proj * (d1(proj) * d2(proj) - d2(proj) * d1(proj)) * xi;
        worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
    rep.numeric_residual = worst;
    if (worst > 1e-12) {
        rep.pass = false;
        rep.notes.push_back("Obs 1.5 numeric residual exceeds 1e-12");
    } else {
        rep.notes.push_back("Obs 1.5 numeric (two commutator derivations) <= 1e-12");
    }
    return rep;
}

inline CheckReport verify_projection_identities(std::uint64_t seed = 1) {
    return verify_projection_identities(build_p_theta().p, seed);
}

/// Curvature of nabla = nabla0 + Gamma for Gamma = p gamma p with one free
/// symbol per exterior direction: the commutator of the two covariant
/// derivatives applied to p must match Theta0 + p(dGamma + Gamma^Gamma)p on
/// (ep_X, ep_theta), symbolically and under matrix substitution.
inline CheckReport verify_curvature_formula(const NCMat& p,
                                            std::uint64_t seed = 1,
                                            int num_seeds = 10,
                                            double tol = 1e-9,
                                            int dim = 3) {
    CheckReport rep;
    rep.name = "curvature_formula";
    rep.thesis_ref = "Prop 1.6; Lemma 1.3";
    rep.pass = true;

    const int n = p.dim();
    NCMat gx(n), gt(n);
    for (int i = 0; i < n; ++i) {
        gx(i, i) = NCPoly::free_symbol(1);
        gt(i, i) = NCPoly::free_symbol(2);
    }
    NCMat gamma_x = p * gx * p;
    NCMat gamma_t = p * gt * p;

    auto nabla_x = [&](const NCMat& xi) { return p * xi.map(&NCPoly::delta) + gamma_x * xi; };
    auto nabla_t = [&](const NCMat& xi) { return p * xi.map(&NCPoly::dtheta) + gamma_t * xi; };

    NCMat lhs = nabla_x(nabla_t(p)) - nabla_t(nabla_x(p));

    NCForm p0 = NCForm::from_matrix(p);
    NCForm dp = exterior_d(p0);
    NCMat theta0 = (p * wedge(dp, dp).component(kXTheta));
    NCMat d_gamma = gamma_t.map(&NCPoly::delta) - gamma_x.map(&NCPoly::dtheta);
    NCMat gwg = gamma_x * gamma_t - gamma_t * gamma_x;
    NCMat rhs = theta0 + p * (d_gamma + gwg) * p;

    NCMat diff = lhs - rhs;
    if (!diff.is_zero()) rep.fail_symbolic("Theta - (Theta0 + p(dGamma+Gamma^Gamma)p)",
                                           detail::mat_str(diff));

    // Gamma = 0 degenerate case reduces to Theta0.
    NCMat lhs0 = p * (p * p.map(&NCPoly::dtheta)).map(&NCPoly::delta) -
                 p * (p * p.map(&NCPoly::delta)).map(&NCPoly::dtheta);
    if (!(lhs0 - theta0).is_zero())
        rep.fail_symbolic("Gamma=0 curvature vs Theta0", detail::mat_str(lhs0 - theta0));

    // numeric cross-check of both sides entrywise at sampled theta
    double worst = 0;
    const double thetas[3] = {0.7, 2.1, 5.3};
    for (int s = 0; s < num_seeds; ++s) {
        std::uint64_t sd = seed + static_cast<std::uint64_t>(s);
        rep.seeds.push_back(sd);
        MatrixModel model(sd, dim);
        for (double th : thetas) {
            CMat a = model.eval(lhs, th);
            CMat b = model.eval(rhs, th);
            worst = std::max(worst, (a - b).cwiseAbs().maxCoeff());
        }
    }
    rep.numeric_residual = worst;
    if (worst > tol) {
        rep.pass = false;
        rep.notes.push_back("numeric curvature residual exceeds tolerance");
    }
    return rep;
}

inline CheckReport verify_curvature_formula(std::uint64_t seed = 1) {
    return verify_curvature_formula(build_p_theta().p, seed);
}

/// Lemma 1.11 for k = 1 (higher k vacuous over two exterior directions):
/// (1/2pi i) Tr(p (dp^dp)) is real for matrix projections, checked over
/// seeded random Hermitian projections with two commutator derivations.
inline CheckReport verify_realness(std::uint64_t seed = 1,
                                   int num_seeds = 20,
                                   double tol = 1e-9,
                                   int dim = 3) {
    CheckReport rep;
    rep.name = "realness_k1";
    rep.thesis_ref = "Lemma 1.11";
    rep.pass = true;

    double worst = 0;
    for (int s = 0; s < num_seeds; ++s) {
        std::uint64_t sd = seed + static_cast<std::uint64_t>(s);
        rep.seeds.push_back(sd);
        Rng rng(sd);
        CMat proj = rng.projection(dim, 1 + s % dim);
        CMat k1 = rng.anti_hermitian(dim);
        CMat k2 = rng.anti_hermitian(dim);
        CMat dp1 = commutator(k1, proj);
        CMat dp2 = commutator(k2, proj);
        std::complex<double> val =
            (proj * (dp1 * dp2 - dp2 * dp1)).trace() /
            std::complex<double>(0, 2.0 * std::numbers::pi);
        worst = std::max(worst, std::abs(val.imag()));
    }
    rep.numeric_residual = worst;
    if (worst > tol) rep.pass = false;
    rep.notes.push_back("imaginary part bound over " + std::to_string(num_seeds) + " seeds");
    return rep;
}

/// Full Eq 2.5 pipeline: residual-free reduction to f * <u* du>, realness of
/// f, the exact integral, and the quadrature bridge against the matrix model.
inline CheckReport verify_odd_character(const NCMat& p,
                                        std::uint64_t seed = 1,
                                        int num_seeds = 10,
                                        double tol = 1e-9,
                                        int dim = 4) {
    CheckReport rep;
    rep.name = "odd_character_integrand";
    rep.thesis_ref = "Eq 2.5; Obs 2.3; Obs 2.4";
    rep.pass = true;

    OddCharacterIntegrand oc = compute_odd_character_integrand(p);
    if (!oc.residual.is_zero())
        rep.fail_symbolic("non delta-exact residual", oc.residual.str());
    if (!oc.f.is_real_valued()) {
        rep.pass = false;
        rep.notes.push_back("integrand f is not real-valued");
    }

    IntegralValue iv = oc.f.integrate();
    rep.notes.push_back("f = " + oc.f.str());
    rep.notes.push_back("integral of f over [0,2pi] = 2pi*(" + iv.two_pi_coeff.str() +
                        ") + (" + iv.remainder.str() + ")");

    // Bridge: the full matrix-model integral of Tr(p dp^dp) against the
    // reduced form. Every delta-exact class has a vanishing commutator-model
    // trace, so both sides are tiny and must agree.
    NCForm p0 = NCForm::from_matrix(p);
    NCForm t = mat_times_form(p, wedge(exterior_d(p0), exterior_d(p0)));
    TraceClass raw = trace_cyclic_normal_form(t.component(kXTheta));
    double worst = 0;
    for (int s = 0; s < num_seeds; ++s) {
        std::uint64_t sd = seed + static_cast<std::uint64_t>(s);
        rep.seeds.push_back(sd);
        MatrixModel model(sd, dim);
        auto integrand = [&](double th) { return model.eval_trace(raw, th); };
        std::complex<double> lhs = integrate_0_2pi(integrand);
        std::complex<double> rhs =
            iv.to_complex() * (model.u().adjoint() * model.du()).trace();
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    rep.numeric_residual = worst;
    if (worst > tol) {
        rep.pass = false;
        rep.notes.push_back("quadrature bridge residual exceeds tolerance");
    }
    return rep;
}

inline CheckReport verify_odd_character(std::uint64_t seed = 1) {
    return verify_odd_character(build_p_theta().p, seed);
}

/// Obs 2.3: the matrix trace of p - p_n vanishes pointwise (stronger than the
/// integrated statement), plus the exact endpoint and idempotency checks.
inline CheckReport verify_suspension_endpoints() {
    CheckReport rep;
    rep.name = "suspension_projection";
    rep.thesis_ref = "Sec 1.2 display; Obs 2.3";
    rep.pass = true;

    HomotopyProjection hp = build_p_theta();
    if (!((hp.p * hp.p) - hp.p).is_zero())
        rep.fail_symbolic("p^2 - p", detail::mat_str(hp.p * hp.p - hp.p));

    NCMat wpnws = hp.w * hp.p_n * hp.w.star();
    if (!(wpnws - hp.p).is_zero())
        rep.fail_symbolic("w p_n w* - p", detail::mat_str(wpnws - hp.p));

    NCMat ww = hp.w * hp.w.star();
    if (!(ww - NCMat::identity(2)).is_zero())
        rep.fail_symbolic("w w* - 1", detail::mat_str(ww - NCMat::identity(2)));

    auto endpoint = [&](bool at_two_pi) {
        NCMat e(2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                e(i, j) = at_two_pi ? hp.p(i, j).at_two_pi() : hp.p(i, j).at_zero();
        return e;
    };
    if (!(endpoint(false) - hp.p_n).is_zero())
        rep.fail_symbolic("p(0) - p_n", detail::mat_str(endpoint(false) - hp.p_n));
    if (!(endpoint(true) - hp.p_n).is_zero())
        rep.fail_symbolic("p(2pi) - p_n", detail::mat_str(endpoint(true) - hp.p_n));

    NCPoly tr = (hp.p - hp.p_n).matrix_trace();
    if (!tr.is_zero()) rep.fail_symbolic("Tr(p - p_n)", tr.str());
    rep.notes.push_back("Tr(p - p_n) = 0 pointwise; p(0) = p(2pi) = p_n; p^2 = p; p = w p_n w*");
    return rep;
}

/// Mutation helper for falsifiability tests: perturb the (1,1) entry.
inline NCMat perturbed_p_theta() {
    NCMat p = build_p_theta().p;
    p(0, 0) += NCPoly::scalar(TrigPoly::constant(Gauss::rational(1, 10)));
    return p;
}

}  // namespace ncg
