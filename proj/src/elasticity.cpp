#include "curvedyn/elasticity.hpp"

#include <cmath>

namespace curvedyn {

double elasticity_tensor(const Mat2& A, const MaterialLaw& mat, int a, int b,
                         int c, int d) {
    return mat.lambda * A(a, b) * A(c, d) +
           0.5 * mat.mu * (A(a, c) * A(b, d) + A(a, d) * A(b, c));
}

Mat2 metric_matrix(const CurvatureProfile& profile, double R) {
    const double w = profile.warp(R);
    return Mat2::diag(1.0, w * w);
}

Mat2 pullback_metric(const Jet1& jet, const AzimuthalMetric& space) {
    const Mat2 g = metric_matrix(space.profile(), jet.space_point[0]);
    const Mat2& D = jet.deriv;
    Mat2 out;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            double s = 0.0;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) s += g(i, j) * D(i, a) * D(j, b);
            out(a, b) = s;
        }
    return out;
}

Mat2 strain(const Mat2& pullback, const Mat2& G) { return pullback - G; }

double energy_density(const Mat2& eps, const Mat2& G, const MaterialLaw& mat) {
    if (!(G.det() > 0.0) || !(G(0, 0) > 0.0))
        throw std::domain_error("body metric not positive definite");
    const Mat2 A = G.inverse();
    double tr = 0.0, norm2 = 0.0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            tr += A(a, b) * eps(a, b);
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d)
                    norm2 += A(a, c) * A(b, d) * eps(a, b) * eps(c, d);
        }
    return mat.lambda * tr * tr + mat.mu * norm2;
}

double energy_density(const Jet1& jet, const AzimuthalMetric& body,
                      const AzimuthalMetric& space, const MaterialLaw& mat) {
    const Mat2 G = metric_matrix(body.profile(), jet.body_point[0]);
    return energy_density(strain(pullback_metric(jet, space), G), G, mat);
}

namespace {

// dW/dD = 4 g D (G^-1 eps G^-1) and dW/dx^m = 2 tr(D^T d_m(g) D  G^-1 eps G^-1)
// for lambda = 0, mu = 1; only m = r survives for an azimuthal space metric.
StressDensity closed_form_fiber_derivative(const Jet1& jet,
                                           const AzimuthalMetric& body,
                                           const AzimuthalMetric& space) {
    const double R = jet.body_point[0];
    const double r = jet.space_point[0];
    const Mat2 G = metric_matrix(body.profile(), R);
    const Mat2 A = G.inverse();
    const Mat2 g = metric_matrix(space.profile(), r);
    const Mat2& D = jet.deriv;
    const Mat2 eps = strain(pullback_metric(jet, space), G);

    Mat2 AeA;  // (G^-1 eps G^-1)_{ba}
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            double s = 0.0;
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d) s += A(a, c) * eps(c, d) * A(d, b);
            AeA(a, b) = s;
        }

    StressDensity out;
    for (int i = 0; i < 2; ++i)
        for (int a = 0; a < 2; ++a) {
            double s = 0.0;
            for (int j = 0; j < 2; ++j)
                for (int b = 0; b < 2; ++b) s += g(i, j) * D(j, b) * AeA(b, a);
            out.S_comp(i, a) = 4.0 * s;
        }

    // d g_{theta theta}/dr = 2 warp warp'; all other metric derivatives vanish.
    const double w = space.warp(r);
    const double wp = space.warp_derivative(r);
    const double dg_tt = 2.0 * w * wp;
    double s = 0.0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) s += D(1, a) * D(1, b) * AeA(a, b);
    out.R_comp[0] = 2.0 * dg_tt * s;
    out.R_comp[1] = 0.0;
    return out;
}

}  // namespace

StressDensity fd_fiber_derivative(const Jet1& jet, const AzimuthalMetric& body,
                                  const AzimuthalMetric& space,
                                  const MaterialLaw& mat, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("fd step must be > 0");
    StressDensity out;
    const auto W = [&](const Jet1& j) { return energy_density(j, body, space, mat); };

    for (int i = 0; i < 2; ++i) {
        Jet1 plus = jet, minus = jet;
        plus.space_point[i] += h;
        minus.space_point[i] -= h;
        out.R_comp[i] = (W(plus) - W(minus)) / (2.0 * h);
    }
    for (int i = 0; i < 2; ++i)
        for (int a = 0; a < 2; ++a) {
            Jet1 plus = jet, minus = jet;
            plus.deriv(i, a) += h;
            minus.deriv(i, a) -= h;
            out.S_comp(i, a) = (W(plus) - W(minus)) / (2.0 * h);
        }
    return out;
}

StressDensity stress_density(const Jet1& jet, const AzimuthalMetric& body,
                             const AzimuthalMetric& space,
                             const MaterialLaw& mat) {
    StressDensity fiber = (mat.lambda == 0.0 && mat.mu == 1.0)
                              ? closed_form_fiber_derivative(jet, body, space)
                              : fd_fiber_derivative(jet, body, space, mat);
    const double rho = body.warp(jet.body_point[0]);  // sqrt(det G)
    fiber.R_comp[0] *= rho;
    fiber.R_comp[1] *= rho;
    fiber.S_comp = rho * fiber.S_comp;
    return fiber;
}

RadialEnergyDerivatives radial_energy_derivatives(double f, double fprime,
                                                  double R,
                                                  const CurvatureProfile& body,
                                                  const CurvatureProfile& space) {
    const double Phi = body.warp(R);
    if (Phi == 0.0)
        throw std::domain_error("body warp vanishes at R = " + std::to_string(R));
    const double phi = space.warp(f);
    const double dphi = space.warp_derivative(f);
    const double q = (phi / Phi) * (phi / Phi);

    RadialEnergyDerivatives out;
    out.dW_dfprime = 4.0 * fprime * (fprime * fprime - 1.0);
    out.dW_dthetaTheta = 4.0 * q * (q - 1.0);
    out.dW_df = 4.0 * phi * dphi / (Phi * Phi) * (q - 1.0);
    return out;
}

std::vector<double> nodal_derivative(std::span<const double> R,
                                     std::span<const double> f) {
    const std::size_t n = f.size();
    if (n < 3 || R.size() != n)
        throw std::invalid_argument("nodal_derivative needs >= 3 matching nodes");
    const double dR = R[1] - R[0];
    std::vector<double> d(n);
    for (std::size_t j = 1; j + 1 < n; ++j) d[j] = (f[j + 1] - f[j - 1]) / (2 * dR);
    d[0] = (-3 * f[0] + 4 * f[1] - f[2]) / (2 * dR);
    d[n - 1] = (3 * f[n - 1] - 4 * f[n - 2] + f[n - 3]) / (2 * dR);
    return d;
}

RadialDivergence divergence_and_traction_radial(std::span<const double> R,
                                                std::span<const double> f,
                                                std::span<const double> fprime,
                                                const CurvatureProfile& body,
                                                const CurvatureProfile& space) {
    const std::size_t n = f.size();
    if (n < 3) throw std::invalid_argument("grid too small (< 3 points)");
    if (R.size() != n || fprime.size() != n)
        throw std::invalid_argument("mismatched field sizes");
    const double dR = R[1] - R[0];

    std::vector<double> flux(n), self(n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto d = radial_energy_derivatives(f[j], fprime[j], R[j], body, space);
        const double Phi = body.warp(R[j]);
        flux[j] = Phi * d.dW_dfprime;
        self[j] = Phi * d.dW_df;
    }

    RadialDivergence out;
    out.div_r.resize(n);
    for (std::size_t j = 1; j + 1 < n; ++j)
        out.div_r[j] = (flux[j + 1] - flux[j - 1]) / (2 * dR) - self[j];
    out.div_r[0] = (-3 * flux[0] + 4 * flux[1] - flux[2]) / (2 * dR) - self[0];
    out.div_r[n - 1] =
        (3 * flux[n - 1] - 4 * flux[n - 2] + flux[n - 3]) / (2 * dR) - self[n - 1];

    out.traction_min =
        radial_energy_derivatives(f[0], fprime[0], R[0], body, space).dW_dfprime;
    out.traction_max =
        radial_energy_derivatives(f[n - 1], fprime[n - 1], R[n - 1], body, space)
            .dW_dfprime;
    return out;
}

}  // namespace curvedyn
