#pragma once

#include <array>
#include <span>
#include <vector>

#include "curvedyn/geometry.hpp"
#include "curvedyn/mat2.hpp"

namespace curvedyn {

/// First jet of a configuration at a point: where the point is, where it
/// maps to, and the 2x2 derivative x^i_{,alpha} (rows: space index
/// i in {r, theta}; columns: body index alpha in {R, Theta}).
struct Jet1 {
    std::array<double, 2> body_point{0.0, 0.0};   // (R, Theta)
    std::array<double, 2> space_point{0.0, 0.0};  // (r, theta)
    Mat2 deriv = Mat2::identity();
};

/// Quadratic isotropic material, W = C^{abgd} eps_ab eps_gd, with
///   C = lambda G^ab G^gd + (mu/2)(G^ag G^bd + G^ad G^bg)
/// and unit material density (rho = sqrt(det G)).
struct MaterialLaw {
    double lambda = 0.0;
    double mu = 1.0;
};

/// One component of the isotropic elasticity tensor, indices in {0, 1}.
double elasticity_tensor(const Mat2& g_inv, const MaterialLaw& material,
                         int a, int b, int c, int d);

/// Metric matrix diag(1, warp(R)^2) of an azimuthal profile at radius R.
Mat2 metric_matrix(const CurvatureProfile& profile, double R);

/// Right Cauchy-Green tensor (kappa* g)_{ab} = g_ij(x) x^i_{,a} x^j_{,b}.
Mat2 pullback_metric(const Jet1& jet, const AzimuthalMetric& space);

/// Green-St Venant strain (up to the conventional 1/2): eps = pullback - G.
Mat2 strain(const Mat2& pullback, const Mat2& G_at_point);

/// W = lambda (tr_G eps)^2 + mu |eps|_G^2; zero iff eps = 0 when mu > 0.
double energy_density(const Mat2& strain, const Mat2& G_at_point,
                      const MaterialLaw& material);

/// W evaluated on a jet: pullback, strain against the body metric, contract.
double energy_density(const Jet1& jet, const AzimuthalMetric& body,
                      const AzimuthalMetric& space, const MaterialLaw& material);

/// Variational stress density components at a point,
///   R_i = rho dW/dx^i,  S_i^alpha = rho dW/dx^i_{,alpha},
/// S_comp indexed (row i, column alpha).
struct StressDensity {
    std::array<double, 2> R_comp{0.0, 0.0};
    Mat2 S_comp = Mat2::zero();
};

/// Stress density with rho = sqrt(det G) = warp(R). For lambda = 0, mu = 1
/// the closed-form fiber derivatives are used; any other material goes
/// through the finite-difference fiber derivative.
StressDensity stress_density(const Jet1& jet, const AzimuthalMetric& body,
                             const AzimuthalMetric& space,
                             const MaterialLaw& material);

/// Central-difference fiber derivative (dW/dx^i, dW/dx^i_{,alpha}) of the
/// energy density, without the rho factor. Oracle for the closed forms.
StressDensity fd_fiber_derivative(const Jet1& jet, const AzimuthalMetric& body,
                                  const AzimuthalMetric& space,
                                  const MaterialLaw& material, double h = 1e-5);

/// The three non-vanishing energy derivatives under the azimuthal ansatz
/// x^r = f(R), x^theta = Theta (lambda = 0, mu = 1):
///   dW/dx^r_{,R}        = 4 f' (f'^2 - 1)
///   dW/dx^theta_{,Theta} = 4 q (q - 1),            q = (phi(f)/Phi(R))^2
///   dW/dx^r             = 4 phi(f) phi'(f)/Phi^2 (q - 1)
struct RadialEnergyDerivatives {
    double dW_dfprime = 0.0;
    double dW_dthetaTheta = 0.0;
    double dW_df = 0.0;
};

RadialEnergyDerivatives radial_energy_derivatives(double f, double fprime,
                                                  double R,
                                                  const CurvatureProfile& body,
                                                  const CurvatureProfile& space);

/// Second-order nodal derivative on a uniform grid: centered in the
/// interior, one-sided at the ends.
std::vector<double> nodal_derivative(std::span<const double> R_nodes,
                                     std::span<const double> f);

/// Discrete (div S)_r = D_R(Phi dW/df') - Phi dW/df per node, and the
/// boundary tractions (p_sigma S)_r = dW/df' at the first and last node.
/// Under the ansatz (div S)_theta vanishes identically.
struct RadialDivergence {
    std::vector<double> div_r;
    double traction_min = 0.0;
    double traction_max = 0.0;
};

RadialDivergence divergence_and_traction_radial(std::span<const double> R_nodes,
                                                std::span<const double> f,
                                                std::span<const double> fprime,
                                                const CurvatureProfile& body,
                                                const CurvatureProfile& space);

}  // namespace curvedyn
