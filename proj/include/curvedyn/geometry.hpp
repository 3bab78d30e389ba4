#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace curvedyn {

enum class WarpKind { Spherical, Hyperbolic, Flat };

std::string to_string(WarpKind kind);

/// Warp profile of an azimuthally-symmetric constant-curvature metric
/// diag(1, warp(R)^2) in semi-geodesic coordinates.
///
/// Spherical:  warp(R) = sin(sqrt(K) R)/sqrt(K),   Gaussian curvature +K
/// Hyperbolic: warp(R) = sinh(sqrt(K) R)/sqrt(K),  Gaussian curvature -K
/// Flat:       warp(R) = R
struct CurvatureProfile {
    WarpKind kind = WarpKind::Flat;
    double curvature = 0.0;  // magnitude K >= 0, units 1/length^2

    static CurvatureProfile spherical(double K);
    static CurvatureProfile hyperbolic(double K);
    static CurvatureProfile flat();

    // Largest admissible radial coordinate: pi/sqrt(K) for Spherical
    // (where the warp returns to zero), unbounded otherwise.
    double max_radius() const;
    bool contains(double R) const { return R >= 0.0 && R < max_radius(); }

    double warp(double R) const;
    double warp_derivative(double R) const;
    double warp_second_derivative(double R) const;

    friend bool operator==(const CurvatureProfile&, const CurvatureProfile&) = default;
};

struct Christoffel {
    double r_thetatheta;  // Gamma^r_{theta theta} = -warp * warp'
    double theta_rtheta;  // Gamma^theta_{r theta} =  warp' / warp
};

/// The metric diag(1, warp(r)^2). Component accessors take the radial
/// coordinate; the metric is independent of the angle.
class AzimuthalMetric {
public:
    explicit AzimuthalMetric(CurvatureProfile profile) : profile_(profile) {}

    const CurvatureProfile& profile() const { return profile_; }

    double warp(double r) const { return profile_.warp(r); }
    double warp_derivative(double r) const { return profile_.warp_derivative(r); }

    double g_rr(double) const { return 1.0; }
    double g_thetatheta(double r) const {
        const double w = profile_.warp(r);
        return w * w;
    }
    double determinant(double r) const { return g_thetatheta(r); }

    // The two non-vanishing symbols; all others are identically zero.
    // Throws std::domain_error where the coordinate system degenerates
    // (warp(r) == 0).
    Christoffel christoffel(double r) const;

private:
    CurvatureProfile profile_;
};

}  // namespace curvedyn
