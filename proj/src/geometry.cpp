#include "curvedyn/geometry.hpp"

namespace curvedyn {

std::string to_string(WarpKind kind) {
    switch (kind) {
        case WarpKind::Spherical: return "spherical";
        case WarpKind::Hyperbolic: return "hyperbolic";
        case WarpKind::Flat: return "flat";
    }
    return "?";
}

CurvatureProfile CurvatureProfile::spherical(double K) {
    if (!(K > 0.0))
        throw std::invalid_argument("spherical profile requires curvature > 0");
    return {WarpKind::Spherical, K};
}

CurvatureProfile CurvatureProfile::hyperbolic(double K) {
    if (!(K > 0.0))
        throw std::invalid_argument("hyperbolic profile requires curvature > 0");
    return {WarpKind::Hyperbolic, K};
}

CurvatureProfile CurvatureProfile::flat() { return {WarpKind::Flat, 0.0}; }

double CurvatureProfile::max_radius() const {
    if (kind == WarpKind::Spherical)
        return M_PI / std::sqrt(curvature);
    return std::numeric_limits<double>::infinity();
}

namespace {

[[noreturn]] void domain_violation(const CurvatureProfile& p, double R) {
    throw std::domain_error("radial coordinate " + std::to_string(R) +
                            " outside the domain of the " + to_string(p.kind) +
                            " profile (max " + std::to_string(p.max_radius()) + ")");
}

}  // namespace

double CurvatureProfile::warp(double R) const {
    if (!contains(R)) domain_violation(*this, R);
    const double a = std::sqrt(curvature);
    switch (kind) {
        case WarpKind::Spherical: return std::sin(a * R) / a;
        case WarpKind::Hyperbolic: return std::sinh(a * R) / a;
        case WarpKind::Flat: return R;
    }
    return 0.0;
}

double CurvatureProfile::warp_derivative(double R) const {
    if (!contains(R)) domain_violation(*this, R);
    const double a = std::sqrt(curvature);
    switch (kind) {
        case WarpKind::Spherical: return std::cos(a * R);
        case WarpKind::Hyperbolic: return std::cosh(a * R);
        case WarpKind::Flat: return 1.0;
    }
    return 0.0;
}

double CurvatureProfile::warp_second_derivative(double R) const {
    switch (kind) {
        case WarpKind::Spherical: return -curvature * warp(R);
        case WarpKind::Hyperbolic: return curvature * warp(R);
        case WarpKind::Flat:
            if (!contains(R)) domain_violation(*this, R);
            return 0.0;
    }
    return 0.0;
}

Christoffel AzimuthalMetric::christoffel(double r) const {
    const double w = profile_.warp(r);
    if (w == 0.0)
        throw std::domain_error("singular coordinate: warp vanishes at r = " +
                                std::to_string(r));
    const double wp = profile_.warp_derivative(r);
    return {-w * wp, wp / w};
}

}  // namespace curvedyn
