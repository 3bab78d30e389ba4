#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include "curvedyn/geometry.hpp"

using namespace curvedyn;

namespace {

// Generic formula Gamma^k_{ij} = 1/2 g^{kl} (d_i g_jl + d_j g_il - d_l g_ij)
// evaluated with central differences of the metric components. The metric
// depends on r only, so angular derivatives vanish identically.
std::array<std::array<std::array<double, 2>, 2>, 2> christoffel_fd(
    const AzimuthalMetric& g, double r, double h) {
    const auto comp = [&](double rr, int i, int j) {
        if (i != j) return 0.0;
        return i == 0 ? g.g_rr(rr) : g.g_thetatheta(rr);
    };
    // dg[l][i][j] = d_l g_ij
    double dg[2][2][2] = {};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            dg[0][i][j] = (comp(r + h, i, j) - comp(r - h, i, j)) / (2 * h);

    const double ginv[2] = {1.0, 1.0 / g.g_thetatheta(r)};
    std::array<std::array<std::array<double, 2>, 2>, 2> out{};
    for (int k = 0; k < 2; ++k)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                // diagonal metric: the l-sum collapses to l = k
                out[k][i][j] =
                    0.5 * ginv[k] * (dg[i][j][k] + dg[j][i][k] - dg[k][i][j]);
            }
    return out;
}

}  // namespace

TEST_CASE("warp closed forms at frozen reference points") {
    const auto sph = CurvatureProfile::spherical(2.0);
    const auto hyp = CurvatureProfile::hyperbolic(2.0);
    const auto flat = CurvatureProfile::flat();

    CHECK(sph.warp(1.0) == doctest::Approx(0.69845599863660836).epsilon(1e-12));
    CHECK(flat.warp(0.7) == 0.7);
    CHECK(hyp.warp(1.0) == doctest::Approx(1.3682988720085907).epsilon(1e-12));

    CHECK(sph.warp_derivative(1.0) ==
          doctest::Approx(0.15594369476537447).epsilon(1e-12));
    CHECK(flat.warp_derivative(0.3) == 1.0);
    CHECK(CurvatureProfile::spherical(1.0).warp_derivative(0.0) == 1.0);
    CHECK(hyp.warp_derivative(1.0) ==
          doctest::Approx(2.1781835566085709).epsilon(1e-12));
}

TEST_CASE("warp(0) = 0 and warp'(0) = 1 for every kind") {
    for (const auto& p : {CurvatureProfile::spherical(0.3),
                          CurvatureProfile::hyperbolic(1.7),
                          CurvatureProfile::flat()}) {
        CHECK(p.warp(0.0) == 0.0);
        CHECK(p.warp_derivative(0.0) == 1.0);
    }
}

TEST_CASE("domain checks reject out-of-range radii") {
    const auto sph = CurvatureProfile::spherical(2.0);
    CHECK(sph.max_radius() == doctest::Approx(M_PI / std::sqrt(2.0)));
    CHECK_THROWS_AS(sph.warp(sph.max_radius() + 0.01), std::domain_error);
    CHECK_THROWS_AS(sph.warp_derivative(sph.max_radius() + 0.01), std::domain_error);
    CHECK_THROWS_AS(sph.warp(-0.1), std::domain_error);
    CHECK_THROWS_AS(CurvatureProfile::flat().warp(-1.0), std::domain_error);
    CHECK_NOTHROW(CurvatureProfile::hyperbolic(2.0).warp(50.0));
    CHECK_THROWS_AS(CurvatureProfile::spherical(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(CurvatureProfile::hyperbolic(0.0), std::invalid_argument);
}

TEST_CASE("christoffel symbols: equator, flat chart, frozen spherical point") {
    const AzimuthalMetric sphere{CurvatureProfile::spherical(1.0)};
    const auto eq = sphere.christoffel(M_PI / 2);
    CHECK(std::abs(eq.r_thetatheta) < 1e-15);
    CHECK(std::abs(eq.theta_rtheta) < 1e-15);

    const AzimuthalMetric flat{CurvatureProfile::flat()};
    const auto c = flat.christoffel(2.0);
    CHECK(c.r_thetatheta == doctest::Approx(-2.0));
    CHECK(c.theta_rtheta == doctest::Approx(0.5));

    // phi = sin(sqrt(.5) r)/sqrt(.5): Gamma^r_tt = -phi phi', Gamma^t_rt = phi'/phi
    const AzimuthalMetric half{CurvatureProfile::spherical(0.5)};
    const auto s = half.christoffel(1.0);
    CHECK(s.r_thetatheta == doctest::Approx(-0.69845599863660836).epsilon(1e-12));
    CHECK(s.theta_rtheta == doctest::Approx(0.82749929632058835).epsilon(1e-12));
}

TEST_CASE("christoffel rejects the singular origin") {
    const AzimuthalMetric flat{CurvatureProfile::flat()};
    CHECK_THROWS_AS(flat.christoffel(0.0), std::domain_error);
}

TEST_CASE("christoffel agrees with the finite-difference generic formula") {
    std::mt19937 rng(991);
    std::uniform_real_distribution<double> curv(0.2, 3.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double h = 1e-5;

    for (int trial = 0; trial < 100; ++trial) {
        CurvatureProfile p;
        switch (trial % 3) {
            case 0: p = CurvatureProfile::spherical(curv(rng)); break;
            case 1: p = CurvatureProfile::hyperbolic(curv(rng)); break;
            default: p = CurvatureProfile::flat(); break;
        }
        const double r_hi = std::min(p.max_radius(), 3.0);
        const double r = 0.1 + unit(rng) * (r_hi - 0.2);
        const AzimuthalMetric g{p};

        const auto fd = christoffel_fd(g, r, h);
        const auto an = g.christoffel(r);
        double analytic[2][2][2] = {};
        analytic[0][1][1] = an.r_thetatheta;
        analytic[1][0][1] = analytic[1][1][0] = an.theta_rtheta;

        for (int k = 0; k < 2; ++k)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    const double ref = analytic[k][i][j];
                    const double got = fd[k][i][j];
                    const double denom = std::max(std::abs(ref), 1.0);
                    CHECK(std::abs(got - ref) / denom < 1e-6);
                }
    }
}

TEST_CASE("flat warp is the small-curvature limit of both curved kinds") {
    const auto flat = CurvatureProfile::flat();
    for (double K : {1e-4, 1e-5, 1e-6}) {
        for (double R : {0.3, 0.9, 1.8}) {
            const double bound = K * R * R * R;
            CHECK(std::abs(CurvatureProfile::spherical(K).warp(R) - flat.warp(R)) <
                  bound);
            CHECK(std::abs(CurvatureProfile::hyperbolic(K).warp(R) - flat.warp(R)) <
                  bound);
        }
    }
}

TEST_CASE("warps satisfy the constant-curvature equation warp'' = -(+-K) warp") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> curv(0.2, 3.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double K = curv(rng);
        const auto sph = CurvatureProfile::spherical(K);
        const auto hyp = CurvatureProfile::hyperbolic(K);
        const double r_sph = unit(rng) * 0.99 * sph.max_radius();
        const double r_hyp = unit(rng) * 3.0;
        CHECK(std::abs(sph.warp_second_derivative(r_sph) + K * sph.warp(r_sph)) <
              1e-10);
        CHECK(std::abs(hyp.warp_second_derivative(r_hyp) - K * hyp.warp(r_hyp)) <
              1e-10);
    }
}

TEST_CASE("metric determinant is warp squared") {
    const AzimuthalMetric g{CurvatureProfile::spherical(2.0)};
    const double w = g.warp(0.8);
    CHECK(g.determinant(0.8) == doctest::Approx(w * w));
    CHECK(g.g_rr(0.8) == 1.0);
}
