// Least-positive-root radius problems and Bohr/distortion computations.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mmrad/catalog.hpp"
#include "mmrad/circle_extremum.hpp"
#include "mmrad/extremal.hpp"

namespace mmrad {

inline constexpr double kRootTol = 1e-10;
inline constexpr int kRootScan = 512;
inline constexpr int kCertifyScan = 4096;

struct RadiusResult {
    double root = 0.0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    double residual_at_root = 0.0;
    double residual_scale = 1.0;  // max(1, |residual(hi/2)|)
    double tolerance = kRootTol;
    int iterations = 0;
    bool capped = false;  // no sign change; root reports the domain cap
    std::string method;
    // The residual that was solved, kept for certification scans.
    std::function<double(double)> residual;
};

struct BohrResult {
    double koebe = 0.0;        // r*
    double root_r0 = 0.0;      // least positive root of hat(r) = r*
    double bohr_radius = 0.0;  // min(r0, 1/3)
    bool cap_active = false;   // r0 > 1/3
    double tolerance = kRootTol;
    std::string method;
    std::function<double(double)> residual;
};

struct DistortionBounds {
    double r = 0.0;
    double theta_min = 0.0;  // argmin of |psi| on the circle
    double theta_max = 0.0;  // argmax
    double min_psi = 0.0;
    double max_psi = 0.0;
    double lower = 0.0;  // min |psi| * (-f0(-r))/r
    double upper = 0.0;  // max |psi| * f0(r)/r
    bool closed_min = false;
    bool closed_max = false;
};

struct Table1Row {
    double r = 0.0;
    double theta1 = 0.0;
    double psi_abs = 0.0;
    double lower = 0.0;
};

// Least positive root of residual on (0, hi]: 512-point scan for the first
// sign change, then bisection with a secant polish. Throws solver_error when
// no sign change exists. scan_stop_on_error stops scanning (instead of
// throwing) once the residual becomes unevaluable above the scanned prefix.
RadiusResult solve_least_root(const std::function<double(double)>& residual, double hi,
                              const std::string& method, int scan = kRootScan,
                              bool scan_stop_on_error = false);

// No sign change strictly before the root (pre-root grid scan).
bool certify_least_root(const std::function<double(double)>& residual, double root,
                        int grid = kCertifyScan);

// (1-r^2) min|psi|(r) - 2r = 0 over the admissible radius range.
RadiusResult majorization_radius_starlike(const MindaFunction& psi);

// Briot-Bouquet generator psi from a convex phi, then the same residual;
// Mobius-family phi uses the hypergeometric closed form for psi(-r).
RadiusResult majorization_radius_convex(const MindaFunction& phi, int order = 0);

// psi(z) = (1/z) int_0^z phi(t) dt, residual (1-r^2) min Re psi - 2r.
RadiusResult hallenbeck_radius(const MindaFunction& phi, int order = 0);

// Same averaged generator, residual (1-r^2) min |psi|^(1/2) - 2r.
RadiusResult sqrt_variant_radius(const MindaFunction& phi, int order = 0);

// psi1(r) + psi2(r) - 1 - beta = 0, capped at 1; requires beta > 1 and both
// generators to attain their maximal real part on the positive axis.
RadiusResult product_mbeta_radius(const MindaFunction& psi1, const MindaFunction& psi2, double beta);

// psi1(-r) + psi2(-r) - 1 - gamma = 0, capped at 1; gamma in [0,1), minimal
// real part on the negative axis.
RadiusResult product_order_radius(const MindaFunction& psi1, const MindaFunction& psi2, double gamma);

// Sharp Mobius-family Bohr radius: root of (1-E)^((D-E)/E) = r (1+E r)^((D-E)/E)
// (E != 0) or 1 = r exp(D (1+r)) (E = 0), under the hypotheses that make the
// root sharp and at most 1/3.
RadiusResult janowski_bohr_radius(double D, double E);

// Generic Bohr computation through the extremal majorant.
BohrResult bohr_radius(const MindaFunction& psi, int order = 0);

DistortionBounds distortion_bounds(const MindaFunction& psi, double r, int order = 0);

// The four pinned cardioid distortion rows (r = 1, 4/5, 2/3, 1/2).
std::vector<Table1Row> cardioid_distortion_table();

}  // namespace mmrad
