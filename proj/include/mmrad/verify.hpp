// Numeric verification probes: subordination containment, majorization
// sharpness, the coefficient inequality behind the Bohr computation, and the
// averaged-integral sufficient condition.
#pragma once

#include <functional>
#include <string>

#include "mmrad/catalog.hpp"
#include "mmrad/extremal.hpp"
#include "mmrad/power_series.hpp"

namespace mmrad {

enum class Verdict { False = 0, True = 1, Inconclusive = 2 };

std::string to_string(Verdict v);

inline constexpr int kSubordGrid = 4096;
// Boundary polygons are traced strictly inside the domain: slit-like images
// degenerate on the boundary circle itself.
inline constexpr double kSubordRho = 1.0 - 1e-4;
// Outside-verdicts closer to the polygon than this cannot be trusted.
inline constexpr double kSubordMargin = 1e-6;

struct SubordinationReport {
    Verdict verdict = Verdict::Inconclusive;
    double margin = 0.0;  // min distance from candidate samples to the polygon
    double rho = kSubordRho;
    int samples = 0;
    int outside = 0;
    std::string detail;
};

// Samples `candidate` on |z| = min(r, rho) and tests every sample against the
// closed polygon traced by `target` on |z| = rho (even-odd rule).
//   - every sample inside            -> True (margin may be small)
//   - a sample outside by >= margin  -> False
//   - outside only within the margin -> Inconclusive (boundary-kissing)
// Self-intersecting or unresolvable polygons are Inconclusive.
SubordinationReport is_subordinate_numeric(const std::function<cplx(cplx)>& candidate,
                                           const std::function<cplx(cplx)>& target, double r,
                                           double rho = kSubordRho, int grid = kSubordGrid);

struct SharpnessReport {
    Verdict verdict = Verdict::Inconclusive;
    double radius = 0.0;
    double epsilon = 0.0;
    double below_excess = 0.0;  // max_alpha h(r-eps, alpha) - 1, should be <= tol
    double above_excess = 0.0;  // max_alpha h(r+eps, alpha) - 1, should be > 0
    double alpha_star = 0.0;    // maximizer at r+eps
    std::string detail;
};

// Largest value over alpha in [0,1) of
//   h(r, alpha) = (r+alpha)/(1+alpha r) + (1-alpha^2)/(1+alpha r)^2 * r/m_r,
// minus 1, where m_r = min_{|z|=r} |psi|. h is the sharp derivative-quotient
// bound for pairs g = Phi_alpha * f0; it exceeds 1 exactly beyond the
// majorization radius.
double sharpness_excess(const MindaFunction& psi, double r, double* alpha_star = nullptr);

// Both-sided tightness check of a claimed majorization radius r_psi:
// no alpha violates at r_psi - eps, some alpha violates at r_psi + eps.
// eps = 0 runs the inner check alone.
SharpnessReport sharpness_probe(const MindaFunction& psi, double r_psi, double eps);

struct BohrCoefficientReport {
    Verdict verdict = Verdict::Inconclusive;
    double r = 0.0;
    int n_samples = 0;
    int violations = 0;
    double min_slack = 0.0;  // min over samples of hat_f(r) - hat_g(r)
    unsigned seed = 0;
    std::string detail;
};

// omega(z) = z (z + a) / (1 + conj(a) z), a Schwarz function for |a| <= 1.
PowerSeries blaschke_schwarz_series(cplx a, int order);
// omega(z) = z^m.
PowerSeries power_schwarz_series(int m, int order);

// hat_f(r) - hat_g(r) for g = f o omega (series composition); the
// subordination-coefficient inequality says this is >= 0 for r <= 1/3.
double bohr_coefficient_slack(const ExtremalFunction& f, const PowerSeries& omega, double r);

// Seeded stress test of the coefficient inequality at radius r <= 1/3.
BohrCoefficientReport bohr_coefficient_probe(const ExtremalFunction& f, double r, int n_samples,
                                             unsigned seed, int order = 0);

struct BulboacaReport {
    Verdict verdict = Verdict::Inconclusive;  // the subordination itself
    double margin = 0.0;
    double printed_min = 0.0;  // min Re(1 + z h''/h)  over the sample grid
    double usual_min = 0.0;    // min Re(1 + z h''/h') over the sample grid
    bool printed_hypothesis = false;
    bool usual_hypothesis = false;
    std::string detail;
};

// Checks (1/z) int_0^z h(t) dt  subordinate to  1 - 1/psi numerically, and
// reports both readings of the Re(1 + z h''/ ...) >= -1/2 hypothesis (the
// sufficient condition is usually stated with h', but appears with h; we
// evaluate both). h is given by its Maclaurin series; h(0) = 0, h'(0) != 0.
BulboacaReport bulboaca_condition_check(const PowerSeries& h, const MindaFunction& psi,
                                        int grid = kSubordGrid);

}  // namespace mmrad
