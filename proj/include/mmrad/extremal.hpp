// Extremal function f0(z) = z exp int_0^z (psi(t)-1)/t dt and its invariants.
#pragma once

#include <functional>
#include <optional>

#include "mmrad/catalog.hpp"
#include "mmrad/power_series.hpp"

namespace mmrad {

// Coefficient t_n of the Mobius-generator extremal function, n >= 1:
// the binomial expansion of z (1+E z)^((D-E)/E), with the E -> 0 limit
// z exp(D z) giving D^(n-1)/(n-1)!.
double janowski_extremal_coeff(double D, double E, int n);

// f0 for a catalog generator. Closed forms are attached where elementary;
// everything else evaluates through the Maclaurin series with tail-driven
// order escalation.
class ExtremalFunction {
  public:
    // Throws argument_error if psi(0) != 1 (the kernel integral requires a
    // normalized generator).
    static ExtremalFunction synthesize(const MindaFunction& psi, int order = 0);

    const MindaFunction& generator() const { return psi_; }
    const PowerSeries& series() const { return series_; }
    bool has_closed_form() const { return static_cast<bool>(closed_); }

    // Series rebuilt at a given order (<= 0 means the stored order).
    PowerSeries series_at(int order) const;

    // Closed form if attached, else series evaluation with tail check.
    cplx eval(cplx z) const;

    // Majorant sum_{n>=1} |t_n| r^n, r in (0, 1].
    double hat(double r) const;

    // Koebe radius -f0(-1). Series-only entries escalate the order and fall
    // back to Abel extrapolation along the negative radius; throws
    // convergence_error if the extrapolants disagree.
    double koebe_radius() const;

  private:
    ExtremalFunction(MindaFunction psi, PowerSeries s, std::function<cplx(cplx)> closed);

    MindaFunction psi_;
    PowerSeries series_;
    std::function<cplx(cplx)> closed_;
};

// The series synthesis alone (psi series -> kernel -> exp -> shift).
PowerSeries extremal_series(const MindaFunction& psi, int order);

}  // namespace mmrad
