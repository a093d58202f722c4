// Extrema of |f| or Re f over the circle |z| = r.
#pragma once

#include <functional>

#include "mmrad/catalog.hpp"
#include "mmrad/power_series.hpp"

namespace mmrad {

enum class ExtremumKind { MinModulus, MaxModulus, MinReal };
enum class ExtremumMethod { ClosedForm, GridRefined };

struct CircleExtremum {
    double r = 0.0;
    double theta = 0.0;
    double value = 0.0;
    ExtremumKind kind = ExtremumKind::MinModulus;
    ExtremumMethod method = ExtremumMethod::GridRefined;
};

inline constexpr int kCircleGrid = 2048;
inline constexpr double kThetaTol = 1e-12;

// Numeric scan over theta in [0, pi] (generators have real coefficients, so
// the circle image is symmetric about the real axis). The grid's best three
// local brackets are refined by golden section; minimum searches skip
// isolated evaluation failures, maximum searches propagate them.
CircleExtremum scan_circle(const std::function<cplx(cplx)>& f, double r, ExtremumKind kind,
                           int grid = kCircleGrid);

// Closed-form dispatch when the catalog knows where the extremum sits,
// numeric scan otherwise.
CircleExtremum min_modulus_on_circle(const MindaFunction& psi, double r, int grid = kCircleGrid);
CircleExtremum max_modulus_on_circle(const MindaFunction& psi, double r, int grid = kCircleGrid);

CircleExtremum min_re_on_circle(const std::function<cplx(cplx)>& f, double r, int grid = kCircleGrid);

}  // namespace mmrad
