// Gauss 2F1 and Kummer 1F1 by direct series summation.
#pragma once

namespace mmrad {

// Sum of 2F1(a, b; c; x) for |x| < 1. Throws convergence_error if the
// partial sums fail to settle within the term budget.
double gauss_2f1(double a, double b, double c, double x);

// Sum of 1F1(a; b; x), entire in x.
double kummer_1f1(double a, double b, double x);

}  // namespace mmrad
