#include "mmrad/hypergeometric.hpp"

#include <cmath>

#include "mmrad/errors.hpp"

namespace mmrad {

namespace {
constexpr int kMaxTerms = 10000;
constexpr double kTermTol = 1e-12;
}  // namespace

double gauss_2f1(double a, double b, double c, double x) {
    if (std::abs(x) >= 1.0) throw domain_error("2F1 series requires |x| < 1");
    double term = 1.0, sum = 1.0;
    for (int n = 0; n < kMaxTerms; ++n) {
        double dn = static_cast<double>(n);
        if (c + dn == 0.0) throw domain_error("2F1 pole: c is a non-positive integer");
        term *= (a + dn) * (b + dn) / (c + dn) * x / (dn + 1.0);
        sum += term;
        if (std::abs(term) < kTermTol * (1.0 + std::abs(sum))) return sum;
        if (term == 0.0) return sum;  // terminating polynomial case
    }
    throw convergence_error("2F1 series did not converge within 10000 terms");
}

double kummer_1f1(double a, double b, double x) {
    double term = 1.0, sum = 1.0;
    for (int n = 0; n < kMaxTerms; ++n) {
        double dn = static_cast<double>(n);
        if (b + dn == 0.0) throw domain_error("1F1 pole: b is a non-positive integer");
        term *= (a + dn) / (b + dn) * x / (dn + 1.0);
        sum += term;
        if (std::abs(term) < kTermTol * (1.0 + std::abs(sum))) return sum;
        if (term == 0.0) return sum;
    }
    throw convergence_error("1F1 series did not converge within 10000 terms");
}

}  // namespace mmrad
