#include "mmrad/circle_extremum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "mmrad/errors.hpp"

namespace mmrad {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();

double golden_min(const std::function<double(double)>& g, double a, double b, double* fmin) {
    const double gr = 0.61803398874989484820;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = g(c), fd = g(d);
    while (b - a > kThetaTol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = g(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = g(d);
        }
    }
    double mid = 0.5 * (a + b);
    double fm = g(mid);
    if (fc < fm) {
        fm = fc;
        mid = c;
    }
    if (fd < fm) {
        fm = fd;
        mid = d;
    }
    *fmin = fm;
    return mid;
}

}  // namespace

CircleExtremum scan_circle(const std::function<cplx(cplx)>& f, double r, ExtremumKind kind, int grid) {
    if (r <= 0.0) throw argument_error("circle scan requires r > 0");
    if (grid < 16) throw argument_error("circle scan requires at least 16 grid points");
    const bool is_max = kind == ExtremumKind::MaxModulus;

    auto objective = [&](double theta) -> double {
        cplx z = std::polar(r, theta);
        cplx w;
        try {
            w = f(z);
        } catch (const domain_error&) {
            if (is_max) throw;  // an unbounded maximum is genuine
            return kInf;
        }
        switch (kind) {
            case ExtremumKind::MinModulus: return std::abs(w);
            case ExtremumKind::MaxModulus: return -std::abs(w);
            case ExtremumKind::MinReal: return w.real();
        }
        return 0.0;
    };

    std::vector<double> val(static_cast<size_t>(grid) + 1);
    const double step = kPi / grid;
    for (int j = 0; j <= grid; ++j) val[static_cast<size_t>(j)] = objective(j * step);

    struct Bracket {
        double lo, hi, score;
    };
    std::vector<Bracket> brackets;
    for (int j = 0; j <= grid; ++j) {
        double v = val[static_cast<size_t>(j)];
        if (!std::isfinite(v)) continue;
        double left = j > 0 ? val[static_cast<size_t>(j) - 1] : kInf;
        double right = j < grid ? val[static_cast<size_t>(j) + 1] : kInf;
        if (v <= left && v <= right)
            brackets.push_back({std::max(0.0, (j - 1) * step), std::min(kPi, (j + 1) * step), v});
    }
    if (brackets.empty()) throw solver_error("circle scan found no finite samples");
    std::sort(brackets.begin(), brackets.end(), [](const Bracket& a, const Bracket& b) { return a.score < b.score; });
    if (brackets.size() > 3) brackets.resize(3);

    double best_theta = 0.0, best_val = kInf;
    for (const auto& b : brackets) {
        double fm = kInf;
        double theta = golden_min(objective, b.lo, b.hi, &fm);
        if (fm < best_val) {
            best_val = fm;
            best_theta = theta;
        }
    }
    CircleExtremum out;
    out.r = r;
    out.theta = best_theta;
    out.value = is_max ? -best_val : best_val;
    out.kind = kind;
    out.method = ExtremumMethod::GridRefined;
    return out;
}

CircleExtremum min_modulus_on_circle(const MindaFunction& psi, double r, int grid) {
    ExtremumForm form = psi.min_form(r);
    if (form == ExtremumForm::Numeric)
        return scan_circle([&psi](cplx z) { return psi.eval(z); }, r, ExtremumKind::MinModulus, grid);
    CircleExtremum out;
    out.r = r;
    out.theta = form == ExtremumForm::AtMinusR ? kPi : 0.0;
    out.value = psi.min_modulus(r);
    out.kind = ExtremumKind::MinModulus;
    out.method = ExtremumMethod::ClosedForm;
    return out;
}

CircleExtremum max_modulus_on_circle(const MindaFunction& psi, double r, int grid) {
    ExtremumForm form = psi.max_form();
    if (form == ExtremumForm::Numeric)
        return scan_circle([&psi](cplx z) { return psi.eval(z); }, r, ExtremumKind::MaxModulus, grid);
    CircleExtremum out;
    out.r = r;
    out.theta = form == ExtremumForm::AtMinusR ? kPi : 0.0;
    out.value = psi.max_modulus(r);
    out.kind = ExtremumKind::MaxModulus;
    out.method = ExtremumMethod::ClosedForm;
    return out;
}

CircleExtremum min_re_on_circle(const std::function<cplx(cplx)>& f, double r, int grid) {
    return scan_circle(f, r, ExtremumKind::MinReal, grid);
}

}  // namespace mmrad
