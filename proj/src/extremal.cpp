#include "mmrad/extremal.hpp"

#include <cmath>

#include "mmrad/errors.hpp"

namespace mmrad {

namespace {

double binom_real(double x, int k) {
    double b = 1.0;
    for (int j = 1; j <= k; ++j) b *= (x - static_cast<double>(j) + 1.0) / static_cast<double>(j);
    return b;
}

// Closed-form f0 per catalog id, null when not elementary.
std::function<cplx(cplx)> closed_form_for(const MindaFunction& psi) {
    const std::string& id = psi.id();
    if (id == "janowski" || id == "order_alpha" || id == "linear") {
        double D, E;
        if (id == "janowski") {
            D = psi.params().at("D");
            E = psi.params().at("E");
        } else if (id == "order_alpha") {
            D = 1.0 - 2.0 * psi.params().at("alpha");
            E = -1.0;
        } else {
            D = psi.params().at("beta");
            E = 0.0;
        }
        if (E == 0.0) return [D](cplx z) { return z * std::exp(D * z); };
        double p = (D - E) / E;
        return [E, p](cplx z) { return z * std::pow(1.0 + E * z, p); };
    }
    if (id == "sqrt_plus" || id == "lemniscate" || id == "sqrt_minus") {
        double sgn = id == "sqrt_minus" ? -1.0 : 1.0;
        return [sgn](cplx z) {
            cplx s = std::sqrt(1.0 + sgn * z);
            return 4.0 * z * std::exp(2.0 * s - 2.0) / ((1.0 + s) * (1.0 + s));
        };
    }
    if (id == "cardioid") {
        return [](cplx z) { return z * std::exp(std::exp(z) - 1.0); };
    }
    if (id == "crescent") {
        return [](cplx z) {
            cplx s = std::sqrt(1.0 + z * z);
            return 2.0 * z * std::exp(z + s - 1.0) / (1.0 + s);
        };
    }
    if (id == "booth") {
        double alpha = psi.params().at("alpha");
        if (alpha == 0.0) return [](cplx z) { return z * std::exp(z); };
        double sq = std::sqrt(alpha);
        return [sq](cplx z) { return z * std::exp(std::atanh(sq * z) / sq); };
    }
    return nullptr;
}

}  // namespace

double janowski_extremal_coeff(double D, double E, int n) {
    if (n < 1) throw argument_error("extremal coefficient index must be >= 1");
    if (E == 0.0) {
        double f = 1.0;
        for (int j = 2; j <= n - 1; ++j) f *= static_cast<double>(j);
        return std::pow(D, n - 1) / f;
    }
    return binom_real((D - E) / E, n - 1) * std::pow(E, n - 1);
}

PowerSeries extremal_series(const MindaFunction& psi, int order) {
    if (order <= 0) order = kDefaultOrder;
    PowerSeries p = psi.series(order);
    if (std::abs(p[0] - cplx(1.0)) > 1e-12)
        throw argument_error(psi.id() + ": extremal synthesis requires psi(0) = 1");
    return p.integrate_kernel().exp().shift_up();
}

ExtremalFunction::ExtremalFunction(MindaFunction psi, PowerSeries s, std::function<cplx(cplx)> closed)
    : psi_(std::move(psi)), series_(std::move(s)), closed_(std::move(closed)) {}

ExtremalFunction ExtremalFunction::synthesize(const MindaFunction& psi, int order) {
    PowerSeries s = extremal_series(psi, order);
    return ExtremalFunction(psi, std::move(s), closed_form_for(psi));
}

PowerSeries ExtremalFunction::series_at(int order) const {
    if (order <= 0 || order == series_.order()) return series_;
    return extremal_series(psi_, order);
}

cplx ExtremalFunction::eval(cplx z) const {
    if (closed_) return closed_(z);
    double r = std::abs(z);
    const PowerSeries* s = &series_;
    PowerSeries tmp;
    int n = series_.order();
    while (s->tail_indicator(r) >= kTailTol && n < kMaxOrder) {
        n = std::min(2 * n, kMaxOrder);
        tmp = extremal_series(psi_, n);
        s = &tmp;
    }
    if (s->tail_indicator(r) >= kTailTol)
        throw convergence_error(psi_.id() + ": extremal series tail too large at |z| = " + std::to_string(r));
    return s->eval(z);
}

double ExtremalFunction::hat(double r) const {
    if (r <= 0.0 || r > 1.0) throw argument_error("majorant radius must lie in (0, 1]");
    const PowerSeries* s = &series_;
    PowerSeries tmp;
    int n = series_.order();
    while (s->tail_indicator(r) >= kTailTol && n < kMaxOrder) {
        n = std::min(2 * n, kMaxOrder);
        tmp = extremal_series(psi_, n);
        s = &tmp;
    }
    if (s->tail_indicator(r) >= kTailTol)
        throw convergence_error(psi_.id() + ": majorant series tail too large at r = " + std::to_string(r));
    double acc = 0.0;
    for (int k = s->order(); k >= 1; --k) acc = acc * r + std::abs((*s)[k]);
    return acc * r;
}

double ExtremalFunction::koebe_radius() const {
    if (closed_) {
        cplx w = closed_(cplx(-1.0, 0.0));
        return -w.real();
    }
    // Strict tail at the boundary point if the series converges fast enough.
    const PowerSeries* s = &series_;
    PowerSeries tmp;
    int n = series_.order();
    while (s->tail_indicator(1.0) >= kTailTol && n < kMaxOrder) {
        n = std::min(2 * n, kMaxOrder);
        tmp = extremal_series(psi_, n);
        s = &tmp;
    }
    if (s->tail_indicator(1.0) < kTailTol) return -s->eval(cplx(-1.0, 0.0)).real();

    // Abel extrapolation along the negative radius: Neville in h = 1 - rho.
    const double h1 = 0.01, h2 = 0.005, h3 = 0.001;
    double v1 = s->eval(cplx(-(1.0 - h1), 0.0)).real();
    double v2 = s->eval(cplx(-(1.0 - h2), 0.0)).real();
    double v3 = s->eval(cplx(-(1.0 - h3), 0.0)).real();
    double l12 = (h1 * v2 - h2 * v1) / (h1 - h2);
    double l23 = (h2 * v3 - h3 * v2) / (h2 - h3);
    double q = (h1 * l23 - h3 * l12) / (h1 - h3);
    if (std::abs(q - l23) > 1e-6)
        throw convergence_error(psi_.id() + ": Koebe extrapolants disagree; no closed form available");
    return -q;
}

}  // namespace mmrad
