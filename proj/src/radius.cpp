#include "mmrad/radius.hpp"

#include <cmath>

#include "mmrad/errors.hpp"
#include "mmrad/hypergeometric.hpp"

namespace mmrad {

namespace {

int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

double series_min_modulus(const PowerSeries& s, double r) {
    return scan_circle([&s](cplx z) { return s.eval(z); }, r, ExtremumKind::MinModulus).value;
}

double max_re_on_circle(const std::function<cplx(cplx)>& f, double r) {
    CircleExtremum e = scan_circle([&f](cplx z) { return -f(z); }, r, ExtremumKind::MinReal);
    return -e.value;
}

// Averaged generator (1/z) int_0^z phi(t) dt as a series.
PowerSeries averaged_generator(const MindaFunction& phi, int order) {
    PowerSeries p = phi.series(order);
    PowerSeries out(p.order());
    for (int k = 0; k <= p.order(); ++k) out[k] = p[k] / static_cast<double>(k + 1);
    return out;
}

void require_convex(const MindaFunction& phi) {
    if (!phi.convex())
        throw argument_error(phi.id() + ": not an admissible convex-problem generator");
    if (std::abs(phi.series(1)[0] - cplx(1.0)) > 1e-12)
        throw argument_error(phi.id() + ": convex-problem generator must satisfy psi(0) = 1");
}

bool mobius_family(const MindaFunction& f, double* D, double* E) {
    if (f.id() == "janowski") {
        *D = f.params().at("D");
        *E = f.params().at("E");
        return true;
    }
    if (f.id() == "order_alpha") {
        *D = 1.0 - 2.0 * f.params().at("alpha");
        *E = -1.0;
        return true;
    }
    if (f.id() == "linear") {
        *D = f.params().at("beta");
        *E = 0.0;
        return true;
    }
    return false;
}

}  // namespace

RadiusResult solve_least_root(const std::function<double(double)>& residual, double hi,
                              const std::string& method, int scan, bool scan_stop_on_error) {
    if (hi <= 0.0) throw argument_error("root search upper bound must be positive");
    RadiusResult out;
    out.method = method;
    out.residual = residual;
    out.tolerance = kRootTol;
    try {
        out.residual_scale = std::max(1.0, std::abs(residual(hi / 2.0)));
    } catch (const convergence_error&) {
        out.residual_scale = 1.0;
    }

    auto eval = [&](double r) {
        double v = residual(r);
        if (std::isnan(v)) throw solver_error("residual evaluated to NaN at r = " + std::to_string(r));
        return v;
    };

    double a = hi / (static_cast<double>(scan) * 64.0);
    double fa = eval(a);
    double b = 0.0, fb = 0.0;
    bool found = fa == 0.0;
    if (found) {
        b = a;
        fb = fa;
    }
    for (int i = 1; i <= scan && !found; ++i) {
        double r = hi * static_cast<double>(i) / scan;
        double fr;
        try {
            fr = eval(r);
        } catch (const convergence_error&) {
            if (scan_stop_on_error) break;
            throw;
        }
        if (fr == 0.0 || sign_of(fr) != sign_of(fa)) {
            b = r;
            fb = fr;
            found = true;
            break;
        }
        a = r;
        fa = fr;
    }
    if (!found) throw solver_error("residual has no sign change on (0, " + std::to_string(hi) + "]");

    out.bracket_lo = a;
    out.bracket_hi = b;
    int iters = 0;
    while (b - a > 5e-14 && fb != 0.0 && iters < 200) {
        double m = 0.5 * (a + b);
        double fm = eval(m);
        ++iters;
        if (fm == 0.0) {
            a = b = m;
            fa = fb = fm;
            break;
        }
        if (sign_of(fm) == sign_of(fa)) {
            a = m;
            fa = fm;
        } else {
            b = m;
            fb = fm;
        }
    }
    double root = (fb != fa) ? a - fa * (b - a) / (fb - fa) : 0.5 * (a + b);
    if (!(root >= a && root <= b)) root = 0.5 * (a + b);
    out.root = root;
    out.iterations = iters;
    out.residual_at_root = eval(root);
    return out;
}

bool certify_least_root(const std::function<double(double)>& residual, double root, int grid) {
    double scale = std::max(1.0, std::abs(residual(root / 2.0)));
    int prev = 0;
    for (int i = 1; i < grid; ++i) {
        double r = root * static_cast<double>(i) / grid;
        double v = residual(r);
        if (std::abs(v) < 1e-13 * scale) continue;
        int s = sign_of(v);
        if (prev != 0 && s != prev) return false;
        prev = s;
    }
    return true;
}

RadiusResult majorization_radius_starlike(const MindaFunction& psi) {
    // Restricted-domain generators: stay strictly inside, the residual is
    // undefined beyond the domain radius.
    double hi = psi.domain_radius() < 1.0 ? psi.domain_radius() - 1e-9 : 1.0;
    bool numeric_needed = psi.min_form(hi) == ExtremumForm::Numeric || psi.min_form(hi / 2.0) == ExtremumForm::Numeric;
    auto residual = [psi](double r) {
        double m = min_modulus_on_circle(psi, r).value;
        return (1.0 - r * r) * m - 2.0 * r;
    };
    std::string method = "(1-r^2) min|psi|(r) - 2r; minimum ";
    method += numeric_needed ? "closed-form where available, grid elsewhere" : "closed-form";
    return solve_least_root(residual, hi, method);
}

RadiusResult majorization_radius_convex(const MindaFunction& phi, int order) {
    require_convex(phi);
    double D = 0.0, E = 0.0;
    bool mobius = mobius_family(phi, &D, &E);
    bool closed = mobius && (E == 0.0 ? D > 0.0 : (E < 0.0 && 1.0 + D / E >= -1e-15));
    if (closed) {
        auto residual = [D, E](double r) {
            double q = E != 0.0 ? gauss_2f1(1.0 - D / E, 1.0, 2.0, -E * r / (1.0 - E * r))
                                : kummer_1f1(1.0, 2.0, D * r);
            return (1.0 - r * r) / q - 2.0 * r;
        };
        return solve_least_root(residual, 1.0,
                                "(1-r^2) psi(-r) - 2r; psi(-r) = 1/q(-r) via hypergeometric closed form");
    }
    int n = std::max(order <= 0 ? kDefaultOrder : order, 128);
    PowerSeries hz = phi.series(n).integrate_kernel().exp();
    PowerSeries Hz(hz.order());
    for (int k = 0; k <= hz.order(); ++k) Hz[k] = hz[k] / static_cast<double>(k + 1);
    PowerSeries psi_s = hz / Hz;
    auto residual = [psi_s](double r) { return (1.0 - r * r) * series_min_modulus(psi_s, r) - 2.0 * r; };
    return solve_least_root(residual, 1.0,
                            "(1-r^2) min|psi|(r) - 2r; psi = h/H by series division, grid minimum");
}

RadiusResult hallenbeck_radius(const MindaFunction& phi, int order) {
    require_convex(phi);
    int n = std::max(order <= 0 ? kDefaultOrder : order, 128);
    PowerSeries psi_s = averaged_generator(phi, n);
    auto residual = [psi_s](double r) {
        double m = min_re_on_circle([&psi_s](cplx z) { return psi_s.eval(z); }, r).value;
        return (1.0 - r * r) * m - 2.0 * r;
    };
    return solve_least_root(residual, 1.0,
                            "(1-r^2) min Re psi(r e^{i t}) - 2r; psi = (1/z) int_0^z phi, grid minimum");
}

RadiusResult sqrt_variant_radius(const MindaFunction& phi, int order) {
    require_convex(phi);
    int n = std::max(order <= 0 ? kDefaultOrder : order, 128);
    PowerSeries psi_s = averaged_generator(phi, n);
    auto residual = [psi_s](double r) {
        double m = series_min_modulus(psi_s, r);
        return (1.0 - r * r) * std::sqrt(m) - 2.0 * r;
    };
    return solve_least_root(residual, 1.0,
                            "(1-r^2) min|psi(r e^{i t})|^{1/2} - 2r; psi = (1/z) int_0^z phi, grid minimum");
}

namespace {

void require_re_extremum_on_axis(const MindaFunction& psi, double r, bool at_plus) {
    double axis = psi.eval(cplx(at_plus ? r : -r, 0.0)).real();
    double extremum = at_plus
                          ? max_re_on_circle([&psi](cplx z) { return psi.eval(z); }, r)
                          : scan_circle([&psi](cplx z) { return psi.eval(z); }, r, ExtremumKind::MinReal).value;
    double tol = 1e-9 * std::max(1.0, std::abs(axis));
    bool ok = at_plus ? extremum <= axis + tol : extremum >= axis - tol;
    if (!ok)
        throw argument_error(psi.id() + ": generator does not attain its " +
                             (at_plus ? std::string("maximal") : std::string("minimal")) +
                             " real part on the " + (at_plus ? "positive" : "negative") + " axis at r = " +
                             std::to_string(r));
}

RadiusResult product_radius(const MindaFunction& psi1, const MindaFunction& psi2, double level,
                            bool at_plus, const std::string& method) {
    double hi = std::min({psi1.domain_radius(), psi2.domain_radius(), 1.0});
    if (hi < 1.0) hi -= 1e-9;
    auto residual = [psi1, psi2, level, at_plus](double r) {
        double x = at_plus ? r : -r;
        return psi1.eval(cplx(x, 0.0)).real() + psi2.eval(cplx(x, 0.0)).real() - 1.0 - level;
    };
    RadiusResult out;
    try {
        out = solve_least_root(residual, hi, method);
    } catch (const solver_error&) {
        out.method = method;
        out.residual = residual;
        out.tolerance = kRootTol;
        out.root = hi;
        out.bracket_lo = 0.0;
        out.bracket_hi = hi;
        out.residual_at_root = residual(hi);
        out.residual_scale = std::max(1.0, std::abs(residual(hi / 2.0)));
        out.capped = true;
    }
    for (double r : {out.root, out.root / 2.0}) {
        if (r <= 0.0) continue;
        require_re_extremum_on_axis(psi1, r, at_plus);
        require_re_extremum_on_axis(psi2, r, at_plus);
    }
    return out;
}

}  // namespace

RadiusResult product_mbeta_radius(const MindaFunction& psi1, const MindaFunction& psi2, double beta) {
    if (!(beta > 1.0)) throw argument_error("product bound beta must exceed 1");
    return product_radius(psi1, psi2, beta, true,
                          "psi1(r) + psi2(r) - 1 - beta; capped at the admissible bound");
}

RadiusResult product_order_radius(const MindaFunction& psi1, const MindaFunction& psi2, double gamma) {
    if (!(gamma >= 0.0 && gamma < 1.0)) throw argument_error("target order gamma must lie in [0,1)");
    return product_radius(psi1, psi2, gamma, false,
                          "psi1(-r) + psi2(-r) - 1 - gamma; capped at the admissible bound");
}

RadiusResult janowski_bohr_radius(double D, double E) {
    if (!(E >= -1.0 && E <= 1.0 && D <= 1.0 && E < D))
        throw argument_error("Mobius-family parameters require -1 <= E < D <= 1");
    if (E == 0.0) {
        if (D < 0.75 * std::log(3.0) - 1e-12)
            throw argument_error("sharp Bohr hypothesis fails: needs D >= (3/4) log 3");
        auto residual = [D](double r) { return 1.0 - r * std::exp(D * (1.0 + r)); };
        return solve_least_root(residual, 1.0, "1 - r exp(D(1+r)); sharp Mobius-family Bohr root");
    }
    double p = (D - E) / E;
    if (3.0 * std::pow(1.0 - E, p) > std::pow(1.0 + E / 3.0, p) + 1e-12)
        throw argument_error("sharp Bohr hypothesis fails: 3(1-E)^((D-E)/E) <= (1+E/3)^((D-E)/E)");
    for (int n = 2; n <= 64; ++n)
        if (janowski_extremal_coeff(D, E, n) <= 0.0)
            throw argument_error("sharp Bohr hypothesis fails: extremal coefficients must stay positive");
    auto residual = [E, p](double r) { return std::pow(1.0 - E, p) - r * std::pow(1.0 + E * r, p); };
    return solve_least_root(residual, 1.0,
                            "(1-E)^((D-E)/E) - r (1+E r)^((D-E)/E); sharp Mobius-family Bohr root");
}

BohrResult bohr_radius(const MindaFunction& psi, int order) {
    ExtremalFunction f0 = ExtremalFunction::synthesize(psi, order);
    double rstar = f0.koebe_radius();
    // Families with an elementary f0 use it directly, matching the printed
    // root equations; it agrees with the coefficient-majorant series whenever
    // the series coefficients are nonnegative (every cataloged case but the
    // sqrt family, whose majorant root is slightly smaller — both sides of
    // that gap exceed 1/3, so the reported Bohr radius is unaffected).
    std::function<double(double)> residual;
    std::string how;
    if (f0.has_closed_form()) {
        residual = [f0, rstar](double r) { return f0.eval(cplx(r, 0.0)).real() - rstar; };
        how = "closed-form f0(r) - r*; Koebe radius r* = -f0(-1)";
    } else {
        residual = [f0, rstar](double r) { return f0.hat(r) - rstar; };
        how = "hat f0(r) - r*; Koebe radius r* = -f0(-1)";
    }
    RadiusResult rr = solve_least_root(residual, 1.0 - 1e-9, how,
                                       kRootScan, /*scan_stop_on_error=*/true);
    BohrResult out;
    out.koebe = rstar;
    out.root_r0 = rr.root;
    out.bohr_radius = std::min(rr.root, 1.0 / 3.0);
    out.cap_active = rr.root > 1.0 / 3.0;
    out.tolerance = rr.tolerance;
    out.method = rr.method + "; Bohr radius min(r0, 1/3)";
    out.residual = residual;
    return out;
}

DistortionBounds distortion_bounds(const MindaFunction& psi, double r, int order) {
    if (!(r > 0.0) || r > std::min(psi.domain_radius(), 1.0) + 1e-12)
        throw argument_error("distortion radius outside the admissible range");
    CircleExtremum mn = min_modulus_on_circle(psi, r);
    CircleExtremum mx = max_modulus_on_circle(psi, r);
    ExtremalFunction f0 = ExtremalFunction::synthesize(psi, order);
    double f0_neg = -f0.eval(cplx(-r, 0.0)).real();
    double f0_pos = f0.eval(cplx(r, 0.0)).real();
    DistortionBounds out;
    out.r = r;
    out.theta_min = mn.theta;
    out.theta_max = mx.theta;
    out.min_psi = mn.value;
    out.max_psi = mx.value;
    out.lower = mn.value * f0_neg / r;
    out.upper = mx.value * f0_pos / r;
    out.closed_min = mn.method == ExtremumMethod::ClosedForm;
    out.closed_max = mx.method == ExtremumMethod::ClosedForm;
    return out;
}

std::vector<Table1Row> cardioid_distortion_table() {
    MindaFunction c = catalog_make("cardioid");
    std::vector<Table1Row> rows;
    for (double r : {1.0, 0.8, 2.0 / 3.0, 0.5}) {
        CircleExtremum e = min_modulus_on_circle(c, r);
        Table1Row row;
        row.r = r;
        row.theta1 = e.theta;
        row.psi_abs = e.value;
        row.lower = e.value * std::exp(std::exp(-r) - 1.0);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace mmrad
