#include "mmrad/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "mmrad/circle_extremum.hpp"
#include "mmrad/errors.hpp"
#include "mmrad/radius.hpp"

namespace mmrad {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Even-odd rule; the polygon closes between the last and first vertex.
bool point_in_polygon(const std::vector<cplx>& poly, cplx q) {
    bool in = false;
    size_t n = poly.size();
    for (size_t i = 0, j = n - 1; i < n; j = i++) {
        double yi = poly[i].imag(), yj = poly[j].imag();
        if ((yi > q.imag()) != (yj > q.imag())) {
            double x = poly[j].real() + (q.imag() - yj) * (poly[i].real() - poly[j].real()) / (yi - yj);
            if (q.real() < x) in = !in;
        }
    }
    return in;
}

double point_segment_distance(cplx a, cplx b, cplx q) {
    cplx ab = b - a;
    double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(q - a);
    double t = std::clamp(((q - a).real() * ab.real() + (q - a).imag() * ab.imag()) / len2, 0.0, 1.0);
    return std::abs(q - (a + t * ab));
}

double distance_to_polygon(const std::vector<cplx>& poly, cplx q) {
    double best = std::numeric_limits<double>::infinity();
    size_t n = poly.size();
    for (size_t i = 0, j = n - 1; i < n; j = i++)
        best = std::min(best, point_segment_distance(poly[j], poly[i], q));
    return best;
}

int orient(cplx a, cplx b, cplx c) {
    double v = (b.real() - a.real()) * (c.imag() - a.imag()) - (b.imag() - a.imag()) * (c.real() - a.real());
    return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0);
}

bool on_segment(cplx a, cplx b, cplx p) {
    return std::min(a.real(), b.real()) <= p.real() && p.real() <= std::max(a.real(), b.real()) &&
           std::min(a.imag(), b.imag()) <= p.imag() && p.imag() <= std::max(a.imag(), b.imag());
}

bool segments_cross(cplx a, cplx b, cplx c, cplx d) {
    int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(a, b, c)) return true;
    if (o2 == 0 && on_segment(a, b, d)) return true;
    if (o3 == 0 && on_segment(c, d, a)) return true;
    if (o4 == 0 && on_segment(c, d, b)) return true;
    return false;
}

bool polygon_self_intersects(const std::vector<cplx>& p) {
    size_t n = p.size();
    for (size_t i = 0; i < n; ++i) {
        cplx a = p[i], b = p[(i + 1) % n];
        double axlo = std::min(a.real(), b.real()), axhi = std::max(a.real(), b.real());
        double aylo = std::min(a.imag(), b.imag()), ayhi = std::max(a.imag(), b.imag());
        for (size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;  // adjacent through the closure
            cplx c = p[j], d = p[(j + 1) % n];
            if (std::max(c.real(), d.real()) < axlo || std::min(c.real(), d.real()) > axhi ||
                std::max(c.imag(), d.imag()) < aylo || std::min(c.imag(), d.imag()) > ayhi)
                continue;
            if (segments_cross(a, b, c, d)) return true;
        }
    }
    return false;
}

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::True: return "true";
        case Verdict::False: return "false";
        default: return "inconclusive";
    }
}

SubordinationReport is_subordinate_numeric(const std::function<cplx(cplx)>& candidate,
                                           const std::function<cplx(cplx)>& target, double r,
                                           double rho, int grid) {
    if (!(r > 0.0) || !(rho > 0.0)) throw argument_error("sample radii must be positive");
    if (grid < 64) throw argument_error("containment grid must have at least 64 samples");

    SubordinationReport rep;
    rep.rho = rho;
    rep.samples = grid;

    cplx c0, t0;
    try {
        c0 = candidate(cplx(0.0));
        t0 = target(cplx(0.0));
    } catch (const std::exception& e) {
        rep.detail = std::string("base-point evaluation failed: ") + e.what();
        return rep;
    }
    if (std::abs(c0 - t0) > 1e-9) {
        rep.verdict = Verdict::False;
        rep.detail = "base points differ: subordination requires matching values at 0";
        return rep;
    }

    std::vector<cplx> poly(grid);
    try {
        for (int j = 0; j < grid; ++j) {
            double th = 2.0 * kPi * j / grid;
            poly[j] = target(rho * cplx(std::cos(th), std::sin(th)));
            if (!finite(poly[j])) {
                rep.detail = "target boundary not finite; reduce the trace radius";
                return rep;
            }
        }
    } catch (const std::exception& e) {
        rep.detail = std::string("target boundary evaluation failed: ") + e.what();
        return rep;
    }
    if (polygon_self_intersects(poly)) {
        rep.detail = "target boundary polygon self-intersects";
        return rep;
    }

    double sample_r = std::min(r, rho);
    double min_dist = std::numeric_limits<double>::infinity();
    double worst_outside = 0.0;
    int outside = 0;
    try {
        for (int j = 0; j < grid; ++j) {
            double th = 2.0 * kPi * j / grid;
            cplx q = candidate(sample_r * cplx(std::cos(th), std::sin(th)));
            if (!finite(q)) {
                rep.detail = "candidate sample not finite";
                return rep;
            }
            double d = distance_to_polygon(poly, q);
            min_dist = std::min(min_dist, d);
            if (!point_in_polygon(poly, q)) {
                ++outside;
                worst_outside = std::max(worst_outside, d);
            }
        }
    } catch (const std::exception& e) {
        rep.detail = std::string("candidate evaluation failed: ") + e.what();
        return rep;
    }

    rep.margin = min_dist;
    rep.outside = outside;
    if (outside == 0) {
        rep.verdict = Verdict::True;
        rep.detail = "all samples inside the boundary polygon";
    } else if (worst_outside >= kSubordMargin) {
        rep.verdict = Verdict::False;
        rep.detail = std::to_string(outside) + " of " + std::to_string(grid) +
                     " samples outside the boundary polygon";
    } else {
        rep.verdict = Verdict::Inconclusive;
        rep.detail = "samples leave the polygon only within the margin; boundary-kissing";
    }
    return rep;
}

double sharpness_excess(const MindaFunction& psi, double r, double* alpha_star) {
    double m = min_modulus_on_circle(psi, r).value;
    if (!(m > 0.0))
        throw solver_error("minimum modulus vanished at r = " + std::to_string(r) +
                           "; the quotient bound is unbounded there");
    double ratio = r / m;
    const int K = 4096;
    double best = -std::numeric_limits<double>::infinity(), best_alpha = 0.0;
    for (int k = 0; k < K; ++k) {
        double alpha = static_cast<double>(k) / K;
        double t = (r + alpha) / (1.0 + alpha * r);
        double h = t + (1.0 - t * t) / (1.0 - r * r) * ratio;
        if (h > best) {
            best = h;
            best_alpha = alpha;
        }
    }
    if (alpha_star) *alpha_star = best_alpha;
    return best - 1.0;
}

SharpnessReport sharpness_probe(const MindaFunction& psi, double r_psi, double eps) {
    if (!(r_psi > 0.0)) throw argument_error("claimed radius must be positive");
    if (eps < 0.0) throw argument_error("epsilon must be nonnegative");

    SharpnessReport rep;
    rep.radius = r_psi;
    rep.epsilon = eps;
    const double tol = 1e-9;

    double r_below = eps > 0.0 ? r_psi - eps : r_psi;
    if (!(r_below > 0.0)) {
        rep.detail = "inner radius r - eps is not positive";
        return rep;
    }
    rep.below_excess = sharpness_excess(psi, r_below, nullptr);

    if (eps == 0.0) {
        rep.verdict = rep.below_excess <= tol ? Verdict::True : Verdict::False;
        rep.detail = "inner check only (eps = 0)";
        return rep;
    }

    double dom = std::min(psi.domain_radius(), 1.0);
    double r_above = r_psi + eps;
    if (r_above >= dom - 1e-9) {
        rep.detail = "r + eps reaches the admissible boundary; outer side unprobeable";
        return rep;
    }
    rep.above_excess = sharpness_excess(psi, r_above, &rep.alpha_star);

    if (rep.below_excess > tol) {
        rep.verdict = Verdict::False;
        rep.detail = "derivative-quotient bound already exceeds 1 below the claimed radius";
    } else if (rep.above_excess > tol) {
        rep.verdict = Verdict::True;
        rep.detail = "bound holds below and is violated above the claimed radius";
    } else {
        rep.verdict = Verdict::Inconclusive;
        rep.detail = "no violation resolved above the claimed radius; epsilon may be too small";
    }
    return rep;
}

PowerSeries blaschke_schwarz_series(cplx a, int order) {
    if (std::abs(a) > 1.0 + 1e-12)
        throw argument_error("Blaschke parameter must satisfy |a| <= 1");
    PowerSeries num(order), den(order);
    num[0] = a;
    if (order >= 1) num[1] = 1.0;
    den[0] = 1.0;
    if (order >= 1) den[1] = std::conj(a);
    return (num / den).shift_up();
}

PowerSeries power_schwarz_series(int m, int order) {
    if (m < 1 || m > order) throw argument_error("power map exponent outside the series order");
    PowerSeries w(order);
    w[m] = 1.0;
    return w;
}

double bohr_coefficient_slack(const ExtremalFunction& f, const PowerSeries& omega, double r) {
    if (std::abs(omega[0]) > 1e-14) throw argument_error("omega(0) must vanish");
    int n = omega.order();
    PowerSeries fs = f.series_at(n);
    PowerSeries gs = fs.compose(omega);
    double hat_f = 0.0, hat_g = 0.0, rk = 1.0;
    for (int k = 1; k <= n; ++k) {
        rk *= r;
        hat_f += std::abs(fs[k]) * rk;
        hat_g += std::abs(gs[k]) * rk;
    }
    return hat_f - hat_g;
}

BohrCoefficientReport bohr_coefficient_probe(const ExtremalFunction& f, double r, int n_samples,
                                             unsigned seed, int order) {
    if (!(r > 0.0) || r > 1.0 / 3.0 + 1e-12)
        throw argument_error("coefficient probe requires 0 < r <= 1/3");
    if (n_samples < 1) throw argument_error("need at least one sample");

    int n = order > 0 ? order : kDefaultOrder;
    BohrCoefficientReport rep;
    rep.r = r;
    rep.n_samples = n_samples;
    rep.seed = seed;
    rep.min_slack = std::numeric_limits<double>::infinity();

    double scale = std::max(1.0, f.hat(r));
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int s = 0; s < n_samples; ++s) {
        PowerSeries w(n);
        if (s % 10 == 9) {
            w = power_schwarz_series(2 + (s / 10) % 5, n);
        } else {
            double re, im;
            do {
                re = unit(rng);
                im = unit(rng);
            } while (re * re + im * im > 1.0);
            w = blaschke_schwarz_series(cplx(re, im), n);
        }
        double slack = bohr_coefficient_slack(f, w, r);
        rep.min_slack = std::min(rep.min_slack, slack);
        if (slack < -1e-12 * scale) ++rep.violations;
    }
    rep.verdict = rep.violations == 0 ? Verdict::True : Verdict::False;
    rep.detail = rep.violations == 0 ? "coefficient inequality held for every sample"
                                     : "coefficient inequality violated";
    return rep;
}

BulboacaReport bulboaca_condition_check(const PowerSeries& h, const MindaFunction& psi, int grid) {
    if (std::abs(h[0]) > 1e-14) throw argument_error("h(0) must vanish");
    if (h.order() < 1 || std::abs(h[1]) < 1e-14) throw argument_error("h'(0) must not vanish");

    PowerSeries u(h.order());
    for (int k = 1; k <= h.order(); ++k) u[k] = h[k] / static_cast<double>(k + 1);

    double dom = std::min(psi.domain_radius(), 1.0);
    double rho = kSubordRho * dom;
    auto cand = [&u](cplx z) { return u.eval(z); };
    auto tgt = [&psi](cplx z) { return 1.0 - 1.0 / psi.eval(z); };

    BulboacaReport rep;
    SubordinationReport sub = is_subordinate_numeric(cand, tgt, rho, rho, grid);
    rep.verdict = sub.verdict;
    rep.margin = sub.margin;
    rep.detail = sub.detail;

    PowerSeries h1 = h.derivative();
    PowerSeries h2 = h1.derivative();
    double printed_min = std::numeric_limits<double>::infinity();
    double usual_min = std::numeric_limits<double>::infinity();
    for (int ri = 1; ri <= 9; ++ri) {
        double r = 0.1 * ri;
        for (int j = 0; j < 256; ++j) {
            double th = 2.0 * kPi * j / 256;
            cplx z = r * cplx(std::cos(th), std::sin(th));
            cplx zh2 = z * h2.eval(z);
            cplx hv = h.eval(z), h1v = h1.eval(z);
            if (std::abs(hv) > 1e-12) printed_min = std::min(printed_min, (1.0 + zh2 / hv).real());
            if (std::abs(h1v) > 1e-12) usual_min = std::min(usual_min, (1.0 + zh2 / h1v).real());
        }
    }
    rep.printed_min = printed_min;
    rep.usual_min = usual_min;
    rep.printed_hypothesis = printed_min >= -0.5 - 1e-9;
    rep.usual_hypothesis = usual_min >= -0.5 - 1e-9;
    return rep;
}

}  // namespace mmrad
