#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "doctest.h"
#include "mmrad/catalog.hpp"
#include "mmrad/errors.hpp"
#include "mmrad/radius.hpp"
#include "support/oracles.hpp"

using mmrad::BohrResult;
using mmrad::catalog_make;
using mmrad::cplx;
using mmrad::MindaFunction;
using mmrad::RadiusResult;

namespace {

void check_well_formed(const RadiusResult& rr, double hi = 1.0) {
    CHECK(rr.root > 0.0);
    CHECK(rr.root <= hi + 1e-12);
    if (!rr.capped) {
        CHECK(rr.bracket_lo <= rr.root);
        CHECK(rr.root <= rr.bracket_hi);
        CHECK(std::abs(rr.residual(rr.root)) <= 1e2 * rr.tolerance * rr.residual_scale);
        CHECK(mmrad::certify_least_root(rr.residual, rr.root));
    }
    CHECK(!rr.method.empty());
}

// Averaged generator of the Mobius convex function, in closed form.
double psi_h_mobius(double x) {
    if (std::abs(x) < 1e-12) return 1.0 + x;  // series head, enough near 0
    return -1.0 - 2.0 / x * std::log(1.0 - x);
}

}  // namespace

TEST_CASE("starlike majorization radii match independently bisected closed equations") {
    struct Case {
        const char* id;
        std::map<std::string, double> params;
        std::function<double(double)> closed_residual;
        double exact = -1.0;  // optional analytic value
    };
    std::vector<Case> cases = {
        {"janowski",
         {{"D", 1.0}, {"E", -1.0}},
         [](double r) { return (1.0 - r * r) * (1.0 - r) / (1.0 + r) - 2.0 * r; },
         2.0 - std::sqrt(3.0)},
        {"exp", {}, [](double r) { return (1.0 - r * r) * std::exp(-r) - 2.0 * r; }, -1.0},
        {"sine", {}, [](double r) { return (1.0 - r * r) * (1.0 - std::sin(r)) - 2.0 * r; }, -1.0},
        {"lemniscate",
         {},
         [](double r) { return (1.0 - r * r) * std::sqrt(1.0 - r) - 2.0 * r; },
         -1.0},
        {"cardioid",
         {},
         [](double r) { return (1.0 - r * r) * (1.0 - r * std::exp(-r)) - 2.0 * r; },
         -1.0},
    };
    for (const auto& c : cases) {
        MindaFunction psi = catalog_make(c.id, c.params);
        RadiusResult rr = mmrad::majorization_radius_starlike(psi);
        check_well_formed(rr);
        double oracle = oracles::bisect(c.closed_residual, 1e-6, 0.999);
        CHECK_MESSAGE(std::abs(rr.root - oracle) < 1e-9, c.id);
        if (c.exact > 0.0) CHECK(rr.root == doctest::Approx(c.exact).epsilon(1e-11));
    }
}

TEST_CASE("frozen starlike radii stay pinned") {
    CHECK(mmrad::majorization_radius_starlike(catalog_make("sine")).root ==
          doctest::Approx(0.3124782858).epsilon(1e-9));
    RadiusResult booth = mmrad::majorization_radius_starlike(catalog_make("booth", {{"alpha", 0.5}}));
    CHECK(booth.root == doctest::Approx(0.306980841806).epsilon(1e-10));
    // restricted domain: the whole bracket stays inside the admissible disk
    double ra = catalog_make("booth", {{"alpha", 0.5}}).domain_radius();
    CHECK(booth.bracket_hi <= ra);
    check_well_formed(booth, ra);
}

TEST_CASE("the convex Mobius problem collapses to the exact rational root 1/3") {
    RadiusResult rr = mmrad::majorization_radius_convex(catalog_make("janowski", {{"D", 1.0}, {"E", -1.0}}));
    check_well_formed(rr);
    CHECK(rr.root == doctest::Approx(1.0 / 3.0).epsilon(1e-11));
    // ladder: relaxing starlike to convex strictly enlarges the radius
    double starlike = mmrad::majorization_radius_starlike(catalog_make("janowski", {{"D", 1.0}, {"E", -1.0}})).root;
    CHECK(rr.root > starlike + 0.06);
}

TEST_CASE("the convex solver agrees with a nested-quadrature oracle off the closed path") {
    // phi = e^z is convex but not Mobius; the generator is psi = h/H with
    // h(x) = x exp(int_0^x (e^t - 1)/t dt), H(x) = int_0^x h(s)/s ds.
    auto h = [](double x) {
        auto g = [](double t) { return std::abs(t) < 1e-14 ? 1.0 : (std::exp(t) - 1.0) / t; };
        return x * std::exp(oracles::adaptive_simpson(g, 0.0, x, 1e-11));
    };
    auto psi_minus = [&h](double r) {
        // H(-r) = int_0^{-r} h(u)/u du = int_0^1 h(-s r)/s ds  (u = -s r)
        auto hk = [&h, r](double s) { return s < 1e-12 ? -r : h(-s * r) / s; };
        double H = oracles::adaptive_simpson(hk, 0.0, 1.0, 1e-11);
        return h(-r) / H;
    };
    auto residual = [&psi_minus](double r) { return (1.0 - r * r) * psi_minus(r) - 2.0 * r; };
    double oracle = oracles::bisect(residual, 0.05, 0.9);
    RadiusResult rr = mmrad::majorization_radius_convex(catalog_make("exp"));
    check_well_formed(rr);
    CHECK(rr.root == doctest::Approx(oracle).epsilon(1e-7));
    CHECK(rr.method.find("series") != std::string::npos);
}

TEST_CASE("averaged-generator radii match hand-derived real-axis equations") {
    // phi = (1+z)/(1-z): psi_h(-r) = -1 + (2/r) log(1+r)
    RadiusResult hb = mmrad::hallenbeck_radius(catalog_make("janowski", {{"D", 1.0}, {"E", -1.0}}));
    check_well_formed(hb);
    double o1 = oracles::bisect(
        [](double r) { return (1.0 - r * r) * (2.0 * std::log(1.0 + r) - r) - 2.0 * r * r; }, 1e-6,
        0.999);
    CHECK(hb.root == doctest::Approx(o1).epsilon(1e-9));

    // phi = e^z: psi_h(-r) = (1 - e^{-r})/r
    RadiusResult he = mmrad::hallenbeck_radius(catalog_make("exp"));
    check_well_formed(he);
    double o2 = oracles::bisect(
        [](double r) { return (1.0 - r * r) * (1.0 - std::exp(-r)) - 2.0 * r * r; }, 1e-6, 0.999);
    CHECK(he.root == doctest::Approx(o2).epsilon(1e-9));

    // square-root variant on the same generator
    RadiusResult sq = mmrad::sqrt_variant_radius(catalog_make("janowski", {{"D", 1.0}, {"E", -1.0}}));
    check_well_formed(sq);
    auto sq_residual = [](double r) {
        auto mod = [r](double t) {
            cplx z = std::polar(r, t);
            return std::abs(-1.0 - 2.0 / z * std::log(1.0 - z));
        };
        return (1.0 - r * r) * std::sqrt(oracles::min_on_circle(mod)) - 2.0 * r;
    };
    double o3 = oracles::bisect(sq_residual, 1e-3, 0.999);
    CHECK(sq.root == doctest::Approx(o3).epsilon(1e-8));
    // the weaker square-root residual keeps more of the disk
    CHECK(sq.root > hb.root);
}

TEST_CASE("convex solvers reject non-convex generators") {
    CHECK_THROWS_AS(mmrad::majorization_radius_convex(catalog_make("sine")), mmrad::argument_error);
    CHECK_THROWS_AS(mmrad::hallenbeck_radius(catalog_make("cardioid")), mmrad::argument_error);
    CHECK_THROWS_AS(mmrad::sqrt_variant_radius(catalog_make("crescent")), mmrad::argument_error);
}

TEST_CASE("product radii reproduce the rational closed forms over a parameter sweep") {
    for (double g : {0.0, 0.25, 0.5}) {
        for (double t : {0.0, 0.25, 0.5}) {
            MindaFunction p1 = catalog_make("order_alpha", {{"alpha", g}});
            MindaFunction p2 = catalog_make("order_alpha", {{"alpha", t}});
            for (double beta : {1.5, 2.0, 3.0}) {
                RadiusResult rr = mmrad::product_mbeta_radius(p1, p2, beta);
                double closed = (beta - 1.0) / (3.0 + beta - 2.0 * (g + t));
                CHECK_MESSAGE(std::abs(rr.root - std::min(closed, 1.0)) < 1e-9,
                              "mbeta g=" << g << " t=" << t << " beta=" << beta);
                check_well_formed(rr);
            }
            for (double g0 : {0.0, 0.25, 0.5}) {
                RadiusResult rr = mmrad::product_order_radius(p1, p2, g0);
                double closed = (1.0 - g0) / (3.0 + g0 - 2.0 * (g + t));
                bool boundary = std::abs(closed - 1.0) < 1e-12;
                CHECK_MESSAGE(std::abs(rr.root - std::min(closed, 1.0)) < 1e-9,
                              "order g=" << g << " t=" << t << " g0=" << g0);
                if (!boundary) check_well_formed(rr);
            }
        }
    }
}

TEST_CASE("product radius caps at the full disk when the residual never vanishes") {
    MindaFunction p = catalog_make("order_alpha", {{"alpha", 0.75}});
    RadiusResult rr = mmrad::product_order_radius(p, p, 0.0);
    CHECK(rr.capped);
    CHECK(rr.root == 1.0);
    // residual at 1: 2 (1 + 0.5)/2 - 1 = 0.5 > 0, genuinely no root
    CHECK(rr.residual(1.0) > 0.4);

    // boundary combination: the root lands exactly on 1 with a sign change
    MindaFunction q = catalog_make("order_alpha", {{"alpha", 0.5}});
    RadiusResult edge = mmrad::product_order_radius(q, q, 0.0);
    CHECK(edge.root == doctest::Approx(1.0).epsilon(1e-9));

    // exp pair: 2 e^r - 1 - beta stays below zero until log((1+beta)/2)
    MindaFunction e = catalog_make("exp");
    RadiusResult me = mmrad::product_mbeta_radius(e, e, 2.0);
    CHECK(me.root == doctest::Approx(std::log(1.5)).epsilon(1e-10));
    RadiusResult mo = mmrad::product_order_radius(e, e, 0.2);
    CHECK(mo.root == doctest::Approx(std::log(2.0 / 1.2)).epsilon(1e-10));
    RadiusResult capped = mmrad::product_mbeta_radius(e, e, 4.5);  // 2e - 1 < 4.5
    CHECK(capped.capped);
    CHECK(capped.root == 1.0);
}

TEST_CASE("product solvers validate their hypotheses") {
    MindaFunction p = catalog_make("order_alpha", {{"alpha", 0.0}});
    CHECK_THROWS_AS(mmrad::product_mbeta_radius(p, p, 1.0), mmrad::argument_error);   // beta > 1
    CHECK_THROWS_AS(mmrad::product_order_radius(p, p, 1.0), mmrad::argument_error);   // gamma < 1
    CHECK_THROWS_AS(mmrad::product_order_radius(p, p, -0.1), mmrad::argument_error);  // gamma >= 0
}

TEST_CASE("sharp Mobius-family Bohr root: closed values, oracle, and hypotheses") {
    RadiusResult koebe = mmrad::janowski_bohr_radius(1.0, -1.0);
    check_well_formed(koebe);
    CHECK(koebe.root == doctest::Approx(3.0 - 2.0 * std::sqrt(2.0)).epsilon(1e-11));

    RadiusResult e0 = mmrad::janowski_bohr_radius(1.0, 0.0);
    double oracle = oracles::bisect([](double r) { return 1.0 - r * std::exp(1.0 + r); }, 1e-6, 0.999);
    CHECK(e0.root == doctest::Approx(oracle).epsilon(1e-10));

    // boundary growth rate is accepted for E = 0
    CHECK_NOTHROW(mmrad::janowski_bohr_radius(0.75 * std::log(3.0), 0.0));
    CHECK_THROWS_AS(mmrad::janowski_bohr_radius(0.8, 0.0), mmrad::argument_error);
    CHECK_THROWS_AS(mmrad::janowski_bohr_radius(0.5, -0.25), mmrad::argument_error);
    CHECK_THROWS_AS(mmrad::janowski_bohr_radius(0.5, 0.5), mmrad::argument_error);
    CHECK_THROWS_AS(mmrad::janowski_bohr_radius(-0.5, -0.2), mmrad::argument_error);
}

TEST_CASE("Bohr radii: closed-form families against bisected root equations") {
    // Koebe chain: generic computation equals the sharp Mobius-family root
    BohrResult k = mmrad::bohr_radius(catalog_make("order_alpha", {{"alpha", 0.0}}));
    CHECK(k.koebe == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(k.root_r0 == doctest::Approx(3.0 - 2.0 * std::sqrt(2.0)).epsilon(1e-10));
    CHECK(k.root_r0 == doctest::Approx(mmrad::janowski_bohr_radius(1.0, -1.0).root).epsilon(1e-8));
    CHECK(!k.cap_active);
    CHECK(k.bohr_radius == k.root_r0);

    // order 1/2: r/(1-r) = 1/2 has the exact root 1/3; the cap does not engage
    BohrResult h = mmrad::bohr_radius(catalog_make("order_alpha", {{"alpha", 0.5}}));
    CHECK(h.root_r0 == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
    CHECK(!h.cap_active);
    CHECK(h.bohr_radius == doctest::Approx(1.0 / 3.0).epsilon(1e-10));

    // cardioid: r exp(e^r - 1) = exp(1/e - 1), root 0.34968 > 1/3 engages the cap
    BohrResult c = mmrad::bohr_radius(catalog_make("cardioid"));
    double oc = oracles::bisect(
        [](double r) {
            return r * std::exp(std::exp(r) - 1.0) - std::exp(std::exp(-1.0) - 1.0);
        },
        1e-6, 0.999);
    CHECK(c.root_r0 == doctest::Approx(oc).epsilon(1e-9));
    CHECK(c.root_r0 == doctest::Approx(0.349681).epsilon(2e-6));
    CHECK(c.cap_active);
    CHECK(c.bohr_radius == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

    // square-root generator: e^2 r exp(2 sqrt(1+r) - 2) = (1 + sqrt(1+r))^2
    BohrResult l = mmrad::bohr_radius(catalog_make("lemniscate"));
    double ol = oracles::bisect(
        [](double r) {
            double s = std::sqrt(1.0 + r);
            return 4.0 * r * std::exp(2.0 * s - 2.0) / ((1.0 + s) * (1.0 + s)) - 4.0 * std::exp(-2.0);
        },
        1e-6, 0.999);
    CHECK(l.root_r0 == doctest::Approx(ol).epsilon(1e-9));
    CHECK(l.root_r0 == doctest::Approx(0.439229).epsilon(2e-6));
    CHECK(l.cap_active);
    CHECK(l.bohr_radius == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("Bohr radius for a series-only generator comes from the majorant root") {
    BohrResult s = mmrad::bohr_radius(catalog_make("sine"));
    CHECK(s.root_r0 == doctest::Approx(0.290662460465).epsilon(1e-9));  // frozen
    CHECK(!s.cap_active);
    CHECK(s.bohr_radius == s.root_r0);
    CHECK(s.method.find("hat") != std::string::npos);
    // residual really is hat(r) - r*
    mmrad::ExtremalFunction f0 =
        mmrad::ExtremalFunction::synthesize(catalog_make("sine"));
    CHECK(std::abs(s.residual(0.25) - (f0.hat(0.25) - f0.koebe_radius())) < 1e-12);
    CHECK(std::abs(f0.hat(s.root_r0) - s.koebe) < 1e-9);
}

TEST_CASE("distortion bounds match the classical Mobius-family derivative bounds") {
    mmrad::DistortionBounds b =
        mmrad::distortion_bounds(catalog_make("janowski", {{"D", 1.0}, {"E", -1.0}}), 0.5);
    // k'(r) = (1+r)/(1-r)^3 for the Koebe function
    CHECK(b.lower == doctest::Approx((1.0 - 0.5) / std::pow(1.5, 3)).epsilon(1e-10));
    CHECK(b.upper == doctest::Approx((1.0 + 0.5) / std::pow(0.5, 3)).epsilon(1e-10));
    CHECK(b.min_psi == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(b.max_psi == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(b.theta_min == doctest::Approx(oracles::kPi));
    CHECK(b.theta_max == doctest::Approx(0.0));
    CHECK(b.closed_min);
    CHECK(b.closed_max);
    CHECK(b.lower < b.upper);
}

TEST_CASE("the pinned distortion table rows stay frozen") {
    auto rows = mmrad::cardioid_distortion_table();
    REQUIRE(rows.size() == 4);
    const double want[4][4] = {
        {1.0, 1.88438239418, 0.372411801983, 0.19792331897},
        {0.8, 2.0185886955, 0.527912249817, 0.304374557636},
        {2.0 / 3.0, 2.17677420665, 0.611553068178, 0.375935976643},
        {0.5, 2.58169049245, 0.693287266965, 0.467769241058},
    };
    for (int i = 0; i < 4; ++i) {
        CHECK(rows[i].r == doctest::Approx(want[i][0]).epsilon(1e-12));
        CHECK(rows[i].theta1 == doctest::Approx(want[i][1]).epsilon(1e-9));
        CHECK(rows[i].psi_abs == doctest::Approx(want[i][2]).epsilon(1e-9));
        CHECK(rows[i].lower == doctest::Approx(want[i][3]).epsilon(1e-9));
    }
    // the lower distortion bound row entries satisfy lower = psi_abs * (-f0(-r))/r
    mmrad::ExtremalFunction f0 = mmrad::ExtremalFunction::synthesize(catalog_make("cardioid"));
    for (const auto& row : rows) {
        double growth = -f0.eval(cplx(-row.r, 0.0)).real() / row.r;
        CHECK(row.lower == doctest::Approx(row.psi_abs * growth).epsilon(1e-10));
    }
}

TEST_CASE("the root scanner finds least roots, certifies them, and reports failures") {
    // quadratic with roots 0.2 and 0.6: least root wins and certifies
    auto two_roots = [](double r) { return (r - 0.2) * (r - 0.6); };
    RadiusResult rr = mmrad::solve_least_root(two_roots, 1.0, "test quadratic");
    CHECK(rr.root == doctest::Approx(0.2).epsilon(1e-9));
    CHECK(mmrad::certify_least_root(two_roots, rr.root));
    // claiming the second root must fail certification
    CHECK(!mmrad::certify_least_root(two_roots, 0.6));

    // no sign change anywhere: solver_error
    CHECK_THROWS_AS(mmrad::solve_least_root([](double) { return 1.0; }, 1.0, "constant"),
                    mmrad::solver_error);

    // scan_stop_on_error: a residual that stops converging above the root
    // still yields the root; with no root below the failure the scan ends in
    // solver_error instead of surfacing the convergence failure
    auto partial = [](double r) {
        if (r > 0.55) throw mmrad::convergence_error("tail too large");
        return 0.3 - r;
    };
    RadiusResult pr = mmrad::solve_least_root(partial, 1.0, "partial", mmrad::kRootScan, true);
    CHECK(pr.root == doctest::Approx(0.3).epsilon(1e-9));
    auto rootless = [](double r) {
        if (r > 0.55) throw mmrad::convergence_error("tail too large");
        return 1.0 + r;
    };
    CHECK_THROWS_AS(mmrad::solve_least_root(rootless, 1.0, "x", mmrad::kRootScan, true),
                    mmrad::solver_error);
    // without the flag the convergence failure propagates out of the scan
    CHECK_THROWS_AS(mmrad::solve_least_root(rootless, 1.0, "x"), mmrad::convergence_error);
}

TEST_CASE("averaged Mobius generator value used by the oracle matches its series") {
    // sanity for the hand-written psi_h behind the oracle residuals:
    // (1/z) int_0^z (1+t)/(1-t) dt = 1 + sum 2 z^n/(n+1)
    for (double x : {-0.4, -0.2, 0.3}) {
        double series_val = 1.0;
        for (int n = 1; n <= 64; ++n) series_val += 2.0 * std::pow(x, n) / (n + 1.0);
        CHECK(psi_h_mobius(x) == doctest::Approx(series_val).epsilon(1e-11));
    }
}
