#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <cstring>
#include <initializer_list>
#include <string>
#include <utility>

#include "doctest.h"
#include "mmrad.h"
#include "mmrad/catalog.hpp"
#include "mmrad/radius.hpp"
#include "mmrad/verify.hpp"

namespace {

// RAII wrappers so failed CHECKs cannot leak handles.
struct Minda {
    mmrad_minda* h = nullptr;
    Minda(const char* id, std::initializer_list<std::pair<const char*, double>> params = {}) {
        const char* names[8];
        double values[8];
        int n = 0;
        for (const auto& p : params) {
            names[n] = p.first;
            values[n] = p.second;
            ++n;
        }
        status = mmrad_minda_create(id, n ? names : nullptr, n ? values : nullptr, n, &h);
    }
    ~Minda() { mmrad_minda_destroy(h); }
    mmrad_status status;
};

struct Extremal {
    mmrad_extremal* h = nullptr;
    Extremal(const mmrad_minda* m, int order = 0) { status = mmrad_extremal_create(m, order, &h); }
    ~Extremal() { mmrad_extremal_destroy(h); }
    mmrad_status status;
};

}  // namespace

TEST_CASE("catalog enumeration matches the native registry") {
    REQUIRE(mmrad_catalog_count() == 15);
    mmrad_catalog_entry e{};
    REQUIRE(mmrad_catalog_entry_get(0, &e) == MMRAD_OK);
    CHECK(std::string(e.id) == "janowski");
    CHECK(std::string(e.formula).find("psi(z)") != std::string::npos);
    CHECK(e.orientation == 1);
    CHECK(e.convex == 1);

    int minus_seen = 0;
    for (int i = 0; i < mmrad_catalog_count(); ++i) {
        REQUIRE(mmrad_catalog_entry_get(i, &e) == MMRAD_OK);
        CHECK(e.id != nullptr);
        CHECK(e.formula != nullptr);
        if (std::string(e.id) == "sqrt_minus") {
            CHECK(e.orientation == -1);
            ++minus_seen;
        }
        if (std::string(e.id) == "booth") CHECK(std::string(e.domain_note).find("r_alpha") != std::string::npos);
    }
    CHECK(minus_seen == 1);
    CHECK(mmrad_catalog_entry_get(-1, &e) == MMRAD_ERR_ARGUMENT);
    CHECK(mmrad_catalog_entry_get(15, &e) == MMRAD_ERR_ARGUMENT);
}

TEST_CASE("handle lifecycle, evaluation, and series round-trip against the C++ core") {
    Minda j("janowski", {{"D", 1.0}, {"E", -1.0}});
    REQUIRE(j.status == MMRAD_OK);
    REQUIRE(j.h != nullptr);

    mmrad::MindaFunction ref = mmrad::catalog_make("janowski", {{"D", 1.0}, {"E", -1.0}});
    double re = 0.0, im = 0.0;
    REQUIRE(mmrad_minda_eval(j.h, 0.3, 0.2, &re, &im) == MMRAD_OK);
    mmrad::cplx want = ref.eval({0.3, 0.2});
    CHECK(std::abs(re - want.real()) < 1e-12);
    CHECK(std::abs(im - want.imag()) < 1e-12);

    double cr[11], ci[11];
    REQUIRE(mmrad_minda_series(j.h, 10, cr, ci) == MMRAD_OK);
    mmrad::PowerSeries s = ref.series(10);
    for (int n = 0; n <= 10; ++n) {
        CHECK(std::abs(cr[n] - s[n].real()) < 1e-13);
        CHECK(std::abs(ci[n] - s[n].imag()) < 1e-13);
    }

    double dom = 0.0;
    REQUIRE(mmrad_minda_domain_radius(j.h, &dom) == MMRAD_OK);
    CHECK(dom == 1.0);

    mmrad_catalog_entry e{};
    REQUIRE(mmrad_minda_entry(j.h, &e) == MMRAD_OK);
    CHECK(std::string(e.id) == "janowski");
    CHECK(std::string(e.params).find("D=1") != std::string::npos);
}

TEST_CASE("status codes map the native error taxonomy") {
    mmrad_minda* h = nullptr;
    CHECK(mmrad_minda_create("no_such_generator", nullptr, nullptr, 0, &h) == MMRAD_ERR_ARGUMENT);
    CHECK(h == nullptr);
    CHECK(std::string(mmrad_last_error()).find("unknown") != std::string::npos);

    const char* names[] = {"D"};
    double values[] = {1.0};
    CHECK(mmrad_minda_create("janowski", names, values, 1, &h) == MMRAD_ERR_ARGUMENT);

    Minda booth("booth", {{"alpha", 0.5}});
    REQUIRE(booth.status == MMRAD_OK);
    double re, im;
    CHECK(mmrad_minda_eval(booth.h, 0.9, 0.0, &re, &im) == MMRAD_ERR_DOMAIN);
    CHECK(std::strlen(mmrad_last_error()) > 0);

    CHECK(mmrad_janowski_bohr(0.5, -0.25, 0, nullptr) == MMRAD_ERR_ARGUMENT);
    mmrad_radius_result rr{};
    CHECK(mmrad_janowski_bohr(0.5, -0.25, 0, &rr) == MMRAD_ERR_ARGUMENT);
    CHECK(std::string(mmrad_last_error()).find("hypothesis") != std::string::npos);

    // null handles and null outputs are arguments errors, not crashes
    CHECK(mmrad_minda_eval(nullptr, 0.0, 0.0, &re, &im) == MMRAD_ERR_ARGUMENT);
    CHECK(mmrad_minda_eval(booth.h, 0.0, 0.0, nullptr, &im) == MMRAD_ERR_ARGUMENT);
    CHECK(mmrad_radius_starlike(nullptr, 0, &rr) == MMRAD_ERR_ARGUMENT);
    CHECK(mmrad_radius_starlike(booth.h, 0, nullptr) == MMRAD_ERR_ARGUMENT);
    mmrad_bohr_result br{};
    CHECK(mmrad_bohr(nullptr, 0, 0, &br) == MMRAD_ERR_ARGUMENT);
}

TEST_CASE("circle extremum kinds agree with the native scans") {
    Minda c("cardioid");
    REQUIRE(c.status == MMRAD_OK);
    double theta = 0.0, value = 0.0;
    int closed = -1;
    REQUIRE(mmrad_minda_circle_extremum(c.h, 0, 0.5, &theta, &value, &closed) == MMRAD_OK);
    CHECK(value == doctest::Approx(0.693287266965).epsilon(1e-9));
    CHECK(closed == 0);
    REQUIRE(mmrad_minda_circle_extremum(c.h, 1, 0.5, &theta, &value, &closed) == MMRAD_OK);
    CHECK(value == doctest::Approx(1.0 + 0.5 * std::exp(0.5)).epsilon(1e-10));
    CHECK(closed == 1);
    REQUIRE(mmrad_minda_circle_extremum(c.h, 2, 0.5, &theta, &value, &closed) == MMRAD_OK);
    mmrad::MindaFunction ref = mmrad::catalog_make("cardioid");
    mmrad::CircleExtremum want =
        mmrad::min_re_on_circle([&ref](mmrad::cplx z) { return ref.eval(z); }, 0.5);
    CHECK(value == doctest::Approx(want.value).epsilon(1e-10));
    CHECK(mmrad_minda_circle_extremum(c.h, 3, 0.5, &theta, &value, &closed) == MMRAD_ERR_ARGUMENT);
    CHECK(mmrad_minda_circle_extremum(c.h, 0, -1.0, &theta, &value, &closed) != MMRAD_OK);
}

TEST_CASE("extremal handles expose eval, hat, koebe, and series") {
    Minda m("lemniscate");
    REQUIRE(m.status == MMRAD_OK);
    Extremal f(m.h);
    REQUIRE(f.status == MMRAD_OK);

    int has_closed = 0;
    REQUIRE(mmrad_extremal_has_closed_form(f.h, &has_closed) == MMRAD_OK);
    CHECK(has_closed == 1);

    double k = 0.0;
    REQUIRE(mmrad_extremal_koebe(f.h, &k) == MMRAD_OK);
    CHECK(k == doctest::Approx(4.0 * std::exp(-2.0)).epsilon(1e-11));

    double re = 0.0, im = 0.0;
    REQUIRE(mmrad_extremal_eval(f.h, 0.3, 0.0, &re, &im) == MMRAD_OK);
    mmrad::ExtremalFunction ref =
        mmrad::ExtremalFunction::synthesize(mmrad::catalog_make("lemniscate"));
    CHECK(re == doctest::Approx(ref.eval({0.3, 0.0}).real()).epsilon(1e-12));
    CHECK(std::abs(im) < 1e-14);

    double hat = 0.0;
    REQUIRE(mmrad_extremal_hat(f.h, 0.4, &hat) == MMRAD_OK);
    CHECK(hat == doctest::Approx(ref.hat(0.4)).epsilon(1e-12));
    CHECK(mmrad_extremal_hat(f.h, 1.5, &hat) == MMRAD_ERR_ARGUMENT);

    double tr[7], ti[7];
    REQUIRE(mmrad_extremal_series(f.h, 6, tr, ti) == MMRAD_OK);
    CHECK(tr[0] == 0.0);
    CHECK(tr[1] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(tr[5] == doctest::Approx(-5.0 / 1920.0).epsilon(1e-10));

    // generators that cannot be normalized refuse to synthesize
    Minda ab("ab_power", {{"a", 2.0}, {"b", 2.0}});
    REQUIRE(ab.status == MMRAD_OK);
    mmrad_extremal* bad = nullptr;
    CHECK(mmrad_extremal_create(ab.h, 0, &bad) == MMRAD_ERR_ARGUMENT);
    CHECK(bad == nullptr);
}

TEST_CASE("radius results round-trip the native values with certification") {
    Minda j("janowski", {{"D", 1.0}, {"E", -1.0}});
    REQUIRE(j.status == MMRAD_OK);

    mmrad_radius_result rr{};
    REQUIRE(mmrad_radius_starlike(j.h, 1, &rr) == MMRAD_OK);
    mmrad::RadiusResult ref = mmrad::majorization_radius_starlike(
        mmrad::catalog_make("janowski", {{"D", 1.0}, {"E", -1.0}}));
    CHECK(rr.root == doctest::Approx(ref.root).epsilon(1e-12));
    CHECK(rr.bracket_lo == doctest::Approx(ref.bracket_lo).epsilon(1e-12));
    CHECK(rr.bracket_hi == doctest::Approx(ref.bracket_hi).epsilon(1e-12));
    CHECK(rr.tolerance == ref.tolerance);
    CHECK(rr.capped == 0);
    CHECK(rr.certified == 1);
    CHECK(std::string(rr.method) == ref.method);

    mmrad_radius_result un{};
    REQUIRE(mmrad_radius_starlike(j.h, 0, &un) == MMRAD_OK);
    CHECK(un.certified == -1);

    REQUIRE(mmrad_radius_convex(j.h, 0, 1, &rr) == MMRAD_OK);
    CHECK(rr.root == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
    CHECK(rr.certified == 1);

    REQUIRE(mmrad_radius_hallenbeck(j.h, 0, 0, &rr) == MMRAD_OK);
    CHECK(rr.root == doctest::Approx(mmrad::hallenbeck_radius(
                                         mmrad::catalog_make("janowski", {{"D", 1.0}, {"E", -1.0}}))
                                         .root)
                         .epsilon(1e-12));

    REQUIRE(mmrad_radius_sqrt_variant(j.h, 0, 0, &rr) == MMRAD_OK);
    CHECK(rr.root > 0.0);

    // products
    Minda a("order_alpha", {{"alpha", 0.25}});
    Minda b("order_alpha", {{"alpha", 0.5}});
    REQUIRE(mmrad_radius_product_mbeta(a.h, b.h, 2.0, 1, &rr) == MMRAD_OK);
    CHECK(rr.root == doctest::Approx(1.0 / (5.0 - 1.5)).epsilon(1e-9));
    CHECK(rr.certified == 1);
    REQUIRE(mmrad_radius_product_order(a.h, b.h, 0.25, 0, &rr) == MMRAD_OK);
    CHECK(rr.root == doctest::Approx(0.75 / (3.25 - 1.5)).epsilon(1e-9));
    CHECK(mmrad_radius_product_mbeta(a.h, b.h, 0.5, 0, &rr) == MMRAD_ERR_ARGUMENT);

    // capped product keeps certified unset semantics intact
    Minda p75("order_alpha", {{"alpha", 0.75}});
    REQUIRE(mmrad_radius_product_order(p75.h, p75.h, 0.0, 1, &rr) == MMRAD_OK);
    CHECK(rr.capped == 1);
    CHECK(rr.root == 1.0);
}

TEST_CASE("the combined bounded-domain radius reports both the root and the domain bound") {
    Minda booth("booth", {{"alpha", 0.5}});
    REQUIRE(booth.status == MMRAD_OK);
    mmrad_radius_result rr{};
    double r_alpha = 0.0;
    REQUIRE(mmrad_radius_booth(booth.h, 1, &rr, &r_alpha) == MMRAD_OK);
    CHECK(r_alpha == doctest::Approx((std::sqrt(3.0) - 1.0)).epsilon(1e-12));
    CHECK(rr.root == doctest::Approx(0.306980841806).epsilon(1e-9));
    CHECK(rr.root < r_alpha);
    CHECK(rr.certified == 1);

    // any other generator is rejected by id
    Minda e("exp");
    CHECK(mmrad_radius_booth(e.h, 0, &rr, &r_alpha) == MMRAD_ERR_ARGUMENT);
}

TEST_CASE("Bohr results cross the C boundary with cap semantics") {
    Minda card("cardioid");
    REQUIRE(card.status == MMRAD_OK);
    mmrad_bohr_result br{};
    REQUIRE(mmrad_bohr(card.h, 0, 1, &br) == MMRAD_OK);
    CHECK(br.koebe == doctest::Approx(std::exp(std::exp(-1.0) - 1.0)).epsilon(1e-11));
    CHECK(br.root_r0 == doctest::Approx(0.349680642762).epsilon(1e-9));
    CHECK(br.cap_active == 1);
    CHECK(br.bohr_radius == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(br.certified == 1);
    CHECK(std::string(br.method).find("f0") != std::string::npos);

    Minda half("order_alpha", {{"alpha", 0.5}});
    REQUIRE(mmrad_bohr(half.h, 0, 0, &br) == MMRAD_OK);
    CHECK(br.cap_active == 0);
    CHECK(br.bohr_radius == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
    CHECK(br.certified == -1);

    mmrad_radius_result rr{};
    REQUIRE(mmrad_janowski_bohr(1.0, -1.0, 1, &rr) == MMRAD_OK);
    CHECK(rr.root == doctest::Approx(3.0 - 2.0 * std::sqrt(2.0)).epsilon(1e-10));
    CHECK(rr.certified == 1);
}

TEST_CASE("distortion bounds and the pinned table cross unchanged") {
    Minda j("janowski", {{"D", 1.0}, {"E", -1.0}});
    mmrad_distortion d{};
    REQUIRE(mmrad_distort(j.h, 0.5, 0, &d) == MMRAD_OK);
    CHECK(d.lower == doctest::Approx(0.5 / std::pow(1.5, 3)).epsilon(1e-10));
    CHECK(d.upper == doctest::Approx(1.5 / std::pow(0.5, 3)).epsilon(1e-10));
    CHECK(d.closed_min == 1);
    CHECK(d.closed_max == 1);
    CHECK(mmrad_distort(j.h, 1.5, 0, &d) != MMRAD_OK);

    mmrad_table_row rows[4];
    REQUIRE(mmrad_cardioid_table(rows) == MMRAD_OK);
    CHECK(rows[0].r == doctest::Approx(1.0));
    CHECK(rows[0].lower == doctest::Approx(0.19792331897).epsilon(1e-9));
    CHECK(rows[3].theta1 == doctest::Approx(2.58169049245).epsilon(1e-9));
}

TEST_CASE("verification probes return verdicts through the C layer") {
    Minda j("janowski", {{"D", 1.0}, {"E", -1.0}});

    mmrad_sharpness_report sr{};
    REQUIRE(mmrad_probe_sharpness(j.h, 0.0, 0.01, &sr) == MMRAD_OK);  // r <= 0: solve first
    CHECK(sr.verdict == MMRAD_VERDICT_TRUE);
    CHECK(sr.radius == doctest::Approx(2.0 - std::sqrt(3.0)).epsilon(1e-9));
    CHECK(sr.below_excess <= 1e-9);
    CHECK(sr.above_excess > 0.0);
    CHECK(std::strlen(sr.detail) > 0);

    mmrad_bohr_coeff_report bc{};
    REQUIRE(mmrad_probe_bohr_coeff(j.h, 1.0 / 3.0, 50, 12345, 0, &bc) == MMRAD_OK);
    CHECK(bc.verdict == MMRAD_VERDICT_TRUE);
    CHECK(bc.violations == 0);
    CHECK(bc.n_samples == 50);
    CHECK(bc.seed == 12345u);

    mmrad_subordination_report sub{};
    REQUIRE(mmrad_probe_subordination(j.h, 1.0, 2.0, 1.0, 0, 0, &sub) == MMRAD_OK);
    CHECK(sub.verdict == MMRAD_VERDICT_TRUE);
    CHECK(sub.outside == 0);
    REQUIRE(mmrad_probe_subordination(j.h, 1.01, 1.0, 0.99, 0, 0, &sub) == MMRAD_OK);
    CHECK(sub.verdict == MMRAD_VERDICT_FALSE);
    CHECK(mmrad_probe_subordination(j.h, 1.0, 0.5, 1.0, 0, 0, &sub) == MMRAD_ERR_ARGUMENT);

    mmrad_bulboaca_report bb{};
    REQUIRE(mmrad_probe_bulboaca(j.h, 0.1, 0, &bb) == MMRAD_OK);
    CHECK(bb.verdict == MMRAD_VERDICT_TRUE);
    CHECK(bb.printed_hypothesis == 1);
    CHECK(bb.usual_hypothesis == 1);
    REQUIRE(mmrad_probe_bulboaca(j.h, 3.0, 0, &bb) == MMRAD_OK);
    CHECK(bb.verdict == MMRAD_VERDICT_FALSE);
}

TEST_CASE("destroying null handles is a no-op and error text is stable") {
    mmrad_minda_destroy(nullptr);
    mmrad_extremal_destroy(nullptr);
    mmrad_minda* h = nullptr;
    CHECK(mmrad_minda_create("nope", nullptr, nullptr, 0, &h) == MMRAD_ERR_ARGUMENT);
    std::string first = mmrad_last_error();
    CHECK(!first.empty());
    // a successful call does not clobber the stored text with garbage
    Minda ok("exp");
    REQUIRE(ok.status == MMRAD_OK);
    CHECK(mmrad_last_error() != nullptr);
}
