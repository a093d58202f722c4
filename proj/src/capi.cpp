// C binding: opaque handles over the C++ core, exceptions mapped to status
// codes, failure text kept in a thread-local buffer.
#include "mmrad.h"

#include <cstdio>
#include <cstring>
#include <map>
#include <string>
#include <vector>

#include "mmrad/catalog.hpp"
#include "mmrad/circle_extremum.hpp"
#include "mmrad/errors.hpp"
#include "mmrad/extremal.hpp"
#include "mmrad/radius.hpp"
#include "mmrad/verify.hpp"

struct mmrad_minda {
    mmrad::MindaFunction fn;
    std::string id_text;
    std::string formula_text;
    std::string tag_text;
    std::string params_text;
    std::string domain_note_text;
};

struct mmrad_extremal {
    mmrad::ExtremalFunction fn;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

template <class F>
mmrad_status guarded(F&& body) {
    try {
        body();
        return MMRAD_OK;
    } catch (const mmrad::argument_error& e) {
        set_error(e.what());
        return MMRAD_ERR_ARGUMENT;
    } catch (const mmrad::domain_error& e) {
        set_error(e.what());
        return MMRAD_ERR_DOMAIN;
    } catch (const mmrad::convergence_error& e) {
        set_error(e.what());
        return MMRAD_ERR_CONVERGENCE;
    } catch (const mmrad::solver_error& e) {
        set_error(e.what());
        return MMRAD_ERR_SOLVER;
    } catch (const std::exception& e) {
        set_error(e.what());
        return MMRAD_ERR_INTERNAL;
    } catch (...) {
        set_error("unknown failure");
        return MMRAD_ERR_INTERNAL;
    }
}

void copy_text(char* dst, size_t cap, const std::string& src) {
    std::snprintf(dst, cap, "%s", src.c_str());
}

void fill_radius(mmrad_radius_result* out, const mmrad::RadiusResult& rr, int certify) {
    out->root = rr.root;
    out->bracket_lo = rr.bracket_lo;
    out->bracket_hi = rr.bracket_hi;
    out->residual_at_root = rr.residual_at_root;
    out->residual_scale = rr.residual_scale;
    out->tolerance = rr.tolerance;
    out->iterations = rr.iterations;
    out->capped = rr.capped ? 1 : 0;
    out->certified = -1;
    if (certify && rr.residual)
        out->certified = mmrad::certify_least_root(rr.residual, rr.root) ? 1 : 0;
    copy_text(out->method, MMRAD_METHOD_LEN, rr.method);
}

const mmrad_catalog_entry* static_entries() {
    static std::vector<mmrad_catalog_entry> entries = [] {
        std::vector<mmrad_catalog_entry> v;
        for (const auto& d : mmrad::catalog_list()) {
            mmrad_catalog_entry e;
            e.id = d.id.c_str();
            e.formula = d.formula.c_str();
            e.tag = d.tag.c_str();
            e.params = d.params.c_str();
            e.domain_note = d.domain_note.c_str();
            e.orientation = d.orientation;
            e.convex = d.convex ? 1 : 0;
            v.push_back(e);
        }
        return v;
    }();
    return entries.data();
}

std::string instance_params_text(const mmrad::MindaFunction& fn) {
    std::string s;
    for (const auto& [name, value] : fn.params()) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%s%s=%.12g", s.empty() ? "" : ",", name.c_str(), value);
        s += buf;
    }
    return s;
}

std::string domain_note_for(const std::string& id) {
    for (const auto& d : mmrad::catalog_list())
        if (d.id == id) return d.domain_note;
    return "";
}

}  // namespace

extern "C" {

const char* mmrad_last_error(void) { return g_last_error.c_str(); }

int mmrad_catalog_count(void) { return static_cast<int>(mmrad::catalog_list().size()); }

mmrad_status mmrad_catalog_entry_get(int index, mmrad_catalog_entry* out) {
    return guarded([&] {
        if (!out) throw mmrad::argument_error("null output pointer");
        if (index < 0 || index >= mmrad_catalog_count())
            throw mmrad::argument_error("catalog index out of range");
        *out = static_entries()[index];
    });
}

mmrad_status mmrad_minda_create(const char* id, const char* const* param_names,
                                const double* param_values, int n_params, mmrad_minda** out) {
    return guarded([&] {
        if (!id || !out) throw mmrad::argument_error("null id or output pointer");
        if (n_params > 0 && (!param_names || !param_values))
            throw mmrad::argument_error("parameter arrays required when n_params > 0");
        std::map<std::string, double> params;
        for (int i = 0; i < n_params; ++i) {
            if (!param_names[i]) throw mmrad::argument_error("null parameter name");
            params[param_names[i]] = param_values[i];
        }
        mmrad::MindaFunction fn = mmrad::catalog_make(id, params);
        auto* h = new mmrad_minda{fn,       fn.id(),      fn.formula(),
                                  fn.tag(), instance_params_text(fn), domain_note_for(fn.id())};
        *out = h;
    });
}

void mmrad_minda_destroy(mmrad_minda* m) { delete m; }

mmrad_status mmrad_minda_entry(const mmrad_minda* m, mmrad_catalog_entry* out) {
    return guarded([&] {
        if (!m || !out) throw mmrad::argument_error("null handle or output pointer");
        out->id = m->id_text.c_str();
        out->formula = m->formula_text.c_str();
        out->tag = m->tag_text.c_str();
        out->params = m->params_text.c_str();
        out->domain_note = m->domain_note_text.c_str();
        out->orientation = m->fn.orientation();
        out->convex = m->fn.convex() ? 1 : 0;
    });
}

mmrad_status mmrad_minda_domain_radius(const mmrad_minda* m, double* out) {
    return guarded([&] {
        if (!m || !out) throw mmrad::argument_error("null handle or output pointer");
        *out = m->fn.domain_radius();
    });
}

mmrad_status mmrad_minda_eval(const mmrad_minda* m, double z_re, double z_im, double* out_re,
                              double* out_im) {
    return guarded([&] {
        if (!m || !out_re || !out_im) throw mmrad::argument_error("null handle or output pointer");
        mmrad::cplx w = m->fn.eval(mmrad::cplx(z_re, z_im));
        *out_re = w.real();
        *out_im = w.imag();
    });
}

mmrad_status mmrad_minda_series(const mmrad_minda* m, int order, double* coeff_re,
                                double* coeff_im) {
    return guarded([&] {
        if (!m || !coeff_re || !coeff_im)
            throw mmrad::argument_error("null handle or output pointer");
        if (order < 0) throw mmrad::argument_error("series order must be nonnegative");
        mmrad::PowerSeries s = m->fn.series(order);
        for (int n = 0; n <= order; ++n) {
            coeff_re[n] = s[n].real();
            coeff_im[n] = s[n].imag();
        }
    });
}

mmrad_status mmrad_minda_circle_extremum(const mmrad_minda* m, int kind, double r, double* theta,
                                         double* value, int* closed_form) {
    return guarded([&] {
        if (!m || !theta || !value) throw mmrad::argument_error("null handle or output pointer");
        mmrad::CircleExtremum e;
        if (kind == 0) {
            e = mmrad::min_modulus_on_circle(m->fn, r);
        } else if (kind == 1) {
            e = mmrad::max_modulus_on_circle(m->fn, r);
        } else if (kind == 2) {
            const mmrad::MindaFunction fn = m->fn;
            e = mmrad::min_re_on_circle([fn](mmrad::cplx z) { return fn.eval(z); }, r);
        } else {
            throw mmrad::argument_error("extremum kind must be 0, 1, or 2");
        }
        *theta = e.theta;
        *value = e.value;
        if (closed_form) *closed_form = e.method == mmrad::ExtremumMethod::ClosedForm ? 1 : 0;
    });
}

mmrad_status mmrad_extremal_create(const mmrad_minda* m, int order, mmrad_extremal** out) {
    return guarded([&] {
        if (!m || !out) throw mmrad::argument_error("null handle or output pointer");
        *out = new mmrad_extremal{mmrad::ExtremalFunction::synthesize(m->fn, order)};
    });
}

void mmrad_extremal_destroy(mmrad_extremal* f) { delete f; }

mmrad_status mmrad_extremal_eval(const mmrad_extremal* f, double z_re, double z_im,
                                 double* out_re, double* out_im) {
    return guarded([&] {
        if (!f || !out_re || !out_im) throw mmrad::argument_error("null handle or output pointer");
        mmrad::cplx w = f->fn.eval(mmrad::cplx(z_re, z_im));
        *out_re = w.real();
        *out_im = w.imag();
    });
}

mmrad_status mmrad_extremal_hat(const mmrad_extremal* f, double r, double* out) {
    return guarded([&] {
        if (!f || !out) throw mmrad::argument_error("null handle or output pointer");
        *out = f->fn.hat(r);
    });
}

mmrad_status mmrad_extremal_koebe(const mmrad_extremal* f, double* out) {
    return guarded([&] {
        if (!f || !out) throw mmrad::argument_error("null handle or output pointer");
        *out = f->fn.koebe_radius();
    });
}

mmrad_status mmrad_extremal_has_closed_form(const mmrad_extremal* f, int* out) {
    return guarded([&] {
        if (!f || !out) throw mmrad::argument_error("null handle or output pointer");
        *out = f->fn.has_closed_form() ? 1 : 0;
    });
}

mmrad_status mmrad_extremal_series(const mmrad_extremal* f, int order, double* coeff_re,
                                   double* coeff_im) {
    return guarded([&] {
        if (!f || !coeff_re || !coeff_im)
            throw mmrad::argument_error("null handle or output pointer");
        if (order < 0) throw mmrad::argument_error("series order must be nonnegative");
        mmrad::PowerSeries s = f->fn.series_at(order);
        for (int n = 0; n <= order; ++n) {
            coeff_re[n] = s[n].real();
            coeff_im[n] = s[n].imag();
        }
    });
}

mmrad_status mmrad_radius_starlike(const mmrad_minda* psi, int certify, mmrad_radius_result* out) {
    return guarded([&] {
        if (!psi || !out) throw mmrad::argument_error("null handle or output pointer");
        fill_radius(out, mmrad::majorization_radius_starlike(psi->fn), certify);
    });
}

mmrad_status mmrad_radius_convex(const mmrad_minda* phi, int order, int certify,
                                 mmrad_radius_result* out) {
    return guarded([&] {
        if (!phi || !out) throw mmrad::argument_error("null handle or output pointer");
        fill_radius(out, mmrad::majorization_radius_convex(phi->fn, order), certify);
    });
}

mmrad_status mmrad_radius_hallenbeck(const mmrad_minda* phi, int order, int certify,
                                     mmrad_radius_result* out) {
    return guarded([&] {
        if (!phi || !out) throw mmrad::argument_error("null handle or output pointer");
        fill_radius(out, mmrad::hallenbeck_radius(phi->fn, order), certify);
    });
}

mmrad_status mmrad_radius_sqrt_variant(const mmrad_minda* phi, int order, int certify,
                                       mmrad_radius_result* out) {
    return guarded([&] {
        if (!phi || !out) throw mmrad::argument_error("null handle or output pointer");
        fill_radius(out, mmrad::sqrt_variant_radius(phi->fn, order), certify);
    });
}

mmrad_status mmrad_radius_product_mbeta(const mmrad_minda* psi1, const mmrad_minda* psi2,
                                        double beta, int certify, mmrad_radius_result* out) {
    return guarded([&] {
        if (!psi1 || !psi2 || !out) throw mmrad::argument_error("null handle or output pointer");
        fill_radius(out, mmrad::product_mbeta_radius(psi1->fn, psi2->fn, beta), certify);
    });
}

mmrad_status mmrad_radius_product_order(const mmrad_minda* psi1, const mmrad_minda* psi2,
                                        double gamma, int certify, mmrad_radius_result* out) {
    return guarded([&] {
        if (!psi1 || !psi2 || !out) throw mmrad::argument_error("null handle or output pointer");
        fill_radius(out, mmrad::product_order_radius(psi1->fn, psi2->fn, gamma), certify);
    });
}

mmrad_status mmrad_radius_booth(const mmrad_minda* psi, int certify, mmrad_radius_result* out,
                                double* r_alpha) {
    return guarded([&] {
        if (!psi || !out) throw mmrad::argument_error("null handle or output pointer");
        if (psi->fn.id() != "booth")
            throw mmrad::argument_error("the combined bounded-domain radius needs the booth id");
        double ra = psi->fn.domain_radius();
        mmrad::RadiusResult rr = mmrad::majorization_radius_starlike(psi->fn);
        fill_radius(out, rr, certify);
        if (rr.root >= ra) {
            out->root = ra;
            out->capped = 1;
        }
        if (r_alpha) *r_alpha = ra;
    });
}

mmrad_status mmrad_janowski_bohr(double D, double E, int certify, mmrad_radius_result* out) {
    return guarded([&] {
        if (!out) throw mmrad::argument_error("null output pointer");
        fill_radius(out, mmrad::janowski_bohr_radius(D, E), certify);
    });
}

mmrad_status mmrad_bohr(const mmrad_minda* psi, int order, int certify, mmrad_bohr_result* out) {
    return guarded([&] {
        if (!psi || !out) throw mmrad::argument_error("null handle or output pointer");
        mmrad::BohrResult br = mmrad::bohr_radius(psi->fn, order);
        out->koebe = br.koebe;
        out->root_r0 = br.root_r0;
        out->bohr_radius = br.bohr_radius;
        out->tolerance = br.tolerance;
        out->cap_active = br.cap_active ? 1 : 0;
        out->certified = -1;
        if (certify && br.residual)
            out->certified = mmrad::certify_least_root(br.residual, br.root_r0) ? 1 : 0;
        copy_text(out->method, MMRAD_METHOD_LEN, br.method);
    });
}

mmrad_status mmrad_distort(const mmrad_minda* psi, double r, int order, mmrad_distortion* out) {
    return guarded([&] {
        if (!psi || !out) throw mmrad::argument_error("null handle or output pointer");
        mmrad::DistortionBounds b = mmrad::distortion_bounds(psi->fn, r, order);
        out->r = b.r;
        out->theta_min = b.theta_min;
        out->theta_max = b.theta_max;
        out->min_psi = b.min_psi;
        out->max_psi = b.max_psi;
        out->lower = b.lower;
        out->upper = b.upper;
        out->closed_min = b.closed_min ? 1 : 0;
        out->closed_max = b.closed_max ? 1 : 0;
    });
}

mmrad_status mmrad_cardioid_table(mmrad_table_row rows[4]) {
    return guarded([&] {
        if (!rows) throw mmrad::argument_error("null output pointer");
        std::vector<mmrad::Table1Row> t = mmrad::cardioid_distortion_table();
        for (size_t i = 0; i < 4 && i < t.size(); ++i) {
            rows[i].r = t[i].r;
            rows[i].theta1 = t[i].theta1;
            rows[i].psi_abs = t[i].psi_abs;
            rows[i].lower = t[i].lower;
        }
    });
}

mmrad_status mmrad_probe_sharpness(const mmrad_minda* psi, double r_psi, double eps,
                                   mmrad_sharpness_report* out) {
    return guarded([&] {
        if (!psi || !out) throw mmrad::argument_error("null handle or output pointer");
        double r = r_psi;
        if (r <= 0.0) r = mmrad::majorization_radius_starlike(psi->fn).root;
        mmrad::SharpnessReport rep = mmrad::sharpness_probe(psi->fn, r, eps);
        out->verdict = static_cast<int>(rep.verdict);
        out->radius = rep.radius;
        out->epsilon = rep.epsilon;
        out->below_excess = rep.below_excess;
        out->above_excess = rep.above_excess;
        out->alpha_star = rep.alpha_star;
        copy_text(out->detail, MMRAD_DETAIL_LEN, rep.detail);
    });
}

mmrad_status mmrad_probe_bohr_coeff(const mmrad_minda* psi, double r, int n_samples,
                                    unsigned int seed, int order, mmrad_bohr_coeff_report* out) {
    return guarded([&] {
        if (!psi || !out) throw mmrad::argument_error("null handle or output pointer");
        mmrad::ExtremalFunction f = mmrad::ExtremalFunction::synthesize(psi->fn, order);
        mmrad::BohrCoefficientReport rep =
            mmrad::bohr_coefficient_probe(f, r, n_samples, seed, order);
        out->verdict = static_cast<int>(rep.verdict);
        out->r = rep.r;
        out->min_slack = rep.min_slack;
        out->n_samples = rep.n_samples;
        out->violations = rep.violations;
        out->seed = rep.seed;
        copy_text(out->detail, MMRAD_DETAIL_LEN, rep.detail);
    });
}

mmrad_status mmrad_probe_subordination(const mmrad_minda* psi, double scale, double shrink,
                                       double r, int grid, int order,
                                       mmrad_subordination_report* out) {
    return guarded([&] {
        if (!psi || !out) throw mmrad::argument_error("null handle or output pointer");
        if (!(shrink >= 1.0)) throw mmrad::argument_error("shrink factor must be >= 1");
        mmrad::ExtremalFunction f = mmrad::ExtremalFunction::synthesize(psi->fn, order);
        auto candidate = [f, scale, shrink](mmrad::cplx z) { return scale * f.eval(z / shrink); };
        auto target = [f](mmrad::cplx z) { return f.eval(z); };
        mmrad::SubordinationReport rep = mmrad::is_subordinate_numeric(
            candidate, target, r, mmrad::kSubordRho, grid > 0 ? grid : mmrad::kSubordGrid);
        out->verdict = static_cast<int>(rep.verdict);
        out->margin = rep.margin;
        out->rho = rep.rho;
        out->samples = rep.samples;
        out->outside = rep.outside;
        copy_text(out->detail, MMRAD_DETAIL_LEN, rep.detail);
    });
}

mmrad_status mmrad_probe_bulboaca(const mmrad_minda* psi, double c, int grid,
                                  mmrad_bulboaca_report* out) {
    return guarded([&] {
        if (!psi || !out) throw mmrad::argument_error("null handle or output pointer");
        mmrad::PowerSeries h(8);
        h[1] = c;
        mmrad::BulboacaReport rep =
            mmrad::bulboaca_condition_check(h, psi->fn, grid > 0 ? grid : mmrad::kSubordGrid);
        out->verdict = static_cast<int>(rep.verdict);
        out->margin = rep.margin;
        out->printed_min = rep.printed_min;
        out->usual_min = rep.usual_min;
        out->printed_hypothesis = rep.printed_hypothesis ? 1 : 0;
        out->usual_hypothesis = rep.usual_hypothesis ? 1 : 0;
        copy_text(out->detail, MMRAD_DETAIL_LEN, rep.detail);
    });
}

}  // extern "C"
