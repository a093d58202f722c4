/* mmrad: radii of majorization, Bohr sums, distortion bounds, and numeric
 * verification probes for generator-parameterized starlike classes.
 *
 * C interface: opaque handles, integer status codes, thread-local error text.
 * Every function returns MMRAD_OK (0) on success; on failure the out
 * parameters are untouched and mmrad_last_error() describes the problem.
 */
#ifndef MMRAD_H
#define MMRAD_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mmrad_status {
    MMRAD_OK = 0,
    MMRAD_ERR_ARGUMENT = 1,    /* invalid parameter or precondition violated */
    MMRAD_ERR_DOMAIN = 2,      /* evaluation outside the admissible domain */
    MMRAD_ERR_SOLVER = 3,      /* root finding / scanning failed */
    MMRAD_ERR_CONVERGENCE = 4, /* series or extrapolation did not settle */
    MMRAD_ERR_INTERNAL = 5
} mmrad_status;

typedef enum mmrad_verdict {
    MMRAD_VERDICT_FALSE = 0,
    MMRAD_VERDICT_TRUE = 1,
    MMRAD_VERDICT_INCONCLUSIVE = 2
} mmrad_verdict;

/* Thread-local message for the most recent failure on this thread. */
const char* mmrad_last_error(void);

/* ---------- generator catalog ---------- */

typedef struct mmrad_minda mmrad_minda;

typedef struct mmrad_catalog_entry {
    const char* id;          /* stable storage, do not free */
    const char* formula;     /* generator formula text */
    const char* tag;         /* distinguishing closed-form tag */
    const char* params;      /* "name=default,..." or "" */
    const char* domain_note; /* admissible |z| description */
    int orientation;         /* sign of psi'(0): +1 or -1 */
    int convex;              /* 1 when the generator maps the disk to a convex region */
} mmrad_catalog_entry;

int mmrad_catalog_count(void);
mmrad_status mmrad_catalog_entry_get(int index, mmrad_catalog_entry* out);

/* Create a generator; params may be NULL when n_params is 0 (defaults). */
mmrad_status mmrad_minda_create(const char* id, const char* const* param_names,
                                const double* param_values, int n_params, mmrad_minda** out);
void mmrad_minda_destroy(mmrad_minda* m);

mmrad_status mmrad_minda_entry(const mmrad_minda* m, mmrad_catalog_entry* out);
mmrad_status mmrad_minda_domain_radius(const mmrad_minda* m, double* out);
mmrad_status mmrad_minda_eval(const mmrad_minda* m, double z_re, double z_im, double* out_re,
                              double* out_im);
/* Maclaurin coefficients 0..order into caller arrays of length order+1. */
mmrad_status mmrad_minda_series(const mmrad_minda* m, int order, double* coeff_re,
                                double* coeff_im);

/* kind: 0 = min |psi|, 1 = max |psi|, 2 = min Re psi, on the circle |z| = r. */
mmrad_status mmrad_minda_circle_extremum(const mmrad_minda* m, int kind, double r, double* theta,
                                         double* value, int* closed_form);

/* ---------- extremal function f0 (z f0'/f0 = psi) ---------- */

typedef struct mmrad_extremal mmrad_extremal;

/* order <= 0 selects the default truncation order (64, escalating to 512). */
mmrad_status mmrad_extremal_create(const mmrad_minda* m, int order, mmrad_extremal** out);
void mmrad_extremal_destroy(mmrad_extremal* f);

mmrad_status mmrad_extremal_eval(const mmrad_extremal* f, double z_re, double z_im,
                                 double* out_re, double* out_im);
/* Majorant sum |t_n| r^n over n >= 1. */
mmrad_status mmrad_extremal_hat(const mmrad_extremal* f, double r, double* out);
/* -f0(-1): the omitted-value distance realized by the extremal. */
mmrad_status mmrad_extremal_koebe(const mmrad_extremal* f, double* out);
mmrad_status mmrad_extremal_has_closed_form(const mmrad_extremal* f, int* out);
mmrad_status mmrad_extremal_series(const mmrad_extremal* f, int order, double* coeff_re,
                                   double* coeff_im);

/* ---------- radius problems ---------- */

#define MMRAD_METHOD_LEN 192

typedef struct mmrad_radius_result {
    double root;
    double bracket_lo, bracket_hi;
    double residual_at_root;
    double residual_scale;
    double tolerance;
    int iterations;
    int capped;    /* 1 when no sign change existed and the admissible bound was reported */
    int certified; /* 1 when the 4096-point pre-root scan found no earlier sign change
                    * (only set when certify was requested, else -1) */
    char method[MMRAD_METHOD_LEN];
} mmrad_radius_result;

mmrad_status mmrad_radius_starlike(const mmrad_minda* psi, int certify, mmrad_radius_result* out);
mmrad_status mmrad_radius_convex(const mmrad_minda* phi, int order, int certify,
                                 mmrad_radius_result* out);
mmrad_status mmrad_radius_hallenbeck(const mmrad_minda* phi, int order, int certify,
                                     mmrad_radius_result* out);
mmrad_status mmrad_radius_sqrt_variant(const mmrad_minda* phi, int order, int certify,
                                       mmrad_radius_result* out);
mmrad_status mmrad_radius_product_mbeta(const mmrad_minda* psi1, const mmrad_minda* psi2,
                                        double beta, int certify, mmrad_radius_result* out);
mmrad_status mmrad_radius_product_order(const mmrad_minda* psi1, const mmrad_minda* psi2,
                                        double gamma, int certify, mmrad_radius_result* out);
/* Combined bounded-domain radius min{r_alpha, r0}; requires the "booth" id. */
mmrad_status mmrad_radius_booth(const mmrad_minda* psi, int certify, mmrad_radius_result* out,
                                double* r_alpha);
/* Sharp Mobius-family Bohr root; validates the sharpness hypotheses. */
mmrad_status mmrad_janowski_bohr(double D, double E, int certify, mmrad_radius_result* out);

typedef struct mmrad_bohr_result {
    double koebe;       /* r* */
    double root_r0;     /* least root of hat f0(r) = r* */
    double bohr_radius; /* min(root_r0, 1/3) */
    double tolerance;
    int cap_active; /* 1 when root_r0 > 1/3 */
    int certified;  /* as in mmrad_radius_result */
    char method[MMRAD_METHOD_LEN];
} mmrad_bohr_result;

mmrad_status mmrad_bohr(const mmrad_minda* psi, int order, int certify, mmrad_bohr_result* out);

/* ---------- distortion ---------- */

typedef struct mmrad_distortion {
    double r;
    double theta_min, theta_max; /* extremizing angles of |psi| on |z| = r */
    double min_psi, max_psi;
    double lower, upper; /* bounds on |f'| over the class at |z| = r */
    int closed_min, closed_max;
} mmrad_distortion;

mmrad_status mmrad_distort(const mmrad_minda* psi, double r, int order, mmrad_distortion* out);

typedef struct mmrad_table_row {
    double r;
    double theta1;  /* minimizing angle */
    double psi_abs; /* |psi(r e^{i theta1})| */
    double lower;   /* lower distortion bound */
} mmrad_table_row;

/* The four pinned rows r = 1, 4/5, 2/3, 1/2 for the cardioid generator. */
mmrad_status mmrad_cardioid_table(mmrad_table_row rows[4]);

/* ---------- verification probes ---------- */

#define MMRAD_DETAIL_LEN 256

typedef struct mmrad_sharpness_report {
    int verdict; /* mmrad_verdict */
    double radius, epsilon;
    double below_excess, above_excess, alpha_star;
    char detail[MMRAD_DETAIL_LEN];
} mmrad_sharpness_report;

/* r_psi <= 0 solves the majorization radius first and probes around it. */
mmrad_status mmrad_probe_sharpness(const mmrad_minda* psi, double r_psi, double eps,
                                   mmrad_sharpness_report* out);

typedef struct mmrad_bohr_coeff_report {
    int verdict;
    double r;
    double min_slack;
    int n_samples, violations;
    unsigned int seed;
    char detail[MMRAD_DETAIL_LEN];
} mmrad_bohr_coeff_report;

mmrad_status mmrad_probe_bohr_coeff(const mmrad_minda* psi, double r, int n_samples,
                                    unsigned int seed, int order, mmrad_bohr_coeff_report* out);

typedef struct mmrad_subordination_report {
    int verdict;
    double margin, rho;
    int samples, outside;
    char detail[MMRAD_DETAIL_LEN];
} mmrad_subordination_report;

/* Candidate scale * f0(z / shrink) against the extremal f0 of psi;
 * shrink >= 1. r is the candidate sample radius; grid <= 0 uses 4096. */
mmrad_status mmrad_probe_subordination(const mmrad_minda* psi, double scale, double shrink,
                                       double r, int grid, int order,
                                       mmrad_subordination_report* out);

typedef struct mmrad_bulboaca_report {
    int verdict;
    double margin;
    double printed_min, usual_min;
    int printed_hypothesis, usual_hypothesis;
    char detail[MMRAD_DETAIL_LEN];
} mmrad_bulboaca_report;

/* h(z) = c z against the generator psi; grid <= 0 uses 4096. */
mmrad_status mmrad_probe_bulboaca(const mmrad_minda* psi, double c, int grid,
                                  mmrad_bulboaca_report* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* MMRAD_H */
