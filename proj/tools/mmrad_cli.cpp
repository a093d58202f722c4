// Command-line surface over the C API: catalog listing, radius solvers,
// distortion tables, Bohr radii, boundary-curve emission, and numerical
// verification probes.  Output is a human table by default or a versioned
// JSON report with --json; curves are written as theta,x,y CSV and an
// optional SVG polyline.
//
// Exit codes: 0 ok (including inconclusive verdicts), 2 usage/domain error,
// 3 solver failure, 4 file I/O failure.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mmrad.h"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitSolver = 3;
constexpr int kExitIo = 4;

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// Round a double through its 12-significant-digit decimal form so that JSON
// serialization is deterministic and carries no excess digits.
nlohmann::json num12(double v) {
    if (!std::isfinite(v)) return nlohmann::json();
    return nlohmann::json(std::stod(fmt12(v)));
}

[[noreturn]] void die(int code, const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    std::exit(code);
}

int status_exit_code(mmrad_status st) {
    switch (st) {
        case MMRAD_OK:
            return 0;
        case MMRAD_ERR_ARGUMENT:
        case MMRAD_ERR_DOMAIN:
            return kExitUsage;
        default:
            return kExitSolver;
    }
}

void check(mmrad_status st) {
    if (st != MMRAD_OK) die(status_exit_code(st), mmrad_last_error());
}

const char* verdict_name(int v) {
    switch (v) {
        case MMRAD_VERDICT_TRUE:
            return "true";
        case MMRAD_VERDICT_FALSE:
            return "false";
        default:
            return "inconclusive";
    }
}

struct MindaHandle {
    mmrad_minda* h = nullptr;
    ~MindaHandle() { mmrad_minda_destroy(h); }
    MindaHandle() = default;
    MindaHandle(const MindaHandle&) = delete;
    MindaHandle& operator=(const MindaHandle&) = delete;
};

struct ExtremalHandle {
    mmrad_extremal* h = nullptr;
    ~ExtremalHandle() { mmrad_extremal_destroy(h); }
    ExtremalHandle() = default;
    ExtremalHandle(const ExtremalHandle&) = delete;
    ExtremalHandle& operator=(const ExtremalHandle&) = delete;
};

std::string normalize_id(std::string id) {
    for (char& c : id) {
        if (c == '-') c = '_';
    }
    return id;
}

std::map<std::string, double> default_params(const std::string& id) {
    if (id == "janowski") return {{"D", 1.0}, {"E", -1.0}};
    if (id == "order_alpha") return {{"alpha", 0.0}};
    if (id == "power_eta") return {{"eta", 1.0}};
    if (id == "ab_power") return {{"a", 2.0}, {"b", 1.0}};
    if (id == "linear") return {{"beta", 1.0}};
    if (id == "booth") return {{"alpha", 0.5}};
    return {};
}

// One --class specification: class name plus the parameter flags that may
// accompany it.  `suffix` distinguishes the second generator of a product.
struct ClassOpts {
    std::string raw_name;
    double D = 0, E = 0, alpha = 0, beta = 0, eta = 0, a = 0, b = 0;
    CLI::Option *oD = nullptr, *oE = nullptr, *oAlpha = nullptr, *oBeta = nullptr, *oEta = nullptr,
                *oA = nullptr, *oB = nullptr;

    void attach(CLI::App* cmd, const std::string& suffix, bool required) {
        auto* oc = cmd->add_option("--class" + suffix, raw_name,
                                   "catalog class id (hyphens and underscores both accepted)");
        if (required) oc->required();
        oD = cmd->add_option("--D" + suffix, D, "janowski parameter D");
        oE = cmd->add_option("--E" + suffix, E, "janowski parameter E");
        oAlpha = cmd->add_option("--alpha" + suffix, alpha, "order_alpha / booth parameter");
        oBeta = cmd->add_option("--beta" + suffix, beta, "linear parameter");
        oEta = cmd->add_option("--eta" + suffix, eta, "power_eta parameter");
        oA = cmd->add_option("--a" + suffix, a, "ab_power parameter a");
        oB = cmd->add_option("--b" + suffix, b, "ab_power parameter b");
    }

    std::string id() const { return normalize_id(raw_name); }

    std::map<std::string, double> resolved() const {
        std::map<std::string, double> p = default_params(id());
        if (oD->count()) p["D"] = D;
        if (oE->count()) p["E"] = E;
        if (oAlpha->count()) p["alpha"] = alpha;
        if (oBeta->count()) p["beta"] = beta;
        if (oEta->count()) p["eta"] = eta;
        if (oA->count()) p["a"] = a;
        if (oB->count()) p["b"] = b;
        return p;
    }

    void create(MindaHandle* out) const {
        std::map<std::string, double> p = resolved();
        std::vector<const char*> names;
        std::vector<double> values;
        for (const auto& [k, v] : p) {
            names.push_back(k.c_str());
            values.push_back(v);
        }
        check(mmrad_minda_create(id().c_str(), names.empty() ? nullptr : names.data(),
                                 values.empty() ? nullptr : values.data(),
                                 static_cast<int>(names.size()), &out->h));
    }

    nlohmann::json echo() const {
        nlohmann::json j;
        j["class"] = id();
        nlohmann::json p = nlohmann::json::object();
        for (const auto& [k, v] : resolved()) p[k] = num12(v);
        j["params"] = p;
        return j;
    }
};

nlohmann::json radius_json(const mmrad_radius_result& r) {
    nlohmann::json j;
    j["root"] = num12(r.root);
    j["bracket_lo"] = num12(r.bracket_lo);
    j["bracket_hi"] = num12(r.bracket_hi);
    j["residual_at_root"] = num12(r.residual_at_root);
    j["residual_scale"] = num12(r.residual_scale);
    j["tolerance"] = num12(r.tolerance);
    j["iterations"] = r.iterations;
    j["capped"] = r.capped != 0;
    j["certified"] = r.certified;
    j["method"] = r.method;
    return j;
}

void print_radius_human(const mmrad_radius_result& r) {
    std::printf("%-18s %s\n", "root", fmt12(r.root).c_str());
    std::printf("%-18s [%s, %s]\n", "bracket", fmt12(r.bracket_lo).c_str(),
                fmt12(r.bracket_hi).c_str());
    std::printf("%-18s %s (scale %s)\n", "residual at root", fmt12(r.residual_at_root).c_str(),
                fmt12(r.residual_scale).c_str());
    std::printf("%-18s %s\n", "tolerance", fmt12(r.tolerance).c_str());
    std::printf("%-18s %d\n", "iterations", r.iterations);
    std::printf("%-18s %s\n", "capped", r.capped ? "yes" : "no");
    if (r.certified >= 0)
        std::printf("%-18s %s\n", "certified", r.certified ? "yes" : "NO (earlier sign change)");
    std::printf("%-18s %s\n", "method", r.method);
}

// Parse the candidate grammar "[scale*]f0(z[/k])" used by the subordination
// probe, e.g. "f0(z/2)" or "1.01*f0(z)".
bool parse_candidate(const std::string& spec, double* scale, double* shrink) {
    std::string t;
    for (char c : spec) {
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    }
    *scale = 1.0;
    *shrink = 1.0;
    std::string rest = t;
    auto star = t.find('*');
    if (star != std::string::npos) {
        try {
            size_t pos = 0;
            *scale = std::stod(t.substr(0, star), &pos);
            if (pos != star) return false;
        } catch (...) {
            return false;
        }
        rest = t.substr(star + 1);
    }
    if (rest.rfind("f0(z", 0) != 0) return false;
    std::string inner = rest.substr(4);
    if (inner == ")") return true;
    if (inner.size() < 3 || inner.front() != '/' || inner.back() != ')') return false;
    std::string k = inner.substr(1, inner.size() - 2);
    try {
        size_t pos = 0;
        *shrink = std::stod(k, &pos);
        return pos == k.size();
    } catch (...) {
        return false;
    }
}

void emit_report(const std::string& command, const std::string& status,
                 const nlohmann::json& inputs, const nlohmann::json& results, bool timing,
                 double ms) {
    nlohmann::json report;
    report["schema_version"] = "1.0.0";
    report["command"] = command;
    report["status"] = status;
    report["inputs"] = inputs;
    report["results"] = results;
    if (timing) report["timing_ms"] = num12(ms);
    std::cout << report.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"radius constants, distortion bounds, Bohr radii, and verification probes "
                 "for a catalog of starlike/convex generator functions"};
    app.require_subcommand(1);
    app.fallthrough();

    bool json_out = false;
    bool timing = false;
    int order = 64;
    unsigned int seed = 12345;
    app.add_flag("--json", json_out, "emit a JSON report instead of the human table");
    app.add_flag("--timing", timing, "include wall-clock milliseconds in the JSON report");
    app.add_option("--order", order, "series truncation order")
        ->envname("MMRAD_SERIES_ORDER")
        ->check(CLI::Range(8, 4096));
    app.add_option("--seed", seed, "seed for randomized probes");

    // radius ----------------------------------------------------------------
    auto* cmd_radius = app.add_subcommand("radius", "solve a least-root radius problem");
    ClassOpts rad_cls, rad_cls2;
    rad_cls.attach(cmd_radius, "", true);
    rad_cls2.attach(cmd_radius, "2", false);
    std::string kind;
    cmd_radius->add_option("--kind", kind, "problem kind")
        ->required()
        ->check(CLI::IsMember({"majorize-starlike", "majorize-convex", "hallenbeck",
                               "sqrt-variant", "product-mbeta", "product-order", "booth"}));
    double mbeta = 0.0, gamma0 = 0.0;
    auto* o_mbeta = cmd_radius->add_option("--mbeta", mbeta, "product level beta (> 1)");
    cmd_radius->add_option("--gamma0", gamma0, "product target order gamma0 in [0,1)");
    bool certify = false;
    cmd_radius->add_flag("--certify", certify, "run the 4096-point pre-root sign scan");

    // bohr ------------------------------------------------------------------
    auto* cmd_bohr = app.add_subcommand("bohr", "Koebe radius and Bohr radius");
    ClassOpts bohr_cls;
    bohr_cls.attach(cmd_bohr, "", true);
    bool bohr_certify = false;
    cmd_bohr->add_flag("--certify", bohr_certify, "run the 4096-point pre-root sign scan");

    // distort ---------------------------------------------------------------
    auto* cmd_distort = app.add_subcommand("distort", "two-sided distortion bounds on |z| = r");
    ClassOpts dist_cls;
    dist_cls.attach(cmd_distort, "", true);
    std::vector<double> r_list;
    cmd_distort->add_option("--r", r_list, "radius (repeatable), each in (0,1)");
    bool table1 = false;
    cmd_distort->add_flag("--table1", table1,
                          "print the four-row cardioid lower-bound reference table");

    // curve -----------------------------------------------------------------
    auto* cmd_curve = app.add_subcommand("curve", "emit a boundary curve as theta,x,y CSV");
    ClassOpts curve_cls;
    curve_cls.attach(cmd_curve, "", true);
    std::string object = "psi-boundary";
    cmd_curve->add_option("--object", object, "curve to trace")
        ->check(CLI::IsMember({"psi-boundary", "f0-image"}));
    double curve_r = 1.0;
    cmd_curve->add_option("--r", curve_r, "circle radius");
    int n_points = 512;
    cmd_curve->add_option("--n", n_points, "number of samples (>= 64)");
    std::string out_path, svg_path;
    cmd_curve->add_option("--out", out_path, "CSV output path (default: stdout)");
    cmd_curve->add_option("--svg", svg_path, "also write a minimal SVG polyline");

    // verify ----------------------------------------------------------------
    auto* cmd_verify = app.add_subcommand("verify", "numerical verification probes");
    ClassOpts ver_cls;
    ver_cls.attach(cmd_verify, "", true);
    std::string probe;
    cmd_verify->add_option("--probe", probe, "probe kind")
        ->required()
        ->check(CLI::IsMember({"sharpness", "bohr-coeff", "bulboaca", "subordination"}));
    double eps = 0.01, ver_r = 0.0, rpsi = 0.0, bulboaca_c = 0.1;
    int samples = 100, grid = 0;
    std::string g_spec = "f0(z)";
    cmd_verify->add_option("--eps", eps, "sharpness offset epsilon (0 = inner check only)");
    auto* o_ver_r = cmd_verify->add_option("--r", ver_r, "probe radius");
    cmd_verify->add_option("--rpsi", rpsi, "radius to probe for sharpness (0 = solve first)");
    cmd_verify->add_option("--c", bulboaca_c, "slope for the linear test function h(z) = c z");
    cmd_verify->add_option("--samples", samples, "number of seeded Schwarz samples");
    cmd_verify->add_option("--grid", grid, "boundary polygon size (0 = default 4096)");
    cmd_verify->add_option("--g", g_spec, "candidate, grammar \"[scale*]f0(z[/k])\"");

    // catalog ---------------------------------------------------------------
    auto* cmd_catalog = app.add_subcommand("catalog", "list the generator catalog");
    std::string catalog_id;
    cmd_catalog->add_option("--id", catalog_id, "show a single entry");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    auto t0 = std::chrono::steady_clock::now();
    auto elapsed_ms = [&t0] {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    };

    if (cmd_radius->parsed()) {
        MindaHandle m;
        rad_cls.create(&m);
        nlohmann::json inputs = rad_cls.echo();
        inputs["kind"] = kind;
        inputs["order"] = order;
        mmrad_radius_result rr;
        std::memset(&rr, 0, sizeof rr);
        double r_alpha = 0.0;
        bool is_booth = kind == "booth";
        bool is_product = kind == "product-mbeta" || kind == "product-order";
        if (is_product) {
            if (rad_cls2.raw_name.empty())
                die(kExitUsage, "product kinds need a second generator via --class2");
            MindaHandle m2;
            rad_cls2.create(&m2);
            nlohmann::json echo2 = rad_cls2.echo();
            inputs["class2"] = echo2["class"];
            inputs["params2"] = echo2["params"];
            if (kind == "product-mbeta") {
                if (!o_mbeta->count()) die(kExitUsage, "product-mbeta needs --mbeta > 1");
                inputs["mbeta"] = num12(mbeta);
                check(mmrad_radius_product_mbeta(m.h, m2.h, mbeta, certify, &rr));
            } else {
                inputs["gamma0"] = num12(gamma0);
                check(mmrad_radius_product_order(m.h, m2.h, gamma0, certify, &rr));
            }
        } else if (kind == "majorize-starlike") {
            check(mmrad_radius_starlike(m.h, certify, &rr));
        } else if (kind == "majorize-convex") {
            check(mmrad_radius_convex(m.h, order, certify, &rr));
        } else if (kind == "hallenbeck") {
            check(mmrad_radius_hallenbeck(m.h, order, certify, &rr));
        } else if (kind == "sqrt-variant") {
            check(mmrad_radius_sqrt_variant(m.h, order, certify, &rr));
        } else {
            check(mmrad_radius_booth(m.h, certify, &rr, &r_alpha));
        }
        nlohmann::json results = radius_json(rr);
        if (is_booth) results["r_alpha"] = num12(r_alpha);
        if (json_out) {
            emit_report("radius", "ok", inputs, results, timing, elapsed_ms());
        } else {
            std::printf("%-18s %s\n", "class", rad_cls.id().c_str());
            std::printf("%-18s %s\n", "kind", kind.c_str());
            if (is_booth) std::printf("%-18s %s\n", "r_alpha", fmt12(r_alpha).c_str());
            print_radius_human(rr);
        }
        return 0;
    }

    if (cmd_bohr->parsed()) {
        MindaHandle m;
        bohr_cls.create(&m);
        nlohmann::json inputs = bohr_cls.echo();
        inputs["order"] = order;
        mmrad_bohr_result br;
        std::memset(&br, 0, sizeof br);
        if (bohr_cls.id() == "janowski") {
            // Closed-form residual specific to this family; same report shape.
            std::map<std::string, double> p = bohr_cls.resolved();
            mmrad_radius_result rr;
            std::memset(&rr, 0, sizeof rr);
            check(mmrad_janowski_bohr(p.at("D"), p.at("E"), bohr_certify, &rr));
            ExtremalHandle f;
            check(mmrad_extremal_create(m.h, order, &f.h));
            check(mmrad_extremal_koebe(f.h, &br.koebe));
            br.root_r0 = rr.root;
            br.bohr_radius = rr.root < 1.0 / 3.0 ? rr.root : 1.0 / 3.0;
            br.cap_active = rr.root > 1.0 / 3.0;
            br.tolerance = rr.tolerance;
            br.certified = rr.certified;
            std::string method = std::string(rr.method) + "; Bohr radius min(r0, 1/3)";
            std::snprintf(br.method, MMRAD_METHOD_LEN, "%s", method.c_str());
        } else {
            check(mmrad_bohr(m.h, order, bohr_certify, &br));
        }
        nlohmann::json results;
        results["koebe"] = num12(br.koebe);
        results["root_r0"] = num12(br.root_r0);
        results["bohr_radius"] = num12(br.bohr_radius);
        results["tolerance"] = num12(br.tolerance);
        results["cap_active"] = br.cap_active != 0;
        results["certified"] = br.certified;
        results["method"] = br.method;
        if (json_out) {
            emit_report("bohr", "ok", inputs, results, timing, elapsed_ms());
        } else {
            std::printf("%-18s %s\n", "class", bohr_cls.id().c_str());
            std::printf("%-18s %s\n", "koebe r*", fmt12(br.koebe).c_str());
            std::printf("%-18s %s\n", "root r0", fmt12(br.root_r0).c_str());
            std::printf("%-18s %s\n", "bohr radius", fmt12(br.bohr_radius).c_str());
            std::printf("%-18s %s\n", "cap at 1/3", br.cap_active ? "yes" : "no");
            if (br.certified >= 0)
                std::printf("%-18s %s\n", "certified", br.certified ? "yes" : "NO");
            std::printf("%-18s %s\n", "method", br.method);
        }
        return 0;
    }

    if (cmd_distort->parsed()) {
        MindaHandle m;
        dist_cls.create(&m);
        nlohmann::json inputs = dist_cls.echo();
        inputs["order"] = order;
        if (table1) {
            if (dist_cls.id() != "cardioid")
                die(kExitUsage, "--table1 is defined for --class cardioid only");
            inputs["table1"] = true;
            mmrad_table_row rows[4];
            check(mmrad_cardioid_table(rows));
            nlohmann::json jrows = nlohmann::json::array();
            for (const auto& row : rows) {
                nlohmann::json j;
                j["r"] = num12(row.r);
                j["theta1"] = num12(row.theta1);
                j["psi_abs"] = num12(row.psi_abs);
                j["lower"] = num12(row.lower);
                jrows.push_back(j);
            }
            nlohmann::json results;
            results["table"] = jrows;
            results["tolerance"] = num12(1e-12);
            if (json_out) {
                emit_report("distort", "ok", inputs, results, timing, elapsed_ms());
            } else {
                std::printf("%-8s %-16s %-16s %-16s\n", "r", "theta1", "|psi(r e^{i t1})|",
                            "lower");
                for (const auto& row : rows)
                    std::printf("%-8s %-16s %-16s %-16s\n", fmt12(row.r).c_str(),
                                fmt12(row.theta1).c_str(), fmt12(row.psi_abs).c_str(),
                                fmt12(row.lower).c_str());
            }
            return 0;
        }
        if (r_list.empty()) die(kExitUsage, "distort needs --r (repeatable) or --table1");
        nlohmann::json jr = nlohmann::json::array();
        for (double rv : r_list) jr.push_back(num12(rv));
        inputs["r"] = jr;
        nlohmann::json jrows = nlohmann::json::array();
        std::vector<mmrad_distortion> rows;
        for (double rv : r_list) {
            mmrad_distortion d;
            std::memset(&d, 0, sizeof d);
            check(mmrad_distort(m.h, rv, order, &d));
            rows.push_back(d);
            nlohmann::json j;
            j["r"] = num12(d.r);
            j["theta1"] = num12(d.theta_min);
            j["theta2"] = num12(d.theta_max);
            j["min_psi"] = num12(d.min_psi);
            j["max_psi"] = num12(d.max_psi);
            j["lower"] = num12(d.lower);
            j["upper"] = num12(d.upper);
            j["closed_min"] = d.closed_min != 0;
            j["closed_max"] = d.closed_max != 0;
            jrows.push_back(j);
        }
        nlohmann::json results;
        results["rows"] = jrows;
        results["tolerance"] = num12(1e-12);
        if (json_out) {
            emit_report("distort", "ok", inputs, results, timing, elapsed_ms());
        } else {
            std::printf("%-8s %-16s %-16s %-16s %-16s\n", "r", "theta1", "theta2", "lower",
                        "upper");
            for (const auto& d : rows)
                std::printf("%-8s %-16s %-16s %-16s %-16s\n", fmt12(d.r).c_str(),
                            fmt12(d.theta_min).c_str(), fmt12(d.theta_max).c_str(),
                            fmt12(d.lower).c_str(), fmt12(d.upper).c_str());
        }
        return 0;
    }

    if (cmd_curve->parsed()) {
        if (n_points < 64) die(kExitUsage, "curve needs --n >= 64");
        if (!(curve_r > 0.0)) die(kExitUsage, "curve needs --r > 0 (r = 0 is a degenerate circle)");
        MindaHandle m;
        curve_cls.create(&m);
        ExtremalHandle f;
        if (object == "f0-image") check(mmrad_extremal_create(m.h, order, &f.h));
        std::vector<double> xs(n_points), ys(n_points), thetas(n_points);
        double min_abs = 0.0, min_abs_theta = 0.0;
        for (int k = 0; k < n_points; ++k) {
            double theta = 2.0 * M_PI * k / n_points;
            double zr = curve_r * std::cos(theta), zi = curve_r * std::sin(theta);
            double wr = 0.0, wi = 0.0;
            if (object == "f0-image") {
                check(mmrad_extremal_eval(f.h, zr, zi, &wr, &wi));
            } else {
                check(mmrad_minda_eval(m.h, zr, zi, &wr, &wi));
            }
            if (!std::isfinite(wr) || !std::isfinite(wi))
                die(kExitSolver, "curve value is not finite at theta = " + fmt12(theta));
            thetas[k] = theta;
            xs[k] = wr;
            ys[k] = wi;
            double ab = std::hypot(wr, wi);
            if (k == 0 || ab < min_abs) {
                min_abs = ab;
                min_abs_theta = theta;
            }
        }
        auto write_csv = [&](std::ostream& os) {
            os << "theta,x,y\n";
            for (int k = 0; k < n_points; ++k)
                os << fmt12(thetas[k]) << ',' << fmt12(xs[k]) << ',' << fmt12(ys[k]) << '\n';
        };
        if (!out_path.empty()) {
            std::ofstream os(out_path);
            if (!os) die(kExitIo, "cannot open CSV output file: " + out_path);
            write_csv(os);
            if (!os.good()) die(kExitIo, "write failure on: " + out_path);
        }
        if (!svg_path.empty()) {
            double lo_x = xs[0], hi_x = xs[0], lo_y = -ys[0], hi_y = -ys[0];
            for (int k = 0; k < n_points; ++k) {
                lo_x = std::min(lo_x, xs[k]);
                hi_x = std::max(hi_x, xs[k]);
                lo_y = std::min(lo_y, -ys[k]);
                hi_y = std::max(hi_y, -ys[k]);
            }
            double pad = 0.05 * std::max(hi_x - lo_x, hi_y - lo_y) + 1e-9;
            std::ofstream os(svg_path);
            if (!os) die(kExitIo, "cannot open SVG output file: " + svg_path);
            os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt12(lo_x - pad)
               << ' ' << fmt12(lo_y - pad) << ' ' << fmt12(hi_x - lo_x + 2 * pad) << ' '
               << fmt12(hi_y - lo_y + 2 * pad) << "\">\n<polyline fill=\"none\" stroke=\"black\""
               << " stroke-width=\"" << fmt12(0.004 * (hi_x - lo_x + 2 * pad))
               << "\" points=\"";
            for (int k = 0; k <= n_points; ++k) {
                int i = k % n_points;
                os << fmt12(xs[i]) << ',' << fmt12(-ys[i]) << (k < n_points ? " " : "");
            }
            os << "\"/>\n</svg>\n";
            if (!os.good()) die(kExitIo, "write failure on: " + svg_path);
        }
        nlohmann::json inputs = curve_cls.echo();
        inputs["object"] = object;
        inputs["r"] = num12(curve_r);
        inputs["n"] = n_points;
        inputs["order"] = order;
        if (json_out) {
            nlohmann::json results;
            results["n_points"] = n_points;
            results["min_abs"] = num12(min_abs);
            results["min_abs_theta"] = num12(min_abs_theta);
            results["csv"] = out_path.empty() ? nlohmann::json() : nlohmann::json(out_path);
            results["svg"] = svg_path.empty() ? nlohmann::json() : nlohmann::json(svg_path);
            emit_report("curve", "ok", inputs, results, timing, elapsed_ms());
        } else if (out_path.empty()) {
            write_csv(std::cout);
        } else {
            std::printf("%-18s %s\n", "points", fmt12(n_points).c_str());
            std::printf("%-18s %s\n", "csv", out_path.c_str());
            if (!svg_path.empty()) std::printf("%-18s %s\n", "svg", svg_path.c_str());
            std::printf("%-18s %s at theta = %s\n", "min |value|", fmt12(min_abs).c_str(),
                        fmt12(min_abs_theta).c_str());
        }
        return 0;
    }

    if (cmd_verify->parsed()) {
        MindaHandle m;
        ver_cls.create(&m);
        nlohmann::json inputs = ver_cls.echo();
        inputs["probe"] = probe;
        inputs["order"] = order;
        nlohmann::json results;
        int verdict = MMRAD_VERDICT_INCONCLUSIVE;
        if (probe == "sharpness") {
            inputs["eps"] = num12(eps);
            inputs["rpsi"] = num12(rpsi);
            mmrad_sharpness_report rep;
            std::memset(&rep, 0, sizeof rep);
            check(mmrad_probe_sharpness(m.h, rpsi, eps, &rep));
            verdict = rep.verdict;
            results["probe"] = "sharpness";
            results["verdict"] = verdict_name(rep.verdict);
            results["radius"] = num12(rep.radius);
            results["epsilon"] = num12(rep.epsilon);
            results["below_excess"] = num12(rep.below_excess);
            results["above_excess"] = num12(rep.above_excess);
            results["alpha_star"] = num12(rep.alpha_star);
            results["detail"] = rep.detail;
        } else if (probe == "bohr-coeff") {
            double r = o_ver_r->count() ? ver_r : 1.0 / 3.0;
            inputs["r"] = num12(r);
            inputs["samples"] = samples;
            inputs["seed"] = seed;
            mmrad_bohr_coeff_report rep;
            std::memset(&rep, 0, sizeof rep);
            check(mmrad_probe_bohr_coeff(m.h, r, samples, seed, order, &rep));
            verdict = rep.verdict;
            results["probe"] = "bohr-coeff";
            results["verdict"] = verdict_name(rep.verdict);
            results["r"] = num12(rep.r);
            results["n_samples"] = rep.n_samples;
            results["violations"] = rep.violations;
            results["min_slack"] = num12(rep.min_slack);
            results["seed"] = rep.seed;
            results["detail"] = rep.detail;
        } else if (probe == "subordination") {
            double scale = 1.0, shrink = 1.0;
            if (!parse_candidate(g_spec, &scale, &shrink))
                die(kExitUsage, "cannot parse --g, expected \"[scale*]f0(z[/k])\": " + g_spec);
            double r = o_ver_r->count() ? ver_r : 0.999;
            inputs["g"] = g_spec;
            inputs["r"] = num12(r);
            inputs["grid"] = grid;
            mmrad_subordination_report rep;
            std::memset(&rep, 0, sizeof rep);
            check(mmrad_probe_subordination(m.h, scale, shrink, r, grid, order, &rep));
            verdict = rep.verdict;
            results["probe"] = "subordination";
            results["verdict"] = verdict_name(rep.verdict);
            results["margin"] = num12(rep.margin);
            results["rho"] = num12(rep.rho);
            results["samples"] = rep.samples;
            results["outside"] = rep.outside;
            results["detail"] = rep.detail;
        } else {
            inputs["c"] = num12(bulboaca_c);
            inputs["grid"] = grid;
            mmrad_bulboaca_report rep;
            std::memset(&rep, 0, sizeof rep);
            check(mmrad_probe_bulboaca(m.h, bulboaca_c, grid, &rep));
            verdict = rep.verdict;
            results["probe"] = "bulboaca";
            results["verdict"] = verdict_name(rep.verdict);
            results["margin"] = num12(rep.margin);
            results["printed_min"] = num12(rep.printed_min);
            results["usual_min"] = num12(rep.usual_min);
            results["printed_hypothesis"] = rep.printed_hypothesis != 0;
            results["usual_hypothesis"] = rep.usual_hypothesis != 0;
            results["detail"] = rep.detail;
        }
        std::string status =
            verdict == MMRAD_VERDICT_INCONCLUSIVE ? "inconclusive" : "ok";
        if (json_out) {
            emit_report("verify", status, inputs, results, timing, elapsed_ms());
        } else {
            std::printf("%-18s %s\n", "class", ver_cls.id().c_str());
            std::printf("%-18s %s\n", "probe", probe.c_str());
            std::printf("%-18s %s\n", "verdict", verdict_name(verdict));
            for (const auto& [k, v] : results.items()) {
                if (k == "probe" || k == "verdict") continue;
                if (v.is_string())
                    std::printf("%-18s %s\n", k.c_str(), v.get<std::string>().c_str());
                else
                    std::printf("%-18s %s\n", k.c_str(), v.dump().c_str());
            }
        }
        return 0;
    }

    // catalog
    int count = mmrad_catalog_count();
    nlohmann::json entries = nlohmann::json::array();
    bool found = catalog_id.empty();
    std::string want = normalize_id(catalog_id);
    for (int i = 0; i < count; ++i) {
        mmrad_catalog_entry e;
        check(mmrad_catalog_entry_get(i, &e));
        if (!want.empty() && want != e.id) continue;
        found = true;
        nlohmann::json j;
        j["id"] = e.id;
        j["params"] = e.params;
        j["formula"] = e.formula;
        j["min_modulus"] = e.tag;
        j["domain_note"] = e.domain_note;
        j["orientation"] = e.orientation > 0 ? "+" : "-";
        j["convex"] = e.convex != 0;
        entries.push_back(j);
    }
    if (!found) die(kExitUsage, "unknown catalog id: " + catalog_id);
    nlohmann::json inputs = nlohmann::json::object();
    if (!want.empty()) inputs["id"] = want;
    nlohmann::json results;
    results["count"] = static_cast<int>(entries.size());
    results["entries"] = entries;
    if (json_out) {
        emit_report("catalog", "ok", inputs, results, timing, elapsed_ms());
    } else {
        for (const auto& j : entries) {
            std::printf("%-12s orientation %s  convex %-3s  %s\n",
                        j["id"].get<std::string>().c_str(),
                        j["orientation"].get<std::string>().c_str(),
                        j["convex"].get<bool>() ? "yes" : "no",
                        j["formula"].get<std::string>().c_str());
            std::printf("  %-10s %s\n", "min", j["min_modulus"].get<std::string>().c_str());
            if (!j["params"].get<std::string>().empty())
                std::printf("  %-10s %s\n", "params", j["params"].get<std::string>().c_str());
            if (!j["domain_note"].get<std::string>().empty())
                std::printf("  %-10s %s\n", "domain", j["domain_note"].get<std::string>().c_str());
        }
    }
    return 0;
}
