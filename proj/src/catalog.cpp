#include "mmrad/catalog.hpp"

#include <cmath>
#include <sstream>

#include "mmrad/errors.hpp"

namespace mmrad {

namespace {

constexpr double kSqrt2 = 1.41421356237309504880;

double binom_real(double x, int k) {
    double b = 1.0;
    for (int j = 1; j <= k; ++j) b *= (x - static_cast<double>(j) + 1.0) / static_cast<double>(j);
    return b;
}

double factorial(int n) {
    double f = 1.0;
    for (int j = 2; j <= n; ++j) f *= static_cast<double>(j);
    return f;
}

}  // namespace

double cardioid_min_transition() { return (3.0 - std::sqrt(5.0)) / 2.0; }

struct MindaFunction::Impl {
    std::string id;
    std::map<std::string, double> params;
    std::string formula;
    std::string tag;
    std::string domain_note;
    int orientation = 1;
    bool convex = false;
    double domain_radius = 1.0;
    std::function<cplx(cplx)> eval;
    std::function<PowerSeries(int)> series;
    std::function<double(double)> min_closed;
    std::function<ExtremumForm(double)> min_form;  // null means AtMinusR everywhere
    ExtremumForm max_form = ExtremumForm::AtPlusR;
    std::function<double(double)> max_closed;
};

MindaFunction::MindaFunction(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

const std::string& MindaFunction::id() const { return impl_->id; }
const std::map<std::string, double>& MindaFunction::params() const { return impl_->params; }
int MindaFunction::orientation() const { return impl_->orientation; }
bool MindaFunction::convex() const { return impl_->convex; }
double MindaFunction::domain_radius() const { return impl_->domain_radius; }
std::string MindaFunction::formula() const { return impl_->formula; }
std::string MindaFunction::tag() const { return impl_->tag; }

std::string MindaFunction::display_name() const {
    if (impl_->params.empty()) return impl_->id;
    std::ostringstream os;
    os << impl_->id << '(';
    bool first = true;
    for (const auto& [k, v] : impl_->params) {
        if (!first) os << ',';
        os << k << '=' << v;
        first = false;
    }
    os << ')';
    return os.str();
}

cplx MindaFunction::eval(cplx z) const {
    if (std::abs(z) > impl_->domain_radius + 1e-12)
        throw domain_error(impl_->id + ": |z| exceeds the admissible radius " + std::to_string(impl_->domain_radius));
    return impl_->eval(z);
}

PowerSeries MindaFunction::series(int order) const {
    if (order <= 0) order = kDefaultOrder;
    return impl_->series(order);
}

ExtremumForm MindaFunction::min_form(double r) const {
    if (impl_->min_form) return impl_->min_form(r);
    return ExtremumForm::AtMinusR;
}

ExtremumForm MindaFunction::max_form() const { return impl_->max_form; }

double MindaFunction::min_modulus(double r) const {
    if (r <= 0.0 || r > impl_->domain_radius + 1e-12)
        throw domain_error(impl_->id + ": radius outside (0, " + std::to_string(impl_->domain_radius) + "]");
    if (min_form(r) == ExtremumForm::Numeric)
        throw argument_error(impl_->id + ": no closed-form circle minimum at r = " + std::to_string(r));
    return impl_->min_closed(r);
}

double MindaFunction::max_modulus(double r) const {
    if (r <= 0.0 || r > impl_->domain_radius + 1e-12)
        throw domain_error(impl_->id + ": radius outside (0, " + std::to_string(impl_->domain_radius) + "]");
    if (impl_->max_form == ExtremumForm::Numeric || !impl_->max_closed)
        throw argument_error(impl_->id + ": no closed-form circle maximum");
    return impl_->max_closed(r);
}

namespace {

using Impl = MindaFunction::Impl;

struct ParamRule {
    const char* name;
    double lo, hi;
    bool lo_open, hi_open;
};

void validate_params(const std::string& id, const std::map<std::string, double>& given,
                     const std::vector<ParamRule>& rules) {
    for (const auto& [k, v] : given) {
        bool known = false;
        for (const auto& r : rules) known = known || (k == r.name);
        if (!known) throw argument_error(id + ": unknown parameter '" + k + "'");
    }
    for (const auto& r : rules) {
        auto it = given.find(r.name);
        if (it == given.end()) throw argument_error(id + ": missing parameter '" + std::string(r.name) + "'");
        double v = it->second;
        if (!std::isfinite(v) || v < r.lo || v > r.hi || (r.lo_open && v == r.lo) || (r.hi_open && v == r.hi))
            throw argument_error(id + ": parameter '" + std::string(r.name) + "' out of range");
    }
}

PowerSeries exp_neg_z_plus_one(int n) {
    // 1 + exp(-z)
    PowerSeries d(n);
    double f = 1.0;
    for (int k = 0; k <= n; ++k) {
        if (k > 0) f *= -1.0 / static_cast<double>(k);
        d[k] = f;
    }
    d[0] += 1.0;
    return d;
}

std::shared_ptr<Impl> make_janowski_like(const std::string& id, double D, double E,
                                         std::map<std::string, double> params, std::string formula,
                                         std::string tag) {
    auto im = std::make_shared<Impl>();
    im->id = id;
    im->params = std::move(params);
    im->formula = std::move(formula);
    im->tag = std::move(tag);
    im->orientation = 1;
    im->convex = true;
    im->eval = [D, E](cplx z) -> cplx {
        cplx den = 1.0 + E * z;
        if (std::abs(den) < 1e-14) throw domain_error("pole of the Mobius generator on the circle");
        return (1.0 + D * z) / den;
    };
    im->series = [D, E](int n) {
        PowerSeries s(n);
        s[0] = 1.0;
        double p = 1.0;
        for (int k = 1; k <= n; ++k) {
            s[k] = (D - E) * p;
            p *= -E;
        }
        return s;
    };
    im->min_closed = [D, E](double r) { return (1.0 - D * r) / (1.0 - E * r); };
    im->max_closed = [D, E](double r) {
        double den = 1.0 + E * r;
        if (std::abs(den) < 1e-14) throw domain_error("pole of the Mobius generator at -r");
        return (1.0 + D * r) / den;
    };
    return im;
}

std::shared_ptr<Impl> make_sqrt_entry(const std::string& id, int sign) {
    // psi(z) = sqrt(1 + sign z)
    auto im = std::make_shared<Impl>();
    im->id = id;
    im->formula = sign > 0 ? "psi(z) = sqrt(1+z)" : "psi(z) = sqrt(1-z)";
    im->tag = sign > 0 ? "m(r) = sqrt(1-r)" : "m(r) = sqrt(1-r), attained at +r";
    im->orientation = sign;
    im->convex = sign > 0;
    im->eval = [sign](cplx z) -> cplx {
        cplx w = 1.0 + static_cast<double>(sign) * z;
        return std::sqrt(w);
    };
    im->series = [sign](int n) {
        PowerSeries s(n);
        for (int k = 0; k <= n; ++k) s[k] = binom_real(0.5, k) * (sign > 0 ? 1.0 : (k % 2 ? -1.0 : 1.0));
        return s;
    };
    im->min_closed = [](double r) { return std::sqrt(1.0 - r); };
    im->max_closed = [](double r) { return std::sqrt(1.0 + r); };
    if (sign < 0) {
        im->min_form = [](double) { return ExtremumForm::AtPlusR; };
        im->max_form = ExtremumForm::AtMinusR;
    }
    return im;
}

std::shared_ptr<Impl> build_entry(const std::string& id, const std::map<std::string, double>& params) {
    if (id == "janowski") {
        validate_params(id, params, {{"D", -1.0, 1.0, false, false}, {"E", -1.0, 1.0, false, false}});
        double D = params.at("D"), E = params.at("E");
        if (!(E < D)) throw argument_error("janowski: requires E < D");
        return make_janowski_like("janowski", D, E, params, "psi(z) = (1+D z)/(1+E z)",
                                  "m(r) = (1-D r)/(1-E r)");
    }
    if (id == "order_alpha") {
        validate_params(id, params, {{"alpha", 0.0, 1.0, false, true}});
        double a = params.at("alpha");
        return make_janowski_like("order_alpha", 1.0 - 2.0 * a, -1.0, params,
                                  "psi(z) = (1+(1-2 alpha) z)/(1-z)",
                                  "m(r) = (1-(1-2 alpha) r)/(1+r)");
    }
    if (id == "linear") {
        validate_params(id, params, {{"beta", 0.0, 1.0, true, false}});
        double b = params.at("beta");
        return make_janowski_like("linear", b, 0.0, params, "psi(z) = 1 + beta z", "m(r) = 1 - beta r");
    }
    if (id == "power_eta") {
        validate_params(id, params, {{"eta", 0.0, 1.0, true, false}});
        double eta = params.at("eta");
        auto im = std::make_shared<Impl>();
        im->id = id;
        im->params = params;
        im->formula = "psi(z) = ((1+z)/(1-z))^eta";
        im->tag = "m(r) = ((1-r)/(1+r))^eta";
        im->convex = true;  // image is a sector of half-angle eta*pi/2
        im->eval = [eta](cplx z) -> cplx {
            if (std::abs(1.0 - z) < 1e-15) throw domain_error("power_eta: branch contact at z = 1");
            if (std::abs(1.0 + z) < 1e-300) return 0.0;
            return std::pow((1.0 + z) / (1.0 - z), eta);
        };
        im->series = [eta](int n) {
            PowerSeries a(n);  // 2 eta atanh z
            for (int k = 1; k <= n; k += 2) a[k] = 2.0 * eta / static_cast<double>(k);
            return a.exp();
        };
        im->min_closed = [eta](double r) { return std::pow((1.0 - r) / (1.0 + r), eta); };
        im->max_closed = [eta](double r) { return std::pow((1.0 + r) / (1.0 - r), eta); };
        return im;
    }
    if (id == "rl_crescent") {
        validate_params(id, params, {});
        auto im = std::make_shared<Impl>();
        const double s = kSqrt2 - 1.0;
        const double c = 2.0 * s;
        im->id = id;
        im->formula = "psi(z) = sqrt(2) - (sqrt(2)-1) sqrt((1-z)/(1+2(sqrt(2)-1) z))";
        im->tag = "m(r) = sqrt(2) - (sqrt(2)-1) sqrt((1+r)/(1-2(sqrt(2)-1) r))";
        im->eval = [s, c](cplx z) -> cplx {
            cplx den = 1.0 + c * z;
            if (std::abs(den) < 1e-15) throw domain_error("rl_crescent: pole contact");
            return kSqrt2 - s * std::sqrt((1.0 - z) / den);
        };
        im->series = [s, c](int n) {
            PowerSeries num(n), den(n);
            num[0] = 1.0;
            if (n >= 1) num[1] = -1.0;
            den[0] = 1.0;
            if (n >= 1) den[1] = c;
            PowerSeries root = (num / den).sqrt();
            PowerSeries out(n);
            for (int k = 0; k <= n; ++k) out[k] = -s * root[k];
            out[0] += kSqrt2;
            return out;
        };
        im->min_closed = [s, c](double r) { return kSqrt2 - s * std::sqrt((1.0 + r) / (1.0 - c * r)); };
        im->max_closed = [s, c](double r) { return kSqrt2 - s * std::sqrt((1.0 - r) / (1.0 + c * r)); };
        return im;
    }
    if (id == "ab_power") {
        validate_params(id, params, {{"a", 1.0, 1e308, false, false}, {"b", 0.5, 1e308, false, false}});
        double a = params.at("a"), b = params.at("b");
        auto im = std::make_shared<Impl>();
        im->id = id;
        im->params = params;
        im->formula = "psi(z) = (b (1+z))^(1/a)";
        im->tag = "m(r) = (b (1-r))^(1/a)";
        im->eval = [a, b](cplx z) -> cplx {
            cplx w = b * (1.0 + z);
            if (std::abs(w) < 1e-300) return 0.0;
            return std::pow(w, 1.0 / a);
        };
        im->series = [a, b](int n) {
            PowerSeries s(n);
            double scale = std::pow(b, 1.0 / a);
            for (int k = 0; k <= n; ++k) s[k] = scale * binom_real(1.0 / a, k);
            return s;
        };
        im->min_closed = [a, b](double r) { return std::pow(b * (1.0 - r), 1.0 / a); };
        im->max_closed = [a, b](double r) { return std::pow(b * (1.0 + r), 1.0 / a); };
        return im;
    }
    if (id == "exp") {
        validate_params(id, params, {});
        auto im = std::make_shared<Impl>();
        im->id = id;
        im->formula = "psi(z) = exp(z)";
        im->tag = "m(r) = exp(-r)";
        im->convex = true;
        im->eval = [](cplx z) { return std::exp(z); };
        im->series = [](int n) {
            PowerSeries s(n);
            for (int k = 0; k <= n; ++k) s[k] = 1.0 / factorial(k);
            return s;
        };
        im->min_closed = [](double r) { return std::exp(-r); };
        im->max_closed = [](double r) { return std::exp(r); };
        return im;
    }
    if (id == "crescent") {
        validate_params(id, params, {});
        auto im = std::make_shared<Impl>();
        im->id = id;
        im->formula = "psi(z) = z + sqrt(1+z^2)";
        im->tag = "m(r) = sqrt(1+r^2) - r";
        im->eval = [](cplx z) { return z + std::sqrt(1.0 + z * z); };
        im->series = [](int n) {
            PowerSeries s(n);
            s[0] = 1.0;
            if (n >= 1) s[1] = 1.0;
            for (int k = 1; 2 * k <= n; ++k) s[2 * k] = binom_real(0.5, k);
            return s;
        };
        im->min_closed = [](double r) { return std::sqrt(1.0 + r * r) - r; };
        im->max_closed = [](double r) { return std::sqrt(1.0 + r * r) + r; };
        return im;
    }
    if (id == "sigmoid") {
        validate_params(id, params, {});
        auto im = std::make_shared<Impl>();
        im->id = id;
        im->formula = "psi(z) = 2/(1+exp(-z))";
        im->tag = "m(r) = 2/(1+exp(r))";
        im->eval = [](cplx z) -> cplx {
            cplx den = 1.0 + std::exp(-z);
            if (std::abs(den) < 1e-15) throw domain_error("sigmoid: pole contact");
            return 2.0 / den;
        };
        im->series = [](int n) {
            PowerSeries num(n);
            num[0] = 2.0;
            return num / exp_neg_z_plus_one(n);
        };
        im->min_closed = [](double r) { return 2.0 / (1.0 + std::exp(r)); };
        im->max_closed = [](double r) { return 2.0 / (1.0 + std::exp(-r)); };
        return im;
    }
    if (id == "sine") {
        validate_params(id, params, {});
        auto im = std::make_shared<Impl>();
        im->id = id;
        im->formula = "psi(z) = 1 + sin(z)";
        im->tag = "m(r) = 1 - sin(r)";
        im->eval = [](cplx z) { return 1.0 + std::sin(z); };
        im->series = [](int n) {
            PowerSeries s(n);
            s[0] = 1.0;
            double sgn = 1.0;
            for (int k = 1; k <= n; k += 2) {
                s[k] = sgn / factorial(k);
                sgn = -sgn;
            }
            return s;
        };
        im->min_closed = [](double r) { return 1.0 - std::sin(r); };
        // max |1+sin z| leaves the real axis; no closed form.
        im->max_form = ExtremumForm::Numeric;
        return im;
    }
    if (id == "cardioid") {
        validate_params(id, params, {});
        auto im = std::make_shared<Impl>();
        im->id = id;
        im->formula = "psi(z) = 1 + z exp(z)";
        im->tag = "m(r) = 1 - r exp(-r) for r <= (3-sqrt(5))/2";
        im->eval = [](cplx z) { return 1.0 + z * std::exp(z); };
        im->series = [](int n) {
            PowerSeries s(n);
            s[0] = 1.0;
            for (int k = 1; k <= n; ++k) s[k] = 1.0 / factorial(k - 1);
            return s;
        };
        im->min_closed = [](double r) { return 1.0 - r * std::exp(-r); };
        im->min_form = [](double r) {
            return r <= cardioid_min_transition() + 1e-15 ? ExtremumForm::AtMinusR : ExtremumForm::Numeric;
        };
        im->max_closed = [](double r) { return 1.0 + r * std::exp(r); };
        return im;
    }
    if (id == "sqrt_plus" || id == "lemniscate" || id == "sqrt_minus") {
        validate_params(id, params, {});
        return make_sqrt_entry(id, id == "sqrt_minus" ? -1 : +1);
    }
    if (id == "booth") {
        validate_params(id, params, {{"alpha", 0.0, 1.0, false, true}});
        double alpha = params.at("alpha");
        auto im = std::make_shared<Impl>();
        im->id = id;
        im->params = params;
        im->formula = "psi(z) = 1 + z/(1-alpha z^2)";
        im->tag = "m(r) = 1 - r/(1-alpha r^2)";
        im->domain_radius = alpha > 0.0 ? (-1.0 + std::sqrt(1.0 + 4.0 * alpha)) / (2.0 * alpha) : 1.0;
        im->domain_note = "admissible only for |z| < r_alpha, the positive root of alpha r^2 + r - 1 = 0";
        im->eval = [alpha](cplx z) -> cplx {
            cplx den = 1.0 - alpha * z * z;
            if (std::abs(den) < 1e-15) throw domain_error("booth: pole contact");
            return 1.0 + z / den;
        };
        im->series = [alpha](int n) {
            PowerSeries s(n);
            s[0] = 1.0;
            double p = 1.0;
            for (int k = 1; k <= n; k += 2) {
                s[k] = p;
                p *= alpha;
            }
            return s;
        };
        im->min_closed = [alpha](double r) { return 1.0 - r / (1.0 - alpha * r * r); };
        im->max_closed = [alpha](double r) { return 1.0 + r / (1.0 - alpha * r * r); };
        return im;
    }
    throw argument_error("unknown catalog id '" + id + "'");
}

}  // namespace

MindaFunction catalog_make(const std::string& id, const std::map<std::string, double>& params) {
    auto im = build_entry(id, params);
    // Every public entry satisfies psi(0) > 0 and has a nonzero first coefficient.
    PowerSeries probe = im->series(2);
    if (std::abs(probe[1]) < 1e-15) throw argument_error(id + ": degenerate entry, psi'(0) = 0");
    return MindaFunction(std::move(im));
}

const std::vector<CatalogDescriptor>& catalog_list() {
    static const std::vector<CatalogDescriptor> table = [] {
        std::vector<CatalogDescriptor> t;
        auto add = [&t](const char* id, const char* params, const char* dom) {
            std::map<std::string, double> defaults;
            if (std::string(id) == "janowski") defaults = {{"D", 1.0}, {"E", -1.0}};
            if (std::string(id) == "order_alpha") defaults = {{"alpha", 0.0}};
            if (std::string(id) == "power_eta") defaults = {{"eta", 1.0}};
            if (std::string(id) == "ab_power") defaults = {{"a", 2.0}, {"b", 1.0}};
            if (std::string(id) == "linear") defaults = {{"beta", 1.0}};
            if (std::string(id) == "booth") defaults = {{"alpha", 0.5}};
            MindaFunction f = catalog_make(id, defaults);
            CatalogDescriptor d;
            d.id = id;
            d.params = params;
            d.formula = f.formula();
            d.tag = f.tag();
            d.domain_note = dom;
            d.orientation = f.orientation();
            d.convex = f.convex();
            t.push_back(std::move(d));
        };
        add("janowski", "D,E with -1 <= E < D <= 1", "");
        add("order_alpha", "alpha in [0,1)", "");
        add("power_eta", "eta in (0,1]", "");
        add("rl_crescent", "", "");
        add("ab_power", "a >= 1, b >= 1/2", "");
        add("exp", "", "");
        add("crescent", "", "");
        add("sigmoid", "", "");
        add("sine", "", "");
        add("cardioid", "", "");
        add("sqrt_plus", "", "");
        add("sqrt_minus", "", "");
        add("linear", "beta in (0,1]", "");
        add("booth", "alpha in [0,1)", "admissible only for |z| < r_alpha, root of alpha r^2 + r - 1 = 0");
        add("lemniscate", "", "");
        return t;
    }();
    return table;
}

}  // namespace mmrad
