// Registry of the generator functions psi and their closed-form circle extrema.
#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mmrad/power_series.hpp"

namespace mmrad {

// Where an extremum of |psi| over |z| = r sits.
enum class ExtremumForm { AtMinusR, AtPlusR, Numeric };

// Transition radius (3-sqrt(5))/2 below which the cardioid minimum stays at
// theta = pi.
double cardioid_min_transition();

struct CatalogDescriptor {
    std::string id;
    std::string params;       // parameter names and ranges, empty if none
    std::string formula;      // psi(z) = ...
    std::string tag;          // closed-form minimum-modulus expression
    std::string domain_note;  // restriction note, empty if the whole disk
    int orientation = 1;
    bool convex = false;      // eligible as a convex-problem generator
};

// One catalog entry bound to concrete parameters. Immutable; copies share
// state and are safe to use concurrently.
class MindaFunction {
  public:
    const std::string& id() const;
    const std::map<std::string, double>& params() const;
    std::string display_name() const;  // id plus bound parameters

    int orientation() const;
    bool convex() const;
    // Radius of the admissible subdisk (1 except booth with alpha > 0).
    double domain_radius() const;
    std::string formula() const;
    std::string tag() const;

    // Point evaluation; throws domain_error on pole or branch contact and,
    // for restricted entries, outside the admissible subdisk.
    cplx eval(cplx z) const;

    // Maclaurin coefficients through the given order (<= 0 means default).
    PowerSeries series(int order) const;

    ExtremumForm min_form(double r) const;
    ExtremumForm max_form() const;

    // Closed-form min_{|z|=r} |psi(z)|; argument_error if min_form(r) is
    // Numeric, domain_error if r is outside the admissible subdisk.
    double min_modulus(double r) const;
    // Closed-form max counterpart.
    double max_modulus(double r) const;

    struct Impl;
    explicit MindaFunction(std::shared_ptr<const Impl> impl);

  private:
    std::shared_ptr<const Impl> impl_;
};

// Instantiate a catalog entry. Unknown ids, unknown parameter names, missing
// parameters, and out-of-range values all throw argument_error.
MindaFunction catalog_make(const std::string& id, const std::map<std::string, double>& params = {});

// Static descriptors for all entries, in registry order.
const std::vector<CatalogDescriptor>& catalog_list();

}  // namespace mmrad
