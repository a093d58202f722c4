// Error taxonomy shared by the whole library.
#pragma once

#include <stdexcept>
#include <string>

namespace mmrad {

// Bad identifier, parameter out of range, violated precondition.
struct argument_error : std::runtime_error {
    explicit argument_error(const std::string& what) : std::runtime_error(what) {}
};

// Evaluation outside the admissible domain (pole or branch contact, r past
// the entry's domain radius).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Series tail or hypergeometric sum failed to converge within budget.
struct convergence_error : std::runtime_error {
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

// No bracketable root, or iteration budget exhausted.
struct solver_error : std::runtime_error {
    explicit solver_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mmrad
