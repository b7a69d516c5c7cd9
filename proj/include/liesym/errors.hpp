#pragma once

#include <stdexcept>
#include <string>

namespace liesym {

// Base class for every error this library throws on purpose.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

struct division_by_zero : error {
    division_by_zero() : error("division by zero") {}
};

struct zero_denominator : error {
    zero_denominator() : error("zero denominator") {}
};

struct inexact_division : error {
    explicit inexact_division(const std::string& what = "inexact polynomial division")
        : error(what) {}
};

struct unknown_variable : error {
    explicit unknown_variable(const std::string& name)
        : error("unknown variable: " + name) {}
};

struct non_bilinear_system : error {
    explicit non_bilinear_system(const std::string& what) : error(what) {}
};

struct degenerate_eigenpoly : error {
    degenerate_eigenpoly() : error("eigenpolynomial has zero s-coefficient") {}
};

struct zero_s_function : error {
    zero_s_function() : error("auxiliary 1ODE A3 requires S != 0") {}
};

struct degenerate_s_pair : error {
    degenerate_s_pair() : error("integrating factors require S1 != S2") {}
};

struct non_rational_log_derivative : error {
    non_rational_log_derivative() : error("logarithmic derivative is not rational") {}
};

// Raised when two Darboux-class values cannot be combined inside the
// representable class (different exponential or power skeletons).
struct undecided_zero_test : error {
    explicit undecided_zero_test(const std::string& what = "zero test undecided")
        : error(what) {}
};

struct no_symmetry_within_bounds : error {
    no_symmetry_within_bounds() : error("no symmetry found within the ansatz bounds") {}
};

struct internal_check_failure : error {
    explicit internal_check_failure(const std::string& what)
        : error("internal verification failure: " + what) {}
};

}  // namespace liesym
