#ifndef RISCOV_SPECIAL_HPP
#define RISCOV_SPECIAL_HPP

#include <stdexcept>
#include <string>

namespace riscov {

// Thrown when an iterative evaluation fails to converge; carries the best
// value reached so the caller can decide whether it is still usable.
class numeric_error : public std::runtime_error {
public:
    numeric_error(const std::string& what, double partial)
        : std::runtime_error(what), partial_value(partial) {}
    double partial_value;
};

// Gauss hypergeometric function 2F1(a,b;c;z) for real arguments.
// Supported domain: z <= 0 (any magnitude) or 0 <= z < 1; c must not be a
// non-positive integer. Power series for |z| <= 0.5, Pfaff transformation
// z -> z/(z-1) otherwise.
double gauss2f1(double a, double b, double c, double z);

// Complementary error function, |error| <= 1e-12, no dependence on the
// platform's erf family.
double erfc(double x);

// Scaled complement exp(x^2)*erfc(x) for x >= 0; stays finite for
// arbitrarily large x.
double erfcx(double x);

// Euler Gamma for x > 0.
double gamma_fn(double x);

} // namespace riscov

#endif
