#ifndef RISCOV_QUADRATURE_HPP
#define RISCOV_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace riscov {

// Chebyshev-Gauss rule on (-1,1) against the weight 1/sqrt(1-x^2):
// nodes cos((2i-1)pi/(2K)), all weights pi/K.
struct QuadratureRule {
    std::vector<double> nodes;   // strictly decreasing, in (-1,1)
    std::vector<double> weights; // all pi/K
    int order = 0;
};

QuadratureRule chebyshev_gauss(int order);

// Adaptive Simpson estimate of the integral of f over [lo, hi] with target
// absolute error tol. Throws numeric_error if the subdivision cap is hit.
double integrate_1d(const std::function<double(double)>& f, double lo,
                    double hi, double tol);

} // namespace riscov

#endif
