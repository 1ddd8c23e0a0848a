#pragma once

#include <cmath>
#include <functional>

namespace nok {

/// Adaptive Simpson quadrature in floating point; the independent
/// cross-check oracle for the exact Fubini volumes.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12, int max_depth = 40);

} // namespace nok
