#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace kcx {

double mean(std::span<const double> v);

// Population variance (divide by n).
double population_variance(std::span<const double> v);

// Pearson correlation. Throws Error(precondition) on size mismatch,
// n < 2, or zero variance on either side.
double pearson(std::span<const double> x, std::span<const double> y);

// In-place z-scoring with population variance. Vectors whose variance is
// below tie_eps come back as all zeros (the tie rule shared by the
// complexity scores).
void standardize(std::vector<double>& v, double tie_eps = 1e-15);

// Standard normal CDF via erfc.
double normal_cdf(double z);

// Two-sided tail probability of the Student t distribution.
double student_t_two_sided_p(double t, double dof);

// Regularized incomplete beta function I_x(a, b).
double incomplete_beta(double a, double b, double x);

}  // namespace kcx
