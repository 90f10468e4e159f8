#pragma once

#include <cmath>

namespace vglab {

// Unit sphere / ball volumes for the ambient dimension.
struct DimensionConstants {
  int n = 0;
  double sigma_nm1 = 0;  // volume of the unit (n-1)-sphere in R^n
  double omega_n = 0;    // volume of the Euclidean unit n-ball, sigma_nm1 / n
  double sigma_n = 0;    // volume of the unit n-sphere in R^{n+1}
};

inline double unit_sphere_volume(int dim) {
  // dim-sphere sitting in R^{dim+1}
  return 2.0 * std::pow(M_PI, 0.5 * (dim + 1)) / std::tgamma(0.5 * (dim + 1));
}

inline DimensionConstants dim_constants(int n) {
  DimensionConstants c;
  c.n = n;
  c.sigma_nm1 = unit_sphere_volume(n - 1);
  c.omega_n = c.sigma_nm1 / n;
  c.sigma_n = unit_sphere_volume(n);
  return c;
}

}  // namespace vglab
