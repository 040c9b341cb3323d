#ifndef DIRAC_TYPES_HPP
#define DIRAC_TYPES_HPP

#include <complex>
#include <cstdint>
#include <Eigen/Dense>

namespace dirac {

using Index = Eigen::Index;
using Complex = std::complex<double>;

// Operator assembly is exact; floating point enters only at eigendecomposition.
using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

}  // namespace dirac

#endif
