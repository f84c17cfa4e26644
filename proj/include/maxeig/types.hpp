#pragma once

#include <Eigen/Core>

namespace maxeig {

using Vector = Eigen::VectorXd;
using DenseMatrix = Eigen::MatrixXd;

}  // namespace maxeig
