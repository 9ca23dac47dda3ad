#pragma once

#include <Eigen/Dense>

namespace bk::kernels {

// Dense complex linear-algebra kernels used by the Laplacian and defect
// builds.  Each has an OpenMP-parallel version and a serial reference; the
// parallel versions assign whole output entries to one thread, so results are
// bitwise identical to the serial ones.

// A^H A (Hermitian, PSD).
Eigen::MatrixXcd gram(const Eigen::MatrixXcd& a);
Eigen::MatrixXcd gram_serial(const Eigen::MatrixXcd& a);

// A A^H (Hermitian, PSD).
Eigen::MatrixXcd outer(const Eigen::MatrixXcd& a);
Eigen::MatrixXcd outer_serial(const Eigen::MatrixXcd& a);

// A * B.
Eigen::MatrixXcd matmul(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);
Eigen::MatrixXcd matmul_serial(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

}  // namespace bk::kernels
