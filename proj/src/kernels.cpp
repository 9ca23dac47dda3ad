#include "bkoszul/kernels.hpp"

namespace bk::kernels {

using Eigen::Index;
using Eigen::MatrixXcd;

namespace {

inline std::complex<double> col_dot(const MatrixXcd& a, Index i, Index j) {
    // conj(column i) . column j, accumulated in a fixed serial order
    std::complex<double> s = 0.0;
    const std::complex<double>* ci = a.col(i).data();
    const std::complex<double>* cj = a.col(j).data();
    for (Index k = 0; k < a.rows(); ++k) s += std::conj(ci[k]) * cj[k];
    return s;
}

inline std::complex<double> row_dot(const MatrixXcd& a, Index i, Index j) {
    std::complex<double> s = 0.0;
    for (Index k = 0; k < a.cols(); ++k) s += a(i, k) * std::conj(a(j, k));
    return s;
}

}  // namespace

MatrixXcd gram_serial(const MatrixXcd& a) {
    MatrixXcd g(a.cols(), a.cols());
    for (Index j = 0; j < a.cols(); ++j) {
        for (Index i = 0; i <= j; ++i) {
            std::complex<double> v = col_dot(a, i, j);
            g(i, j) = v;
            g(j, i) = std::conj(v);
        }
        g(j, j) = std::real(g(j, j));
    }
    return g;
}

MatrixXcd gram(const MatrixXcd& a) {
    MatrixXcd g(a.cols(), a.cols());
    const Index m = a.cols();
#pragma omp parallel for schedule(dynamic, 8)
    for (Index j = 0; j < m; ++j) {
        for (Index i = 0; i <= j; ++i) {
            std::complex<double> v = col_dot(a, i, j);
            g(i, j) = v;
            g(j, i) = std::conj(v);
        }
        g(j, j) = std::real(g(j, j));
    }
    return g;
}

MatrixXcd outer_serial(const MatrixXcd& a) {
    MatrixXcd g(a.rows(), a.rows());
    for (Index j = 0; j < a.rows(); ++j) {
        for (Index i = 0; i <= j; ++i) {
            std::complex<double> v = row_dot(a, i, j);
            g(i, j) = std::conj(v);
            g(j, i) = v;
        }
        g(j, j) = std::real(g(j, j));
    }
    return g;
}

MatrixXcd outer(const MatrixXcd& a) {
    MatrixXcd g(a.rows(), a.rows());
    const Index m = a.rows();
#pragma omp parallel for schedule(dynamic, 8)
    for (Index j = 0; j < m; ++j) {
        for (Index i = 0; i <= j; ++i) {
            std::complex<double> v = row_dot(a, i, j);
            g(i, j) = std::conj(v);
            g(j, i) = v;
        }
        g(j, j) = std::real(g(j, j));
    }
    return g;
}

MatrixXcd matmul_serial(const MatrixXcd& a, const MatrixXcd& b) {
    MatrixXcd c(a.rows(), b.cols());
    for (Index j = 0; j < b.cols(); ++j)
        for (Index i = 0; i < a.rows(); ++i) {
            std::complex<double> s = 0.0;
            for (Index k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
            c(i, j) = s;
        }
    return c;
}

MatrixXcd matmul(const MatrixXcd& a, const MatrixXcd& b) {
    MatrixXcd c(a.rows(), b.cols());
    const Index cols = b.cols();
#pragma omp parallel for schedule(static)
    for (Index j = 0; j < cols; ++j)
        for (Index i = 0; i < a.rows(); ++i) {
            std::complex<double> s = 0.0;
            for (Index k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
            c(i, j) = s;
        }
    return c;
}

}  // namespace bk::kernels
