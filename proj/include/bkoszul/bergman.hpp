#pragma once

#include <map>
#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "bkoszul/domain.hpp"
#include "bkoszul/polynomial.hpp"

namespace bk {

// All multi-indices with |alpha| <= d in graded-lex order, with O(log) lookup
// from index to position.  Count is C(n+d, n).
class BasisIndexSet {
  public:
    BasisIndexSet(int n, int d);

    int n() const { return n_; }
    int d() const { return d_; }
    int size() const { return static_cast<int>(indices_.size()); }
    const MultiIndex& operator[](int i) const { return indices_[i]; }
    const std::vector<MultiIndex>& indices() const { return indices_; }
    int degree_of(int i) const { return degrees_[i]; }
    // Position of alpha, or -1 when |alpha| > d.
    int position(const MultiIndex& a) const;

  private:
    int n_, d_;
    std::vector<MultiIndex> indices_;
    std::vector<int> degrees_;
    std::map<MultiIndex, int, GrlexLess> pos_;
};

// Squared Bergman norm of the monomial z^alpha on the domain, from the closed
// forms (ball: pi^n alpha! / (n+|alpha|)! R^(2|alpha|+2n); polydisk: product of
// per-axis disk moments).  Computed through log-gamma so large degrees cannot
// overflow.
double monomial_norm_sq(const MultiIndex& alpha, const DomainSpec& domain);
double monomial_log_norm_sq(const MultiIndex& alpha, const DomainSpec& domain);

// Monomial norms for every index of a basis set, shared read-only between
// matrix assemblies.
class NormTable {
  public:
    NormTable(const DomainSpec& domain, int dmax);

    const DomainSpec& domain() const { return domain_; }
    const BasisIndexSet& basis() const { return *basis_; }
    double log_norm_sq(int basis_pos) const { return log_nu2_[basis_pos]; }
    // nu_{target}/nu_{source} evaluated in log space.
    double norm_ratio(int target_pos, int source_pos) const;

  private:
    DomainSpec domain_;
    std::shared_ptr<const BasisIndexSet> basis_;
    std::vector<double> log_nu2_;
};

// Matrix of P_{d_dst} (mult by g) P_{d_src} in the orthonormal monomial basis:
// entry (alpha+gamma, alpha) = g_gamma * nu_{alpha+gamma} / nu_alpha whenever
// |alpha+gamma| <= d_dst.  d_dst == d_src is the square (finite-section)
// compression; d_dst >= d_src + deg g makes the multiplication exact.
Eigen::MatrixXcd toeplitz_matrix(const Polynomial& g, int d_src, int d_dst, const NormTable& norms);

// Square compression with its own norm table.
Eigen::MatrixXcd compressed_toeplitz(const Polynomial& g, int d, const DomainSpec& domain);

// Quadrature evaluation of the monomial norm integral, independent of the
// closed forms above (nested adaptive Simpson after a trig substitution for
// the ball; per-axis radial quadrature for the polydisk).
double monomial_norm_sq_quadrature(const MultiIndex& alpha, const DomainSpec& domain,
                                   double rel_tol = 1e-7);

}  // namespace bk
