#include "bkoszul/bergman.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "bkoszul/errors.hpp"

namespace bk {

namespace {

void enumerate_indices(int n, int d, MultiIndex& cur, int axis, int remaining,
                       std::vector<MultiIndex>& out) {
    if (axis == n) {
        out.push_back(cur);
        return;
    }
    for (int e = 0; e <= remaining; ++e) {
        cur[axis] = e;
        enumerate_indices(n, d, cur, axis + 1, remaining - e, out);
    }
    cur[axis] = 0;
}

}  // namespace

BasisIndexSet::BasisIndexSet(int n, int d) : n_(n), d_(d) {
    if (n < 1) throw std::invalid_argument("dimension must be at least 1");
    if (d < 0) throw std::invalid_argument("truncation degree must be non-negative");
    MultiIndex cur(n, 0);
    enumerate_indices(n, d, cur, 0, d, indices_);
    std::sort(indices_.begin(), indices_.end(), GrlexLess{});
    degrees_.reserve(indices_.size());
    for (int i = 0; i < static_cast<int>(indices_.size()); ++i) {
        degrees_.push_back(total_degree(indices_[i]));
        pos_.emplace(indices_[i], i);
    }
}

int BasisIndexSet::position(const MultiIndex& a) const {
    auto it = pos_.find(a);
    return it == pos_.end() ? -1 : it->second;
}

double monomial_log_norm_sq(const MultiIndex& alpha, const DomainSpec& domain) {
    if (static_cast<int>(alpha.size()) != domain.n)
        throw DimensionMismatch("multi-index dimension differs from domain");
    const double log_pi = std::log(std::numbers::pi);
    int n = domain.n;
    if (domain.kind == DomainSpec::Kind::Ball) {
        int total = total_degree(alpha);
        double lg = n * log_pi;
        for (int e : alpha) lg += std::lgamma(e + 1.0);
        lg -= std::lgamma(n + total + 1.0);
        lg += (2.0 * total + 2.0 * n) * std::log(domain.radii[0]);
        return lg;
    }
    double lg = 0;
    for (int i = 0; i < n; ++i)
        lg += log_pi + (2.0 * alpha[i] + 2.0) * std::log(domain.radii[i]) - std::log(alpha[i] + 1.0);
    return lg;
}

double monomial_norm_sq(const MultiIndex& alpha, const DomainSpec& domain) {
    return std::exp(monomial_log_norm_sq(alpha, domain));
}

NormTable::NormTable(const DomainSpec& domain, int dmax)
    : domain_(domain), basis_(std::make_shared<BasisIndexSet>(domain.n, dmax)) {
    log_nu2_.reserve(basis_->size());
    for (int i = 0; i < basis_->size(); ++i)
        log_nu2_.push_back(monomial_log_norm_sq((*basis_)[i], domain));
}

double NormTable::norm_ratio(int target_pos, int source_pos) const {
    return std::exp(0.5 * (log_nu2_[target_pos] - log_nu2_[source_pos]));
}

Eigen::MatrixXcd toeplitz_matrix(const Polynomial& g, int d_src, int d_dst, const NormTable& norms) {
    if (g.n() != norms.domain().n) throw DimensionMismatch("symbol dimension differs from domain");
    const BasisIndexSet& all = norms.basis();
    if (all.d() < d_dst) throw std::invalid_argument("norm table does not cover target degree");
    BasisIndexSet src(g.n(), d_src), dst(g.n(), d_dst);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dst.size(), src.size());
    const int n = g.n();
#pragma omp parallel for schedule(static)
    for (int col = 0; col < src.size(); ++col) {
        const MultiIndex& a = src[col];
        int a_all = all.position(a);
        MultiIndex b(n);
        for (const auto& [gamma, c] : g.terms()) {
            for (int i = 0; i < n; ++i) b[i] = a[i] + gamma[i];
            int row = dst.position(b);
            if (row < 0) continue;  // compressed away
            int b_all = all.position(b);
            m(row, col) += c.to_complex() * norms.norm_ratio(b_all, a_all);
        }
    }
    return m;
}

Eigen::MatrixXcd compressed_toeplitz(const Polynomial& g, int d, const DomainSpec& domain) {
    NormTable norms(domain, d);
    return toeplitz_matrix(g, d, d, norms);
}

namespace {

// Adaptive Simpson on [a, b].
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol) {
    struct Rec {
        static double go(const std::function<double(double)>& f, double a, double m, double b,
                         double fa, double fm, double fb, double whole, double tol, int depth) {
            double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
            double flm = f(lm), frm = f(rm);
            double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
            double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
            if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
                return left + right + (left + right - whole) / 15.0;
            return go(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
                   go(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
        }
    };
    double m = 0.5 * (a + b);
    double fa = f(a), fm = f(m), fb = f(b);
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return Rec::go(f, a, m, b, fa, fm, fb, whole, tol, 24);
}

// Integral of |z^alpha|^2 over the ball of radius R in C^k, written as nested
// radial integrals; theta substitution rho = R sin(theta) keeps the integrand
// analytic at the sphere.
double ball_moment(const std::vector<int>& alpha, int k, double R, double tol) {
    if (k == 0) return 1.0;
    int e = alpha[k - 1];
    auto integrand = [&](double theta) {
        double rho = R * std::sin(theta);
        double inner = ball_moment(alpha, k - 1, R * std::cos(theta), tol);
        return 2.0 * std::numbers::pi * std::pow(rho, 2 * e + 1) * inner * R * std::cos(theta);
    };
    return adaptive_simpson(integrand, 0.0, 0.5 * std::numbers::pi, tol);
}

}  // namespace

double monomial_norm_sq_quadrature(const MultiIndex& alpha, const DomainSpec& domain,
                                   double rel_tol) {
    if (static_cast<int>(alpha.size()) != domain.n)
        throw DimensionMismatch("multi-index dimension differs from domain");
    if (domain.kind == DomainSpec::Kind::Polydisk) {
        double prod = 1.0;
        for (int i = 0; i < domain.n; ++i) {
            int e = alpha[i];
            double r = domain.radii[i];
            auto integrand = [e](double rho) { return 2.0 * std::numbers::pi * std::pow(rho, 2 * e + 1); };
            // scale the absolute tolerance to the integral's magnitude
            double guess = std::numbers::pi * std::pow(r, 2 * e + 2) / (e + 1);
            prod *= adaptive_simpson(integrand, 0.0, r, rel_tol * guess);
        }
        return prod;
    }
    double guess = monomial_norm_sq(alpha, domain);
    return ball_moment(alpha, domain.n, domain.radii[0], rel_tol * guess / domain.n);
}

}  // namespace bk
