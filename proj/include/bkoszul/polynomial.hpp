#pragma once

#include <complex>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "bkoszul/rational.hpp"

namespace bk {

// Exponent vector of a monomial z^alpha; length equals the ambient dimension.
using MultiIndex = std::vector<int>;

inline int total_degree(const MultiIndex& a) {
    int s = 0;
    for (int e : a) s += e;
    return s;
}

// Graded-lexicographic order (total degree first, then lex).  Canonical
// iteration/printing order for polynomial terms and basis index sets.
struct GrlexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a < b;  // lexicographic on exponent vectors
    }
};

using CPoint = std::vector<std::complex<double>>;

// Sparse multivariate polynomial over Q(i).  Zero coefficients are never
// stored; all exponent vectors have length n().
class Polynomial {
  public:
    using TermMap = std::map<MultiIndex, GaussianRational, GrlexLess>;

    explicit Polynomial(int n) : n_(n) {}
    Polynomial(int n, TermMap terms) : n_(n), terms_(std::move(terms)) { prune(); }

    static Polynomial constant(int n, GaussianRational c);
    static Polynomial variable(int n, int axis);  // z_axis, 0-based

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    int degree() const;  // total degree; -1 for the zero polynomial

    const TermMap& terms() const { return terms_; }
    GaussianRational coefficient(const MultiIndex& a) const;
    void add_term(const MultiIndex& a, const GaussianRational& c);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const GaussianRational& c) const;
    Polynomial pow(int k) const;

    Polynomial partial_derivative(int axis) const;  // 0-based axis
    std::vector<Polynomial> gradient() const;

    std::complex<double> evaluate(std::span<const std::complex<double>> z) const;
    std::complex<double> evaluate(const CPoint& z) const {
        return evaluate(std::span<const std::complex<double>>(z));
    }

    // Canonical printer: graded-lex term order, exact rational coefficients.
    // Output re-parses to an equal polynomial.
    std::string to_string() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

  private:
    void prune();
    void check_dim(const Polynomial& o) const;

    int n_;
    TermMap terms_;
};

// Parses the grammar: variables z1..zn ('z' alone allowed when n == 1),
// integer literals, 'i', operators + - * / ^ ( ), '^' with a non-negative
// integer exponent, '/' with a nonzero constant divisor.  Rational literals
// are formed by '/' on integers.  Throws ParseError (with byte offset) or
// DimensionMismatch.
Polynomial parse_polynomial(const std::string& text, int n);

}  // namespace bk
