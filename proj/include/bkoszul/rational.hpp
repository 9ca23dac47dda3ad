#pragma once

#include <complex>
#include <string>

#include <gmpxx.h>

namespace bk {

// Exact element of Q(i).  GMP keeps the rational parts canonical (positive
// denominator, lowest terms), so operator== is exact structural equality.
struct GaussianRational {
    mpq_class re;
    mpq_class im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(long r) : re(r), im(0) {}
    GaussianRational(mpq_class r) : re(std::move(r)), im(0) {}
    GaussianRational(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational imaginary_unit() { return {mpq_class(0), mpq_class(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }

    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

    GaussianRational operator-() const { return {-re, -im}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        mpq_class r = re * o.re - im * o.im;
        mpq_class i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        mpq_class den = o.re * o.re + o.im * o.im;
        mpq_class r = (re * o.re + im * o.im) / den;
        mpq_class i = (im * o.re - re * o.im) / den;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

std::string to_string(const GaussianRational& q);

}  // namespace bk
