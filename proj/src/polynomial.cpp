#include "bkoszul/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "bkoszul/errors.hpp"

namespace bk {

std::string to_string(const GaussianRational& q) {
    auto rat = [](const mpq_class& v) { return v.get_str(); };
    if (q.im == 0) return rat(q.re);
    std::string imag = (q.im == 1) ? "i" : (q.im == -1) ? "-i" : rat(q.im) + "*i";
    if (q.re == 0) return imag;
    std::string out = "(" + rat(q.re);
    out += (q.im > 0) ? "+" : "-";
    mpq_class a = abs(q.im);
    out += (a == 1) ? "i" : a.get_str() + "*i";
    out += ")";
    return out;
}

Polynomial Polynomial::constant(int n, GaussianRational c) {
    Polynomial p(n);
    p.add_term(MultiIndex(n, 0), c);
    return p;
}

Polynomial Polynomial::variable(int n, int axis) {
    Polynomial p(n);
    MultiIndex a(n, 0);
    a[axis] = 1;
    p.add_term(a, GaussianRational(1));
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    return total_degree(terms_.rbegin()->first);  // grlex: last key has max degree
}

GaussianRational Polynomial::coefficient(const MultiIndex& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? GaussianRational() : it->second;
}

void Polynomial::add_term(const MultiIndex& a, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(a, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Polynomial::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
}

void Polynomial::check_dim(const Polynomial& o) const {
    if (n_ != o.n_) throw DimensionMismatch("polynomial dimensions differ");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_dim(o);
    Polynomial r = *this;
    for (const auto& [a, c] : o.terms_) r.add_term(a, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_dim(o);
    Polynomial r = *this;
    for (const auto& [a, c] : o.terms_) r.add_term(a, -c);
    return r;
}

Polynomial Polynomial::operator-() const { return scaled(GaussianRational(-1)); }

Polynomial Polynomial::scaled(const GaussianRational& c) const {
    Polynomial r(n_);
    if (c.is_zero()) return r;
    for (const auto& [a, v] : terms_) r.terms_.emplace(a, v * c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_dim(o);
    Polynomial r(n_);
    for (const auto& [a, ca] : terms_) {
        for (const auto& [b, cb] : o.terms_) {
            MultiIndex s(n_);
            for (int i = 0; i < n_; ++i) s[i] = a[i] + b[i];
            r.add_term(s, ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::pow(int k) const {
    Polynomial r = Polynomial::constant(n_, GaussianRational(1));
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

Polynomial Polynomial::partial_derivative(int axis) const {
    Polynomial r(n_);
    for (const auto& [a, c] : terms_) {
        if (a[axis] == 0) continue;
        MultiIndex b = a;
        b[axis] -= 1;
        r.add_term(b, c * GaussianRational(a[axis]));
    }
    return r;
}

std::vector<Polynomial> Polynomial::gradient() const {
    std::vector<Polynomial> g;
    g.reserve(n_);
    for (int i = 0; i < n_; ++i) g.push_back(partial_derivative(i));
    return g;
}

std::complex<double> Polynomial::evaluate(std::span<const std::complex<double>> z) const {
    if (static_cast<int>(z.size()) != n_) throw DimensionMismatch("evaluation point dimension differs");
    // Cached power tables per axis keep each monomial evaluation to n multiplies.
    std::vector<int> maxexp(n_, 0);
    for (const auto& [a, c] : terms_)
        for (int i = 0; i < n_; ++i) maxexp[i] = std::max(maxexp[i], a[i]);
    std::vector<std::vector<std::complex<double>>> pw(n_);
    for (int i = 0; i < n_; ++i) {
        pw[i].resize(maxexp[i] + 1);
        pw[i][0] = 1.0;
        for (int k = 1; k <= maxexp[i]; ++k) pw[i][k] = pw[i][k - 1] * z[i];
    }
    std::complex<double> sum = 0.0;
    for (const auto& [a, c] : terms_) {
        std::complex<double> m = c.to_complex();
        for (int i = 0; i < n_; ++i) m *= pw[i][a[i]];
        sum += m;
    }
    return sum;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [a, c] : terms_) {
        GaussianRational coeff = c;
        if (!first) {
            // Fold the sign of pure-real / pure-imaginary coefficients into the separator.
            bool negative = (coeff.im == 0 && coeff.re < 0) || (coeff.re == 0 && coeff.im < 0);
            out << (negative ? " - " : " + ");
            if (negative) coeff = -coeff;
        }
        first = false;
        std::string mono;
        for (int i = 0; i < n_; ++i) {
            if (a[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "z" + std::to_string(i + 1);
            if (a[i] > 1) mono += "^" + std::to_string(a[i]);
        }
        bool unit = coeff == GaussianRational(1);
        if (mono.empty()) {
            out << bk::to_string(coeff);
        } else if (unit) {
            out << mono;
        } else {
            out << bk::to_string(coeff) << "*" << mono;
        }
    }
    return out.str();
}

namespace {

// Recursive-descent parser for the polynomial grammar.
class Parser {
  public:
    Parser(const std::string& text, int n) : text_(text), n_(n) {}

    Polynomial run() {
        Polynomial p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool consume(char c) {
        if (peek_is(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial parse_expr() {
        Polynomial acc = parse_term();
        for (;;) {
            if (consume('+'))
                acc = acc + parse_term();
            else if (consume('-'))
                acc = acc - parse_term();
            else
                return acc;
        }
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        for (;;) {
            if (consume('*')) {
                acc = acc * parse_factor();
            } else if (consume('/')) {
                std::size_t at = pos_;
                Polynomial d = parse_factor();
                if (!d.is_constant()) {
                    pos_ = at;
                    fail("divisor must be a constant");
                }
                GaussianRational c = d.coefficient(MultiIndex(n_, 0));
                if (c.is_zero()) {
                    pos_ = at;
                    fail("division by zero");
                }
                acc = acc.scaled(GaussianRational(1) / c);
            } else {
                return acc;
            }
        }
    }

    Polynomial parse_factor() {
        Polynomial base = parse_atom();
        while (consume('^')) {
            skip_ws();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("expected non-negative integer exponent");
            long e = parse_uint();
            if (e > 64) fail("exponent too large");
            base = base.pow(static_cast<int>(e));
        }
        return base;
    }

    Polynomial parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '-') {
            ++pos_;
            return -parse_atom();
        }
        if (c == '(') {
            ++pos_;
            Polynomial p = parse_expr();
            if (!consume(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long v = parse_uint();
            return Polynomial::constant(n_, GaussianRational(v));
        }
        if (c == 'i') {
            ++pos_;
            return Polynomial::constant(n_, GaussianRational::imaginary_unit());
        }
        if (c == 'z') {
            std::size_t at = pos_;
            ++pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                if (n_ == 1) return Polynomial::variable(1, 0);
                pos_ = at;
                fail("expected variable index after 'z'");
            }
            long idx = parse_uint();
            if (idx < 1 || idx > n_) {
                pos_ = at;
                throw DimensionMismatch("variable z" + std::to_string(idx) + " exceeds dimension " +
                                        std::to_string(n_));
            }
            return Polynomial::variable(n_, static_cast<int>(idx) - 1);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    long parse_uint() {
        long v = 0;
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1000000000L) fail("integer literal too large");
            ++pos_;
        }
        if (pos_ == start) fail("expected integer");
        return v;
    }

    const std::string& text_;
    int n_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, int n) {
    if (n < 1) throw DimensionMismatch("dimension must be at least 1");
    return Parser(text, n).run();
}

}  // namespace bk
