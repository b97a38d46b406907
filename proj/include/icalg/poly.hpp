#pragma once

/*
 * Exact univariate polynomial calculus over the rationals.
 *
 * Besides ring arithmetic this provides the difference calculus that drives
 * the deformation parameters: Bernoulli polynomials, the shifted backward
 * difference
 *
 *     nabla_eps f(z) = f(z + eps) - f(z + eps - 1),
 *
 * its inverse (normalized to constant term zero), and the maps from the
 * defining polynomial xi to
 *
 *     Xi(z) = d^n/dz^n (z^n xi(z)),
 *     g     with  g(z) - g(z-1) = Xi(z),
 *     w     with  nabla_{1/2}^n (z^{n-1} w(z)) = Xi(z + 1/2).
 *
 * Xi and g are the rescaled (transcendental-constant free) versions of the
 * usual tilde-xi and f_xi; every downstream quantity is insensitive to that
 * common scale.
 */

#include "icalg/rational.hpp"

#include <algorithm>
#include <cassert>
#include <compare>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace icalg {

// Dense univariate polynomial; coeffs[k] is the coefficient of z^k.  The
// zero polynomial has no coefficients.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rational> cs) : coeffs_(cs) { trim(); }
    explicit Poly(std::vector<Rational> cs) : coeffs_(std::move(cs)) { trim(); }

    static Poly constant(const Rational& c) { return Poly({c}); }

    static Poly monomial(unsigned k, const Rational& c = 1) {
        std::vector<Rational> cs(k + 1);
        cs[k] = c;
        return Poly(std::move(cs));
    }

    // The polynomial z.
    static Poly z() { return monomial(1); }

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    Rational operator[](std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : Rational(0);
    }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

    Rational operator()(const Rational& x) const {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly& operator+=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const Rational& c) {
        for (auto& x : coeffs_) x *= c;
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) { return a *= Rational(-1); }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Poly(std::move(out));
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    std::string str(char var = 'z') const {
        if (is_zero()) return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            const Rational& c = coeffs_[k];
            if (c == 0) continue;
            Rational mag = abs(c);
            if (out.empty())
                out += sgn(c) < 0 ? "-" : "";
            else
                out += sgn(c) < 0 ? " - " : " + ";
            bool unit = mag == 1 && k > 0;
            if (!unit) out += to_string(mag);
            if (k > 0) {
                if (!unit) out += '*';
                out += var;
                if (k > 1) out += '^' + std::to_string(k);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

inline Poly pow(const Poly& p, unsigned k) {
    Poly out = Poly::constant(1);
    for (unsigned i = 0; i < k; ++i) out = out * p;
    return out;
}

// f(z + a), by Horner's scheme in the basis (z + a)^k.
inline Poly shift(const Poly& f, const Rational& a) {
    Poly lin({a, Rational(1)});
    Poly acc;
    for (int k = f.degree(); k >= 0; --k) acc = acc * lin + Poly::constant(f[k]);
    return acc;
}

inline Poly derivative(const Poly& f) {
    if (f.degree() < 1) return {};
    std::vector<Rational> out(f.degree());
    for (int k = 1; k <= f.degree(); ++k) out[k - 1] = f[k] * k;
    return Poly(std::move(out));
}

// Bernoulli numbers B_0..B_k with B_1 = -1/2 (the te^{tz}/(e^t - 1) convention).
inline std::vector<Rational> bernoulli_numbers(unsigned k) {
    std::vector<Rational> b(k + 1);
    b[0] = 1;
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    for (unsigned m = 1; m <= k; ++m) {
        Rational s = 0;
        for (unsigned j = 0; j < m; ++j) s += binomial(m + 1, j) * b[j];
        b[m] = -s / Rational(m + 1);
    }
    return b;
}

// B_k(z) = sum_j C(k, j) B_j z^{k-j}.
inline Poly bernoulli(unsigned k) {
    auto b = bernoulli_numbers(k);
    std::vector<Rational> cs(k + 1);
    for (unsigned j = 0; j <= k; ++j) cs[k - j] = binomial(k, j) * b[j];
    return Poly(std::move(cs));
}

// nabla_eps f(z) = f(z + eps) - f(z + eps - 1).
inline Poly nabla(const Rational& eps, const Poly& f) {
    return shift(f, eps) - shift(f, eps - 1);
}

// The unique f with nabla(eps, f) == p and f(0) == 0, built as
// sum_i p_i/(i+1) B_{i+1}(z + 1 - eps).
inline Poly nabla_inverse(const Rational& eps, const Poly& p) {
    Poly f;
    const Rational offset = 1 - eps;
    for (int i = 0; i <= p.degree(); ++i) {
        if (p[i] == 0) continue;
        f += shift(bernoulli(i + 1), offset) * (p[i] / Rational(i + 1));
    }
    return f - Poly::constant(f[0]);
}

// Xi(z) = d^n/dz^n (z^n xi(z)); coefficient-wise xi_m (m+n)!/m!.
inline Poly xi_to_Xi(const Poly& xi, unsigned n) {
    if (n < 1) throw std::invalid_argument("xi_to_Xi: rank must be at least 1");
    std::vector<Rational> cs(xi.coeffs().size());
    for (std::size_t m = 0; m < cs.size(); ++m)
        cs[m] = xi[m] * factorial(static_cast<unsigned>(m) + n) / factorial(static_cast<unsigned>(m));
    return Poly(std::move(cs));
}

// g with g(z) - g(z-1) = Xi(z) and g(0) = 0.
inline Poly xi_to_g(const Poly& xi, unsigned n) { return nabla_inverse(0, xi_to_Xi(xi, n)); }

// Applies nabla_{1/2} k times.
inline Poly nabla_half_pow(Poly f, unsigned k) {
    const Rational half(1, 2);
    for (unsigned i = 0; i < k; ++i) f = nabla(half, f);
    return f;
}

// The unique w with w(0) = 0 and nabla_{1/2}^n (z^{n-1} w) = Xi(z + 1/2).
// 
// nabla_{1/2}^n z^{n-1+k} has degree exactly k-1, so the system in the
// unknowns w_1..w_{d+1} is triangular and is solved from the top degree down.
inline Poly xi_to_w(const Poly& xi, unsigned n) {
    if (n < 1) throw std::invalid_argument("xi_to_w: rank must be at least 1");
    Poly residual = shift(xi_to_Xi(xi, n), Rational(1, 2));
    if (residual.is_zero()) return {};
    const int top = residual.degree() + 1;
    std::vector<Rational> w(top + 1);
    for (int k = top; k >= 1; --k) {
        Poly image = nabla_half_pow(Poly::monomial(n - 1 + k), n);
        assert(image.degree() == k - 1);
        Rational c = residual[k - 1] / image.leading();
        if (c == 0) continue;
        w[k] = c;
        residual -= image * c;
    }
    if (!residual.is_zero())
        throw std::logic_error("xi_to_w: triangular solve left a nonzero residual");
    return Poly(std::move(w));
}

// a(z) + b(z) * gamma in Q[z, gamma] / (gamma^2 - 1/4).
struct TwistedPoly {
    Poly a;
    Poly b;

    friend TwistedPoly operator+(const TwistedPoly& x, const TwistedPoly& y) {
        return {x.a + y.a, x.b + y.b};
    }
    friend TwistedPoly operator-(const TwistedPoly& x, const TwistedPoly& y) {
        return {x.a - y.a, x.b - y.b};
    }
    friend TwistedPoly operator*(const TwistedPoly& x, const TwistedPoly& y) {
        return {x.a * y.a + x.b * y.b * Rational(1, 4), x.a * y.b + x.b * y.a};
    }
    friend TwistedPoly operator*(const Rational& c, const TwistedPoly& x) {
        return {x.a * c, x.b * c};
    }
    friend bool operator==(const TwistedPoly& x, const TwistedPoly& y) = default;

    static TwistedPoly gamma() { return {Poly{}, Poly::constant(1)}; }
    static TwistedPoly of(const Poly& p) { return {p, Poly{}}; }
};

// f(z + gamma), expanding powers of (z + gamma) with gamma^2 = 1/4.
inline TwistedPoly substitute_z_plus_gamma(const Poly& f) {
    const TwistedPoly lin{Poly::z(), Poly::constant(1)};
    TwistedPoly acc;
    for (int k = f.degree(); k >= 0; --k) acc = acc * lin + TwistedPoly::of(Poly::constant(f[k]));
    return acc;
}

// Both sides of p(z) gamma = f(z + gamma) + p(z)/2 - f(z + 1/2), where
// nabla_{1/2} f = p.
struct TwistedIdentity {
    TwistedPoly lhs;
    TwistedPoly rhs;
    bool holds() const { return lhs == rhs; }
};

inline TwistedIdentity twisted_identity(const Poly& p) {
    const Rational half(1, 2);
    Poly f = nabla_inverse(half, p);
    TwistedIdentity out;
    out.lhs = {Poly{}, p};
    out.rhs = substitute_z_plus_gamma(f) + TwistedPoly::of(p * half - shift(f, half));
    return out;
}

inline bool twisted_identity_check(const Poly& p) { return twisted_identity(p).holds(); }

}  // namespace icalg
