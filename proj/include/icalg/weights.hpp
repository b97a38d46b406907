#pragma once

/*
 * gl_n weights, the Weyl vector, dominance, Weyl dimensions and the
 * symmetric-function evaluation of P.
 *
 * A weight (a_1, ..., a_n) is a_1 E_11^* + ... + a_n E_nn^* in plain
 * coordinates.  Entries may be arbitrary rationals; only consecutive
 * differences need to be integers for dominance.
 *
 *     rho = ((n-1)/2, (n-3)/2, ..., (1-n)/2)
 *     P(mu) = sum_k w_k h_k(mu + rho)
 */

#include "icalg/poly.hpp"
#include "icalg/rational.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace icalg {

class Weight {
public:
    Weight() = default;
    explicit Weight(std::vector<Rational> coords) : coords_(std::move(coords)) {}
    Weight(std::initializer_list<Rational> coords) : coords_(coords) {}

    static Weight zero(std::size_t n) { return Weight(std::vector<Rational>(n)); }
    static Weight constant(std::size_t n, const Rational& c) {
        return Weight(std::vector<Rational>(n, c));
    }
    static Weight unit(std::size_t n, std::size_t i, const Rational& c = 1) {
        Weight w = zero(n);
        w.coords_.at(i) = c;
        return w;
    }

    std::size_t rank() const { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    Rational& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<Rational>& coords() const { return coords_; }

    Weight& operator+=(const Weight& o) {
        check_rank(o);
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
        return *this;
    }
    Weight& operator-=(const Weight& o) {
        check_rank(o);
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
        return *this;
    }
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }

    friend bool operator==(const Weight& a, const Weight& b) { return a.coords_ == b.coords_; }
    friend bool operator<(const Weight& a, const Weight& b) { return a.coords_ < b.coords_; }

    std::string str() const {
        std::string out = "(";
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (i) out += ", ";
            out += to_string(coords_[i]);
        }
        return out + ")";
    }

private:
    void check_rank(const Weight& o) const {
        if (o.rank() != rank()) throw std::invalid_argument("weight rank mismatch");
    }

    std::vector<Rational> coords_;
};

// Half-sum of the positive roots of gl_n.
inline Weight rho(std::size_t n) {
    if (n < 1) throw std::invalid_argument("rho: rank must be at least 1");
    std::vector<Rational> c(n);
    for (std::size_t i = 0; i < n; ++i)
        c[i] = frac(static_cast<long>(n) - 1 - 2 * static_cast<long>(i), 2);
    return Weight(std::move(c));
}

inline Weight plus_rho(const Weight& mu) { return mu + rho(mu.rank()); }
inline Weight minus_rho(const Weight& shifted) { return shifted - rho(shifted.rank()); }

// lambda_i - lambda_{i+1} is a nonnegative integer for every i.
inline bool is_dominant(const Weight& lambda) {
    for (std::size_t i = 0; i + 1 < lambda.rank(); ++i)
        if (!is_nonnegative_integer(lambda[i] - lambda[i + 1])) return false;
    return true;
}

// True when mu + rho has a repeated coordinate; such a weight carries a
// formal Weyl character of zero.
inline bool is_rho_singular(const Weight& mu) {
    Weight s = plus_rho(mu);
    for (std::size_t i = 0; i < s.rank(); ++i)
        for (std::size_t j = i + 1; j < s.rank(); ++j)
            if (s[i] == s[j]) return true;
    return false;
}

// prod_{i<j} (mu_i - mu_j + j - i)/(j - i) for any weight.  This is the
// Weyl dimension for dominant mu, zero for rho-singular mu, and the signed
// formal dimension otherwise.
inline Rational formal_dim(const Weight& mu) {
    Rational d = 1;
    const std::size_t n = mu.rank();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Rational gap(static_cast<long>(j - i));
            d *= (mu[i] - mu[j] + gap) / gap;
        }
    return d;
}

inline Integer weyl_dim(const Weight& lambda) {
    if (!is_dominant(lambda))
        throw std::invalid_argument("weyl_dim: weight " + lambda.str() + " is not dominant");
    Rational d = formal_dim(lambda);
    if (!is_integer(d) || sgn(d) <= 0)
        throw std::logic_error("weyl_dim: non-integral dimension for " + lambda.str());
    return d.get_num();
}

// h_0(x), ..., h_kmax(x) via h_k(x_1..x_m) = h_k(x_1..x_{m-1}) + x_m h_{k-1}(x_1..x_m).
inline std::vector<Rational> complete_homogeneous_all(unsigned kmax,
                                                      const std::vector<Rational>& point) {
    std::vector<Rational> h(kmax + 1);
    h[0] = 1;
    for (const Rational& x : point)
        for (unsigned k = 1; k <= kmax; ++k) h[k] += x * h[k - 1];
    return h;
}

inline Rational complete_homogeneous(unsigned k, const std::vector<Rational>& point) {
    return complete_homogeneous_all(k, point)[k];
}

// P in the basis of complete homogeneous symmetric polynomials:
// P = sum_k w_coeffs[k] h_k in `rank` variables.
struct SymPolyInHBasis {
    std::vector<Rational> w_coeffs;
    std::size_t rank = 1;

    SymPolyInHBasis() = default;
    SymPolyInHBasis(std::vector<Rational> w, std::size_t n) : w_coeffs(std::move(w)), rank(n) {
        if (rank < 1) throw std::invalid_argument("SymPolyInHBasis: rank must be at least 1");
        while (!w_coeffs.empty() && w_coeffs.back() == 0) w_coeffs.pop_back();
    }

    // P built from the w polynomial attached to xi.
    static SymPolyInHBasis from_w(const Poly& w, std::size_t n) { return {w.coeffs(), n}; }
    static SymPolyInHBasis from_xi(const Poly& xi, std::size_t n) {
        return from_w(xi_to_w(xi, static_cast<unsigned>(n)), n);
    }

    int degree() const { return static_cast<int>(w_coeffs.size()) - 1; }
    bool is_zero() const { return w_coeffs.empty(); }
};

// Evaluates P at an already rho-shifted point.
inline Rational eval_P(const SymPolyInHBasis& P, const std::vector<Rational>& mu_plus_rho) {
    if (mu_plus_rho.size() != P.rank)
        throw std::invalid_argument("eval_P: point has " + std::to_string(mu_plus_rho.size()) +
                                    " coordinates, rank is " + std::to_string(P.rank));
    if (P.is_zero()) return 0;
    auto h = complete_homogeneous_all(static_cast<unsigned>(P.degree()), mu_plus_rho);
    Rational s = 0;
    for (std::size_t k = 0; k < P.w_coeffs.size(); ++k) s += P.w_coeffs[k] * h[k];
    return s;
}

// P(mu) in the plain-coordinate sense, i.e. evaluated at mu + rho.
inline Rational P_of(const SymPolyInHBasis& P, const Weight& mu) {
    return eval_P(P, plus_rho(mu).coords());
}

}  // namespace icalg
