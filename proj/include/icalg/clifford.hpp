#pragma once

/*
 * The Clifford algebra C(V) of V = h^* + h with the form
 * <x + y, x' + y'> = (x, y') + (x', y), its spin module, and the map
 * gamma : gl_n -> C(V).
 *
 * Generators are ordered x_1 < ... < x_n < y_1 < ... < y_n (bit k of a
 * monomial mask is generator k).  Normal form uses
 *
 *     v w + w v = 2 <v, w>,   <x_i, y_j> = delta_ij,  <x_i, x_j> = <y_i, y_j> = 0.
 *
 * The spin module is the left ideal C(V) u with u = y_1 ... y_n; its basis
 * x^e u is indexed by the subset mask e of {x_1, ..., x_n}.
 *
 *     gamma(E_ij) = (y_i x_j - x_j y_i) / 4
 */

#include "icalg/rational.hpp"
#include "icalg/uea.hpp"
#include "icalg/weights.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace icalg {

class CliffordElement {
public:
    using Mask = std::uint32_t;

    explicit CliffordElement(std::size_t n = 1) : n_(n) {
        if (n < 1 || n > 15) throw std::invalid_argument("CliffordElement: unsupported rank");
    }

    static CliffordElement scalar(std::size_t n, const Rational& c) {
        CliffordElement e(n);
        detail::add_to(e.terms_, Mask{0}, c);
        return e;
    }
    // Generator with index 0..2n-1 (x's first).
    static CliffordElement generator(std::size_t n, std::size_t idx) {
        CliffordElement e(n);
        if (idx >= 2 * n) throw std::out_of_range("CliffordElement::generator");
        e.terms_[Mask{1} << idx] = 1;
        return e;
    }
    static CliffordElement x(std::size_t n, std::size_t i) { return generator(n, i); }
    static CliffordElement y(std::size_t n, std::size_t i) { return generator(n, n + i); }

    // Embeds a vector of V given in the (x, y) basis.
    static CliffordElement from_vector(const VVec& v) {
        const std::size_t n = v.size() / 2;
        CliffordElement e(n);
        for (std::size_t k = 0; k < v.size(); ++k) detail::add_to(e.terms_, Mask{1} << k, v[k]);
        return e;
    }

    std::size_t rank() const { return n_; }
    const std::map<Mask, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(Mask m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // <g, h> for generator indices.
    Rational form(std::size_t g, std::size_t h) const {
        if (g > h) std::swap(g, h);
        return (g < n_ && h == g + n_) ? Rational(1) : Rational(0);
    }

    CliffordElement& operator+=(const CliffordElement& o) {
        check(o);
        for (const auto& [m, c] : o.terms_) detail::add_to(terms_, m, c);
        return *this;
    }
    CliffordElement& operator-=(const CliffordElement& o) {
        check(o);
        for (const auto& [m, c] : o.terms_) detail::add_to(terms_, m, Rational(-c));
        return *this;
    }
    CliffordElement& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }
    friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
    friend CliffordElement operator-(CliffordElement a, const CliffordElement& b) { return a -= b; }
    friend CliffordElement operator*(CliffordElement a, const Rational& s) { return a *= s; }
    friend CliffordElement operator*(const Rational& s, CliffordElement a) { return a *= s; }

    friend CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) {
        a.check(b);
        CliffordElement out(a.n_);
        for (const auto& [mb, cb] : b.terms_) {
            // a * (g_1 g_2 ... g_k) = ((a g_1) g_2) ... g_k
            std::map<Mask, Rational> acc = a.terms_;
            for (std::size_t g = 0; g < 2 * a.n_; ++g) {
                if (!(mb >> g & 1)) continue;
                std::map<Mask, Rational> next;
                for (const auto& [m, c] : acc) a.times_generator(m, g, c, next);
                acc = std::move(next);
            }
            for (const auto& [m, c] : acc) detail::add_to(out.terms_, m, c * cb);
        }
        return out;
    }

    friend bool operator==(const CliffordElement&, const CliffordElement&) = default;

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += "(" + to_string(c) + ")";
            if (m == 0) out += "1";
            for (std::size_t g = 0; g < 2 * n_; ++g)
                if (m >> g & 1) out += v_name(n_, g);
        }
        return out;
    }

private:
    void check(const CliffordElement& o) const {
        if (o.n_ != n_) throw std::invalid_argument("CliffordElement: rank mismatch");
    }

    // Accumulates c * (monomial m) * (generator g) into out.  Moving g left
    // past a larger generator h uses h g = -g h + 2 <h, g>.
    void times_generator(Mask m, std::size_t g, const Rational& c, std::map<Mask, Rational>& out) const {
        if (m == 0 || static_cast<std::size_t>(std::bit_width(m) - 1) < g) {
            detail::add_to(out, m | (Mask{1} << g), c);
            return;
        }
        const std::size_t top = static_cast<std::size_t>(std::bit_width(m) - 1);
        const Mask rest = m & ~(Mask{1} << top);
        if (top == g) {
            detail::add_to(out, rest, c * form(g, g));
            return;
        }
        // (rest) top g = -(rest g) top + 2<top, g> rest; every monomial of
        // rest * g is below `top`, so appending top keeps normal order.
        std::map<Mask, Rational> tmp;
        times_generator(rest, g, c, tmp);
        for (const auto& [mm, cc] : tmp) detail::add_to(out, mm | (Mask{1} << top), Rational(-cc));
        Rational f = form(top, g);
        if (f != 0) detail::add_to(out, rest, 2 * c * f);
    }

    std::size_t n_;
    std::map<Mask, Rational> terms_;
};

inline CliffordElement clifford_multiply(const CliffordElement& a, const CliffordElement& b) { return a * b; }

inline CliffordElement clifford_commutator(const CliffordElement& a, const CliffordElement& b) {
    return a * b - b * a;
}

// gamma(E_ij) = (y_i x_j - x_j y_i)/4, 0-based indices.
inline CliffordElement gamma_E(std::size_t i, std::size_t j, std::size_t n) {
    if (i >= n || j >= n) throw std::out_of_range("gamma_E: index out of range");
    auto yi = CliffordElement::y(n, i), xj = CliffordElement::x(n, j);
    return (yi * xj - xj * yi) * Rational(1, 4);
}

// Linear extension of gamma to U(gl_n) elements of degree at most one.
inline CliffordElement gamma_linear(const UEAElement& a, std::size_t n) {
    CliffordElement out(n);
    for (const auto& [m, c] : a.terms()) {
        if (m.empty())
            out += CliffordElement::scalar(n, c);
        else if (m.size() == 1)
            out += gamma_E(m[0].i, m[0].j, n) * c;
        else
            throw std::invalid_argument("gamma_linear: element is not in gl_n + scalars");
    }
    return out;
}

// sum_{i,j} v_i v_j gamma(E_ij) for a rational unit vector v.
inline CliffordElement gamma_rank_one(const std::vector<Rational>& v) {
    const std::size_t n = v.size();
    Rational norm = 0;
    for (const auto& c : v) norm += c * c;
    if (norm != 1) throw std::invalid_argument("gamma_rank_one: vector is not a unit vector");
    CliffordElement out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (v[i] * v[j] != 0) out += gamma_E(i, j, n) * (v[i] * v[j]);
    return out;
}

// Vector of the spin module in the basis x^e u, keyed by the subset mask e.
class SpinVector {
public:
    using Mask = std::uint32_t;

    explicit SpinVector(std::size_t n = 1) : n_(n) {}

    static SpinVector basis(std::size_t n, Mask e) {
        SpinVector s(n);
        s.terms_[e] = 1;
        return s;
    }

    std::size_t rank() const { return n_; }
    const std::map<Mask, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(Mask e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    void add(Mask e, const Rational& c) { detail::add_to(terms_, e, c); }

    // The representative x^e y_1 ... y_n in C(V).
    CliffordElement representative() const {
        CliffordElement out(n_);
        const Mask u = ((Mask{1} << n_) - 1) << n_;
        for (const auto& [e, c] : terms_) out += monomial(e | u) * c;
        return out;
    }

    friend bool operator==(const SpinVector&, const SpinVector&) = default;

private:
    CliffordElement monomial(Mask m) const {
        CliffordElement e = CliffordElement::scalar(n_, 1);
        for (std::size_t g = 0; g < 2 * n_; ++g)
            if (m >> g & 1) e = e * CliffordElement::generator(n_, g);
        return e;
    }

    std::size_t n_;
    std::map<Mask, Rational> terms_;
};

// c acting on s: multiply in C(V) and read the result back in the x^e u
// basis.  Throws if the product leaves the left ideal, which would mean
// y_i u != 0 somewhere.
inline SpinVector spin_action(const CliffordElement& c, const SpinVector& s) {
    const std::size_t n = s.rank();
    if (c.rank() != n) throw std::invalid_argument("spin_action: rank mismatch");
    const CliffordElement::Mask u = ((CliffordElement::Mask{1} << n) - 1) << n;
    CliffordElement prod = c * s.representative();
    SpinVector out(n);
    for (const auto& [m, coef] : prod.terms()) {
        if ((m & u) != u)
            throw std::logic_error("spin_action: product left the spin ideal at monomial " +
                                   std::to_string(m));
        out.add(m & ~u, coef);
    }
    return out;
}

// Matrix of c on S in the subset basis: column e holds c (x^e u).
inline std::vector<std::vector<Rational>> spin_matrix(const CliffordElement& c) {
    const std::size_t n = c.rank();
    const std::size_t dim = std::size_t{1} << n;
    std::vector<std::vector<Rational>> M(dim, std::vector<Rational>(dim));
    for (std::size_t e = 0; e < dim; ++e) {
        SpinVector img = spin_action(c, SpinVector::basis(n, static_cast<SpinVector::Mask>(e)));
        for (const auto& [r, coef] : img.terms()) M[r][e] = coef;
    }
    return M;
}

// Weights of S under gamma(E_11), ..., gamma(E_nn), read off the subset
// basis after checking that every gamma(E_ii) acts diagonally on it.
inline std::vector<std::pair<Weight, std::size_t>> spin_weights(std::size_t n) {
    const std::size_t dim = std::size_t{1} << n;
    std::vector<std::vector<std::vector<Rational>>> diag;
    for (std::size_t i = 0; i < n; ++i) diag.push_back(spin_matrix(gamma_E(i, i, n)));
    std::map<Weight, std::size_t> mult;
    for (std::size_t e = 0; e < dim; ++e) {
        std::vector<Rational> wt(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t r = 0; r < dim; ++r)
                if (r != e && diag[i][r][e] != 0)
                    throw std::logic_error("spin_weights: gamma(E_ii) is not diagonal on the subset basis");
            wt[i] = diag[i][e][e];
        }
        ++mult[Weight(std::move(wt))];
    }
    return {mult.begin(), mult.end()};
}

// [gamma(E_ij), gamma(E_kl)] = gamma([E_ij, E_kl]) for all generator pairs.
inline CheckReport gamma_lie_hom_check(std::size_t n) {
    CheckReport rep;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    auto lhs = clifford_commutator(gamma_E(i, j, n), gamma_E(k, l, n));
                    auto bracket = commutator(UEAElement::gen(static_cast<unsigned>(i), static_cast<unsigned>(j)),
                                              UEAElement::gen(static_cast<unsigned>(k), static_cast<unsigned>(l)));
                    auto rhs = gamma_linear(bracket, n);
                    ++rep.checked;
                    if (!(lhs == rhs))
                        rep.fail("[gamma(E" + std::to_string(i + 1) + std::to_string(j + 1) + "), gamma(E" +
                                 std::to_string(k + 1) + std::to_string(l + 1) + ")]: " + lhs.str() +
                                 " != " + rhs.str());
                }
    return rep;
}

// [gamma(E_ij), v] = E_ij . v inside C(V) for every generator and basis v.
inline CheckReport gamma_action_check(std::size_t n) {
    CheckReport rep;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t b = 0; b < 2 * n; ++b) {
                auto lhs = clifford_commutator(gamma_E(i, j, n), CliffordElement::generator(n, b));
                Gen g{static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)};
                auto rhs = CliffordElement::from_vector(act_gen(g, basis_vector(n, b)));
                ++rep.checked;
                if (!(lhs == rhs))
                    rep.fail("[gamma(E" + std::to_string(i + 1) + std::to_string(j + 1) + "), " + v_name(n, b) +
                             "]: " + lhs.str() + " != " + rhs.str());
            }
    return rep;
}

// Substitutes gamma := gamma_rank_one(v) and z := each sample point into
// p(z) gamma = f(z + gamma) + p(z)/2 - f(z + 1/2) with nabla_{1/2} f = p,
// and compares both sides in C(V).
inline CheckReport clifford_twisted_identity_check(const Poly& p, const std::vector<Rational>& v,
                                                   const std::vector<Rational>& samples) {
    const std::size_t n = v.size();
    const Rational half(1, 2);
    const Poly f = nabla_inverse(half, p);
    const CliffordElement g = gamma_rank_one(v);
    CheckReport rep;
    for (const Rational& z : samples) {
        CliffordElement lhs = g * p(z);
        // f(z + gamma) by Horner in C(V).
        CliffordElement zg = CliffordElement::scalar(n, z) + g;
        CliffordElement fz(n);
        for (int k = f.degree(); k >= 0; --k) fz = fz * zg + CliffordElement::scalar(n, f[k]);
        CliffordElement rhs = fz + CliffordElement::scalar(n, p(z) * half - f(z + half));
        ++rep.checked;
        if (!(lhs == rhs)) rep.fail("p = " + p.str() + " at z = " + to_string(z));
    }
    return rep;
}

}  // namespace icalg
