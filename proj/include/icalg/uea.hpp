#pragma once

/*
 * Symbolic U(gl_n): PBW normal form, coproduct, the action on
 * V = h + h^*, the deformation map kappa built from the r_m series,
 * and machine checks of H-linearity and the Jacobi identities.
 *
 * Generators E_ij (0-based here) are ordered lexicographically by (i, j); a
 * PBW monomial is a non-decreasing word in that order.  Rewriting uses
 *
 *     [E_ij, E_kl] = delta_jk E_il - delta_li E_kj.
 *
 * V has basis (x_1..x_n, y_1..y_n), stored at indices 0..n-1 and n..2n-1.
 * E_ij y_k = delta_jk y_i and, contragrediently, E_ij x_k = -delta_ik x_j.
 *
 * The Jacobi identity is checked in the free module V (x) H, using
 * [h, v] = (h_(1) |> v) h_(2) with h |> v = h.v - eps(h) v.
 */

#include "icalg/poly.hpp"
#include "icalg/rational.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace icalg {

struct Gen {
    std::uint8_t i = 0;
    std::uint8_t j = 0;
    friend auto operator<=>(const Gen&, const Gen&) = default;
};

using Monomial = std::vector<Gen>;

inline std::string monomial_str(const Monomial& m) {
    if (m.empty()) return "1";
    std::string out;
    for (const Gen& g : m) out += "E" + std::to_string(g.i + 1) + std::to_string(g.j + 1);
    return out;
}

namespace detail {

template <typename Key>
void add_to(std::map<Key, Rational>& terms, const Key& k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

// Rewrites c * word into PBW normal form and accumulates it into `out`.
inline void normalize_word(const Monomial& word, const Rational& c, std::map<Monomial, Rational>& out) {
    std::vector<std::pair<Monomial, Rational>> work{{word, c}};
    while (!work.empty()) {
        auto [w, coeff] = std::move(work.back());
        work.pop_back();
        std::size_t p = 0;
        while (p + 1 < w.size() && !(w[p + 1] < w[p])) ++p;
        if (p + 1 >= w.size()) {
            add_to(out, w, coeff);
            continue;
        }
        const Gen a = w[p], b = w[p + 1];
        Monomial swapped = w;
        std::swap(swapped[p], swapped[p + 1]);
        work.emplace_back(std::move(swapped), coeff);
        // ab = ba + [a, b]
        auto contract = [&](Gen g, const Rational& s) {
            Monomial shorter;
            shorter.reserve(w.size() - 1);
            shorter.insert(shorter.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
            shorter.push_back(g);
            shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(p) + 2, w.end());
            work.emplace_back(std::move(shorter), s);
        };
        if (a.j == b.i) contract(Gen{a.i, b.j}, coeff);
        if (b.j == a.i) contract(Gen{b.i, a.j}, -coeff);
    }
}

}  // namespace detail

// An element of U(gl_n) as a combination of PBW monomials.
class UEAElement {
public:
    UEAElement() = default;

    static UEAElement one() { return scalar(1); }
    static UEAElement scalar(const Rational& c) {
        UEAElement e;
        detail::add_to(e.terms_, Monomial{}, c);
        return e;
    }
    // E_ij with 0-based indices.
    static UEAElement gen(unsigned i, unsigned j) {
        UEAElement e;
        e.terms_[Monomial{Gen{static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)}}] = 1;
        return e;
    }
    // The product of the word in the given order, normalized.
    static UEAElement word(const Monomial& w, const Rational& c = 1) {
        UEAElement e;
        detail::normalize_word(w, c, e.terms_);
        return e;
    }

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    void add_term(const Monomial& m, const Rational& c) {
        if (!std::is_sorted(m.begin(), m.end()))
            throw std::invalid_argument("UEAElement::add_term: monomial not in PBW order");
        detail::add_to(terms_, m, c);
    }

    UEAElement& operator+=(const UEAElement& o) {
        for (const auto& [m, c] : o.terms_) detail::add_to(terms_, m, c);
        return *this;
    }
    UEAElement& operator-=(const UEAElement& o) {
        for (const auto& [m, c] : o.terms_) detail::add_to(terms_, m, Rational(-c));
        return *this;
    }
    UEAElement& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }
    friend UEAElement operator+(UEAElement a, const UEAElement& b) { return a += b; }
    friend UEAElement operator-(UEAElement a, const UEAElement& b) { return a -= b; }
    friend UEAElement operator*(UEAElement a, const Rational& s) { return a *= s; }
    friend UEAElement operator*(const Rational& s, UEAElement a) { return a *= s; }

    friend UEAElement operator*(const UEAElement& a, const UEAElement& b) {
        UEAElement out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial w = ma;
                w.insert(w.end(), mb.begin(), mb.end());
                detail::normalize_word(w, ca * cb, out.terms_);
            }
        return out;
    }

    friend bool operator==(const UEAElement&, const UEAElement&) = default;

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += "(" + to_string(c) + ")" + monomial_str(m);
        }
        return out;
    }

private:
    std::map<Monomial, Rational> terms_;
};

inline UEAElement uea_multiply(const UEAElement& a, const UEAElement& b) { return a * b; }

inline UEAElement commutator(const UEAElement& a, const UEAElement& b) { return a * b - b * a; }

// Iterated coproduct into `slots` tensor factors.  Each generator is
// primitive, so for a PBW monomial this is the sum over all ways of
// distributing its letters among the slots; every part stays in PBW order.
inline std::map<std::vector<Monomial>, Rational> coproduct_iter(const UEAElement& a, std::size_t slots) {
    if (slots < 1) throw std::invalid_argument("coproduct_iter: need at least one slot");
    std::map<std::vector<Monomial>, Rational> out;
    for (const auto& [m, c] : a.terms()) {
        std::vector<std::size_t> assign(m.size(), 0);
        while (true) {
            std::vector<Monomial> parts(slots);
            for (std::size_t p = 0; p < m.size(); ++p) parts[assign[p]].push_back(m[p]);
            detail::add_to(out, parts, c);
            std::size_t p = 0;
            for (; p < assign.size(); ++p) {
                if (++assign[p] < slots) break;
                assign[p] = 0;
            }
            if (p == assign.size()) break;
        }
    }
    return out;
}

// Delta(a) as a sum of pure tensors.
inline std::map<std::pair<Monomial, Monomial>, Rational> coproduct(const UEAElement& a) {
    std::map<std::pair<Monomial, Monomial>, Rational> out;
    for (const auto& [parts, c] : coproduct_iter(a, 2)) out[{parts[0], parts[1]}] = c;
    return out;
}

inline Rational counit(const UEAElement& a) { return a.coeff(Monomial{}); }

// A vector in V = h^* + h in the basis (x_1..x_n, y_1..y_n).
using VVec = std::vector<Rational>;

inline VVec basis_vector(std::size_t n, std::size_t idx) {
    VVec v(2 * n);
    v.at(idx) = 1;
    return v;
}
inline std::size_t x_index(std::size_t /*n*/, std::size_t i) { return i; }
inline std::size_t y_index(std::size_t n, std::size_t i) { return n + i; }

inline VVec act_gen(Gen g, const VVec& v) {
    const std::size_t n = v.size() / 2;
    VVec out(v.size());
    out[n + g.i] += v[n + g.j];  // E_ij y_j = y_i
    out[g.j] -= v[g.i];          // E_ij x_i = -x_j
    return out;
}

inline VVec act_monomial(const Monomial& m, VVec v) {
    for (auto it = m.rbegin(); it != m.rend(); ++it) v = act_gen(*it, v);
    return v;
}

inline VVec act_on_V(const UEAElement& a, const VVec& v) {
    VVec out(v.size());
    for (const auto& [m, c] : a.terms()) {
        VVec mv = act_monomial(m, v);
        for (std::size_t k = 0; k < out.size(); ++k) out[k] += c * mv[k];
    }
    return out;
}

// Commutative polynomial in the matrix coordinates a_kl (index k*n + l),
// keyed by the sorted multiset of variable indices.
using CommPoly = std::map<std::vector<std::uint8_t>, Rational>;

namespace detail {

inline CommPoly cp_mul(const CommPoly& a, const CommPoly& b) {
    CommPoly out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            std::vector<std::uint8_t> m;
            m.reserve(ma.size() + mb.size());
            std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
            add_to(out, m, ca * cb);
        }
    return out;
}

inline void cp_add(CommPoly& a, const CommPoly& b, const Rational& s = 1) {
    for (const auto& [m, c] : b) add_to(a, m, c * s);
}

}  // namespace detail

// Symmetrization S(gl_n) -> U(gl_n): the average over all orderings of the
// factors.  Distinct orderings of a multiset occur equally often, so it is
// enough to average over distinct permutations.
inline UEAElement symmetrize(Monomial factors) {
    std::sort(factors.begin(), factors.end());
    UEAElement sum;
    unsigned long count = 0;
    do {
        sum += UEAElement::word(factors);
        ++count;
    } while (std::next_permutation(factors.begin(), factors.end()));
    return sum * Rational(1, count);
}

// r_m(x_i, y_j) for all i, j: the tau^m coefficient of
// (x_i, (1 - tau A)^{-1} y_j) det(1 - tau A)^{-1}, pushed into U(gl_n) by the
// trace pairing a_kl -> E_lk and symmetrization.  Result is indexed [i][j].
inline std::vector<std::vector<UEAElement>> r_matrix(std::size_t n, unsigned m) {
    if (n < 1) throw std::invalid_argument("r_matrix: rank must be at least 1");
    using Mat = std::vector<std::vector<CommPoly>>;
    Mat identity(n, std::vector<CommPoly>(n));
    Mat A(n, std::vector<CommPoly>(n));
    for (std::size_t k = 0; k < n; ++k) {
        identity[k][k][{}] = 1;
        for (std::size_t l = 0; l < n; ++l) A[k][l][{static_cast<std::uint8_t>(k * n + l)}] = 1;
    }
    std::vector<Mat> powers{identity};
    for (unsigned a = 1; a <= m; ++a) {
        Mat next(n, std::vector<CommPoly>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    detail::cp_add(next[i][j], detail::cp_mul(powers.back()[i][k], A[k][j]));
        powers.push_back(std::move(next));
    }
    // det(1 - tau A)^{-1} = exp(sum_k tau^k tr(A^k)/k); with s_k = tr(A^k) the
    // coefficients obey e_0 = 1, e_m = (1/m) sum_{k=1}^m s_k e_{m-k}.
    std::vector<CommPoly> e(m + 1);
    e[0][{}] = 1;
    for (unsigned q = 1; q <= m; ++q) {
        for (unsigned k = 1; k <= q; ++k) {
            CommPoly trace;
            for (std::size_t i = 0; i < n; ++i) detail::cp_add(trace, powers[k][i][i]);
            detail::cp_add(e[q], detail::cp_mul(trace, e[q - k]), Rational(1, q));
        }
    }
    std::vector<std::vector<UEAElement>> r(n, std::vector<UEAElement>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            CommPoly coeff;
            for (unsigned a = 0; a <= m; ++a) detail::cp_add(coeff, detail::cp_mul(powers[a][i][j], e[m - a]));
            for (const auto& [mono, c] : coeff) {
                Monomial factors;
                for (std::uint8_t v : mono)
                    factors.push_back(Gen{static_cast<std::uint8_t>(v % n), static_cast<std::uint8_t>(v / n)});
                r[i][j] += symmetrize(factors) * c;
            }
        }
    return r;
}

// A skew map kappa : V /\ V -> U(gl_n), stored as a full (2n)x(2n) table.
class Kappa {
public:
    explicit Kappa(std::size_t n) : n_(n), table_(4 * n * n) {}

    std::size_t rank() const { return n_; }
    std::size_t dim_V() const { return 2 * n_; }

    const UEAElement& at(std::size_t a, std::size_t b) const { return table_[a * dim_V() + b]; }

    // Sets kappa(a, b) = value and kappa(b, a) = -value.
    void set(std::size_t a, std::size_t b, const UEAElement& value) {
        if (a == b && !value.is_zero()) throw std::invalid_argument("Kappa::set: kappa(v, v) must vanish");
        table_[a * dim_V() + b] = value;
        table_[b * dim_V() + a] = value * Rational(-1);
    }

    // kappa(y_j, x_i), 0-based.
    const UEAElement& yx(std::size_t j, std::size_t i) const { return at(y_index(n_, j), x_index(n_, i)); }
    void set_yx(std::size_t j, std::size_t i, const UEAElement& value) {
        set(y_index(n_, j), x_index(n_, i), value);
    }

    // Bilinear extension to arbitrary vectors.
    UEAElement operator()(const VVec& u, const VVec& v) const {
        UEAElement out;
        for (std::size_t a = 0; a < dim_V(); ++a) {
            if (u[a] == 0) continue;
            for (std::size_t b = 0; b < dim_V(); ++b) {
                if (v[b] == 0 || at(a, b).is_zero()) continue;
                out += at(a, b) * (u[a] * v[b]);
            }
        }
        return out;
    }

private:
    std::size_t n_;
    std::vector<UEAElement> table_;
};

// kappa from precomputed r-matrices: kappa(y_j, x_i) = sum_m xi_m r_m[i][j].
inline Kappa kappa_from_r(std::size_t n, const Poly& xi,
                          const std::vector<std::vector<std::vector<UEAElement>>>& r) {
    Kappa k(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            UEAElement v;
            for (int m = 0; m <= xi.degree(); ++m)
                if (xi[m] != 0) v += r.at(m)[i][j] * xi[m];
            k.set_yx(j, i, v);
        }
    return k;
}

inline std::vector<std::vector<std::vector<UEAElement>>> r_matrices(std::size_t n, int max_m) {
    std::vector<std::vector<std::vector<UEAElement>>> r;
    for (int m = 0; m <= max_m; ++m) r.push_back(r_matrix(n, static_cast<unsigned>(m)));
    return r;
}

inline Kappa kappa_of(const Poly& xi, std::size_t n) {
    return kappa_from_r(n, xi, r_matrices(n, xi.degree()));
}

// Element of Lambda^k V (x) H; the key is a strictly increasing tuple of V
// indices and a PBW monomial.
using WedgeH = std::map<std::pair<std::vector<std::uint8_t>, Monomial>, Rational>;

// (v_1, ..., v_k | h) := sum (h_(1) |> v_1) /\ ... /\ (h_(k) |> v_k) (x) h_(k+1)
// for basis vectors v_i given by index.
inline WedgeH triangle_wedge(const UEAElement& h, const std::vector<std::size_t>& vs, std::size_t n) {
    WedgeH out;
    const std::size_t k = vs.size();
    for (const auto& [parts, c] : coproduct_iter(h, k + 1)) {
        // h |> v vanishes for h = 1.
        bool dead = false;
        for (std::size_t s = 0; s < k; ++s)
            if (parts[s].empty()) dead = true;
        if (dead) continue;
        std::vector<VVec> images;
        for (std::size_t s = 0; s < k; ++s) images.push_back(act_monomial(parts[s], basis_vector(n, vs[s])));

        std::vector<std::uint8_t> idx(k, 0);
        // Expand the wedge product multilinearly.
        auto rec = [&](auto&& self, std::size_t s, const Rational& coef) -> void {
            if (s == k) {
                std::vector<std::uint8_t> sorted = idx;
                int sign = 1;
                for (std::size_t a = 0; a < k; ++a)
                    for (std::size_t b = a + 1; b < k; ++b)
                        if (sorted[a] > sorted[b]) sign = -sign;
                std::sort(sorted.begin(), sorted.end());
                detail::add_to(out, std::make_pair(sorted, parts[k]), coef * sign);
                return;
            }
            for (std::size_t b = 0; b < images[s].size(); ++b) {
                if (images[s][b] == 0) continue;
                bool repeat = false;
                for (std::size_t t = 0; t < s; ++t)
                    if (idx[t] == b) repeat = true;
                if (repeat) continue;
                idx[s] = static_cast<std::uint8_t>(b);
                self(self, s + 1, coef * images[s][b]);
            }
        };
        rec(rec, 0, c);
    }
    return out;
}

inline void wedge_add(WedgeH& acc, const WedgeH& x, const Rational& s = 1) {
    for (const auto& [k, c] : x) detail::add_to(acc, k, c * s);
}

inline std::string wedge_str(const WedgeH& w, std::size_t n) {
    if (w.empty()) return "0";
    std::string out;
    for (const auto& [key, c] : w) {
        if (!out.empty()) out += " + ";
        out += "(" + to_string(c) + ")";
        for (std::size_t t = 0; t < key.first.size(); ++t) {
            if (t) out += "^";
            std::size_t b = key.first[t];
            out += (b < n ? "x" + std::to_string(b + 1) : "y" + std::to_string(b - n + 1));
        }
        out += "(x)" + monomial_str(key.second);
    }
    return out;
}

inline std::string v_name(std::size_t n, std::size_t b) {
    return b < n ? "x" + std::to_string(b + 1) : "y" + std::to_string(b - n + 1);
}

struct CheckReport {
    bool passed = true;
    std::size_t checked = 0;
    // First failing instance, if any.
    std::string failure;

    void fail(std::string what) {
        if (passed) failure = std::move(what);
        passed = false;
    }
};

// (w|u,v) + (u|v,w) + (v|w,u) = 0 for all basis triples.
inline CheckReport jacobi_check(const Kappa& kappa) {
    const std::size_t n = kappa.rank(), d = kappa.dim_V();
    CheckReport rep;
    for (std::size_t u = 0; u < d; ++u)
        for (std::size_t v = 0; v < d; ++v)
            for (std::size_t w = 0; w < d; ++w) {
                WedgeH sum = triangle_wedge(kappa.at(u, v), {w}, n);
                wedge_add(sum, triangle_wedge(kappa.at(v, w), {u}, n));
                wedge_add(sum, triangle_wedge(kappa.at(w, u), {v}, n));
                ++rep.checked;
                if (!sum.empty() && rep.passed)
                    rep.fail("triple (" + v_name(n, u) + ", " + v_name(n, v) + ", " + v_name(n, w) +
                             "): residual " + wedge_str(sum, n));
            }
    return rep;
}

// (z,u|x,y) = (x,y|z,u) and (z,u,v|x,y) = 0 for all basis tuples.
inline CheckReport higher_jacobi_checks(const Kappa& kappa) {
    const std::size_t n = kappa.rank(), d = kappa.dim_V();
    CheckReport rep;
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y)
            for (std::size_t z = 0; z < d; ++z)
                for (std::size_t u = 0; u < d; ++u) {
                    WedgeH diff = triangle_wedge(kappa.at(x, y), {z, u}, n);
                    wedge_add(diff, triangle_wedge(kappa.at(z, u), {x, y}, n), -1);
                    ++rep.checked;
                    if (!diff.empty())
                        rep.fail("rank-2 identity at (" + v_name(n, z) + "," + v_name(n, u) + "|" +
                                 v_name(n, x) + "," + v_name(n, y) + "): residual " + wedge_str(diff, n));
                    for (std::size_t v = 0; v < d; ++v) {
                        WedgeH r3 = triangle_wedge(kappa.at(x, y), {z, u, v}, n);
                        ++rep.checked;
                        if (!r3.empty())
                            rep.fail("rank-3 identity at (" + v_name(n, z) + "," + v_name(n, u) + "," +
                                     v_name(n, v) + "|" + v_name(n, x) + "," + v_name(n, y) +
                                     "): residual " + wedge_str(r3, n));
                    }
                }
    return rep;
}

// [E_ij, kappa(v, w)] = kappa(E_ij v, w) + kappa(v, E_ij w).
inline CheckReport h_linearity_check(const Kappa& kappa) {
    const std::size_t n = kappa.rank(), d = kappa.dim_V();
    CheckReport rep;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const UEAElement E = UEAElement::gen(static_cast<unsigned>(i), static_cast<unsigned>(j));
            const Gen g{static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)};
            for (std::size_t a = 0; a < d; ++a)
                for (std::size_t b = 0; b < d; ++b) {
                    VVec va = basis_vector(n, a), vb = basis_vector(n, b);
                    UEAElement lhs = commutator(E, kappa.at(a, b));
                    UEAElement rhs = kappa(act_gen(g, va), vb) + kappa(va, act_gen(g, vb));
                    ++rep.checked;
                    if (!(lhs == rhs))
                        rep.fail("E" + std::to_string(i + 1) + std::to_string(j + 1) + " on (" + v_name(n, a) +
                                 ", " + v_name(n, b) + "): " + lhs.str() + " != " + rhs.str());
                }
        }
    return rep;
}

}  // namespace icalg
