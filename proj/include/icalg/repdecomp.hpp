#pragma once

/*
 * Finite-dimensional irreducibles L(lambda), their gl_n decompositions,
 * the tensor product with the spin module and the Dirac cohomology.
 *
 * For dominant lambda, membership in the finite-dimensional set asks for a
 * nonnegative integer nu_n with P(lambda) = P(lambda - (nu_n + 1) e_n).  Then
 *
 *     L(lambda)     = sum_{0 <= nu' <= nu} V_{lambda - nu'}
 *     L(lambda) x S = sum_{nu'} sum_{s in {+-1/2}^n} V_{lambda - nu' + s}
 *     H^D           = those V_mu of L x S with P(lambda) = P(mu - (1/2, ..., 1/2))
 *
 * The middle line is kept formal: a sign vector may produce a weight mu with
 * mu + rho singular.  Such a summand has formal dimension zero; it is kept
 * (flagged by is_rho_singular) so that the multiplicity tables count every
 * (nu', s) pair, and dropped by ModuleDecomp::regular_part().
 */

#include "icalg/poly.hpp"
#include "icalg/rational.hpp"
#include "icalg/weights.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace icalg {

// Raised when lambda is not the highest weight of a finite-dimensional
// irreducible module.
class NotInLambdaTilde : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A finite multiset of gl_n highest weights, iterated in lexicographic order
// of the coordinates (equivalently, of the rho-shifted coordinates).
class ModuleDecomp {
public:
    using Multiplicity = std::uint64_t;

    explicit ModuleDecomp(std::size_t rank = 1) : rank_(rank) {}

    std::size_t rank() const { return rank_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }
    const std::map<Weight, Multiplicity>& entries() const { return entries_; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    void add(const Weight& mu, Multiplicity m = 1) {
        if (mu.rank() != rank_) throw std::invalid_argument("ModuleDecomp: rank mismatch");
        if (m == 0) return;
        if (!is_dominant(mu) && !is_rho_singular(mu))
            throw std::logic_error("ModuleDecomp: weight " + mu.str() +
                                   " is neither dominant nor rho-singular");
        entries_[mu] += m;
    }

    Multiplicity multiplicity(const Weight& mu) const {
        auto it = entries_.find(mu);
        return it == entries_.end() ? 0 : it->second;
    }

    // Sum of multiplicity times formal dimension.
    Rational total_dimension() const {
        Rational d = 0;
        for (const auto& [mu, m] : entries_) d += formal_dim(mu) * Rational(static_cast<unsigned long>(m));
        return d;
    }

    Multiplicity total_multiplicity() const {
        Multiplicity s = 0;
        for (const auto& [mu, m] : entries_) s += m;
        return s;
    }

    // Drops the zero-dimensional (rho-singular) formal summands.
    ModuleDecomp regular_part() const {
        ModuleDecomp out(rank_);
        for (const auto& [mu, m] : entries_)
            if (is_dominant(mu)) out.entries_[mu] = m;
        return out;
    }

    bool contains(const ModuleDecomp& sub) const {
        for (const auto& [mu, m] : sub.entries_)
            if (multiplicity(mu) < m) return false;
        return true;
    }

    friend bool operator==(const ModuleDecomp& a, const ModuleDecomp& b) {
        return a.rank_ == b.rank_ && a.entries_ == b.entries_;
    }

    std::string str() const {
        std::string out;
        for (const auto& [mu, m] : entries_) {
            if (!out.empty()) out += " + ";
            if (m != 1) out += std::to_string(m);
            out += "V" + mu.str();
        }
        return out.empty() ? "0" : out;
    }

private:
    std::size_t rank_;
    std::map<Weight, Multiplicity> entries_;
};

struct NuVector {
    std::vector<std::uint64_t> nu;

    std::size_t size() const { return nu.size(); }
    std::uint64_t operator[](std::size_t i) const { return nu[i]; }
    friend bool operator==(const NuVector&, const NuVector&) = default;
};

namespace detail {

// q(t) = P(lambda) - P(lambda - t e_n) as a polynomial in t.
inline Poly last_coordinate_drop(const SymPolyInHBasis& P, const Weight& lambda) {
    const std::size_t n = lambda.rank();
    const std::vector<Rational> point = plus_rho(lambda).coords();
    const Rational p_lambda = eval_P(P, point);
    if (P.is_zero()) return {};

    const unsigned kmax = static_cast<unsigned>(P.degree());
    std::vector<Rational> rest(point.begin(), point.end() - 1);
    auto h_rest = complete_homogeneous_all(kmax, rest);
    // (c - t)^j for the shifted last coordinate c.
    const Poly lin({point[n - 1], Rational(-1)});
    std::vector<Poly> powers(kmax + 1);
    powers[0] = Poly::constant(1);
    for (unsigned j = 1; j <= kmax; ++j) powers[j] = powers[j - 1] * lin;

    // h_k(rest, c - t) = sum_j h_{k-j}(rest) (c - t)^j
    Poly shifted;
    for (unsigned k = 0; k <= kmax; ++k) {
        if (P.w_coeffs[k] == 0) continue;
        Poly hk;
        for (unsigned j = 0; j <= k; ++j) hk += powers[j] * h_rest[k - j];
        shifted += hk * P.w_coeffs[k];
    }
    return Poly::constant(p_lambda) - shifted;
}

// Positive integer roots of q in increasing order, by the rational root
// theorem on the denominator-cleared polynomial.
inline std::vector<Integer> positive_integer_roots(const Poly& q) {
    std::vector<Integer> roots;
    if (q.is_zero()) return roots;

    Integer den_lcm = 1;
    for (const auto& c : q.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> a;
    for (const auto& c : q.coeffs()) a.push_back(Rational(c * den_lcm).get_num());

    std::size_t low = 0;
    while (a[low] == 0) ++low;
    a.erase(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(low));
    if (a.size() == 1) return roots;

    const Integer a0 = abs(a.front());
    const Integer ad = abs(a.back());
    // Cauchy bound: every root r satisfies |r| <= 1 + max_i |a_i / a_d|.
    Integer bound = 0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        Integer b = abs(a[i]) / ad + 1;
        if (b > bound) bound = b;
    }
    bound += 1;

    std::vector<Integer> candidates;
    for (Integer d = 1; d <= bound && d * d <= a0; ++d) {
        if (a0 % d != 0) continue;
        candidates.push_back(d);
        Integer e = a0 / d;
        if (e != d && e <= bound) candidates.push_back(e);
    }
    std::sort(candidates.begin(), candidates.end());
    for (const auto& r : candidates)
        if (q(Rational(r)) == 0) roots.push_back(r);
    return roots;
}

inline std::uint64_t to_u64(const Integer& z) {
    if (sgn(z) < 0 || !z.fits_ulong_p())
        throw std::overflow_error("nu component " + z.get_str() + " does not fit in 64 bits");
    return z.get_ui();
}

}  // namespace detail

// Outcome of the membership test on the last coordinate.
struct Membership {
    std::optional<std::uint64_t> nu_last;
    // P(lambda - t e_n) does not depend on t at all.
    bool degenerate = false;

    explicit operator bool() const { return nu_last.has_value(); }
};

inline Membership membership(const SymPolyInHBasis& P, const Weight& lambda) {
    if (lambda.rank() != P.rank) throw std::invalid_argument("membership: rank mismatch");
    if (!is_dominant(lambda))
        throw std::invalid_argument("membership: weight " + lambda.str() + " is not dominant");
    Membership out;
    Poly q = detail::last_coordinate_drop(P, lambda);
    if (q.is_zero()) {
        out.degenerate = true;
        out.nu_last = 0;
        return out;
    }
    auto roots = detail::positive_integer_roots(q);
    if (!roots.empty()) out.nu_last = detail::to_u64(roots.front() - 1);
    return out;
}

// Smallest nu_n >= 0 with P(lambda) = P(lambda - (nu_n + 1) e_n), if any.
inline std::optional<std::uint64_t> lambda_tilde_member(const SymPolyInHBasis& P,
                                                        const Weight& lambda) {
    return membership(P, lambda).nu_last;
}

inline NuVector nu_vector(const SymPolyInHBasis& P, const Weight& lambda) {
    auto last = lambda_tilde_member(P, lambda);
    if (!last)
        throw NotInLambdaTilde("not in Lambda-tilde: no positive integer root of q(t) for lambda = " +
                               lambda.str());
    const std::size_t n = lambda.rank();
    const Rational p_lambda = P_of(P, lambda);
    NuVector out;
    out.nu.resize(n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        // Terminates: lowering lambda_i eventually breaks lambda_i >= lambda_{i+1}.
        std::uint64_t k = 0;
        while (true) {
            Weight lowered = lambda - Weight::unit(n, i, Rational(static_cast<unsigned long>(k + 1)));
            if (!is_dominant(lowered) || P_of(P, lowered) == p_lambda) break;
            ++k;
        }
        out.nu[i] = k;
    }
    out.nu[n - 1] = *last;
    return out;
}

// Calls f(offset) for every offset vector 0 <= offset <= bounds.
template <typename F>
void for_each_in_box(const std::vector<std::uint64_t>& bounds, F&& f) {
    std::vector<std::uint64_t> cur(bounds.size(), 0);
    while (true) {
        f(static_cast<const std::vector<std::uint64_t>&>(cur));
        std::size_t i = 0;
        for (; i < cur.size(); ++i) {
            if (cur[i] < bounds[i]) {
                ++cur[i];
                break;
            }
            cur[i] = 0;
        }
        if (i == cur.size()) return;
    }
}

inline ModuleDecomp L_decomposition(const Weight& lambda, const NuVector& nu) {
    if (nu.size() != lambda.rank()) throw std::invalid_argument("L_decomposition: rank mismatch");
    if (!is_dominant(lambda))
        throw std::invalid_argument("L_decomposition: weight " + lambda.str() + " is not dominant");
    const std::size_t n = lambda.rank();
    ModuleDecomp out(n);
    for_each_in_box(nu.nu, [&](const std::vector<std::uint64_t>& off) {
        Weight mu = lambda;
        for (std::size_t i = 0; i < n; ++i) mu[i] -= Rational(static_cast<unsigned long>(off[i]));
        if (!is_dominant(mu))
            throw std::logic_error("L_decomposition: box weight " + mu.str() + " is not dominant");
        out.add(mu);
    });
    return out;
}

// Every weight sigma of L shifted by every sign vector in {+-1/2}^n.
inline ModuleDecomp tensor_with_spin(const ModuleDecomp& L) {
    const std::size_t n = L.rank();
    const Rational half(1, 2);
    ModuleDecomp out(n);
    for (const auto& [sigma, m] : L) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            Weight mu = sigma;
            for (std::size_t i = 0; i < n; ++i) mu[i] += (mask >> i & 1) ? Rational(-half) : half;
            out.add(mu, m);
        }
    }
    return out;
}

// The highest-weight summands guaranteed to lie in ker D^2 with multiplicity one.
inline std::vector<Weight> guaranteed_classes(const Weight& lambda, const NuVector& nu) {
    const std::size_t n = lambda.rank();
    const Rational half(1, 2);
    const Weight halves = Weight::constant(n, half);
    std::vector<Weight> out;
    out.push_back(lambda + halves);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        Weight companion = lambda - Weight::unit(n, i, Rational(static_cast<unsigned long>(nu[i] + 1)));
        if (!is_dominant(companion)) continue;
        Weight li = lambda + halves;
        li[i] = lambda[i] - Rational(static_cast<unsigned long>(nu[i])) - half;
        out.push_back(li);
    }
    Weight last = lambda + halves;
    last[n - 1] = lambda[n - 1] - Rational(static_cast<unsigned long>(nu[n - 1])) - half;
    out.push_back(last);
    return out;
}

inline std::vector<Weight> guaranteed_classes(const SymPolyInHBasis& P, const Weight& lambda) {
    return guaranteed_classes(lambda, nu_vector(P, lambda));
}

// Everything the pipeline derives for one highest weight.
struct DiracAnalysis {
    Weight lambda;
    Rational P_lambda;
    bool degenerate = false;
    NuVector nu;
    ModuleDecomp L;
    ModuleDecomp LS;
    ModuleDecomp cohomology;
    std::vector<Weight> guaranteed;
};

inline DiracAnalysis analyze(const SymPolyInHBasis& P, const Weight& lambda) {
    Membership mem = membership(P, lambda);
    if (!mem)
        throw NotInLambdaTilde("not in Lambda-tilde: no positive integer root of q(t) for lambda = " +
                               lambda.str());
    const std::size_t n = lambda.rank();
    const Weight halves = Weight::constant(n, Rational(1, 2));
    DiracAnalysis a;
    a.lambda = lambda;
    a.P_lambda = P_of(P, lambda);
    a.degenerate = mem.degenerate;
    a.nu = nu_vector(P, lambda);
    a.L = L_decomposition(lambda, a.nu);
    a.LS = tensor_with_spin(a.L);
    a.cohomology = ModuleDecomp(n);
    for (const auto& [mu, m] : a.LS)
        if (P_of(P, mu - halves) == a.P_lambda) a.cohomology.add(mu, m);
    a.guaranteed = guaranteed_classes(lambda, a.nu);
    return a;
}

inline ModuleDecomp dirac_cohomology(const SymPolyInHBasis& P, const Weight& lambda) {
    return analyze(P, lambda).cohomology;
}

}  // namespace icalg
