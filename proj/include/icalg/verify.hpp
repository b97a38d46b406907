#pragma once

/*
 * Property suites run by `icalg verify` and by the acceptance binary.
 */

#include "icalg/clifford.hpp"
#include "icalg/oracle_rank1.hpp"
#include "icalg/poly.hpp"
#include "icalg/repdecomp.hpp"
#include "icalg/uea.hpp"
#include "icalg/weights.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <future>
#include <random>
#include <string>
#include <vector>

namespace icalg {

struct CheckResult {
    CheckResult() = default;
    CheckResult(std::string s, std::string n) : suite(std::move(s)), name(std::move(n)) {}

    std::string suite;
    std::string name;
    bool passed = true;
    std::size_t checked = 0;
    std::string detail;
};

struct VerifyOptions {
    std::size_t max_n = 2;
    int max_deg = 2;
    unsigned jobs = 1;
    std::uint64_t seed = 20240611;
};

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, long num_max = 5, long den_max = 4) {
    std::uniform_int_distribution<long> num(-num_max, num_max), den(1, den_max);
    return frac(num(rng), den(rng));
}

inline Poly random_poly(Rng& rng, int deg, long num_max = 5, long den_max = 4) {
    std::vector<Rational> cs(static_cast<std::size_t>(deg) + 1);
    for (auto& c : cs) c = random_rational(rng, num_max, den_max);
    return Poly(std::move(cs));
}

namespace detail {

// Runs tasks with at most `jobs` in flight; results keep task order.
inline std::vector<CheckResult> run_tasks(const std::vector<std::function<CheckResult()>>& tasks, unsigned jobs) {
    std::vector<CheckResult> out(tasks.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) out[i] = tasks[i]();
        return out;
    }
    for (std::size_t start = 0; start < tasks.size(); start += jobs) {
        std::vector<std::future<CheckResult>> batch;
        const std::size_t end = std::min(tasks.size(), start + jobs);
        for (std::size_t i = start; i < end; ++i) batch.push_back(std::async(std::launch::async, tasks[i]));
        for (std::size_t i = start; i < end; ++i) out[i] = batch[i - start].get();
    }
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------- poly

inline std::vector<CheckResult> verify_poly(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    Rng rng(opt.seed);
    {
        CheckResult r{"poly", "bernoulli forward difference k<=12"};
        for (unsigned k = 0; k <= 12; ++k) {
            ++r.checked;
            Poly expect = k == 0 ? Poly{} : Poly::monomial(k - 1, k);
            if (!(nabla(1, bernoulli(k)) == expect) || bernoulli(k).degree() != static_cast<int>(k)) {
                r.passed = false;
                r.detail = "k = " + std::to_string(k);
                break;
            }
        }
        out.push_back(r);
    }
    {
        CheckResult r{"poly", "nabla inverse round trip"};
        const std::vector<Rational> eps{0, Rational(1, 2), 1, Rational(-3, 7)};
        std::uniform_int_distribution<int> deg(0, 10);
        for (const auto& e : eps)
            for (int t = 0; t < 100 && r.passed; ++t) {
                Poly p = random_poly(rng, deg(rng));
                Poly f = nabla_inverse(e, p);
                ++r.checked;
                if (!(nabla(e, f) == p) || f[0] != 0) {
                    r.passed = false;
                    r.detail = "eps = " + to_string(e) + ", p = " + p.str();
                }
            }
        out.push_back(r);
    }
    {
        CheckResult r{"poly", "xi to w degree and defining equation"};
        std::uniform_int_distribution<int> deg(0, 4);
        for (unsigned n = 1; n <= 3; ++n)
            for (int t = 0; t < 20 && r.passed; ++t) {
                Poly xi = random_poly(rng, deg(rng));
                Poly w = xi_to_w(xi, n);
                ++r.checked;
                bool ok = nabla_half_pow(Poly::monomial(n - 1) * w, n) == shift(xi_to_Xi(xi, n), Rational(1, 2)) &&
                          w[0] == 0 && (xi.is_zero() ? w.is_zero() : w.degree() == xi.degree() + 1);
                if (!ok) {
                    r.passed = false;
                    r.detail = "n = " + std::to_string(n) + ", xi = " + xi.str() + ", w = " + w.str();
                }
            }
        out.push_back(r);
    }
    {
        CheckResult r{"poly", "twisted identity for z^k, k<=8"};
        for (unsigned k = 0; k <= 8; ++k) {
            ++r.checked;
            if (!twisted_identity_check(Poly::monomial(k))) {
                r.passed = false;
                r.detail = "k = " + std::to_string(k);
                break;
            }
        }
        out.push_back(r);
    }
    {
        CheckResult r{"poly", "twisted ring associative and commutative"};
        std::uniform_int_distribution<int> deg(0, 5);
        for (int t = 0; t < 30 && r.passed; ++t) {
            TwistedPoly a{random_poly(rng, deg(rng)), random_poly(rng, deg(rng))};
            TwistedPoly b{random_poly(rng, deg(rng)), random_poly(rng, deg(rng))};
            TwistedPoly c{random_poly(rng, deg(rng)), random_poly(rng, deg(rng))};
            ++r.checked;
            if (!((a * b) * c == a * (b * c)) || !(a * b == b * a)) {
                r.passed = false;
                r.detail = "trial " + std::to_string(t);
            }
        }
        out.push_back(r);
    }
    return out;
}

// ---------------------------------------------------------------- clifford

inline const std::vector<std::vector<Rational>>& rational_unit_vectors() {
    static const std::vector<std::vector<Rational>> vs{
        {1},
        {Rational(3, 5), Rational(4, 5)},
        {Rational(5, 13), Rational(12, 13)},
        {Rational(1, 3), Rational(2, 3), Rational(2, 3)},
    };
    return vs;
}

inline std::vector<CheckResult> verify_clifford(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    const std::size_t max_n = std::max<std::size_t>(3, opt.max_n);
    Rng rng(opt.seed + 1);

    CheckResult rel{"clifford", "defining relations"};
    for (std::size_t n = 1; n <= max_n; ++n)
        for (std::size_t a = 0; a < 2 * n; ++a)
            for (std::size_t b = 0; b < 2 * n; ++b) {
                auto va = CliffordElement::generator(n, a), vb = CliffordElement::generator(n, b);
                // <x_i, y_j> = delta_ij, all other pairings vanish
                const int pair = (a < n) != (b < n) && a % n == b % n ? 2 : 0;
                ++rel.checked;
                if (!(va * vb + vb * va == CliffordElement::scalar(n, pair))) {
                    rel.passed = false;
                    rel.detail = "n = " + std::to_string(n) + ", " + v_name(n, a) + ", " + v_name(n, b);
                }
            }
    out.push_back(rel);

    CheckResult assoc{"clifford", "associativity on random triples"};
    for (int t = 0; t < 100 && assoc.passed; ++t) {
        const std::size_t n = 1 + static_cast<std::size_t>(t % 3);
        auto rnd = [&] {
            CliffordElement c(n);
            std::uniform_int_distribution<std::size_t> g(0, 2 * n - 1);
            for (int k = 0; k < 3; ++k) {
                CliffordElement m = CliffordElement::scalar(n, random_rational(rng));
                for (int l = 0; l < 3; ++l) m = m * CliffordElement::generator(n, g(rng));
                c = c + m;
            }
            return c;
        };
        auto a = rnd(), b = rnd(), c = rnd();
        ++assoc.checked;
        if (!((a * b) * c == a * (b * c))) {
            assoc.passed = false;
            assoc.detail = "trial " + std::to_string(t);
        }
    }
    out.push_back(assoc);

    CheckResult sw{"clifford", "spin weights are {+-1/2}^n"};
    for (std::size_t n = 1; n <= max_n; ++n) {
        auto ws = spin_weights(n);
        ++sw.checked;
        bool ok = ws.size() == (std::size_t{1} << n);
        Weight sum = Weight::zero(n);
        for (const auto& [w, m] : ws) {
            ok = ok && m == 1;
            for (std::size_t i = 0; i < n; ++i) ok = ok && abs(w[i]) == Rational(1, 2);
            sum = sum + w;
        }
        ok = ok && sum == Weight::zero(n);
        if (!ok) {
            sw.passed = false;
            sw.detail = "n = " + std::to_string(n);
        }
    }
    out.push_back(sw);

    CheckResult sq{"clifford", "gamma(v (x) v)^2 = 1/4"};
    for (const auto& v : rational_unit_vectors()) {
        auto g = gamma_rank_one(v);
        ++sq.checked;
        if (!(g * g == CliffordElement::scalar(v.size(), Rational(1, 4)))) {
            sq.passed = false;
            sq.detail = "dim " + std::to_string(v.size());
        }
    }
    out.push_back(sq);

    CheckResult hom{"clifford", "gamma is a Lie homomorphism"};
    CheckResult act{"clifford", "[gamma(E_ij), v] = E_ij v"};
    for (std::size_t n = 1; n <= max_n; ++n) {
        auto h = gamma_lie_hom_check(n);
        hom.checked += h.checked;
        if (!h.passed && hom.passed) {
            hom.passed = false;
            hom.detail = h.failure;
        }
        auto a = gamma_action_check(n);
        act.checked += a.checked;
        if (!a.passed && act.passed) {
            act.passed = false;
            act.detail = a.failure;
        }
    }
    out.push_back(hom);
    out.push_back(act);

    CheckResult tw{"clifford", "twisted identity with gamma(v (x) v)"};
    const std::vector<Rational> samples{0, 1, Rational(-2, 3), Rational(7, 2)};
    for (const auto& v : rational_unit_vectors()) {
        if (v.size() > 2) continue;
        for (unsigned k = 0; k <= 4; ++k) {
            auto r = clifford_twisted_identity_check(Poly::monomial(k), v, samples);
            tw.checked += r.checked;
            if (!r.passed && tw.passed) {
                tw.passed = false;
                tw.detail = r.failure;
            }
        }
    }
    out.push_back(tw);
    return out;
}

// ---------------------------------------------------------------- jacobi

// Fixed nonzero coefficients so every r_m up to deg contributes.
inline Poly sample_xi(int deg) {
    std::vector<Rational> cs;
    for (int m = 0; m <= deg; ++m) cs.push_back(frac(m + 2, m % 2 == 0 ? 1 : 3) * (m % 3 == 1 ? -1 : 1));
    return Poly(std::move(cs));
}

struct Corruption {
    unsigned m = 1;
    std::size_t i = 0, j = 0;
    Monomial term;
};

// Every way of doubling one coefficient of r_m at rank n.
inline std::vector<Corruption> r_corruptions(std::size_t n, unsigned m) {
    std::vector<Corruption> out;
    auto r = r_matrix(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& [mono, c] : r[i][j].terms()) out.push_back({m, i, j, mono});
    return out;
}

inline std::vector<Corruption> r1_corruptions(std::size_t n) { return r_corruptions(n, 1); }

// kappa_of(xi, n) with one coefficient of r_m doubled.
inline Kappa corrupted_kappa(const Poly& xi, std::size_t n, const Corruption& c) {
    auto r = r_matrices(n, std::max(static_cast<int>(c.m), xi.degree()));
    auto& entry = r[c.m][c.i][c.j];
    entry += UEAElement::word(c.term, entry.coeff(c.term));
    return kappa_from_r(n, xi, r);
}

inline std::string corruption_name(const Corruption& c) {
    return "r_" + std::to_string(c.m) + "[" + std::to_string(c.i + 1) + "][" + std::to_string(c.j + 1) + "] " +
           monomial_str(c.term);
}

inline std::vector<CheckResult> verify_jacobi(const VerifyOptions& opt) {
    std::vector<std::function<CheckResult()>> tasks;
    for (std::size_t n = 1; n <= opt.max_n; ++n)
        for (int d = 0; d <= opt.max_deg; ++d)
            tasks.push_back([n, d] {
                const Poly xi = sample_xi(d);
                const Kappa k = kappa_of(xi, n);
                const std::string tag = "n=" + std::to_string(n) + " deg=" + std::to_string(d);
                CheckResult r{"jacobi", tag};
                for (const auto& rep : {jacobi_check(k), higher_jacobi_checks(k), h_linearity_check(k)}) {
                    r.checked += rep.checked;
                    if (!rep.passed && r.passed) {
                        r.passed = false;
                        r.detail = rep.failure;
                    }
                }
                return r;
            });
    if (opt.max_n >= 2) {
        // Negative controls at n = 2: doubling any single coefficient of r_1
        // (xi = z) or r_2 (xi = z^2) must break the certificate.  Which of the
        // three checks notices is recorded in the detail.
        for (unsigned m : {1u, 2u})
            for (const auto& c : r_corruptions(2, m))
                tasks.push_back([c, m] {
                    const Kappa k = corrupted_kappa(Poly::monomial(m), 2, c);
                    const bool j = !jacobi_check(k).passed;
                    const bool h = !higher_jacobi_checks(k).passed;
                    const bool l = !h_linearity_check(k).passed;
                    CheckResult r{"jacobi", "corrupt " + corruption_name(c) + " detected"};
                    r.checked = 1;
                    r.passed = j || l;
                    r.detail = std::string("jacobi:") + (j ? "fail" : "pass") + " higher:" + (h ? "fail" : "pass") +
                               " h-linear:" + (l ? "fail" : "pass");
                    return r;
                });
    }
    return detail::run_tasks(tasks, opt.jobs);
}

// ---------------------------------------------------------------- oracle

struct OracleInstance {
    Poly xi;
    Rational lambda;
};

// Random (xi, lambda) at n = 1 with lambda in the classified set: pick
// lambda, a target nu <= 8 and xi_1..xi_deg, then solve for xi_0 so that
// sum_{k=0}^{nu} p(lambda - k) = 0.
inline std::vector<OracleInstance> oracle_instances(std::size_t count, std::uint64_t seed) {
    std::vector<OracleInstance> out{{Poly::z(), 1}, {Poly::z(), 0}, {Poly::z(), Rational(3, 2)}};
    Rng rng(seed);
    std::uniform_int_distribution<int> deg(1, 3), target(0, 8);
    while (out.size() < count) {
        const int d = deg(rng);
        const int nu = target(rng);
        const Rational lambda = random_rational(rng, 9, 2);
        std::vector<Rational> cs(static_cast<std::size_t>(d) + 1);
        for (int m = 1; m <= d; ++m) cs[m] = random_rational(rng, 4, 3);
        if (cs[d] == 0) cs[d] = 1;
        Rational rest = 0;
        for (int k = 0; k <= nu; ++k) {
            const Rational t = lambda - k;
            Rational tp = 1;
            for (int m = 1; m <= d; ++m) {
                tp *= t;
                rest += cs[m] * (m + 1) * tp;
            }
        }
        cs[0] = -rest / (nu + 1);
        out.push_back({Poly(std::move(cs)), lambda});
    }
    return out;
}

inline CheckResult check_oracle_instance(const OracleInstance& inst) {
    CheckResult r{"oracle-n1", "xi=" + inst.xi.str() + " lambda=" + to_string(inst.lambda)};
    try {
        const auto P = SymPolyInHBasis::from_xi(inst.xi, 1);
        const Weight lam{inst.lambda};
        const RankOneModule M = build_module(inst.xi, inst.lambda);
        Matrix pt(M.dim(), M.dim());
        for (std::size_t k = 0; k < M.dim(); ++k) pt(k, k) = M.bracket(M.t(k, k));
        const bool relations = M.t * M.x - M.x * M.t == Rational(-1) * M.x && M.t * M.y - M.y * M.t == M.y &&
                               M.y * M.x - M.x * M.y == pt;
        const OracleReport rep = run_oracle(inst.xi, inst.lambda);
        const ModuleDecomp closed = dirac_cohomology(P, lam);
        r.checked = 1;
        r.passed = relations && rep.ok() && rep.kernel == closed;
        if (!r.passed) {
            r.detail = "relations=" + std::to_string(relations) + " ok=" + std::to_string(rep.ok()) +
                       " oracle=" + rep.kernel.str() + " closed=" + closed.str();
        } else {
            r.detail = "nu=" + std::to_string(M.nu) + " H=" + closed.str();
        }
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = e.what();
    }
    return r;
}

inline std::vector<CheckResult> verify_oracle(const VerifyOptions& opt) {
    std::vector<std::function<CheckResult()>> tasks;
    for (const auto& inst : oracle_instances(24, opt.seed + 2))
        tasks.push_back([inst] { return check_oracle_instance(inst); });
    return detail::run_tasks(tasks, opt.jobs);
}

// ---------------------------------------------------------------- decomp

// Formal dimension of L (x) S against 2^n dim L, plus the structural
// containments, over random dominant weights and boxes.
inline std::vector<CheckResult> verify_decomp(const VerifyOptions& opt) {
    Rng rng(opt.seed + 3);
    CheckResult cons{"decomp", "dim(L (x) S) = 2^n dim L"};
    CheckResult sub{"decomp", "cohomology within L (x) S, guaranteed classes once"};
    std::uniform_int_distribution<int> step(0, 3), box(0, 3);
    for (std::size_t n = 1; n <= 3; ++n)
        for (int t = 0; t < 15; ++t) {
            std::vector<Rational> c(n);
            c[n - 1] = random_rational(rng, 6, 2);
            for (std::size_t i = n - 1; i-- > 0;) c[i] = c[i + 1] + step(rng);
            const Weight lam(c);
            NuVector nu{std::vector<std::uint64_t>(n)};
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t cap = i + 1 < n ? Rational(lam[i] - lam[i + 1]).get_num().get_ui()
                                              : 3;
                nu.nu[i] = std::min<std::uint64_t>(cap, static_cast<std::uint64_t>(box(rng)));
            }
            const ModuleDecomp L = L_decomposition(lam, nu);
            const ModuleDecomp LS = tensor_with_spin(L);
            ++cons.checked;
            if (LS.total_dimension() != Rational(1 << n) * L.total_dimension()) {
                cons.passed = false;
                cons.detail = "lambda=" + lam.str();
            }
        }
    for (std::size_t n = 1; n <= 2; ++n)
        for (int t = 0; t < 10; ++t) {
            const Poly xi = random_poly(rng, 2);
            const auto P = SymPolyInHBasis::from_xi(xi, n);
            std::vector<Rational> c(n);
            c[n - 1] = random_rational(rng, 4, 2);
            for (std::size_t i = n - 1; i-- > 0;) c[i] = c[i + 1] + step(rng);
            const Weight lam(c);
            if (!lambda_tilde_member(P, lam)) continue;
            const auto a = analyze(P, lam);
            ++sub.checked;
            bool ok = true;
            for (const auto& [mu, m] : a.cohomology.entries()) ok = ok && a.LS.multiplicity(mu) >= m;
            for (const auto& g : a.guaranteed) ok = ok && a.cohomology.multiplicity(g) == 1;
            if (!ok) {
                sub.passed = false;
                sub.detail = "xi=" + xi.str() + " lambda=" + lam.str();
            }
        }
    return {cons, sub};
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"poly", "clifford", "jacobi", "oracle-n1", "decomp"};
    return names;
}

inline std::vector<CheckResult> run_suite(const std::string& name, const VerifyOptions& opt) {
    if (name == "poly") return verify_poly(opt);
    if (name == "clifford") return verify_clifford(opt);
    if (name == "jacobi") return verify_jacobi(opt);
    if (name == "oracle-n1") return verify_oracle(opt);
    if (name == "decomp") return verify_decomp(opt);
    if (name == "all") {
        std::vector<CheckResult> out;
        for (const auto& s : suite_names()) {
            auto part = run_suite(s, opt);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace icalg
