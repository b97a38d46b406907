// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any fails.
#include "icalg/clifford.hpp"
#include "icalg/oracle_rank1.hpp"
#include "icalg/poly.hpp"
#include "icalg/repdecomp.hpp"
#include "icalg/uea.hpp"
#include "icalg/verify.hpp"
#include "icalg/weights.hpp"

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace icalg;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream why;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (!pass) why << "; ";
            why << what;
            pass = false;
        }
    }
};

Weight W(std::initializer_list<Rational> c) { return Weight(c); }

// ---- 1: the rank-two example ----------------------------------------------

const std::vector<std::vector<long>> kPrintedP{{0, -5, -12, 0}, {10, 0, -10, 4}, {12, -4, -16, 3}, {0, -20, -30, 0}};
const std::vector<std::vector<long>> kPrintedM{{1, 2, 2, 1}, {2, 4, 4, 2}, {2, 4, 4, 2}, {1, 2, 2, 1}};

Outcome criterion1() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();

    const SymPolyInHBasis P({0, 18, Rational(-9, 2), -2, Rational(1, 2)}, 2);
    const Weight lambda = minus_rho(W({3, 0}));
    const DiracAnalysis a = analyze(P, lambda);

    // grid of mu + rho: rows descend in the second coordinate, columns in the first
    std::vector<std::vector<Rational>> pgrid(4, std::vector<Rational>(4));
    std::vector<std::vector<long>> mgrid(4, std::vector<long>(4));
    const Weight halves = Weight::constant(2, Rational(1, 2));
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            const Weight shifted = W({3 - c, -r});
            pgrid[r][c] = eval_P(P, shifted.coords());
            mgrid[r][c] = static_cast<long>(a.LS.multiplicity(minus_rho(shifted) + halves));
        }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    o.require(a.nu == NuVector{{2, 2}}, "nu != (2,2)");
    ModuleDecomp box(2);
    for (int p = 1; p <= 3; ++p)
        for (int q = -2; q <= 0; ++q) box.add(minus_rho(W({p, q})));
    o.require(a.L == box, "L(lambda) is not the 9-weight box (3,0) >= mu+rho >= (1,-2)");

    o.require(pgrid[0][0] == 0 && pgrid[0][3] == 0 && pgrid[3][0] == 0 && pgrid[3][3] == 0, "P corners not all 0");
    bool same = true, transposed = true;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            same = same && pgrid[r][c] == kPrintedP[r][c];
            transposed = transposed && pgrid[r][c] == kPrintedP[c][r];
        }
    o.require(same || transposed, "P grid differs from the printed grid even after transposition");
    const std::vector<std::pair<Weight, long>> refs{
        {W({2, 0}), 10}, {W({3, -1}), -5}, {W({1, -1}), -4}, {W({2, -2}), -10}, {W({1, -2}), -16}};
    for (const auto& [pt, v] : refs) o.require(eval_P(P, pt.coords()) == v, "P" + pt.str() + " != " + std::to_string(v));
    o.require(mgrid == kPrintedM, "multiplicity grid differs");

    ModuleDecomp expect(2);
    const std::vector<std::pair<Weight, std::uint64_t>> classes{
        {W({Rational(7, 2), Rational(1, 2)}), 1},
        {W({Rational(1, 2), Rational(1, 2)}), 1},
        {W({Rational(5, 2), Rational(-1, 2)}), 4},
        {W({Rational(7, 2), Rational(-5, 2)}), 1},
        {W({Rational(1, 2), Rational(-5, 2)}), 1}};
    for (const auto& [s, m] : classes) expect.add(minus_rho(s), m);
    o.require(a.cohomology == expect, "cohomology " + a.cohomology.str());
    o.require(secs < 1.0, "runtime " + std::to_string(secs) + " s");

    if (o.pass)
        o.why << "nu=(2,2), 9 weights, P grid " << (same ? "matches" : "matches transposed")
              << ", m grid exact, 5 classes, " << static_cast<int>(secs * 1000) << " ms";
    return o;
}

// ---- 2: rank-one closed form ----------------------------------------------

Outcome criterion2() {
    Outcome o;
    int checked = 0;
    for (const Rational& x1 : {Rational(1), Rational(-3), Rational(2, 5)}) {
        const Poly xi({0, x1});
        o.require(xi_to_w(xi, 1) == Poly({0, x1, x1}), "w != xi_1 (z^2 + z)");
        const auto P = SymPolyInHBasis::from_xi(xi, 1);
        for (int twice = 0; twice <= 12; ++twice) {
            const Rational lam = frac(twice, 2);
            const Weight lambda{Rational(lam)};
            const auto nu = lambda_tilde_member(P, lambda);
            o.require(nu && *nu == static_cast<std::uint64_t>(twice), "nu != 2 lambda at " + lambda.str());
            if (!nu) continue;
            const auto a = analyze(P, lambda);
            o.require(a.L.total_dimension() == twice + 1, "dim L != 2 lambda + 1 at " + lambda.str());
            ModuleDecomp H(1);
            H.add(Weight{lam + Rational(1, 2)});
            H.add(Weight{-lam - Rational(1, 2)});
            o.require(a.cohomology == H, "H^D at " + lambda.str() + " is " + a.cohomology.str());
            ++checked;
        }
        for (const Rational& bad : {frac(1, 3), frac(1, 4), frac(-1, 2), Rational(-1), frac(2, 3), frac(7, 5)})
            o.require(!lambda_tilde_member(P, Weight{Rational(bad)}), "unexpected member " + to_string(bad));
    }
    for (const Rational& x0 : {Rational(1), Rational(-2), frac(5, 7)}) {
        const auto P = SymPolyInHBasis::from_xi(Poly{x0}, 1);
        for (int q = -20; q <= 20; ++q) {
            const Weight lambda{frac(q, 4)};
            o.require(!lambda_tilde_member(P, lambda), "constant xi admits " + lambda.str());
            ++checked;
        }
    }
    if (o.pass) o.why << checked << " (xi, lambda) pairs";
    return o;
}

// ---- 3: oracle equivalence ------------------------------------------------

Outcome criterion3() {
    Outcome o;
    const auto instances = oracle_instances(24, 20240611);
    for (const auto& inst : instances) {
        const std::string tag = "xi=" + inst.xi.str() + " lambda=" + to_string(inst.lambda);
        o.require(inst.xi.degree() <= 3, "deg > 3 for " + tag);
        const auto P = SymPolyInHBasis::from_xi(inst.xi, 1);
        const auto nu = nu_vector(P, Weight{inst.lambda});
        o.require(nu[0] <= 8, "nu > 8 for " + tag);
        const auto rep = run_oracle(inst.xi, inst.lambda);
        o.require(rep.ker_D_equals_ker_D2, "ker D != ker D^2 for " + tag);
        o.require(rep.ker_meets_image_trivially, "ker D meets im D for " + tag);
        o.require(rep.eigenvalues_match, "D^2 eigenblock mismatch for " + tag);
        o.require(rep.ok(), "oracle report not ok for " + tag);
        o.require(rep.kernel == dirac_cohomology(P, Weight{inst.lambda}), "kernel differs for " + tag);
    }
    if (o.pass) o.why << instances.size() << " instances agree";
    return o;
}

// ---- 4: Jacobi certificate ------------------------------------------------

Outcome criterion4() {
    Outcome o;
    for (std::size_t n : {1, 2})
        for (unsigned d : {0u, 1u, 2u}) {
            const Kappa k = kappa_of(Poly::monomial(d), n);
            const std::string tag = " (n=" + std::to_string(n) + ", deg=" + std::to_string(d) + ")";
            o.require(jacobi_check(k).passed, "jacobi" + tag);
            o.require(higher_jacobi_checks(k).passed, "higher" + tag);
            o.require(h_linearity_check(k).passed, "h-linear" + tag);
        }
    const auto all = r1_corruptions(2);
    std::size_t caught = 0;
    std::vector<std::string> missed;
    for (const auto& c : all) {
        const Kappa k = corrupted_kappa(Poly::z(), 2, c);
        if (!jacobi_check(k).passed)
            ++caught;
        else
            missed.push_back(corruption_name(c) + (h_linearity_check(k).passed ? "" : " (caught by h-linearity)"));
    }
    std::ostringstream neg;
    neg << "jacobi_check flags " << caught << "/" << all.size() << " r_1 corruptions at n=2, xi=z";
    for (const auto& m : missed) neg << "; missed " << m;
    o.require(missed.empty(), neg.str());
    if (o.pass) o.why << "positive grid passes; " << neg.str();
    return o;
}

// ---- 5: Clifford suite ----------------------------------------------------

Outcome criterion5() {
    Outcome o;
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto wts = spin_weights(n);
        o.require(wts.size() == (std::size_t{1} << n), "spin weight count at n=" + std::to_string(n));
        for (const auto& [wt, m] : wts) {
            o.require(m == 1, "multiplicity of " + wt.str());
            for (std::size_t i = 0; i < n; ++i)
                o.require(wt[i] == frac(1, 2) || wt[i] == frac(-1, 2), "weight " + wt.str());
        }
        o.require(gamma_lie_hom_check(n).passed, "gamma hom at n=" + std::to_string(n));
        o.require(gamma_action_check(n).passed, "gamma action at n=" + std::to_string(n));
    }
    for (const auto& v : rational_unit_vectors()) {
        const auto g = gamma_rank_one(v);
        o.require(g * g == CliffordElement::scalar(v.size(), frac(1, 4)), "gamma_v^2 != 1/4");
    }
    if (o.pass) o.why << "n<=3, " << rational_unit_vectors().size() << " unit vectors";
    return o;
}

// ---- 6: polynomial suite --------------------------------------------------

Outcome criterion6() {
    Outcome o;
    for (unsigned k = 0; k <= 12; ++k) {
        const Poly b = bernoulli(k);
        const Poly expect = k == 0 ? Poly{} : Poly::monomial(k - 1, k);
        o.require(shift(b, 1) - b == expect, "Bernoulli difference at k=" + std::to_string(k));
    }
    Rng rng(6);
    std::uniform_int_distribution<int> deg(0, 10);
    for (int t = 0; t < 100; ++t) {
        const Poly p = random_poly(rng, deg(rng));
        for (const Rational& eps : {Rational(0), frac(1, 2), Rational(1)})
            o.require(nabla(eps, nabla_inverse(eps, p)) == p, "nabla round trip " + p.str());
    }
    for (unsigned k = 0; k <= 8; ++k)
        o.require(twisted_identity_check(Poly::monomial(k)), "twisted identity z^" + std::to_string(k));
    std::uniform_int_distribution<int> xdeg(0, 5);
    for (int t = 0; t < 60; ++t) {
        Poly xi = random_poly(rng, xdeg(rng));
        if (xi.is_zero()) continue;
        const unsigned n = 1 + static_cast<unsigned>(t % 3);
        o.require(xi_to_w(xi, n).degree() == xi.degree() + 1, "deg w for " + xi.str());
    }
    if (o.pass) o.why << "Bernoulli k<=12, 300 round trips, monomials to z^8, deg w";
    return o;
}

// ---- 7: conservation ------------------------------------------------------

Outcome criterion7() {
    Outcome o;
    std::vector<std::pair<SymPolyInHBasis, Weight>> cases;
    cases.push_back({SymPolyInHBasis({0, 18, frac(-9, 2), -2, frac(1, 2)}, 2), minus_rho(W({3, 0}))});
    cases.push_back({SymPolyInHBasis({}, 3), W({2, 1, 0})});
    for (const auto& inst : oracle_instances(24, 20240611))
        cases.push_back({SymPolyInHBasis::from_xi(inst.xi, 1), Weight{inst.lambda}});
    Rng rng(77);
    std::uniform_int_distribution<int> gap(0, 3);
    for (int t = 0; t < 3000 && cases.size() < 80; ++t) {
        const std::size_t n = 2 + static_cast<std::size_t>(t % 2);
        const auto P = SymPolyInHBasis::from_xi(random_poly(rng, 1 + t % 3), n);
        std::vector<Rational> c(n);
        c[n - 1] = random_rational(rng, 4, 2);
        for (std::size_t i = n - 1; i-- > 0;) c[i] = c[i + 1] + gap(rng);
        const Weight lambda(c);
        if (lambda_tilde_member(P, lambda)) cases.push_back({P, lambda});
    }
    std::size_t ranks[4] = {0, 0, 0, 0};
    for (const auto& [P, lambda] : cases) {
        const auto a = analyze(P, lambda);
        const std::size_t n = lambda.rank();
        ++ranks[n];
        o.require(a.LS.total_dimension() == a.L.total_dimension() * Rational(static_cast<unsigned long>(1u << n)),
                  "dim mismatch at " + lambda.str());
    }
    if (o.pass)
        o.why << cases.size() << " instances (n=1: " << ranks[1] << ", n=2: " << ranks[2] << ", n=3: " << ranks[3]
              << ")";
    return o;
}

}  // namespace

int main() {
    struct Item {
        int id;
        Outcome (*run)();
    };
    const Item items[] = {{1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},
                          {5, criterion5}, {6, criterion6}, {7, criterion7}};
    int failures = 0;
    for (const auto& it : items) {
        Outcome o;
        try {
            o = it.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.why << "exception: " << e.what();
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << it.id << ": " << o.why.str() << "\n";
        if (!o.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
