#pragma once

/*
 * Brute-force check of the Dirac cohomology at n = 1.
 *
 * L(lambda) is realized by explicit matrices on v_0, ..., v_nu:
 *
 *     t v_k = (lambda - k) v_k,   x v_k = v_{k+1},   y v_k = d_k v_{k-1},
 *     d_0 = 0,  d_{k+1} = d_k + p(lambda - k),
 *
 * where [y, x] = kappa(y, x) = p(t) is read off the deformation map (a
 * polynomial in E_11 at rank one).  The Dirac element D = x (x) y_C + y (x) x_C
 * acts on L (x) S, and ker D, ker D^2 are computed by exact elimination.
 */

#include "icalg/clifford.hpp"
#include "icalg/matrix.hpp"
#include "icalg/poly.hpp"
#include "icalg/repdecomp.hpp"
#include "icalg/uea.hpp"
#include "icalg/weights.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace icalg {

// kappa(y, x) at rank one as a polynomial in t = E_11.
inline Poly rank_one_bracket(const Poly& xi) {
    const UEAElement k = kappa_of(xi, 1).yx(0, 0);
    std::vector<Rational> cs;
    for (const auto& [m, c] : k.terms()) {
        if (cs.size() <= m.size()) cs.resize(m.size() + 1);
        cs[m.size()] = c;
    }
    return Poly(std::move(cs));
}

struct RankOneModule {
    Rational lambda;
    std::uint64_t nu = 0;
    Poly bracket;  // p with [y, x] = p(t)
    std::vector<Rational> d;
    Matrix t, x, y;

    std::size_t dim() const { return static_cast<std::size_t>(nu) + 1; }
};

inline RankOneModule build_module(const Poly& xi, const Rational& lambda) {
    const auto P = SymPolyInHBasis::from_xi(xi, 1);
    const NuVector nu = nu_vector(P, Weight{lambda});  // throws NotInLambdaTilde

    RankOneModule M;
    M.lambda = lambda;
    M.nu = nu[0];
    M.bracket = rank_one_bracket(xi);
    const std::size_t N = M.dim();
    M.d.assign(N + 1, Rational(0));
    for (std::size_t k = 0; k < N; ++k)
        M.d[k + 1] = M.d[k] + M.bracket(lambda - Rational(static_cast<unsigned long>(k)));
    if (M.d[N] != 0)
        throw std::logic_error("build_module: d_{nu+1} = " + to_string(M.d[N]) +
                               " != 0, classifier and relations disagree");
    for (std::size_t k = 1; k < N; ++k)
        if (M.d[k] == 0) throw std::logic_error("build_module: d_" + std::to_string(k) + " = 0, module is reducible");

    M.t = Matrix(N, N);
    M.x = Matrix(N, N);
    M.y = Matrix(N, N);
    for (std::size_t k = 0; k < N; ++k) {
        M.t(k, k) = lambda - Rational(static_cast<unsigned long>(k));
        if (k + 1 < N) M.x(k + 1, k) = 1;
        if (k > 0) M.y(k - 1, k) = M.d[k];
    }
    return M;
}

inline Matrix to_matrix(const std::vector<std::vector<Rational>>& rows) { return Matrix::from_rows(rows); }

// D = x (x) y_C + y (x) x_C on L (x) S, basis index 2k + e.
inline Matrix dirac_matrix(const RankOneModule& M) {
    const Matrix xc = to_matrix(spin_matrix(CliffordElement::x(1, 0)));
    const Matrix yc = to_matrix(spin_matrix(CliffordElement::y(1, 0)));
    return kron(M.x, yc) + kron(M.y, xc);
}

// t (x) 1 + 1 (x) gamma(E_11) on L (x) S.
inline Matrix weight_operator(const RankOneModule& M) {
    const Matrix g = to_matrix(spin_matrix(gamma_E(0, 0, 1)));
    return kron(M.t, Matrix::identity(2)) + kron(Matrix::identity(M.dim()), g);
}

struct OracleReport {
    ModuleDecomp kernel{1};
    std::size_t dim_ker_D = 0;
    std::size_t dim_ker_D2 = 0;
    std::size_t rank_D = 0;
    std::size_t space_dim = 0;
    bool ker_D_equals_ker_D2 = false;
    bool ker_meets_image_trivially = false;
    bool weight_graded = false;
    // D^2 acts on each weight space mu by 2P(lambda) - 2P(mu - 1/2).
    bool eigenvalues_match = false;
    std::map<Rational, Rational> block_eigenvalue;

    bool ok() const {
        return ker_D_equals_ker_D2 && ker_meets_image_trivially && weight_graded && eigenvalues_match &&
               rank_D + dim_ker_D == space_dim;
    }
};

inline OracleReport run_oracle(const Poly& xi, const Rational& lambda) {
    const RankOneModule M = build_module(xi, lambda);
    const Matrix D = dirac_matrix(M);
    const Matrix D2 = D * D;
    const Matrix W = weight_operator(M);
    const std::size_t N = D.rows();

    OracleReport rep;
    const Matrix kerD = D.kernel();
    rep.dim_ker_D = kerD.cols();
    rep.dim_ker_D2 = D2.kernel().cols();
    rep.rank_D = D.rank();
    rep.space_dim = N;
    rep.ker_D_equals_ker_D2 = rep.dim_ker_D == rep.dim_ker_D2 && (D2 * kerD).is_zero();
    rep.ker_meets_image_trivially = Matrix::hstack(kerD, D).rank() == rep.dim_ker_D + rep.rank_D;

    // Weight spaces of W, which is diagonal in the product basis.
    std::map<Rational, std::vector<std::size_t>> blocks;
    bool diagonal = true;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            if (i != j && W(i, j) != 0) diagonal = false;
    for (std::size_t i = 0; i < N; ++i) blocks[W(i, i)].push_back(i);

    bool graded = diagonal;
    for (const auto& [mu, rows] : blocks)
        for (const auto& [nu_, cols] : blocks) {
            if (mu == nu_) continue;
            if (!D2.select(rows, cols).is_zero()) graded = false;
        }
    rep.weight_graded = graded;

    const Poly w = xi_to_w(xi, 1);
    const Rational half(1, 2);
    bool eig = true;
    std::size_t kernel_total = 0;
    for (const auto& [mu, idx] : blocks) {
        const Matrix block = D2.select(idx, idx);
        const Rational expected = 2 * w(lambda) - 2 * w(mu - half);
        rep.block_eigenvalue[mu] = block(0, 0);
        if (!(block == expected * Matrix::identity(idx.size()))) eig = false;
        const std::size_t k = block.kernel().cols();
        kernel_total += k;
        if (k > 0) rep.kernel.add(Weight{mu}, k);
    }
    rep.eigenvalues_match = eig;
    if (kernel_total != rep.dim_ker_D2) rep.weight_graded = false;
    return rep;
}

// ker D^2 on L(lambda) (x) S as a gl_1 decomposition; throws if the Dirac
// kernel and the D^2 kernel disagree or ker D meets im D.
inline ModuleDecomp oracle_cohomology(const Poly& xi, const Rational& lambda) {
    OracleReport rep = run_oracle(xi, lambda);
    if (!rep.ker_D_equals_ker_D2) throw std::logic_error("oracle: ker D != ker D^2");
    if (!rep.ker_meets_image_trivially) throw std::logic_error("oracle: ker D meets im D");
    if (!rep.weight_graded) throw std::logic_error("oracle: D^2 does not preserve the weight grading");
    return rep.kernel;
}

}  // namespace icalg
