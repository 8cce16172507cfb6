#pragma once

#include "qsc/flag.hpp"
#include "qsc/perm.hpp"
#include "qsc/poly.hpp"
#include "qsc/schubert.hpp"

namespace qsc {

/// Block diagonal matrix A_n with companion-style blocks: top row of block j
/// is sigma_1^j ... sigma_{n_j-n_{j-1}}^j, subdiagonal -1.
PolyMatrix classical_matrix(const Flag& flag);

/// Deformed matrix A_n^q = A_n + B_n, where B_n has (-1)^{n_{j+1}-n_j+1} q_j
/// at (n_{j-1}+1, n_{j+1}) and -1 at (n_j+1, n_j), for 1 <= j <= k.
PolyMatrix deformed_matrix(const Flag& flag);

enum class GDef { Recursion, Matchings, CharPoly };

/// Quantized special polynomial G_i^j, 0 <= j <= k+1, 0 <= i <= n_j; three
/// equivalent routes:
///  - Recursion:  G_i^j = (-1)^{n_j-n_{j-1}+1} q_{j-1} G_{i-(n_j-n_{j-2})}^{j-2}
///                + sum_r sigma_r^j G_{i-r}^{j-1}
///  - Matchings:  matchings of the labelled path graph on j vertices
///  - CharPoly:   coefficients of det(A_{n_j}^q + t I) for the leading
///                n_j x n_j submatrix
/// Conventions: G_0^j = 1, G_i^j = 0 for i < 0 or i > n_j, q_0 = 0.
Poly Gq_special(int i, int j, const Flag& flag, GDef def = GDef::Recursion);

/// Standard quantum elementary monomial: g_L with each factor quantized.
Poly G_lambda_q(const LambdaIndex& L, const Flag& flag);

/// P_w^q = sum_L a_L(w) G_L; specializes to the Giambelli polynomial at q=0.
Poly quantum_giambelli_poly(const Permutation& w, const Flag& flag);

}  // namespace qsc
