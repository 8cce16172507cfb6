#pragma once

#include <compare>
#include <string>
#include <vector>

#include "qsc/flag.hpp"
#include "qsc/perm.hpp"
#include "qsc/poly.hpp"

namespace qsc {

/// Tuple of partitions (L_1,...,L_k); L_j has at most n_{j+1} - n_j parts,
/// each part in [1, n_j] (zeros dropped).  Indexes the standard elementary
/// monomial g_L = prod_j prod_m g_{L_j[m]}^j.
struct LambdaIndex {
    std::vector<std::vector<int>> parts;   // parts[j-1] = block j, weakly decreasing

    int weight() const;
    std::string to_string() const;         // "2,1|0|3"-style, one slot per block

    auto operator<=>(const LambdaIndex&) const = default;
};

bool lambda_valid(const LambdaIndex& L, const Flag& flag);

/// All valid indices for the flag, sorted; count is prod_j C(n_{j+1}, n_j).
std::vector<LambdaIndex> lambda_indices(const Flag& flag);

/// The index of the point class: L_j = (n_j,...,n_j) with n_{j+1} - n_j parts.
LambdaIndex lambda_top(const Flag& flag);

/// Schubert polynomial of w, computed by divided differences from the
/// staircase monomial x_1^{n-1} x_2^{n-2} ... x_{n-1}.
Poly schubert_poly(const Permutation& w);

/// Giambelli polynomial P_w: the Schubert polynomial rewritten in the
/// blockwise elementary generators.  Requires w in S; weighted degree l(w).
Poly giambelli_poly(const Permutation& w, const Flag& flag);

/// g_i^j: the i-th elementary class of the j-th quotient block, through the
/// recursion g_i^j = sum_r sigma_r^j g_{i-r}^{j-1}.  Zero for i < 0 or i > n_j.
Poly g_special(int i, int j, const Flag& flag);

/// f_i^j: the complete symmetric analogue (h_i of the first n_j Chern roots).
Poly f_special(int i, int j, const Flag& flag);

/// g_L = prod over blocks and parts of g_{part}^j.
Poly g_lambda(const LambdaIndex& L, const Flag& flag);

/// Change of basis between Schubert classes and standard elementary
/// monomials: gram(L, w) is the coefficient of [O_w] in the Pieri expansion
/// of g_L, and a_coeff(w, L) the inverse transpose, so that
/// [O_w] = sum_L a_coeff(w, L) * (class of g_L).
class ALambdaTable {
public:
    explicit ALambdaTable(const Flag& flag);

    const Flag& flag() const { return flag_; }
    const std::vector<Permutation>& basis() const { return basis_; }
    const std::vector<LambdaIndex>& lambdas() const { return lambdas_; }
    int lambda_index(const LambdaIndex& L) const;
    int perm_index(const Permutation& w) const;

    long long gram(int lambda_idx, int perm_idx) const { return gram_[lambda_idx][perm_idx]; }
    long long a_coeff(int perm_idx, int lambda_idx) const { return a_[perm_idx][lambda_idx]; }
    long long a_coeff(const Permutation& w, const LambdaIndex& L) const;

    /// Determinant of the degree-d block of the gram matrix (should be +-1).
    Int block_det(int degree) const;

private:
    Flag flag_;
    std::vector<Permutation> basis_;
    std::vector<LambdaIndex> lambdas_;
    std::vector<std::vector<long long>> gram_;   // [lambda][perm]
    std::vector<std::vector<long long>> a_;      // [perm][lambda]
};

/// Shared per-flag table (computed once, then immutable).
const ALambdaTable& a_lambda_table(const Flag& flag);

}  // namespace qsc
