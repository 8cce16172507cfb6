#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "qsc/poly.hpp"
#include "qsc/quantum.hpp"
#include "qsc/schubert.hpp"
#include "qsc/zsolve.hpp"

namespace qsc {

/// Normal-form oracle for the presentation of the (quantum) cohomology ring
/// as Z[sigma,q] modulo the ideal of deformed characteristic coefficients.
/// The top-block variables sigma_i^{k+1} are first eliminated through the
/// degree <= n-n_k relations (they are monic in sigma_i^{k+1}); the residual
/// relations generate the ideal in the remaining variables.  Per weighted
/// degree, the ideal slice is spanned by monomial multiples of the residual
/// relations and reduced by integer row echelon.
///
/// Test/verification machinery: the product and invariant engines never call
/// into this oracle.
class PresentationOracle {
public:
    PresentationOracle(const Flag& flag, bool quantum);

    static const PresentationOracle& get(const Flag& flag, bool quantum);

    const Flag& flag() const { return flag_; }
    bool quantum() const { return quantum_; }

    /// Substitutes away every sigma_i^{k+1}; congruent to the input mod the
    /// ideal, exact polynomial identity when the input avoids the top block.
    Poly eliminate_top_block(const Poly& p) const;

    /// Residual relations R_i, n-n_k < i <= n, in the surviving variables.
    const std::vector<Poly>& relations() const { return relations_; }

    /// Canonical residue of p mod the ideal; weighted-homogeneous input.
    /// Equal residues characterize equal classes.
    Poly normal_form(const Poly& p) const;

    /// Exact expansion p = sum coeff[(d,L)] q^d g_L  (mod the ideal);
    /// classical oracles only produce d = 0 entries.
    std::map<std::pair<QMonomial, LambdaIndex>, Int> lambda_expansion(const Poly& p) const;

private:
    struct DegreeData;
    const DegreeData& degree_data(int deg) const;
    SparseVec vectorize(const Poly& p, const std::vector<Monomial>& basis) const;

    Flag flag_;
    bool quantum_;
    std::vector<VarId> vars_;                       // surviving variables
    std::map<VarId, Poly> elim_;                    // sigma_i^{k+1} -> E_i
    std::vector<Poly> relations_;
    mutable std::map<int, std::unique_ptr<DegreeData>> degree_cache_;
    mutable std::mutex mu_;
};

/// Residue of p modulo the quantum ideal.
Poly ideal_normal_form(const Poly& p, const Flag& flag);

/// Structure constants of the presentation route: coefficients c[(d,w)] with
/// prod == sum c[(d,w)] q^d P_w^q modulo the quantum ideal (classical mode:
/// P_w and the classical ideal).
std::map<std::pair<QMonomial, Permutation>, long long> presentation_constants(
    const Poly& prod, const Flag& flag, bool quantum);

/// Coefficient of G_{Lambda°} in the expansion of u*v mod the quantum ideal;
/// a polynomial in q.
Poly qpairing_poly(const Poly& u, const Poly& v, const Flag& flag);

/// Evaluates a polynomial in Z[sigma,q] to a quantum class by rewriting each
/// sigma generator through special classes and quantum products: block
/// generators via the triangular inversion of the elementary recursion, the
/// top block via the complete-symmetric elimination sigma_r^{k+1} ->
/// (-1)^r f_r^k.
QCohClass evaluate_class(const Poly& p, const Flag& flag);

}  // namespace qsc
