#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qsc/classical.hpp"
#include "qsc/flag.hpp"
#include "qsc/perm.hpp"
#include "qsc/poly.hpp"
#include "qsc/schubert.hpp"

namespace qsc {

/// Multidegree of a q-monomial: exponent of q_j at position j-1 (size k).
using QMonomial = std::vector<int>;

int q_weighted_degree(const QMonomial& d, const Flag& flag);
Poly q_monomial_poly(const QMonomial& d);
QMonomial q_zero(const Flag& flag);

/// Z[q]-combination of Schubert classes: finitely many (q^d, w) terms.
class QCohClass {
public:
    explicit QCohClass(Flag flag) : flag_(std::move(flag)) {}
    static QCohClass basis(const Flag& flag, const Permutation& w);
    static QCohClass unit(const Flag& flag);
    static QCohClass from_classical(const CohClass& c);

    const Flag& flag() const { return flag_; }
    const std::map<std::pair<QMonomial, Permutation>, long long>& terms() const {
        return terms_;
    }
    bool is_zero() const { return terms_.empty(); }
    long long coefficient(const QMonomial& d, const Permutation& w) const;

    void add(const QMonomial& d, const Permutation& w, long long c);
    QCohClass& operator+=(const QCohClass& o);
    QCohClass& operator-=(const QCohClass& o);
    friend QCohClass operator+(QCohClass a, const QCohClass& b) { return a += b; }
    friend QCohClass operator-(QCohClass a, const QCohClass& b) { return a -= b; }
    QCohClass scaled(long long c) const;
    QCohClass q_shifted(const QMonomial& d) const;   // multiply by q^d

    /// Truncation at q = 0.
    CohClass classical_part() const;

    /// Common value of l(w) + deg q^d over all terms, nullopt if mixed.
    std::optional<int> graded_degree() const;

    bool operator==(const QCohClass&) const = default;

private:
    Flag flag_;
    std::map<std::pair<QMonomial, Permutation>, long long> terms_;
};

/// A pair of index chains 1 <= h_1 < ... < h_m <= j <= l_m < ... < l_1 <= k
/// selecting the quantum correction windows of the Pieri rule.
struct HLCollection {
    std::vector<int> h;   // ascending
    std::vector<int> l;   // descending
    int size() const { return static_cast<int>(h.size()); }
};

/// All collections with m <= i, h_m <= j <= l_m, satisfying the window
/// condition w(n_{h_c}) > max{w(n_{h_c}+1),...,w(n_{l_c+1})} for every c;
/// the equivalent length condition is recomputed and checked against it.
std::vector<HLCollection> enumerate_hl(const Permutation& w, int i, int j, const Flag& flag);

QMonomial hl_q_monomial(const HLCollection& hl, const Flag& flag);
Permutation hl_gamma(const HLCollection& hl, const Flag& flag);
Permutation hl_delta(const HLCollection& hl, const Flag& flag);

/// Quantum Pieri rule: [O_{alpha_{i,j}}] * [O_w] as a QCohClass.
QCohClass quantum_pieri(const Permutation& w, int i, int j, const Flag& flag);

/// Quantum multiplication by the special class alpha_{i,j}, extended over q.
QCohClass apply_quantum_special(int i, int j, const QCohClass& c);

/// Iterated quantum special applications over the factors of L.
QCohClass apply_G_lambda(const LambdaIndex& L, const QCohClass& c);

/// The class of the standard quantum elementary monomial: iterated quantum
/// Pieri applications of the factors of L to the unit class.  Cached.
const QCohClass& class_of_G_lambda(const LambdaIndex& L, const Flag& flag);

/// Quantum cup product (bilinear over Z[q]).
QCohClass quantum_product(const QCohClass& u, const QCohClass& v);

/// N-point genus-zero invariant <O_{w_1},...,O_{w_N}>_d via iterated quantum
/// products; zero unless lengths match dim F + deg q^d.
long long gw_invariant(const std::vector<Permutation>& classes, const QMonomial& d,
                       const Flag& flag);

/// Expansion c = sum_L coeff_L(q) . class(G_L); exact over Z[q].
std::map<LambdaIndex, Poly> expand_in_G_lambda(const QCohClass& c);

/// Coefficient of the top index Lambda° in the expansion of u * v.
Poly qpairing(const QCohClass& u, const QCohClass& v);

/// [O_{alpha_{i,j}}] with boundary conventions, as a quantum class.
QCohClass qclass_of_alpha(int i, int j, const Flag& flag);
QCohClass qclass_of_beta(int p, int j, const Flag& flag);

}  // namespace qsc
