#pragma once

#include <map>
#include <optional>
#include <set>

#include "qsc/flag.hpp"
#include "qsc/perm.hpp"
#include "qsc/schubert.hpp"

namespace qsc {

/// Integer combination of Schubert classes [O_w], w in S.
class CohClass {
public:
    explicit CohClass(Flag flag) : flag_(std::move(flag)) {}
    static CohClass basis(const Flag& flag, const Permutation& w);
    static CohClass unit(const Flag& flag);

    const Flag& flag() const { return flag_; }
    const std::map<Permutation, long long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long long coefficient(const Permutation& w) const;

    void add(const Permutation& w, long long c);
    CohClass& operator+=(const CohClass& o);
    CohClass& operator-=(const CohClass& o);
    friend CohClass operator+(CohClass a, const CohClass& b) { return a += b; }
    friend CohClass operator-(CohClass a, const CohClass& b) { return a -= b; }
    CohClass scaled(long long c) const;

    /// Common length of all terms, nullopt if mixed or zero.
    std::optional<int> graded_length() const;

    bool operator==(const CohClass&) const = default;

private:
    Flag flag_;
    std::map<Permutation, long long> terms_;
};

enum class PieriKind { Alpha, Beta };

/// Targets w' of transposition chains t_{a_1 b_1}...t_{a_c b_c} from w with
/// a_r <= d < b_r, every prefix raising length by exactly one, and the a's
/// (Alpha) or b's (Beta) pairwise distinct.  Multiplicity-free by
/// construction; count == 0 yields {w}.
std::set<Permutation> pieri_chain_targets(const Permutation& w, int d, int count,
                                          PieriKind kind, const Flag& flag);

/// Chains for the special class of kind alpha_{i,j} / beta_{i,j} (d = n_j).
std::set<Permutation> pieri_targets(const Permutation& w, int i, int j, PieriKind kind,
                                    const Flag& flag);

/// Multiplication by the special class of alpha_{i,j} or beta_{i,j}.
CohClass apply_special(PieriKind kind, int i, int j, const CohClass& c);

/// Iterated alpha applications for all factors of L.
CohClass apply_g_lambda(const LambdaIndex& L, const CohClass& c);

/// [O_{alpha_{i,j}}] with the boundary conventions: unit for i = 0, zero for
/// i < 0, i > n_j, or j = 0 < i.
CohClass class_of_alpha(int i, int j, const Flag& flag);
CohClass class_of_beta(int p, int j, const Flag& flag);

/// Cup product, computed through the standard-monomial expansion of the left
/// factor and iterated Pieri applications to the right factor.
CohClass classical_product(const CohClass& u, const CohClass& v);

/// Coefficient of the point class [O_{w_top}] in u.v.
long long pairing(const CohClass& u, const CohClass& v);

/// Checks the product identity expressing alpha_{i,j} through the
/// beta/alpha classes of the neighbouring blocks.
bool verify_identity_1_3(const Flag& flag, int i, int j);

}  // namespace qsc
