#pragma once

#include <compare>
#include <string>
#include <vector>

#include "qsc/flag.hpp"

namespace qsc {

/// Permutation of [1,n] in one-line notation, 1-indexed.
/// Composition convention: (u*v)(i) = u(v(i)), so right-multiplying by the
/// transposition t_ab swaps the entries at positions a and b.
class Permutation {
public:
    explicit Permutation(std::vector<int> one_line);

    static Permutation identity(int n);
    static Permutation parse(const std::string& text);   // "2,1,3"

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i - 1]; }
    const std::vector<int>& one_line() const { return img_; }

    Permutation compose(const Permutation& v) const;     // this o v
    Permutation inverse() const;
    Permutation right_transposed(int a, int b) const;    // w * t_ab

    /// Inversion count.
    int length() const;

    std::string to_string() const;

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> img_;
};

Permutation simple_transposition(int m, int n);

/// card{ i <= q : w(i) <= p }.
int rank_fn(const Permutation& w, int q, int p);

/// True iff l(w * t_ab) == l(w) + 1.
bool length_up_one(const Permutation& w, int a, int b);

/// Membership in S(n_1,...,n_k): every descent of w lies in {n_1,...,n_k}.
bool in_coset_set(const Permutation& w, const Flag& flag);

/// All of S(n_1,...,n_k), sorted.
std::vector<Permutation> coset_set(const Flag& flag);

/// n! / prod_j (n_j - n_{j-1})!.
long long coset_size(const Flag& flag);

/// Longest element of S: w(i) = n - n_j + i - n_{j-1} on each block.
Permutation longest_element(const Flag& flag);

enum class Cycle { Alpha, Beta, Gamma, Delta };

/// The cyclic permutations attached to a flag:
///   alpha_{i,j} = s_{n_j-i+1}...s_{n_j}      (1 <= j <= k, 1 <= i <= n_j)
///   beta_{i,j}  = s_{n_j+i-1}...s_{n_j}      (1 <= j <= k, 1 <= i <= n-n_j)
///   gamma_{h,l} = s_{n_h}...s_{n_{l+1}-1}    (1 <= h <= l <= k)
///   delta_{h,l} = s_{n_l-1}...s_{n_{h-1}+1}  (1 <= h <= l <= k)
Permutation special_cycle(Cycle kind, int a, int b, const Flag& flag);

/// The unique element of S pairing to 1 against w (complementary length).
Permutation dual(const Permutation& w, const Flag& flag);

}  // namespace qsc
