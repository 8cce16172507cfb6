#pragma once

#include <compare>
#include <string>
#include <vector>

namespace qsc {

/// Ambient data of a partial flag variety F(n_1,...,n_k; n): quotient ranks
/// 0 < n_1 < ... < n_k < n.  By convention n_0 = 0 and n_{k+1} = n.
class Flag {
public:
    Flag(std::vector<int> ranks, int n);

    /// Parses "n1,n2,...,nk;n", e.g. "1,2;3".
    static Flag parse(const std::string& text);

    int n() const { return n_; }
    int k() const { return static_cast<int>(ranks_.size()); }
    const std::vector<int>& ranks() const { return ranks_; }

    /// n_j for 0 <= j <= k+1, with n_0 = 0 and n_{k+1} = n.
    int rank(int j) const;

    /// Complex dimension of F: sum over j of (n - n_j)(n_j - n_{j-1}).
    int dimension() const { return dim_; }

    /// Weighted degree of the deformation variable q_j: n_{j+1} - n_{j-1}.
    int q_degree(int j) const;

    /// Block index j with n_{j-1} < pos <= n_j (1 <= pos <= n, 1 <= j <= k+1).
    int block_of(int pos) const;

    bool is_standard_descent(int pos) const;   // pos in {n_1,...,n_k}
    bool is_complete() const { return k() == n_ - 1; }
    bool is_grassmannian() const { return k() == 1; }

    std::string to_string() const;

    auto operator<=>(const Flag&) const = default;

private:
    std::vector<int> ranks_;
    int n_ = 0;
    int dim_ = 0;
};

}  // namespace qsc
