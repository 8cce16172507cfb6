#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qsc/poly.hpp"

namespace qsc {

/// Sparse integer vector: (column, value) pairs sorted by column, values nonzero.
using SparseVec = std::vector<std::pair<int, Int>>;

SparseVec sparse_axpy(SparseVec v, const Int& c, const SparseVec& w);   // v - c*w
const Int* sparse_at(const SparseVec& v, int col);

/// Row-echelon basis of an integer lattice, built incrementally from sparse
/// rows.  Columns [0, cols) hold values; columns [cols, cols+track) carry
/// bookkeeping that records how each echelon row combines the rows added.
class ZLattice {
public:
    explicit ZLattice(int cols, int track_cols = 0);

    void add_row(SparseVec v);

    /// Canonical residue of v modulo the lattice (floored division at pivots);
    /// residues are equal iff the vectors are congruent.  Track columns of the
    /// result are meaningless.
    SparseVec reduce(SparseVec v) const;

    /// If v (value columns only) lies in the lattice, returns the tracking
    /// coordinates of an expansion; otherwise nullopt.
    std::optional<std::vector<Int>> solve(SparseVec v) const;

    int cols() const { return cols_; }
    int rank() const { return static_cast<int>(rows_.size()); }

private:
    int cols_;
    int track_;
    std::map<int, SparseVec> rows_;   // pivot column -> row
};

/// Determinant by fraction-free (Bareiss) elimination.
Int bareiss_det(std::vector<std::vector<Int>> a);

}  // namespace qsc
