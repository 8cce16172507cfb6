#include "qsc/zsolve.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsc {

SparseVec sparse_axpy(SparseVec v, const Int& c, const SparseVec& w) {
    if (c == 0 || w.empty()) return v;
    SparseVec r;
    r.reserve(v.size() + w.size());
    size_t i = 0, j = 0;
    while (i < v.size() && j < w.size()) {
        if (v[i].first < w[j].first) {
            r.push_back(std::move(v[i++]));
        } else if (w[j].first < v[i].first) {
            r.emplace_back(w[j].first, -c * w[j].second);
            ++j;
        } else {
            Int val = v[i].second - c * w[j].second;
            if (val != 0) r.emplace_back(v[i].first, std::move(val));
            ++i; ++j;
        }
    }
    for (; i < v.size(); ++i) r.push_back(std::move(v[i]));
    for (; j < w.size(); ++j) r.emplace_back(w[j].first, -c * w[j].second);
    return r;
}

const Int* sparse_at(const SparseVec& v, int col) {
    auto it = std::lower_bound(v.begin(), v.end(), col,
                               [](const auto& e, int c) { return e.first < c; });
    if (it == v.end() || it->first != col) return nullptr;
    return &it->second;
}

namespace {

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

void negate(SparseVec& v) {
    for (auto& [c, x] : v) x = -x;
}

}  // namespace

ZLattice::ZLattice(int cols, int track_cols) : cols_(cols), track_(track_cols) {
    if (cols_ < 0 || track_ < 0) throw std::invalid_argument("ZLattice: bad shape");
}

void ZLattice::add_row(SparseVec v) {
    while (true) {
        if (v.empty() || v.front().first >= cols_) return;   // no value part left
        int c = v.front().first;
        auto it = rows_.find(c);
        if (it == rows_.end()) {
            if (v.front().second < 0) negate(v);
            rows_.emplace(c, std::move(v));
            return;
        }
        SparseVec& p = it->second;
        while (true) {   // Euclid at column c
            const Int* vc = sparse_at(v, c);
            if (!vc) break;
            Int q = *vc / p.front().second;
            if (q != 0) v = sparse_axpy(std::move(v), q, p);
            if (const Int* rem = sparse_at(v, c)) {
                (void)rem;
                std::swap(v, p);
                if (p.front().second < 0) negate(p);
            }
        }
    }
}

SparseVec ZLattice::reduce(SparseVec v) const {
    for (auto& [c, row] : rows_) {
        const Int* vc = sparse_at(v, c);
        if (!vc) continue;
        Int f = floor_div(*vc, row.front().second);
        if (f != 0) v = sparse_axpy(std::move(v), f, row);
    }
    return v;
}

std::optional<std::vector<Int>> ZLattice::solve(SparseVec v) const {
    for (auto& [c, x] : v)
        if (c >= cols_) throw std::invalid_argument("ZLattice: solve expects value columns only");
    for (auto& [c, row] : rows_) {
        const Int* vc = sparse_at(v, c);
        if (!vc) continue;
        if (*vc % row.front().second != 0) return std::nullopt;
        Int f = *vc / row.front().second;
        v = sparse_axpy(std::move(v), f, row);
    }
    std::vector<Int> track(track_, Int(0));
    for (auto& [c, x] : v) {
        if (c < cols_) return std::nullopt;    // residue left
        track[c - cols_] = -x;
    }
    return track;
}

Int bareiss_det(std::vector<std::vector<Int>> a) {
    size_t n = a.size();
    for (auto& row : a)
        if (row.size() != n) throw std::invalid_argument("bareiss_det: not square");
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t s = k + 1;
            while (s < n && a[s][k] == 0) ++s;
            if (s == n) return 0;
            std::swap(a[k], a[s]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : Int(-a[n - 1][n - 1]);
}

}  // namespace qsc
