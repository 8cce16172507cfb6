#include "qsc/perm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qsc {

Permutation::Permutation(std::vector<int> one_line) : img_(std::move(one_line)) {
    int n = size();
    if (n == 0) throw std::invalid_argument("permutation: empty");
    std::vector<char> seen(n + 1, 0);
    for (int v : img_) {
        if (v < 1 || v > n || seen[v])
            throw std::invalid_argument("permutation: not a bijection of [1,n]");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i + 1;
    return Permutation(std::move(img));
}

Permutation Permutation::parse(const std::string& text) {
    std::vector<int> img;
    std::stringstream ss(text);
    std::string field;
    while (std::getline(ss, field, ',')) {
        try {
            img.push_back(std::stoi(field));
        } catch (const std::exception&) {
            throw std::invalid_argument("permutation: bad entry \"" + field + "\"");
        }
    }
    return Permutation(std::move(img));
}

Permutation Permutation::compose(const Permutation& v) const {
    if (size() != v.size()) throw std::invalid_argument("permutation: size mismatch");
    std::vector<int> img(size());
    for (int i = 1; i <= size(); ++i) img[i - 1] = (*this)(v(i));
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> img(size());
    for (int i = 1; i <= size(); ++i) img[(*this)(i)-1] = i;
    return Permutation(std::move(img));
}

Permutation Permutation::right_transposed(int a, int b) const {
    if (a < 1 || b < 1 || a > size() || b > size() || a == b)
        throw std::invalid_argument("permutation: bad transposition");
    std::vector<int> img = img_;
    std::swap(img[a - 1], img[b - 1]);
    return Permutation(std::move(img));
}

int Permutation::length() const {
    int n = size(), inv = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (img_[a] > img_[b]) ++inv;
    return inv;
}

std::string Permutation::to_string() const {
    std::string s;
    for (int i = 0; i < size(); ++i) {
        if (i) s += ',';
        s += std::to_string(img_[i]);
    }
    return s;
}

Permutation simple_transposition(int m, int n) {
    if (m < 1 || m >= n) throw std::invalid_argument("simple transposition out of range");
    return Permutation::identity(n).right_transposed(m, m + 1);
}

int rank_fn(const Permutation& w, int q, int p) {
    int n = w.size();
    if (q < 1 || q > n || p < 1 || p > n) throw std::out_of_range("rank_fn: index");
    int c = 0;
    for (int i = 1; i <= q; ++i)
        if (w(i) <= p) ++c;
    return c;
}

bool length_up_one(const Permutation& w, int a, int b) {
    // l(w t_ab) = l(w) + 1 iff w(a) < w(b) with no intermediate value between them.
    if (a > b) std::swap(a, b);
    if (w(a) >= w(b)) return false;
    for (int c = a + 1; c < b; ++c)
        if (w(a) < w(c) && w(c) < w(b)) return false;
    return true;
}

bool in_coset_set(const Permutation& w, const Flag& flag) {
    if (w.size() != flag.n())
        throw std::invalid_argument("in_coset_set: permutation size does not match flag");
    for (int q = 1; q < flag.n(); ++q)
        if (w(q) > w(q + 1) && !flag.is_standard_descent(q)) return false;
    return true;
}

namespace {

void fill_blocks(const Flag& flag, int j, std::vector<int>& avail, std::vector<int>& acc,
                 std::vector<Permutation>& out) {
    if (j == flag.k() + 2) {
        out.emplace_back(acc);
        return;
    }
    int take = flag.rank(j) - flag.rank(j - 1);
    // choose the increasing block from the remaining values
    int m = static_cast<int>(avail.size());
    std::vector<int> idx(take);
    // iterate over take-subsets of avail in lexicographic order
    for (int i = 0; i < take; ++i) idx[i] = i;
    while (true) {
        std::vector<int> rest;
        size_t at = acc.size();
        for (int i = 0, p = 0; i < m; ++i) {
            if (p < take && idx[p] == i) {
                acc.push_back(avail[i]);
                ++p;
            } else {
                rest.push_back(avail[i]);
            }
        }
        std::vector<int> saved = std::move(avail);
        avail = std::move(rest);
        fill_blocks(flag, j + 1, avail, acc, out);
        avail = std::move(saved);
        acc.resize(at);

        int i = take - 1;
        while (i >= 0 && idx[i] == m - take + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int p = i + 1; p < take; ++p) idx[p] = idx[p - 1] + 1;
    }
}

}  // namespace

std::vector<Permutation> coset_set(const Flag& flag) {
    std::vector<int> avail(flag.n());
    for (int i = 0; i < flag.n(); ++i) avail[i] = i + 1;
    std::vector<int> acc;
    std::vector<Permutation> out;
    fill_blocks(flag, 1, avail, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

long long coset_size(const Flag& flag) {
    long long v = 1;
    for (int i = 2; i <= flag.n(); ++i) v *= i;
    for (int j = 1; j <= flag.k() + 1; ++j) {
        long long f = 1;
        for (int i = 2; i <= flag.rank(j) - flag.rank(j - 1); ++i) f *= i;
        v /= f;
    }
    return v;
}

Permutation longest_element(const Flag& flag) {
    int n = flag.n();
    std::vector<int> img(n);
    for (int i = 1; i <= n; ++i) {
        int j = flag.block_of(i);
        img[i - 1] = n - flag.rank(j) + i - flag.rank(j - 1);
    }
    return Permutation(std::move(img));
}

Permutation special_cycle(Cycle kind, int a, int b, const Flag& flag) {
    int n = flag.n();
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i + 1;
    switch (kind) {
        case Cycle::Alpha: {
            int i = a, j = b;
            if (j < 1 || j > flag.k() || i < 1 || i > flag.rank(j))
                throw std::out_of_range("special_cycle: alpha parameters");
            // cycle m -> m+1 on [n_j-i+1, n_j], n_j+1 -> n_j-i+1
            int lo = flag.rank(j) - i + 1, hi = flag.rank(j) + 1;
            for (int m = lo; m < hi; ++m) img[m - 1] = m + 1;
            img[hi - 1] = lo;
            break;
        }
        case Cycle::Beta: {
            int i = a, j = b;
            if (j < 1 || j > flag.k() || i < 1 || i > n - flag.rank(j))
                throw std::out_of_range("special_cycle: beta parameters");
            // w(n_j) = n_j+i, m -> m-1 on (n_j, n_j+i]
            int lo = flag.rank(j), hi = flag.rank(j) + i;
            img[lo - 1] = hi;
            for (int m = lo + 1; m <= hi; ++m) img[m - 1] = m - 1;
            break;
        }
        case Cycle::Gamma: {
            int h = a, l = b;
            if (h < 1 || l < h || l > flag.k())
                throw std::out_of_range("special_cycle: gamma parameters");
            int lo = flag.rank(h), hi = flag.rank(l + 1);
            for (int m = lo; m < hi; ++m) img[m - 1] = m + 1;
            img[hi - 1] = lo;
            break;
        }
        case Cycle::Delta: {
            int h = a, l = b;
            if (h < 1 || l < h || l > flag.k())
                throw std::out_of_range("special_cycle: delta parameters");
            int lo = flag.rank(h - 1) + 1, hi = flag.rank(l);
            if (lo >= hi) break;   // empty word
            img[lo - 1] = hi;
            for (int m = lo + 1; m <= hi; ++m) img[m - 1] = m - 1;
            break;
        }
    }
    return Permutation(std::move(img));
}

Permutation dual(const Permutation& w, const Flag& flag) {
    if (!in_coset_set(w, flag))
        throw std::invalid_argument("dual: permutation is not in S");
    int n = flag.n();
    std::vector<int> img(n);
    for (int j = 1; j <= flag.k() + 1; ++j) {
        int lo = flag.rank(j - 1) + 1, hi = flag.rank(j);
        std::vector<int> vals;
        for (int i = lo; i <= hi; ++i) vals.push_back(n + 1 - w(i));
        std::sort(vals.begin(), vals.end());
        for (int i = lo; i <= hi; ++i) img[i - 1] = vals[i - lo];
    }
    return Permutation(std::move(img));
}

}  // namespace qsc
