#include "qsc/schubert.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "qsc/classical.hpp"
#include "qsc/zsolve.hpp"

namespace qsc {

int LambdaIndex::weight() const {
    int w = 0;
    for (auto& block : parts)
        for (int p : block) w += p;
    return w;
}

std::string LambdaIndex::to_string() const {
    std::string s;
    for (size_t j = 0; j < parts.size(); ++j) {
        if (j) s += '|';
        if (parts[j].empty()) s += '0';
        for (size_t m = 0; m < parts[j].size(); ++m) {
            if (m) s += ',';
            s += std::to_string(parts[j][m]);
        }
    }
    return s;
}

bool lambda_valid(const LambdaIndex& L, const Flag& flag) {
    if (static_cast<int>(L.parts.size()) != flag.k()) return false;
    for (int j = 1; j <= flag.k(); ++j) {
        const auto& block = L.parts[j - 1];
        if (static_cast<int>(block.size()) > flag.rank(j + 1) - flag.rank(j)) return false;
        int prev = flag.rank(j);
        for (int p : block) {
            if (p < 1 || p > prev) return false;
            prev = p;
        }
    }
    return true;
}

namespace {

void partitions_in_box(int max_parts, int max_val, std::vector<std::vector<int>>& out) {
    out.push_back({});
    std::vector<int> cur;
    // depth-first over weakly decreasing sequences
    struct Rec {
        int max_parts, max_val;
        std::vector<std::vector<int>>& out;
        void go(std::vector<int>& cur, int bound) {
            if (static_cast<int>(cur.size()) == max_parts) return;
            for (int v = 1; v <= bound; ++v) {
                cur.push_back(v);
                out.push_back(cur);
                go(cur, v);
                cur.pop_back();
            }
        }
    } rec{max_parts, max_val, out};
    rec.go(cur, max_val);
}

}  // namespace

std::vector<LambdaIndex> lambda_indices(const Flag& flag) {
    std::vector<std::vector<std::vector<int>>> per_block(flag.k());
    for (int j = 1; j <= flag.k(); ++j)
        partitions_in_box(flag.rank(j + 1) - flag.rank(j), flag.rank(j), per_block[j - 1]);
    std::vector<LambdaIndex> out;
    std::vector<int> pick(flag.k(), 0);
    while (true) {
        LambdaIndex L;
        L.parts.resize(flag.k());
        for (int j = 0; j < flag.k(); ++j) L.parts[j] = per_block[j][pick[j]];
        out.push_back(std::move(L));
        int j = flag.k() - 1;
        while (j >= 0 && pick[j] + 1 == static_cast<int>(per_block[j].size())) pick[j--] = 0;
        if (j < 0) break;
        ++pick[j];
    }
    std::sort(out.begin(), out.end());
    return out;
}

LambdaIndex lambda_top(const Flag& flag) {
    LambdaIndex L;
    L.parts.resize(flag.k());
    for (int j = 1; j <= flag.k(); ++j)
        L.parts[j - 1].assign(flag.rank(j + 1) - flag.rank(j), flag.rank(j));
    return L;
}

Poly schubert_poly(const Permutation& w) {
    int n = w.size();
    // reduced word: peel first descents off w0*w, then apply divided
    // differences in reverse order to the staircase monomial
    std::vector<int> u(n);
    for (int i = 1; i <= n; ++i) u[i - 1] = n + 1 - w(i);
    std::vector<int> word;
    while (true) {
        int m = -1;
        for (int i = 0; i + 1 < n; ++i)
            if (u[i] > u[i + 1]) { m = i; break; }
        if (m < 0) break;
        word.push_back(m + 1);
        std::swap(u[m], u[m + 1]);
    }
    Monomial stair;
    for (int i = 1; i < n; ++i) stair.emplace_back(VarId::x(i), n - i);
    Poly p;
    p.add_term(stair, 1);
    for (auto it = word.rbegin(); it != word.rend(); ++it) p = divided_difference(*it, p);
    return p;
}

Poly giambelli_poly(const Permutation& w, const Flag& flag) {
    if (!in_coset_set(w, flag))
        throw std::invalid_argument("giambelli_poly: permutation is not in S");
    return blockwise_elementary_reduce(schubert_poly(w), flag);
}

namespace {

struct GKey {
    Flag flag;
    int i, j;
    bool complete;   // g vs f
    auto operator<=>(const GKey&) const = default;
};

std::map<GKey, Poly> gf_cache;   // guarded by gf_mutex at the public entry points
std::mutex gf_mutex;

Poly g_rec(int i, int j, const Flag& flag) {
    if (i == 0) return Poly(1);
    if (i < 0 || j <= 0 || i > flag.rank(j)) return Poly(0);
    GKey key{flag, i, j, false};
    auto it = gf_cache.find(key);
    if (it != gf_cache.end()) return it->second;
    Poly out;
    int bs = flag.rank(j) - flag.rank(j - 1);
    for (int r = 0; r <= bs; ++r) {
        Poly tail = g_rec(i - r, j - 1, flag);
        if (tail.is_zero()) continue;
        out += r == 0 ? tail : Poly::var(VarId::sigma(r, j)) * tail;
    }
    return gf_cache.emplace(key, std::move(out)).first->second;
}

Poly f_rec(int i, int j, const Flag& flag) {
    if (i == 0) return Poly(1);
    if (i < 0 || j <= 0) return Poly(0);
    GKey key{flag, i, j, true};
    auto it = gf_cache.find(key);
    if (it != gf_cache.end()) return it->second;
    // h_i = sum_{r>=1} (-1)^{r-1} e_r h_{i-r} on the first n_j roots
    Poly out;
    for (int r = 1; r <= std::min(i, flag.rank(j)); ++r) {
        Poly term = g_rec(r, j, flag) * f_rec(i - r, j, flag);
        if (r % 2 == 0) out -= term;
        else out += term;
    }
    return gf_cache.emplace(key, std::move(out)).first->second;
}

}  // namespace

Poly g_special(int i, int j, const Flag& flag) {
    if (j < 0 || j > flag.k() + 1)
        throw std::out_of_range("g_special: block index");
    std::lock_guard<std::mutex> lock(gf_mutex);
    return g_rec(i, j, flag);
}

Poly f_special(int i, int j, const Flag& flag) {
    if (j < 0 || j > flag.k() + 1)
        throw std::out_of_range("f_special: block index");
    std::lock_guard<std::mutex> lock(gf_mutex);
    return f_rec(i, j, flag);
}

Poly g_lambda(const LambdaIndex& L, const Flag& flag) {
    if (!lambda_valid(L, flag)) throw std::invalid_argument("g_lambda: invalid index");
    Poly out(1);
    for (int j = 1; j <= flag.k(); ++j)
        for (int p : L.parts[j - 1]) out = out * g_special(p, j, flag);
    return out;
}

ALambdaTable::ALambdaTable(const Flag& flag)
    : flag_(flag), basis_(coset_set(flag)), lambdas_(lambda_indices(flag)) {
    size_t N = basis_.size();
    if (lambdas_.size() != N)
        throw std::logic_error("a_lambda_table: basis size mismatch");
    gram_.assign(N, std::vector<long long>(N, 0));
    a_.assign(N, std::vector<long long>(N, 0));

    CohClass unit = CohClass::basis(flag_, Permutation::identity(flag_.n()));
    for (size_t li = 0; li < N; ++li) {
        CohClass cls = apply_g_lambda(lambdas_[li], unit);
        for (auto& [w, c] : cls.terms()) gram_[li][perm_index(w)] = c;
    }

    // invert degree by degree; each block is unimodular
    int dim = flag_.dimension();
    for (int d = 0; d <= dim; ++d) {
        std::vector<int> lrows, wcols;
        for (size_t li = 0; li < N; ++li)
            if (lambdas_[li].weight() == d) lrows.push_back(static_cast<int>(li));
        for (size_t wi = 0; wi < N; ++wi)
            if (basis_[wi].length() == d) wcols.push_back(static_cast<int>(wi));
        if (lrows.size() != wcols.size())
            throw std::logic_error("a_lambda_table: degree block size mismatch");
        int m = static_cast<int>(lrows.size());
        if (m == 0) continue;
        ZLattice lat(m, m);
        for (int r = 0; r < m; ++r) {
            SparseVec row;
            for (int c = 0; c < m; ++c) {
                long long v = gram_[lrows[r]][wcols[c]];
                if (v) row.emplace_back(c, Int(v));
            }
            row.emplace_back(m + r, Int(1));
            lat.add_row(std::move(row));
        }
        for (int c = 0; c < m; ++c) {
            auto sol = lat.solve({{c, Int(1)}});
            if (!sol)
                throw std::logic_error("a_lambda_table: change of basis is singular over Z");
            for (int r = 0; r < m; ++r)
                a_[wcols[c]][lrows[r]] = static_cast<long long>((*sol)[r]);
        }
    }
}

int ALambdaTable::lambda_index(const LambdaIndex& L) const {
    auto it = std::lower_bound(lambdas_.begin(), lambdas_.end(), L);
    if (it == lambdas_.end() || !(*it == L))
        throw std::invalid_argument("a_lambda_table: unknown lambda index");
    return static_cast<int>(it - lambdas_.begin());
}

int ALambdaTable::perm_index(const Permutation& w) const {
    auto it = std::lower_bound(basis_.begin(), basis_.end(), w);
    if (it == basis_.end() || !(*it == w))
        throw std::invalid_argument("a_lambda_table: permutation not in S");
    return static_cast<int>(it - basis_.begin());
}

long long ALambdaTable::a_coeff(const Permutation& w, const LambdaIndex& L) const {
    return a_[perm_index(w)][lambda_index(L)];
}

Int ALambdaTable::block_det(int degree) const {
    std::vector<int> lrows, wcols;
    size_t N = basis_.size();
    for (size_t li = 0; li < N; ++li)
        if (lambdas_[li].weight() == degree) lrows.push_back(static_cast<int>(li));
    for (size_t wi = 0; wi < N; ++wi)
        if (basis_[wi].length() == degree) wcols.push_back(static_cast<int>(wi));
    std::vector<std::vector<Int>> m(lrows.size(), std::vector<Int>(wcols.size()));
    for (size_t r = 0; r < lrows.size(); ++r)
        for (size_t c = 0; c < wcols.size(); ++c) m[r][c] = gram_[lrows[r]][wcols[c]];
    return bareiss_det(std::move(m));
}

const ALambdaTable& a_lambda_table(const Flag& flag) {
    static std::map<Flag, ALambdaTable> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(flag);
    if (it == cache.end()) it = cache.emplace(flag, ALambdaTable(flag)).first;
    return it->second;
}

}  // namespace qsc
