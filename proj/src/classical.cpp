#include "qsc/classical.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace qsc {

CohClass CohClass::basis(const Flag& flag, const Permutation& w) {
    CohClass c(flag);
    c.add(w, 1);
    return c;
}

CohClass CohClass::unit(const Flag& flag) {
    return basis(flag, Permutation::identity(flag.n()));
}

long long CohClass::coefficient(const Permutation& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
}

void CohClass::add(const Permutation& w, long long c) {
    if (c == 0) return;
    if (!in_coset_set(w, flag_))
        throw std::invalid_argument("CohClass: permutation is not in S");
    auto [it, fresh] = terms_.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

CohClass& CohClass::operator+=(const CohClass& o) {
    if (!(flag_ == o.flag_)) throw std::invalid_argument("CohClass: flag mismatch");
    for (auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

CohClass& CohClass::operator-=(const CohClass& o) {
    if (!(flag_ == o.flag_)) throw std::invalid_argument("CohClass: flag mismatch");
    for (auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

CohClass CohClass::scaled(long long c) const {
    CohClass out(flag_);
    if (c == 0) return out;
    for (auto& [w, k] : terms_) out.terms_[w] = k * c;
    return out;
}

std::optional<int> CohClass::graded_length() const {
    std::optional<int> deg;
    for (auto& [w, c] : terms_) {
        int l = w.length();
        if (!deg) deg = l;
        else if (*deg != l) return std::nullopt;
    }
    return deg;
}

namespace {

struct ChainMemoKey {
    Permutation w;
    int steps;
    std::vector<int> used;
    auto operator<=>(const ChainMemoKey&) const = default;
};

void chain_rec(const Permutation& cur, int d, int steps, PieriKind kind,
               std::vector<int>& used, std::map<ChainMemoKey, std::set<Permutation>>& memo,
               std::set<Permutation>& out) {
    if (steps == 0) {
        out.insert(cur);
        return;
    }
    ChainMemoKey key{cur, steps, used};
    auto it = memo.find(key);
    if (it != memo.end()) {
        out.insert(it->second.begin(), it->second.end());
        return;
    }
    std::set<Permutation> local;
    int n = cur.size();
    for (int a = 1; a <= d; ++a) {
        if (kind == PieriKind::Alpha &&
            std::binary_search(used.begin(), used.end(), a))
            continue;
        for (int b = d + 1; b <= n; ++b) {
            if (kind == PieriKind::Beta &&
                std::binary_search(used.begin(), used.end(), b))
                continue;
            if (!length_up_one(cur, a, b)) continue;
            int mark = kind == PieriKind::Alpha ? a : b;
            auto pos = std::lower_bound(used.begin(), used.end(), mark);
            used.insert(pos, mark);
            chain_rec(cur.right_transposed(a, b), d, steps - 1, kind, used, memo, local);
            used.erase(std::find(used.begin(), used.end(), mark));
        }
    }
    out.insert(local.begin(), local.end());
    memo.emplace(std::move(key), std::move(local));
}

}  // namespace

std::set<Permutation> pieri_chain_targets(const Permutation& w, int d, int count,
                                          PieriKind kind, const Flag& flag) {
    if (w.size() != flag.n())
        throw std::invalid_argument("pieri_chain_targets: size mismatch");
    if (count < 0 || d < 0 || d > flag.n())
        throw std::out_of_range("pieri_chain_targets: parameters");
    if (count == 0) return {w};
    std::map<ChainMemoKey, std::set<Permutation>> memo;
    std::set<Permutation> out;
    std::vector<int> used;
    chain_rec(w, d, count, kind, used, memo, out);
    return out;
}

std::set<Permutation> pieri_targets(const Permutation& w, int i, int j, PieriKind kind,
                                    const Flag& flag) {
    if (j < 1 || j > flag.k()) throw std::out_of_range("pieri_targets: block index");
    int imax = kind == PieriKind::Alpha ? flag.rank(j) : flag.n() - flag.rank(j);
    if (i < 1 || i > imax) throw std::out_of_range("pieri_targets: chern degree");
    return pieri_chain_targets(w, flag.rank(j), i, kind, flag);
}

CohClass apply_special(PieriKind kind, int i, int j, const CohClass& c) {
    CohClass out(c.flag());
    for (auto& [w, coeff] : c.terms())
        for (auto& t : pieri_targets(w, i, j, kind, c.flag())) out.add(t, coeff);
    return out;
}

CohClass apply_g_lambda(const LambdaIndex& L, const CohClass& c) {
    if (!lambda_valid(L, c.flag()))
        throw std::invalid_argument("apply_g_lambda: invalid index");
    CohClass cur = c;
    for (int j = 1; j <= c.flag().k(); ++j)
        for (int p : L.parts[j - 1]) cur = apply_special(PieriKind::Alpha, p, j, cur);
    return cur;
}

CohClass class_of_alpha(int i, int j, const Flag& flag) {
    if (i == 0) return CohClass::unit(flag);
    if (i < 0 || j == 0 || i > flag.rank(j)) return CohClass(flag);
    return CohClass::basis(flag, special_cycle(Cycle::Alpha, i, j, flag));
}

CohClass class_of_beta(int p, int j, const Flag& flag) {
    if (p == 0) return CohClass::unit(flag);
    if (p < 0 || j == 0) return CohClass(flag);
    return CohClass::basis(flag, special_cycle(Cycle::Beta, p, j, flag));
}

namespace {

struct ClassicalCtx {
    std::map<std::pair<int, int>, CohClass> g_apply;    // (lambda idx, perm idx)
    std::map<std::pair<int, int>, CohClass> pair_prod;  // (perm idx, perm idx)
    std::mutex mu;
};

ClassicalCtx& classical_ctx(const Flag& flag) {
    static std::map<Flag, std::unique_ptr<ClassicalCtx>> registry;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = registry[flag];
    if (!slot) slot = std::make_unique<ClassicalCtx>();
    return *slot;
}

const CohClass& g_apply_cached(const Flag& flag, const ALambdaTable& tab, int li, int wi) {
    ClassicalCtx& ctx = classical_ctx(flag);
    std::lock_guard<std::mutex> lock(ctx.mu);
    auto key = std::make_pair(li, wi);
    auto it = ctx.g_apply.find(key);
    if (it == ctx.g_apply.end()) {
        CohClass cls = apply_g_lambda(tab.lambdas()[li],
                                      CohClass::basis(flag, tab.basis()[wi]));
        it = ctx.g_apply.emplace(key, std::move(cls)).first;
    }
    return it->second;
}

const CohClass& basis_product(const Flag& flag, const Permutation& u, const Permutation& v) {
    const ALambdaTable& tab = a_lambda_table(flag);
    int ui = tab.perm_index(u), vi = tab.perm_index(v);
    ClassicalCtx& ctx = classical_ctx(flag);
    {
        std::lock_guard<std::mutex> lock(ctx.mu);
        auto it = ctx.pair_prod.find({ui, vi});
        if (it != ctx.pair_prod.end()) return it->second;
    }
    CohClass out(flag);
    size_t N = tab.basis().size();
    for (size_t li = 0; li < N; ++li) {
        long long a = tab.a_coeff(ui, static_cast<int>(li));
        if (a == 0) continue;
        out += g_apply_cached(flag, tab, static_cast<int>(li), vi).scaled(a);
    }
    std::lock_guard<std::mutex> lock(ctx.mu);
    return ctx.pair_prod.emplace(std::make_pair(ui, vi), std::move(out)).first->second;
}

}  // namespace

CohClass classical_product(const CohClass& u, const CohClass& v) {
    if (!(u.flag() == v.flag())) throw std::invalid_argument("classical_product: flag mismatch");
    CohClass out(u.flag());
    for (auto& [uw, uc] : u.terms())
        for (auto& [vw, vc] : v.terms())
            out += basis_product(u.flag(), uw, vw).scaled(uc * vc);
    return out;
}

long long pairing(const CohClass& u, const CohClass& v) {
    if (!(u.flag() == v.flag())) throw std::invalid_argument("pairing: flag mismatch");
    const Permutation top = longest_element(u.flag());
    int dim = u.flag().dimension();
    long long total = 0;
    // products are graded, so only complementary-length pieces can hit the top class
    for (auto& [uw, uc] : u.terms())
        for (auto& [vw, vc] : v.terms()) {
            if (uw.length() + vw.length() != dim) continue;
            total += uc * vc * basis_product(u.flag(), uw, vw).coefficient(top);
        }
    return total;
}

bool verify_identity_1_3(const Flag& flag, int i, int j) {
    if (j < 1 || j > flag.k() || i < 1 || i > flag.rank(j))
        throw std::out_of_range("verify_identity_1_3: parameters");
    CohClass rhs(flag);
    int bs = flag.rank(j) - flag.rank(j - 1);
    for (int r = 0; r <= bs; ++r) {
        CohClass inner(flag);
        for (int p = 0; p <= r; ++p) {
            CohClass term = classical_product(class_of_beta(p, j - 1, flag),
                                              class_of_alpha(r - p, j, flag));
            if (p % 2 == 0) inner += term;
            else inner -= term;
        }
        rhs += classical_product(inner, class_of_alpha(i - r, j - 1, flag));
    }
    return rhs == class_of_alpha(i, j, flag);
}

}  // namespace qsc
