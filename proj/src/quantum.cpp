#include "qsc/quantum.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace qsc {

int q_weighted_degree(const QMonomial& d, const Flag& flag) {
    if (static_cast<int>(d.size()) != flag.k())
        throw std::invalid_argument("q monomial: wrong number of exponents");
    int deg = 0;
    for (int j = 1; j <= flag.k(); ++j) {
        if (d[j - 1] < 0) throw std::invalid_argument("q monomial: negative exponent");
        deg += d[j - 1] * flag.q_degree(j);
    }
    return deg;
}

Poly q_monomial_poly(const QMonomial& d) {
    Monomial m;
    for (size_t j = 0; j < d.size(); ++j)
        if (d[j] > 0) m.emplace_back(VarId::q(static_cast<int>(j) + 1), d[j]);
    Poly p;
    p.add_term(m, 1);
    return p;
}

QMonomial q_zero(const Flag& flag) { return QMonomial(flag.k(), 0); }

QCohClass QCohClass::basis(const Flag& flag, const Permutation& w) {
    QCohClass c(flag);
    c.add(q_zero(flag), w, 1);
    return c;
}

QCohClass QCohClass::unit(const Flag& flag) {
    return basis(flag, Permutation::identity(flag.n()));
}

QCohClass QCohClass::from_classical(const CohClass& c) {
    QCohClass out(c.flag());
    for (auto& [w, coeff] : c.terms()) out.add(q_zero(c.flag()), w, coeff);
    return out;
}

long long QCohClass::coefficient(const QMonomial& d, const Permutation& w) const {
    auto it = terms_.find({d, w});
    return it == terms_.end() ? 0 : it->second;
}

void QCohClass::add(const QMonomial& d, const Permutation& w, long long c) {
    if (c == 0) return;
    if (static_cast<int>(d.size()) != flag_.k())
        throw std::invalid_argument("QCohClass: q monomial size mismatch");
    if (!in_coset_set(w, flag_))
        throw std::invalid_argument("QCohClass: permutation is not in S");
    auto [it, fresh] = terms_.emplace(std::make_pair(d, w), c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

QCohClass& QCohClass::operator+=(const QCohClass& o) {
    if (!(flag_ == o.flag_)) throw std::invalid_argument("QCohClass: flag mismatch");
    for (auto& [key, c] : o.terms_) add(key.first, key.second, c);
    return *this;
}

QCohClass& QCohClass::operator-=(const QCohClass& o) {
    if (!(flag_ == o.flag_)) throw std::invalid_argument("QCohClass: flag mismatch");
    for (auto& [key, c] : o.terms_) add(key.first, key.second, -c);
    return *this;
}

QCohClass QCohClass::scaled(long long c) const {
    QCohClass out(flag_);
    if (c == 0) return out;
    for (auto& [key, k] : terms_) out.terms_[key] = k * c;
    return out;
}

QCohClass QCohClass::q_shifted(const QMonomial& d) const {
    QCohClass out(flag_);
    for (auto& [key, c] : terms_) {
        QMonomial nd = key.first;
        for (size_t j = 0; j < nd.size(); ++j) nd[j] += d[j];
        out.terms_[{nd, key.second}] = c;
    }
    return out;
}

CohClass QCohClass::classical_part() const {
    CohClass out(flag_);
    QMonomial zero = q_zero(flag_);
    for (auto& [key, c] : terms_)
        if (key.first == zero) out.add(key.second, c);
    return out;
}

std::optional<int> QCohClass::graded_degree() const {
    std::optional<int> deg;
    for (auto& [key, c] : terms_) {
        int d = key.second.length() + q_weighted_degree(key.first, flag_);
        if (!deg) deg = d;
        else if (*deg != d) return std::nullopt;
    }
    return deg;
}

QCohClass qclass_of_alpha(int i, int j, const Flag& flag) {
    return QCohClass::from_classical(class_of_alpha(i, j, flag));
}

QCohClass qclass_of_beta(int p, int j, const Flag& flag) {
    return QCohClass::from_classical(class_of_beta(p, j, flag));
}

std::vector<HLCollection> enumerate_hl(const Permutation& w, int i, int j, const Flag& flag) {
    if (w.size() != flag.n())
        throw std::invalid_argument("enumerate_hl: size mismatch");
    if (j < 1 || j > flag.k() || i < 1 || i > flag.rank(j))
        throw std::out_of_range("enumerate_hl: parameters");
    std::vector<HLCollection> out;

    // window condition for a single (h, l) pair
    auto window_ok = [&](int h, int l) {
        int top = w(flag.rank(h));
        for (int pos = flag.rank(h) + 1; pos <= flag.rank(l + 1); ++pos)
            if (w(pos) >= top) return false;
        return true;
    };

    // pairs (h_c, l_c) are added with h ascending and l descending, each pair
    // passing the window condition; every nonempty prefix is a collection
    std::vector<int> h, l;
    auto grow = [&](auto&& self, int hmin, int lmax) -> void {
        int m = static_cast<int>(h.size());
        if (m >= 1) out.push_back({h, l});
        if (m == i) return;
        for (int hn = hmin; hn <= j; ++hn)
            for (int ln = j; ln <= lmax; ++ln)
                if (window_ok(hn, ln)) {
                    h.push_back(hn);
                    l.push_back(ln);
                    self(self, hn + 1, ln - 1);
                    h.pop_back();
                    l.pop_back();
                }
    };
    grow(grow, 1, flag.k());

    // cross-check the window form against the direct length computation
    for (auto& hl : out) {
        int drop = 0;
        for (int c = 0; c < hl.size(); ++c)
            drop += flag.rank(hl.l[c] + 1) - flag.rank(hl.h[c]);
        Permutation wg = w.compose(hl_gamma(hl, flag));
        if (wg.length() != w.length() - drop)
            throw std::logic_error("enumerate_hl: window and length conditions disagree");
    }
    return out;
}

QMonomial hl_q_monomial(const HLCollection& hl, const Flag& flag) {
    QMonomial d(flag.k(), 0);
    for (int c = 0; c < hl.size(); ++c)
        for (int t = hl.h[c]; t <= hl.l[c]; ++t) ++d[t - 1];
    return d;
}

Permutation hl_gamma(const HLCollection& hl, const Flag& flag) {
    // gamma_{h_m,l_m} . gamma_{h_{m-1},l_{m-1}} ... gamma_{h_1,l_1}
    int m = hl.size();
    Permutation p = special_cycle(Cycle::Gamma, hl.h[m - 1], hl.l[m - 1], flag);
    for (int c = m - 2; c >= 0; --c)
        p = p.compose(special_cycle(Cycle::Gamma, hl.h[c], hl.l[c], flag));
    return p;
}

Permutation hl_delta(const HLCollection& hl, const Flag& flag) {
    // delta_{h_1,l_1} . delta_{h_2,l_2} ... delta_{h_m,l_m}
    Permutation p = special_cycle(Cycle::Delta, hl.h[0], hl.l[0], flag);
    for (int c = 1; c < hl.size(); ++c)
        p = p.compose(special_cycle(Cycle::Delta, hl.h[c], hl.l[c], flag));
    return p;
}

QCohClass quantum_pieri(const Permutation& w, int i, int j, const Flag& flag) {
    if (!in_coset_set(w, flag))
        throw std::invalid_argument("quantum_pieri: permutation is not in S");
    if (j < 1 || j > flag.k() || i < 1 || i > flag.rank(j))
        throw std::out_of_range("quantum_pieri: parameters");

    QCohClass out(flag);
    QMonomial zero = q_zero(flag);
    for (auto& t : pieri_targets(w, i, j, PieriKind::Alpha, flag)) out.add(zero, t, 1);

    for (auto& hl : enumerate_hl(w, i, j, flag)) {
        int m = hl.size();
        QMonomial qd = hl_q_monomial(hl, flag);
        Permutation wg = w.compose(hl_gamma(hl, flag));
        Permutation delta = hl_delta(hl, flag);
        int window_sum = 0;
        for (int c = 0; c < m; ++c)
            window_sum += flag.rank(hl.l[c]) - flag.rank(hl.h[c] - 1);
        // right multiplication by delta must drop the length by exactly
        // window_sum - m
        for (auto& w2 : pieri_chain_targets(wg, flag.rank(j) - m, i - m,
                                            PieriKind::Alpha, flag)) {
            Permutation fin = w2.compose(delta);
            if (fin.length() != w2.length() + m - window_sum) continue;
            if (!in_coset_set(fin, flag))
                throw std::logic_error("quantum_pieri: emitted permutation left S");
            if (fin.length() + q_weighted_degree(qd, flag) != w.length() + i)
                throw std::logic_error("quantum_pieri: graded degree violated");
            out.add(qd, fin, 1);
        }
    }
    return out;
}

namespace {

struct QuantumCtx {
    std::map<std::tuple<Permutation, int, int>, QCohClass> pieri;   // (w, i, j)
    std::map<std::pair<int, int>, QCohClass> pair_prod;             // basis indices
    std::map<int, QCohClass> g_lambda_cls;                          // lambda idx
    std::mutex mu;
};

QuantumCtx& quantum_ctx(const Flag& flag) {
    static std::map<Flag, std::unique_ptr<QuantumCtx>> registry;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = registry[flag];
    if (!slot) slot = std::make_unique<QuantumCtx>();
    return *slot;
}

const QCohClass& quantum_pieri_cached(const Permutation& w, int i, int j, const Flag& flag) {
    QuantumCtx& ctx = quantum_ctx(flag);
    std::lock_guard<std::mutex> lock(ctx.mu);
    auto key = std::make_tuple(w, i, j);
    auto it = ctx.pieri.find(key);
    if (it == ctx.pieri.end())
        it = ctx.pieri.emplace(key, quantum_pieri(w, i, j, flag)).first;
    return it->second;
}

}  // namespace

QCohClass apply_quantum_special(int i, int j, const QCohClass& c) {
    QCohClass out(c.flag());
    for (auto& [key, coeff] : c.terms()) {
        const QCohClass& p = quantum_pieri_cached(key.second, i, j, c.flag());
        out += p.q_shifted(key.first).scaled(coeff);
    }
    return out;
}

QCohClass apply_G_lambda(const LambdaIndex& L, const QCohClass& c) {
    if (!lambda_valid(L, c.flag()))
        throw std::invalid_argument("apply_G_lambda: invalid index");
    QCohClass cur = c;
    for (int j = 1; j <= c.flag().k(); ++j)
        for (int p : L.parts[j - 1]) cur = apply_quantum_special(p, j, cur);
    return cur;
}

const QCohClass& class_of_G_lambda(const LambdaIndex& L, const Flag& flag) {
    const ALambdaTable& tab = a_lambda_table(flag);
    int li = tab.lambda_index(L);
    QuantumCtx& ctx = quantum_ctx(flag);
    {
        std::lock_guard<std::mutex> lock(ctx.mu);
        auto it = ctx.g_lambda_cls.find(li);
        if (it != ctx.g_lambda_cls.end()) return it->second;
    }
    QCohClass cls = apply_G_lambda(L, QCohClass::unit(flag));
    std::lock_guard<std::mutex> lock(ctx.mu);
    return ctx.g_lambda_cls.emplace(li, std::move(cls)).first->second;
}

namespace {

const QCohClass& quantum_basis_product(const Flag& flag, const Permutation& u,
                                       const Permutation& v) {
    const ALambdaTable& tab = a_lambda_table(flag);
    int ui = tab.perm_index(u), vi = tab.perm_index(v);
    QuantumCtx& ctx = quantum_ctx(flag);
    {
        std::lock_guard<std::mutex> lock(ctx.mu);
        auto it = ctx.pair_prod.find({ui, vi});
        if (it != ctx.pair_prod.end()) return it->second;
    }
    QCohClass out(flag);
    QCohClass vb = QCohClass::basis(flag, v);
    size_t N = tab.basis().size();
    for (size_t li = 0; li < N; ++li) {
        long long a = tab.a_coeff(ui, static_cast<int>(li));
        if (a == 0) continue;
        out += apply_G_lambda(tab.lambdas()[li], vb).scaled(a);
    }
    std::lock_guard<std::mutex> lock(ctx.mu);
    return ctx.pair_prod.emplace(std::make_pair(ui, vi), std::move(out)).first->second;
}

}  // namespace

QCohClass quantum_product(const QCohClass& u, const QCohClass& v) {
    if (!(u.flag() == v.flag())) throw std::invalid_argument("quantum_product: flag mismatch");
    QCohClass out(u.flag());
    for (auto& [uk, uc] : u.terms())
        for (auto& [vk, vc] : v.terms()) {
            QMonomial d = uk.first;
            for (size_t j = 0; j < d.size(); ++j) d[j] += vk.first[j];
            out += quantum_basis_product(u.flag(), uk.second, vk.second)
                       .q_shifted(d)
                       .scaled(uc * vc);
        }
    return out;
}

long long gw_invariant(const std::vector<Permutation>& classes, const QMonomial& d,
                       const Flag& flag) {
    if (classes.size() < 2)
        throw std::invalid_argument("gw_invariant: need at least two classes");
    int total = 0;
    for (auto& w : classes) {
        if (!in_coset_set(w, flag))
            throw std::invalid_argument("gw_invariant: class is not in S");
        total += w.length();
    }
    if (total != flag.dimension() + q_weighted_degree(d, flag)) return 0;
    QCohClass prod = QCohClass::basis(flag, classes[0]);
    for (size_t i = 1; i + 1 < classes.size(); ++i)
        prod = quantum_product(prod, QCohClass::basis(flag, classes[i]));
    return prod.coefficient(d, dual(classes.back(), flag));
}

std::map<LambdaIndex, Poly> expand_in_G_lambda(const QCohClass& c) {
    const Flag& flag = c.flag();
    const ALambdaTable& tab = a_lambda_table(flag);
    std::map<LambdaIndex, Poly> out;
    QCohClass rem = c;
    auto less_qmon = [&](const QMonomial& a, const QMonomial& b) {
        int da = q_weighted_degree(a, flag), db = q_weighted_degree(b, flag);
        if (da != db) return da < db;
        return a < b;
    };
    while (!rem.is_zero()) {
        QMonomial d = rem.terms().begin()->first.first;
        for (auto& [key, coeff] : rem.terms())
            if (less_qmon(key.first, d)) d = key.first;
        // slice at q^d, converted through the inverse change of basis
        size_t N = tab.basis().size();
        std::vector<long long> slice(N, 0);
        for (auto& [key, coeff] : rem.terms())
            if (key.first == d) slice[tab.perm_index(key.second)] = coeff;
        for (size_t li = 0; li < N; ++li) {
            long long x = 0;
            for (size_t wi = 0; wi < N; ++wi)
                if (slice[wi]) x += slice[wi] * tab.a_coeff(static_cast<int>(wi),
                                                            static_cast<int>(li));
            if (x == 0) continue;
            out[tab.lambdas()[li]] += q_monomial_poly(d).scaled(x);
            rem -= class_of_G_lambda(tab.lambdas()[li], flag).q_shifted(d).scaled(x);
        }
        for (auto& [key, coeff] : rem.terms())
            if (key.first == d)
                throw std::logic_error("expand_in_G_lambda: slice did not cancel");
    }
    return out;
}

Poly qpairing(const QCohClass& u, const QCohClass& v) {
    auto expansion = expand_in_G_lambda(quantum_product(u, v));
    auto it = expansion.find(lambda_top(u.flag()));
    return it == expansion.end() ? Poly(0) : it->second;
}

}  // namespace qsc
