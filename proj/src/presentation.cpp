#include "qsc/presentation.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "qsc/qpolys.hpp"
#include "qsc/zsolve.hpp"

namespace qsc {

struct PresentationOracle::DegreeData {
    std::vector<Monomial> monomials;                        // degree slice, sorted
    ZLattice ideal;                                         // relation multiples only
    ZLattice tracked;                                       // basis rows + relation rows
    std::vector<std::pair<QMonomial, LambdaIndex>> basis_keys;
    DegreeData(int cols, int track) : ideal(cols), tracked(cols, track) {}
};

namespace {

// all monomials in the given variables with prescribed weighted degree
void monomials_of_degree(const std::vector<VarId>& vars, const std::vector<int>& weights,
                         size_t at, int remaining, Monomial& cur,
                         std::vector<Monomial>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    if (at == vars.size()) return;
    // exponent of vars[at]
    monomials_of_degree(vars, weights, at + 1, remaining, cur, out);
    int w = weights[at];
    for (int e = 1; e * w <= remaining; ++e) {
        cur.emplace_back(vars[at], e);
        monomials_of_degree(vars, weights, at + 1, remaining - e * w, cur, out);
        cur.pop_back();
    }
}

}  // namespace

PresentationOracle::PresentationOracle(const Flag& flag, bool quantum)
    : flag_(flag), quantum_(quantum) {
    int k = flag.k(), n = flag.n();
    for (int j = 1; j <= k; ++j)
        for (int i = 1; i <= flag.rank(j) - flag.rank(j - 1); ++i)
            vars_.push_back(VarId::sigma(i, j));
    if (quantum_)
        for (int j = 1; j <= k; ++j) vars_.push_back(VarId::q(j));
    std::sort(vars_.begin(), vars_.end());

    // the relations of degree <= n - n_k are monic in sigma_i^{k+1}: solve for
    // the top-block variables in increasing degree
    auto G_top = [&](int i) {
        Poly g = Gq_special(i, k + 1, flag_, GDef::Recursion);
        return quantum_ ? g : g.drop_q();
    };
    int top = n - flag.rank(k);
    for (int i = 1; i <= top; ++i) {
        Poly rel = G_top(i).substitute(elim_);
        // rel = sigma_i^{k+1} + rest with rest free of the top block
        VarId v = VarId::sigma(i, k + 1);
        Poly rest = rel - Poly::var(v);
        for (auto& [m, c] : rest.terms())
            for (auto& [mv, e] : m)
                if (mv.fam == Family::Sigma && mv.b == k + 1)
                    throw std::logic_error("presentation: elimination not triangular");
        elim_[v] = -rest;
    }
    for (int i = top + 1; i <= n; ++i) {
        Poly rel = G_top(i).substitute(elim_);
        if (rel.is_zero())
            throw std::logic_error("presentation: residual relation vanished");
        relations_.push_back(std::move(rel));
    }
    for (int i = 1; i <= top; ++i)
        if (!G_top(i).substitute(elim_).is_zero())
            throw std::logic_error("presentation: elimination failed to clear low relations");
}

const PresentationOracle& PresentationOracle::get(const Flag& flag, bool quantum) {
    static std::map<std::pair<Flag, bool>, std::unique_ptr<PresentationOracle>> registry;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = registry[{flag, quantum}];
    if (!slot) slot = std::make_unique<PresentationOracle>(flag, quantum);
    return *slot;
}

Poly PresentationOracle::eliminate_top_block(const Poly& p) const {
    if (!quantum_ && p.depends_on(Family::Q))
        throw std::invalid_argument("presentation: classical oracle got a q variable");
    return p.substitute(elim_);
}

SparseVec PresentationOracle::vectorize(const Poly& p,
                                        const std::vector<Monomial>& basis) const {
    std::map<Monomial, int> idx;
    for (size_t i = 0; i < basis.size(); ++i) idx[basis[i]] = static_cast<int>(i);
    SparseVec v;
    for (auto& [m, c] : p.terms()) {
        auto it = idx.find(m);
        if (it == idx.end())
            throw std::logic_error("presentation: monomial outside the degree slice");
        v.emplace_back(it->second, c);
    }
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

const PresentationOracle::DegreeData& PresentationOracle::degree_data(int deg) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = degree_cache_.find(deg);
    if (it != degree_cache_.end()) return *it->second;

    std::vector<int> weights;
    for (auto& v : vars_) weights.push_back(weighted_var_degree(v, flag_));
    std::vector<Monomial> mons;
    Monomial cur;
    monomials_of_degree(vars_, weights, 0, deg, cur, mons);
    std::sort(mons.begin(), mons.end());

    // basis keys: (q^d, Lambda) with deg(q^d) + |Lambda| == deg
    std::vector<std::pair<QMonomial, LambdaIndex>> keys;
    const auto lambdas = lambda_indices(flag_);
    std::vector<QMonomial> qmons;
    if (quantum_) {
        std::vector<VarId> qvars;
        std::vector<int> qweights;
        for (int j = 1; j <= flag_.k(); ++j) {
            qvars.push_back(VarId::q(j));
            qweights.push_back(flag_.q_degree(j));
        }
        for (int qd = 0; qd <= deg; ++qd) {
            std::vector<Monomial> qm;
            Monomial qcur;
            monomials_of_degree(qvars, qweights, 0, qd, qcur, qm);
            for (auto& m : qm) {
                QMonomial d(flag_.k(), 0);
                for (auto& [v, e] : m) d[v.a - 1] = e;
                if (q_weighted_degree(d, flag_) == qd) qmons.push_back(d);
            }
        }
    } else {
        qmons.push_back(QMonomial(flag_.k(), 0));
    }
    std::sort(qmons.begin(), qmons.end());
    qmons.erase(std::unique(qmons.begin(), qmons.end()), qmons.end());
    for (auto& d : qmons) {
        int rest = deg - q_weighted_degree(d, flag_);
        if (rest < 0) continue;
        for (auto& L : lambdas)
            if (L.weight() == rest) keys.emplace_back(d, L);
    }

    auto data = std::make_unique<DegreeData>(static_cast<int>(mons.size()),
                                             static_cast<int>(keys.size()));
    data->monomials = std::move(mons);
    data->basis_keys = std::move(keys);

    // ideal rows: monomial multiples of the residual relations
    int top = flag_.n() - flag_.rank(flag_.k());
    for (size_t r = 0; r < relations_.size(); ++r) {
        int rdeg = top + 1 + static_cast<int>(r);
        if (rdeg > deg) continue;
        std::vector<Monomial> mults;
        Monomial mcur;
        monomials_of_degree(vars_, weights, 0, deg - rdeg, mcur, mults);
        for (auto& m : mults) {
            Poly mono;
            mono.add_term(m, 1);
            Poly row = mono * relations_[r];
            SparseVec v = vectorize(row, data->monomials);
            data->ideal.add_row(v);
            data->tracked.add_row(std::move(v));
        }
    }
    // tracked basis rows: q^d G_Lambda (classical: g_Lambda)
    for (size_t b = 0; b < data->basis_keys.size(); ++b) {
        auto& [d, L] = data->basis_keys[b];
        Poly p = quantum_ ? q_monomial_poly(d) * G_lambda_q(L, flag_)
                          : g_lambda(L, flag_);
        SparseVec v = vectorize(p, data->monomials);
        v.emplace_back(static_cast<int>(data->monomials.size()) + static_cast<int>(b),
                       Int(1));
        data->tracked.add_row(std::move(v));
    }

    auto [pos, fresh] = degree_cache_.emplace(deg, std::move(data));
    (void)fresh;
    return *pos->second;
}

Poly PresentationOracle::normal_form(const Poly& p) const {
    Poly q = eliminate_top_block(p);
    if (q.is_zero()) return q;
    auto deg = weighted_degree(q, flag_);
    if (!deg)
        throw std::invalid_argument("presentation: input is not weighted homogeneous");
    const DegreeData& data = degree_data(*deg);
    SparseVec residue = data.ideal.reduce(vectorize(q, data.monomials));
    Poly out;
    for (auto& [col, c] : residue) out.add_term(data.monomials[col], c);
    return out;
}

std::map<std::pair<QMonomial, LambdaIndex>, Int> PresentationOracle::lambda_expansion(
    const Poly& p) const {
    std::map<std::pair<QMonomial, LambdaIndex>, Int> out;
    Poly q = eliminate_top_block(p);
    if (q.is_zero()) return out;
    auto deg = weighted_degree(q, flag_);
    if (!deg)
        throw std::invalid_argument("presentation: input is not weighted homogeneous");
    const DegreeData& data = degree_data(*deg);
    auto sol = data.tracked.solve(vectorize(q, data.monomials));
    if (!sol)
        throw std::logic_error("presentation: expansion in the standard basis failed");
    for (size_t b = 0; b < data.basis_keys.size(); ++b)
        if ((*sol)[b] != 0) out.emplace(data.basis_keys[b], (*sol)[b]);
    return out;
}

Poly ideal_normal_form(const Poly& p, const Flag& flag) {
    return PresentationOracle::get(flag, true).normal_form(p);
}

std::map<std::pair<QMonomial, Permutation>, long long> presentation_constants(
    const Poly& prod, const Flag& flag, bool quantum) {
    const PresentationOracle& oracle = PresentationOracle::get(flag, quantum);
    const ALambdaTable& tab = a_lambda_table(flag);
    std::map<std::pair<QMonomial, Permutation>, long long> out;
    for (auto& [key, x] : oracle.lambda_expansion(prod)) {
        auto& [d, L] = key;
        int li = tab.lambda_index(L);
        // convert the G_Lambda coordinates to the P_w^q basis via the gram matrix
        for (size_t wi = 0; wi < tab.basis().size(); ++wi) {
            long long g = tab.gram(li, static_cast<int>(wi));
            if (g == 0) continue;
            auto wkey = std::make_pair(d, tab.basis()[wi]);
            long long add = x.convert_to<long long>() * g;
            auto [it, fresh] = out.emplace(wkey, add);
            if (!fresh) {
                it->second += add;
                if (it->second == 0) out.erase(it);
            }
        }
    }
    return out;
}

Poly qpairing_poly(const Poly& u, const Poly& v, const Flag& flag) {
    Poly prod = u * v;
    if (prod.is_zero()) return Poly(0);
    const LambdaIndex top = lambda_top(flag);
    Poly out;
    for (auto& [key, x] : PresentationOracle::get(flag, true).lambda_expansion(prod))
        if (key.second == top) out += q_monomial_poly(key.first).scaled(x);
    return out;
}

namespace {

struct EvalCtx {
    std::map<VarId, QCohClass> gen;                    // generator classes
    std::map<std::pair<VarId, int>, QCohClass> pow;
    std::mutex mu;
};

EvalCtx& eval_ctx(const Flag& flag) {
    static std::map<Flag, std::unique_ptr<EvalCtx>> registry;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = registry[flag];
    if (!slot) slot = std::make_unique<EvalCtx>();
    return *slot;
}

QCohClass evaluate_class_locked(const Poly& p, const Flag& flag, EvalCtx& ctx);

// class of sigma_i^j through the inversion of g_i^j = sum_r sigma_r^j g^{j-1}
QCohClass sigma_class(int i, int j, const Flag& flag, EvalCtx& ctx) {
    VarId v = VarId::sigma(i, j);
    auto it = ctx.gen.find(v);
    if (it != ctx.gen.end()) return it->second;
    QCohClass out(flag);
    if (j <= flag.k()) {
        out = qclass_of_alpha(i, j, flag);
        for (int r = 0; r < i; ++r) {
            QCohClass partial =
                r == 0 ? qclass_of_alpha(i, j - 1, flag)
                       : quantum_product(sigma_class(r, j, flag, ctx),
                                         qclass_of_alpha(i - r, j - 1, flag));
            out -= partial;
        }
    } else {
        // top block: sigma_r^{k+1} == (-1)^r f_r^k modulo the ideal
        Poly f = f_special(i, flag.k(), flag);
        out = evaluate_class_locked(f, flag, ctx);
        if (i % 2) out = out.scaled(-1);
    }
    ctx.gen.emplace(v, out);
    return out;
}

const QCohClass& var_power(VarId v, int e, const Flag& flag, EvalCtx& ctx) {
    auto key = std::make_pair(v, e);
    auto it = ctx.pow.find(key);
    if (it != ctx.pow.end()) return it->second;
    QCohClass base(flag);
    if (v.fam == Family::Sigma) base = sigma_class(v.a, v.b, flag, ctx);
    else if (v.fam == Family::Q) {
        QMonomial d(flag.k(), 0);
        d[v.a - 1] = 1;
        base = QCohClass::unit(flag).q_shifted(d);
    } else {
        throw std::invalid_argument("evaluate_class: x variables have no class");
    }
    QCohClass acc = e == 1 ? base : quantum_product(var_power(v, e - 1, flag, ctx), base);
    return ctx.pow.emplace(key, std::move(acc)).first->second;
}

QCohClass evaluate_class_locked(const Poly& p, const Flag& flag, EvalCtx& ctx) {
    QCohClass out(flag);
    for (auto& [m, c] : p.terms()) {
        QCohClass term = QCohClass::unit(flag);
        for (auto& [v, e] : m) term = quantum_product(term, var_power(v, e, flag, ctx));
        out += term.scaled(c.convert_to<long long>());
    }
    return out;
}

}  // namespace

QCohClass evaluate_class(const Poly& p, const Flag& flag) {
    EvalCtx& ctx = eval_ctx(flag);
    std::lock_guard<std::mutex> lock(ctx.mu);
    return evaluate_class_locked(p, flag, ctx);
}

}  // namespace qsc
