#include "qsc/qpolys.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace qsc {

PolyMatrix classical_matrix(const Flag& flag) {
    int n = flag.n();
    PolyMatrix A(n);
    for (int j = 1; j <= flag.k() + 1; ++j) {
        int lo = flag.rank(j - 1), size = flag.rank(j) - flag.rank(j - 1);
        for (int c = 1; c <= size; ++c) A.at(lo, lo + c - 1) = Poly::var(VarId::sigma(c, j));
        for (int r = 1; r < size; ++r) A.at(lo + r, lo + r - 1) = Poly(-1);
    }
    return A;
}

PolyMatrix deformed_matrix(const Flag& flag) {
    PolyMatrix A = classical_matrix(flag);
    for (int j = 1; j <= flag.k(); ++j) {
        int sign = (flag.rank(j + 1) - flag.rank(j) + 1) % 2 == 0 ? 1 : -1;
        A.at(flag.rank(j - 1), flag.rank(j + 1) - 1) +=
            Poly::var(VarId::q(j)).scaled(sign);
        A.at(flag.rank(j), flag.rank(j) - 1) += Poly(-1);
    }
    return A;
}

namespace {

Poly G_recursion(int i, int j, const Flag& flag,
                 std::map<std::pair<int, int>, Poly>& memo) {
    if (i == 0) return Poly(1);
    if (i < 0 || j <= 0 || i > flag.rank(j)) return Poly(0);
    auto it = memo.find({i, j});
    if (it != memo.end()) return it->second;
    Poly out;
    int bs = flag.rank(j) - flag.rank(j - 1);
    for (int r = 0; r <= bs; ++r) {
        Poly tail = G_recursion(i - r, j - 1, flag, memo);
        if (tail.is_zero()) continue;
        out += r == 0 ? tail : Poly::var(VarId::sigma(r, j)) * tail;
    }
    if (j >= 2) {
        Poly tail = G_recursion(i - (flag.rank(j) - flag.rank(j - 2)), j - 2, flag, memo);
        if (!tail.is_zero()) {
            int sign = (flag.rank(j) - flag.rank(j - 1) + 1) % 2 == 0 ? 1 : -1;
            out += (Poly::var(VarId::q(j - 1)) * tail).scaled(sign);
        }
    }
    return memo.emplace(std::make_pair(i, j), std::move(out)).first->second;
}

Poly G_matchings(int i, int j, const Flag& flag) {
    if (i == 0) return Poly(1);
    if (i < 0 || j <= 0 || i > flag.rank(j)) return Poly(0);
    // matchings of the path on vertices 1..j with sigma tails; f(l) covers
    // vertices l..j
    std::vector<Poly> f(j + 2);
    f[j + 1] = Poly(1);
    for (int l = j; l >= 1; --l) {
        Poly vertex(1);
        for (int m = 1; m <= flag.rank(l) - flag.rank(l - 1); ++m)
            vertex += Poly::var(VarId::sigma(m, l));
        Poly acc = vertex * f[l + 1];
        if (l + 1 <= j) {
            int sign = (flag.rank(l + 1) - flag.rank(l) + 1) % 2 == 0 ? 1 : -1;
            acc += (Poly::var(VarId::q(l)) * f[l + 2]).scaled(sign);
        }
        f[l] = std::move(acc);
    }
    // homogeneous part of weighted degree i
    Poly out;
    for (auto& [m, c] : f[1].terms())
        if (weighted_monomial_degree(m, flag) == i) out.add_term(m, c);
    return out;
}

Poly G_charpoly(int i, int j, const Flag& flag) {
    if (i == 0) return Poly(1);
    if (i < 0 || j <= 0 || i > flag.rank(j)) return Poly(0);
    static std::map<std::pair<Flag, int>, std::vector<Poly>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(flag, j);
    auto it = cache.find(key);
    if (it == cache.end()) {
        PolyMatrix sub = deformed_matrix(flag).leading_submatrix(flag.rank(j));
        it = cache.emplace(key, char_poly_coeffs(sub)).first;
    }
    return it->second[i - 1];
}

}  // namespace

Poly Gq_special(int i, int j, const Flag& flag, GDef def) {
    if (j < 0 || j > flag.k() + 1)
        throw std::out_of_range("Gq_special: block index");
    switch (def) {
        case GDef::Recursion: {
            static std::map<Flag, std::map<std::pair<int, int>, Poly>> cache;
            static std::mutex mu;
            std::lock_guard<std::mutex> lock(mu);
            return G_recursion(i, j, flag, cache[flag]);
        }
        case GDef::Matchings: return G_matchings(i, j, flag);
        case GDef::CharPoly: return G_charpoly(i, j, flag);
    }
    throw std::logic_error("Gq_special: bad definition tag");
}

Poly G_lambda_q(const LambdaIndex& L, const Flag& flag) {
    if (!lambda_valid(L, flag)) throw std::invalid_argument("G_lambda_q: invalid index");
    Poly out(1);
    for (int j = 1; j <= flag.k(); ++j)
        for (int p : L.parts[j - 1]) out = out * Gq_special(p, j, flag);
    return out;
}

Poly quantum_giambelli_poly(const Permutation& w, const Flag& flag) {
    const ALambdaTable& tab = a_lambda_table(flag);
    int wi = tab.perm_index(w);
    Poly out;
    for (size_t li = 0; li < tab.lambdas().size(); ++li) {
        long long a = tab.a_coeff(wi, static_cast<int>(li));
        if (a == 0) continue;
        out += G_lambda_q(tab.lambdas()[li], flag).scaled(a);
    }
    return out;
}

}  // namespace qsc
