#include "qsc/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace qsc {

std::string VarId::name() const {
    switch (fam) {
        case Family::X: return "x" + std::to_string(a);
        case Family::Sigma: return "s" + std::to_string(a) + "_" + std::to_string(b);
        case Family::Q: return "q" + std::to_string(a);
    }
    return "?";
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) r.push_back(a[i++]);
        else if (b[j].first < a[i].first) r.push_back(b[j++]);
        else {
            r.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i; ++j;
        }
    }
    for (; i < a.size(); ++i) r.push_back(a[i]);
    for (; j < b.size(); ++j) r.push_back(b[j]);
    return r;
}

int monomial_total_degree(const Monomial& m) {
    int d = 0;
    for (auto& [v, e] : m) d += e;
    return d;
}

Poly::Poly(int c) {
    if (c != 0) terms_[{}] = c;
}

Poly::Poly(Int c) {
    if (c != 0) terms_[{}] = std::move(c);
}

Poly Poly::var(VarId v, int exp) {
    Poly p;
    if (exp < 0) throw std::invalid_argument("poly: negative exponent");
    if (exp == 0) return Poly(1);
    p.terms_[{{v, exp}}] = 1;
    return p;
}

Int Poly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Int& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (auto& [ma, ca] : a.terms_)
        for (auto& [mb, cb] : b.terms_)
            r.add_term(monomial_mul(ma, mb), ca * cb);
    return r;
}

Poly Poly::operator-() const {
    Poly r;
    for (auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

Poly Poly::scaled(const Int& c) const {
    Poly r;
    if (c == 0) return r;
    for (auto& [m, k] : terms_) r.terms_[m] = k * c;
    return r;
}

Poly Poly::substitute(const std::map<VarId, Poly>& repl) const {
    Poly out;
    std::map<std::pair<VarId, int>, Poly> powers;
    auto power = [&](VarId v, int e) -> const Poly& {
        auto key = std::make_pair(v, e);
        auto it = powers.find(key);
        if (it != powers.end()) return it->second;
        Poly p(1);
        auto rit = repl.find(v);
        const Poly base = rit == repl.end() ? Poly::var(v) : rit->second;
        for (int t = 0; t < e; ++t) p = p * base;
        return powers.emplace(key, std::move(p)).first->second;
    };
    for (auto& [m, c] : terms_) {
        Poly term(c);
        for (auto& [v, e] : m) term = term * power(v, e);
        out += term;
    }
    return out;
}

Poly Poly::drop_q() const {
    Poly r;
    for (auto& [m, c] : terms_) {
        bool has_q = std::any_of(m.begin(), m.end(),
                                 [](auto& ve) { return ve.first.fam == Family::Q; });
        if (!has_q) r.terms_[m] = c;
    }
    return r;
}

bool Poly::depends_on(Family fam) const {
    for (auto& [m, c] : terms_)
        for (auto& [v, e] : m)
            if (v.fam == fam) return true;
    return false;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Int abs = c < 0 ? Int(-c) : c;
        if (s.empty())
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        bool wrote = false;
        if (abs != 1 || m.empty()) {
            s += abs.str();
            wrote = true;
        }
        for (auto& [v, e] : m) {
            if (wrote) s += '*';
            s += v.name();
            if (e > 1) s += '^' + std::to_string(e);
            wrote = true;
        }
    }
    return s;
}

namespace {

VarId parse_var(const std::string& tok) {
    if (tok.empty()) throw std::invalid_argument("poly: empty variable token");
    char f = tok[0];
    std::string rest = tok.substr(1);
    try {
        if (f == 'x') return VarId::x(std::stoi(rest));
        if (f == 'q') return VarId::q(std::stoi(rest));
        if (f == 's') {
            auto us = rest.find('_');
            if (us == std::string::npos) throw std::invalid_argument("");
            return VarId::sigma(std::stoi(rest.substr(0, us)), std::stoi(rest.substr(us + 1)));
        }
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("poly: bad variable \"" + tok + "\"");
}

}  // namespace

Poly Poly::parse(const std::string& text) {
    Poly out;
    size_t i = 0, n = text.size();
    auto skip_ws = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i == n) throw std::invalid_argument("poly: empty input");
    while (i < n) {
        int sign = 1;
        skip_ws();
        if (i < n && (text[i] == '+' || text[i] == '-')) {
            if (text[i] == '-') sign = -1;
            ++i;
            skip_ws();
        }
        Int coeff = 1;
        Monomial mono;
        bool saw_factor = false;
        while (true) {
            skip_ws();
            if (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
                size_t j = i;
                while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
                coeff *= Int(text.substr(i, j - i));
                i = j;
                saw_factor = true;
            } else if (i < n && std::isalpha(static_cast<unsigned char>(text[i]))) {
                size_t j = i;
                while (j < n && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
                VarId v = parse_var(text.substr(i, j - i));
                i = j;
                int exp = 1;
                skip_ws();
                if (i < n && text[i] == '^') {
                    ++i;
                    skip_ws();
                    size_t jj = i;
                    while (jj < n && std::isdigit(static_cast<unsigned char>(text[jj]))) ++jj;
                    if (jj == i) throw std::invalid_argument("poly: missing exponent");
                    exp = std::stoi(text.substr(i, jj - i));
                    i = jj;
                }
                mono = monomial_mul(mono, Monomial{{v, exp}});
                saw_factor = true;
            } else {
                break;
            }
            skip_ws();
            if (i < n && text[i] == '*') {
                ++i;
                continue;
            }
            break;
        }
        if (!saw_factor) throw std::invalid_argument("poly: dangling sign in \"" + text + "\"");
        out.add_term(mono, sign > 0 ? coeff : -coeff);
        skip_ws();
        if (i < n && text[i] != '+' && text[i] != '-')
            throw std::invalid_argument("poly: unexpected character at \"" + text.substr(i) + "\"");
    }
    return out;
}

int weighted_var_degree(VarId v, const Flag& flag) {
    switch (v.fam) {
        case Family::X: return 1;
        case Family::Sigma: {
            if (v.b < 1 || v.b > flag.k() + 1 || v.a < 1 ||
                v.a > flag.rank(v.b) - flag.rank(v.b - 1))
                throw std::out_of_range("weighted degree: sigma index out of range for flag");
            return v.a;
        }
        case Family::Q: return flag.q_degree(v.a);
    }
    return 0;
}

int weighted_monomial_degree(const Monomial& m, const Flag& flag) {
    int d = 0;
    for (auto& [v, e] : m) d += e * weighted_var_degree(v, flag);
    return d;
}

std::optional<int> weighted_degree(const Poly& p, const Flag& flag) {
    std::optional<int> deg;
    for (auto& [m, c] : p.terms()) {
        int d = weighted_monomial_degree(m, flag);
        if (!deg) deg = d;
        else if (*deg != d) return std::nullopt;
    }
    return deg;
}

Poly divided_difference(int i, const Poly& p) {
    if (i < 1) throw std::out_of_range("divided_difference: index");
    Poly out;
    VarId xi = VarId::x(i), xj = VarId::x(i + 1);
    for (auto& [m, c] : p.terms()) {
        int a = 0, b = 0;
        Monomial rest;
        for (auto& [v, e] : m) {
            if (v == xi) a = e;
            else if (v == xj) b = e;
            else rest.emplace_back(v, e);
        }
        if (a == b) continue;
        int lo = std::min(a, b), hi = std::max(a, b);
        Int coeff = a > b ? c : -c;
        for (int t = lo; t < hi; ++t) {
            Monomial m2 = rest;
            if (t > 0) m2 = monomial_mul(m2, {{xi, t}});
            int u = a + b - 1 - t;
            if (u > 0) m2 = monomial_mul(m2, {{xj, u}});
            out.add_term(m2, coeff);
        }
    }
    return out;
}

Poly block_elementary(int i, int j, const Flag& flag) {
    int lo = flag.rank(j - 1) + 1, hi = flag.rank(j);
    int m = hi - lo + 1;
    if (i < 0 || i > m) return Poly(0);
    if (i == 0) return Poly(1);
    Poly out;
    std::vector<int> idx(i);
    for (int t = 0; t < i; ++t) idx[t] = t;
    while (true) {
        Monomial mono;
        for (int t = 0; t < i; ++t) mono.emplace_back(VarId::x(lo + idx[t]), 1);
        out.add_term(mono, 1);
        int t = i - 1;
        while (t >= 0 && idx[t] == m - i + t) --t;
        if (t < 0) break;
        ++idx[t];
        for (int u = t + 1; u < i; ++u) idx[u] = idx[u - 1] + 1;
    }
    return out;
}

namespace {

// exponents of x_1..x_n in a monomial
std::vector<int> x_exponents(const Monomial& m, int n) {
    std::vector<int> e(n, 0);
    for (auto& [v, exp] : m) {
        if (v.fam != Family::X || v.a < 1 || v.a > n)
            throw std::invalid_argument("blockwise reduce: input must be a polynomial in x_1..x_n");
        e[v.a - 1] = exp;
    }
    return e;
}

}  // namespace

Poly blockwise_elementary_reduce(const Poly& p, const Flag& flag) {
    int n = flag.n();
    Poly rem = p;
    Poly out;
    std::map<Monomial, Poly> expand_cache;

    // expansion of a sigma monomial into x variables
    auto expand = [&](const Monomial& sm) -> const Poly& {
        auto it = expand_cache.find(sm);
        if (it != expand_cache.end()) return it->second;
        Poly prod(1);
        for (auto& [v, e] : sm) {
            Poly base = block_elementary(v.a, v.b, flag);
            for (int t = 0; t < e; ++t) prod = prod * base;
        }
        return expand_cache.emplace(sm, std::move(prod)).first->second;
    };

    while (!rem.is_zero()) {
        // x-lex leading term
        const Monomial* lead = nullptr;
        std::vector<int> lead_e;
        for (auto& [m, c] : rem.terms()) {
            std::vector<int> e = x_exponents(m, n);
            if (!lead || std::lexicographical_compare(lead_e.begin(), lead_e.end(),
                                                      e.begin(), e.end())) {
                lead = &m;
                lead_e = std::move(e);
            }
        }
        Int c = rem.coefficient(*lead);
        // within each block the exponents must be weakly decreasing
        Monomial sm;
        for (int j = 1; j <= flag.k() + 1; ++j) {
            int lo = flag.rank(j - 1), hi = flag.rank(j);
            for (int t = lo; t < hi; ++t) {
                int cur = lead_e[t];
                int next = (t + 1 < hi) ? lead_e[t + 1] : 0;
                if (cur < next)
                    throw std::invalid_argument(
                        "blockwise reduce: polynomial is not symmetric in block " +
                        std::to_string(j));
                if (cur > next) sm = monomial_mul(sm, {{VarId::sigma(t - lo + 1, j), cur - next}});
            }
        }
        out.add_term(sm, c);
        rem -= expand(sm).scaled(c);
    }
    return out;
}

PolyMatrix PolyMatrix::leading_submatrix(int m) const {
    if (m < 0 || m > m_) throw std::out_of_range("leading_submatrix");
    PolyMatrix s(m);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) s.at(r, c) = at(r, c);
    return s;
}

namespace {

// determinant of the submatrix with given row/column masks, memoized
const Poly& minor_det(const PolyMatrix& A, uint32_t rmask, uint32_t cmask,
                      std::map<uint64_t, Poly>& memo) {
    uint64_t key = (static_cast<uint64_t>(rmask) << 32) | cmask;
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Poly det;
    if (rmask == 0) {
        det = Poly(1);
    } else {
        int r = __builtin_ctz(rmask);
        uint32_t rrest = rmask & (rmask - 1);
        int pos = 0;
        for (uint32_t cm = cmask; cm; cm &= cm - 1, ++pos) {
            int c = __builtin_ctz(cm);
            const Poly& a = A.at(r, c);
            if (a.is_zero()) continue;
            Poly sub = a * minor_det(A, rrest, cmask & ~(1u << c), memo);
            if (pos % 2) det -= sub;
            else det += sub;
        }
    }
    return memo.emplace(key, std::move(det)).first->second;
}

}  // namespace

std::vector<Poly> char_poly_coeffs(const PolyMatrix& A) {
    int m = A.dim();
    if (m > 31) throw std::invalid_argument("char_poly_coeffs: matrix too large");
    std::map<uint64_t, Poly> memo;
    std::vector<Poly> coeffs(m);
    for (uint32_t mask = 1; mask < (1u << m); ++mask) {
        int size = __builtin_popcount(mask);
        coeffs[size - 1] += minor_det(A, mask, mask, memo);
    }
    return coeffs;
}

}  // namespace qsc
