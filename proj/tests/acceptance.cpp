// Acceptance suite: runs every gate criterion exhaustively over its pinned
// corpus and prints one pass/fail line per criterion.  All checks are exact
// integer equalities.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "qsc/classical.hpp"
#include "qsc/presentation.hpp"
#include "qsc/qpolys.hpp"
#include "qsc/quantum.hpp"
#include "qsc/schubert.hpp"
#include "qsc/verify.hpp"

using namespace qsc;

namespace {

struct Outcome {
    bool pass = true;
    long long cases = 0;
    std::string detail;

    void fail(const std::string& what) {
        if (pass) detail = what;
        pass = false;
    }
    void check(bool ok, const std::string& what) {
        ++cases;
        if (!ok) fail(what);
    }
};

std::map<std::pair<QMonomial, Permutation>, long long> as_constants(const QCohClass& c) {
    std::map<std::pair<QMonomial, Permutation>, long long> out;
    for (auto& [key, coeff] : c.terms()) out.emplace(key, coeff);
    return out;
}

// ---- 1. classical engine vs polynomial oracle ------------------------------

Outcome criterion_classical_oracle() {
    Outcome o;
    for (auto* fs : {"1;3", "2;3", "1,2;3", "1;4", "2;4", "1,2,3;4"}) {
        Flag f = Flag::parse(fs);
        auto S = coset_set(f);
        std::map<Permutation, Poly> giambelli;
        for (auto& w : S) giambelli.emplace(w, giambelli_poly(w, f));
        for (auto& u : S)
            for (auto& v : S) {
                auto pres = presentation_constants(giambelli.at(u) * giambelli.at(v),
                                                   f, false);
                CohClass cls =
                    classical_product(CohClass::basis(f, u), CohClass::basis(f, v));
                std::map<std::pair<QMonomial, Permutation>, long long> comb;
                for (auto& [w, c] : cls.terms())
                    comb.emplace(std::make_pair(q_zero(f), w), c);
                o.check(pres == comb, std::string(fs) + ": (" + u.to_string() + ")*(" +
                                          v.to_string() + ")");
            }
    }
    return o;
}

// ---- 2. duality pairing ----------------------------------------------------

Outcome criterion_duality() {
    Outcome o;
    for (auto& f : testing::flags_with_basis_at_most(6, 120)) {
        auto S = coset_set(f);
        for (auto& w : S) {
            Permutation wd = dual(w, f);
            for (auto& v : S) {
                long long got = pairing(CohClass::basis(f, w), CohClass::basis(f, v));
                o.check(got == (v == wd ? 1 : 0),
                        f.to_string() + ": <" + w.to_string() + ", " + v.to_string() +
                            "> = " + std::to_string(got));
            }
        }
    }
    return o;
}

// ---- 3. three definitions of the quantized polynomials ----------------------

Outcome criterion_three_definitions() {
    Outcome o;
    for (auto& f : testing::all_flags(6))
        for (int j = 1; j <= f.k() + 1; ++j)
            for (int i = 1; i <= f.rank(j); ++i) {
                Poly rec = Gq_special(i, j, f, GDef::Recursion);
                bool ok = rec == Gq_special(i, j, f, GDef::Matchings) &&
                          rec == Gq_special(i, j, f, GDef::CharPoly);
                o.check(ok, f.to_string() + ": G(" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
            }
    return o;
}

// ---- 4. q = 0 degeneration of the quantum chain rule ------------------------

Outcome criterion_q_zero() {
    Outcome o;
    for (auto& f : testing::all_flags(5))
        for (auto& w : coset_set(f))
            for (int j = 1; j <= f.k(); ++j)
                for (int i = 1; i <= f.rank(j); ++i) {
                    CohClass cls = quantum_pieri(w, i, j, f).classical_part();
                    CohClass want(f);
                    for (auto& t : pieri_targets(w, i, j, PieriKind::Alpha, f))
                        want.add(t, 1);
                    o.check(cls == want, f.to_string() + ": w=" + w.to_string() +
                                             " i=" + std::to_string(i) +
                                             " j=" + std::to_string(j));
                }
    return o;
}

// ---- 5. quantum monk rule on complete flags ---------------------------------

Outcome criterion_quantum_monk() {
    Outcome o;
    for (int n = 3; n <= 5; ++n) {
        std::vector<int> ranks;
        for (int i = 1; i < n; ++i) ranks.push_back(i);
        Flag f(ranks, n);
        for (auto& w : coset_set(f))
            for (int j = 1; j <= f.k(); ++j) {
                QCohClass got = quantum_pieri(w, 1, j, f);
                CohClass cls(f);
                for (auto& t : pieri_targets(w, 1, j, PieriKind::Alpha, f)) cls.add(t, 1);
                QCohClass want = QCohClass::from_classical(cls);
                for (int h = 1; h <= j; ++h)
                    for (int l = j + 1; l <= n; ++l) {
                        Permutation wt = w.right_transposed(h, l);
                        if (wt.length() != w.length() - 2 * (l - h) + 1) continue;
                        QMonomial d(f.k(), 0);
                        for (int t = h; t <= l - 1; ++t) d[t - 1] = 1;
                        want += QCohClass::basis(f, wt).q_shifted(d);
                    }
                o.check(got == want, "n=" + std::to_string(n) + " w=" + w.to_string() +
                                         " j=" + std::to_string(j));
            }
    }
    return o;
}

// ---- 6. grassmannian interlacing rule ---------------------------------------

std::vector<int> grass_shape(const Permutation& w, int m) {
    std::vector<int> lambda(m);
    for (int j = 1; j <= m; ++j) lambda[m - j] = w(j) - j;
    return lambda;
}

Permutation grass_perm(const std::vector<int>& lambda, int m, int n) {
    std::vector<int> img(n);
    std::vector<char> used(n + 1, 0);
    for (int j = 1; j <= m; ++j) {
        img[j - 1] = lambda[m - j] + j;
        used[img[j - 1]] = 1;
    }
    int at = m;
    for (int v = 1; v <= n; ++v)
        if (!used[v]) img[at++] = v;
    return Permutation(img);
}

std::vector<int> conjugate_shape(const std::vector<int>& lambda, int cols) {
    std::vector<int> c(cols, 0);
    for (int s = 1; s <= cols; ++s)
        for (int v : lambda)
            if (v >= s) ++c[s - 1];
    return c;
}

void interlace_rec(const std::vector<int>& l, size_t at, int total, std::vector<int>& mu,
                   std::vector<std::vector<int>>& out) {
    if (at == l.size()) {
        if (total == 0) out.push_back(mu);
        return;
    }
    int hi = l[at] - 1;
    int lo = at + 1 < l.size() ? std::max(l[at + 1] - 1, 0) : 0;
    for (int v = lo; v <= hi && v <= total; ++v) {
        mu[at] = v;
        interlace_rec(l, at + 1, total - v, mu, out);
    }
}

Outcome criterion_grassmannian_pieri() {
    Outcome o;
    for (auto* fs : {"2;4", "2;5", "3;6"}) {
        Flag f = Flag::parse(fs);
        int m = f.rank(1), n = f.n();
        for (auto& w : coset_set(f)) {
            auto lambda = grass_shape(w, m);
            for (int i = 1; i <= m; ++i) {
                QCohClass want(f);
                for (auto& t : pieri_targets(w, i, 1, PieriKind::Alpha, f))
                    want += QCohClass::basis(f, t);
                int total = i - n;
                for (int v : lambda) total += v;
                if (total >= 0) {
                    // interlacing runs over the conjugate shapes
                    std::vector<int> lc = conjugate_shape(lambda, n - m);
                    std::vector<int> muc(n - m);
                    std::vector<std::vector<int>> shapes;
                    interlace_rec(lc, 0, total, muc, shapes);
                    for (auto& s : shapes)
                        want += QCohClass::basis(f, grass_perm(conjugate_shape(s, m), m, n))
                                    .q_shifted({1});
                }
                o.check(quantum_pieri(w, i, 1, f) == want,
                        std::string(fs) + ": w=" + w.to_string() +
                            " i=" + std::to_string(i));
            }
        }
    }
    return o;
}

// ---- 7. ring axioms ----------------------------------------------------------

Outcome criterion_ring_axioms() {
    Outcome o;
    auto product = [](const Flag& f, const Permutation& u, const Permutation& v) {
        return quantum_product(QCohClass::basis(f, u), QCohClass::basis(f, v));
    };
    for (auto* fs : {"1;3", "1,2;3", "2;4", "1,2,3;4"}) {
        Flag f = Flag::parse(fs);
        auto S = coset_set(f);
        for (auto& u : S)
            for (auto& v : S)
                o.check(product(f, u, v) == product(f, v, u),
                        std::string(fs) + " commutativity " + u.to_string() + "," +
                            v.to_string());
        for (auto& u : S)
            for (auto& v : S) {
                QCohClass uv = product(f, u, v);
                for (auto& w : S) {
                    QCohClass left = quantum_product(uv, QCohClass::basis(f, w));
                    QCohClass right =
                        quantum_product(QCohClass::basis(f, u), product(f, v, w));
                    o.check(left == right, std::string(fs) + " associativity " +
                                               u.to_string() + "," + v.to_string() + "," +
                                               w.to_string());
                }
            }
    }
    std::mt19937 rng(271828);
    for (auto* fs : {"1,2;4", "1,3;4", "2;5"}) {
        Flag f = Flag::parse(fs);
        auto S = coset_set(f);
        for (auto& u : S)
            for (auto& v : S)
                o.check(product(f, u, v) == product(f, v, u),
                        std::string(fs) + " commutativity");
        for (int t = 0; t < 500; ++t) {
            const Permutation& u = S[rng() % S.size()];
            const Permutation& v = S[rng() % S.size()];
            const Permutation& w = S[rng() % S.size()];
            QCohClass left = quantum_product(product(f, u, v), QCohClass::basis(f, w));
            QCohClass right = quantum_product(QCohClass::basis(f, u), product(f, v, w));
            o.check(left == right, std::string(fs) + " associativity " + u.to_string() +
                                       "," + v.to_string() + "," + w.to_string());
        }
    }
    return o;
}

// ---- 8. presentation relations vanish ----------------------------------------

Outcome criterion_presentation_relations() {
    Outcome o;
    for (auto& f : testing::all_flags(5)) {
        for (int i = 1; i <= f.n(); ++i) {
            Poly rel = Gq_special(i, f.k() + 1, f);
            o.check(ideal_normal_form(rel, f).is_zero(),
                    f.to_string() + ": normal form of G(" + std::to_string(i) + ",k+1)");
            o.check(evaluate_class(rel, f).is_zero(),
                    f.to_string() + ": class of G(" + std::to_string(i) + ",k+1)");
        }
    }
    return o;
}

// ---- 9. quantum giambelli at class level --------------------------------------

Outcome criterion_quantum_giambelli() {
    Outcome o;
    for (auto* fs : {"1,2;3", "1;4", "2;4", "1,3;4", "1,2,3;4", "2;5"}) {
        Flag f = Flag::parse(fs);
        const ALambdaTable& tab = a_lambda_table(f);
        for (size_t wi = 0; wi < tab.basis().size(); ++wi) {
            QCohClass sum(f);
            for (size_t li = 0; li < tab.lambdas().size(); ++li) {
                long long a = tab.a_coeff(static_cast<int>(wi), static_cast<int>(li));
                if (a == 0) continue;
                sum += class_of_G_lambda(tab.lambdas()[li], f).scaled(a);
            }
            o.check(sum == QCohClass::basis(f, tab.basis()[wi]),
                    std::string(fs) + ": w=" + tab.basis()[wi].to_string());
        }
    }
    return o;
}

// ---- 10. orthogonality of the quantum giambelli polynomials --------------------

Outcome criterion_orthogonality() {
    Outcome o;
    for (auto& f : testing::flags_with_basis_at_most(6, 24)) {
        auto S = coset_set(f);
        std::map<Permutation, Poly> giambelli;
        for (auto& w : S) giambelli.emplace(w, quantum_giambelli_poly(w, f));
        for (auto& w : S) {
            Permutation wd = dual(w, f);
            for (auto& v : S) {
                Poly got = qpairing_poly(giambelli.at(w), giambelli.at(v), f);
                o.check(got == (v == wd ? Poly(1) : Poly(0)),
                        f.to_string() + ": <<P_" + w.to_string() + " P_" + v.to_string() +
                            ">> = " + got.to_string());
            }
        }
    }
    return o;
}

// ---- 11. special product identities -------------------------------------------

Outcome criterion_special_identities() {
    Outcome o;
    for (auto* fs : {"1,2;3", "1,2,3;4", "1,3;4"}) {
        Flag f = Flag::parse(fs);
        for (auto* suite : {"lemma3_5", "lemma3_6", "cor3_7"}) {
            VerifyReport rep = verify_suite(suite, f);
            o.cases += rep.cases;
            if (!rep.pass)
                o.fail(std::string(fs) + " " + suite + ": " + rep.failures.front());
        }
    }
    return o;
}

// ---- 12. cross-route structure constants ---------------------------------------

Outcome criterion_cross_route() {
    Outcome o;
    for (auto* fs : {"1;3", "1,2;3", "2;4"}) {
        Flag f = Flag::parse(fs);
        auto S = coset_set(f);
        std::map<Permutation, Poly> giambelli;
        for (auto& w : S) giambelli.emplace(w, quantum_giambelli_poly(w, f));
        for (auto& u : S)
            for (auto& v : S) {
                auto pres =
                    presentation_constants(giambelli.at(u) * giambelli.at(v), f, true);
                auto comb = as_constants(quantum_product(QCohClass::basis(f, u),
                                                         QCohClass::basis(f, v)));
                o.check(pres == comb, std::string(fs) + ": (" + u.to_string() + ")*(" +
                                          v.to_string() + ")");
            }
    }
    return o;
}

// ---- 13. desk anchors -----------------------------------------------------------

Outcome criterion_desk_anchors() {
    Outcome o;
    Flag p1 = Flag::parse("1;2");
    Permutation s = Permutation::parse("2,1");
    QCohClass square = quantum_product(QCohClass::basis(p1, s), QCohClass::basis(p1, s));
    o.check(square == QCohClass::unit(p1).q_shifted({1}),
            "projective line: quantum square");
    // the q1-coefficient of the square read through the point insertion
    o.check(gw_invariant({s, s, s}, {1}, p1) == 1, "projective line: 3-point count");
    o.check(gw_invariant({s, s, Permutation::identity(2)}, {1}, p1) == 0,
            "projective line: degenerate insertion");

    for (int n = 3; n <= 4; ++n) {
        Flag f(std::vector<int>{1}, n);
        Permutation w = special_cycle(Cycle::Alpha, 1, 1, f);
        QCohClass power = QCohClass::basis(f, w);
        for (int t = 1; t < n; ++t) power = quantum_product(power, QCohClass::basis(f, w));
        QMonomial one{1};
        o.check(power == QCohClass::unit(f).q_shifted(one),
                "projective space n=" + std::to_string(n) + ": n-th power");
        // presentation route on the same power
        Poly sigma_n = Poly::var(VarId::sigma(1, 1), n);
        auto pres = presentation_constants(sigma_n, f, true);
        auto comb = as_constants(power);
        o.check(pres == comb,
                "projective space n=" + std::to_string(n) + ": q-coefficient pattern");
    }
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria = {
        {1, "classical products match the polynomial oracle", criterion_classical_oracle},
        {2, "duality pairing is the Kronecker form", criterion_duality},
        {3, "three definitions of the quantized polynomials agree",
         criterion_three_definitions},
        {4, "quantum chain rule degenerates at q=0", criterion_q_zero},
        {5, "quantum monk rule on complete flags", criterion_quantum_monk},
        {6, "grassmannian interlacing rule", criterion_grassmannian_pieri},
        {7, "quantum ring is commutative and associative", criterion_ring_axioms},
        {8, "presentation relations vanish both ways", criterion_presentation_relations},
        {9, "quantum giambelli expansion reproduces the basis",
         criterion_quantum_giambelli},
        {10, "quantum giambelli polynomials are orthonormal", criterion_orthogonality},
        {11, "special product identities hold exhaustively", criterion_special_identities},
        {12, "pieri and presentation structure constants agree", criterion_cross_route},
        {13, "desk anchors on projective spaces", criterion_desk_anchors},
    };

    int failures = 0;
    for (auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o = c.run();
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::ostringstream line;
        line << (o.pass ? "PASS" : "FAIL") << "  " << c.id << "  " << c.name << "  ("
             << o.cases << " checks)";
        if (!o.pass) line << "  first failure: " << o.detail;
        std::cout << line.str() << std::endl;
        std::cerr << "criterion " << c.id << ": " << ms << " ms" << std::endl;
        if (!o.pass) ++failures;
    }
    if (failures) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all 13 criteria passed" << std::endl;
    return 0;
}
