#include <doctest.h>

#include <stdexcept>

#include "corpus.hpp"
#include "qsc/presentation.hpp"
#include "qsc/qpolys.hpp"
#include "qsc/verify.hpp"

using namespace qsc;

TEST_CASE("normal form on the projective line") {
    Flag f = Flag::parse("1;2");
    Poly s2 = Poly::parse("s1_1^2");
    CHECK(ideal_normal_form(s2, f) == ideal_normal_form(Poly::parse("q1"), f));
    CHECK(ideal_normal_form(Poly::parse("s1_1^2 - q1"), f).is_zero());
    CHECK_THROWS_AS(ideal_normal_form(Poly::parse("s1_1 + q1"), f),
                    std::invalid_argument);   // inhomogeneous
}

TEST_CASE("the quantum relations reduce to zero") {
    for (auto* fs : {"1;2", "1;3", "1,2;3", "2;4", "1,3;4"}) {
        Flag f = Flag::parse(fs);
        for (int i = 1; i <= f.n(); ++i)
            CHECK(ideal_normal_form(Gq_special(i, f.k() + 1, f), f).is_zero());
    }
}

TEST_CASE("classical oracle matches the pieri engine") {
    for (auto* fs : {"1;3", "1,2;3", "2;4"}) {
        Flag f = Flag::parse(fs);
        auto S = coset_set(f);
        for (auto& u : S)
            for (auto& v : S) {
                Poly prod = giambelli_poly(u, f) * giambelli_poly(v, f);
                auto pres = presentation_constants(prod, f, false);
                CohClass cls = classical_product(CohClass::basis(f, u),
                                                 CohClass::basis(f, v));
                std::map<std::pair<QMonomial, Permutation>, long long> comb;
                for (auto& [w, c] : cls.terms())
                    comb.emplace(std::make_pair(q_zero(f), w), c);
                CHECK(pres == comb);
            }
    }
}

TEST_CASE("expansion mod the ideal in the quantized monomial basis") {
    Flag f = Flag::parse("1;2");
    // sigma^2 = q . G_empty
    auto exp = PresentationOracle::get(f, true).lambda_expansion(Poly::parse("s1_1^2"));
    REQUIRE(exp.size() == 1);
    CHECK(exp.begin()->first.first == QMonomial{1});
    CHECK(exp.begin()->first.second.weight() == 0);
    CHECK(exp.begin()->second == 1);
}

TEST_CASE("polynomial-route orthogonality") {
    for (auto* fs : {"1;2", "1;3", "2;3", "1,2;3"}) {
        Flag f = Flag::parse(fs);
        auto S = coset_set(f);
        for (auto& w : S) {
            Permutation wd = dual(w, f);
            for (auto& v : S) {
                Poly got = qpairing_poly(quantum_giambelli_poly(w, f),
                                         quantum_giambelli_poly(v, f), f);
                CHECK(got == (v == wd ? Poly(1) : Poly(0)));
            }
        }
    }
}

TEST_CASE("class evaluation of the generators") {
    for (auto* fs : {"1;2", "1,2;3", "2;4"}) {
        Flag f = Flag::parse(fs);
        // the quantized special polynomials evaluate to the special classes
        for (int j = 1; j <= f.k(); ++j)
            for (int i = 1; i <= f.rank(j); ++i)
                CHECK(evaluate_class(Gq_special(i, j, f), f) == qclass_of_alpha(i, j, f));
        // the ideal generators evaluate to zero
        for (int i = 1; i <= f.n(); ++i)
            CHECK(evaluate_class(Gq_special(i, f.k() + 1, f), f).is_zero());
        // multiplicativity spot check
        Poly a = Gq_special(1, 1, f), b = g_special(1, f.k(), f);
        CHECK(evaluate_class(a * b, f) ==
              quantum_product(evaluate_class(a, f), evaluate_class(b, f)));
    }
}

TEST_CASE("presentation and pieri structure constants agree") {
    for (auto* fs : {"1;3", "1,2;3"}) {
        Flag f = Flag::parse(fs);
        auto S = coset_set(f);
        for (auto& u : S)
            for (auto& v : S) {
                Poly prod = quantum_giambelli_poly(u, f) * quantum_giambelli_poly(v, f);
                auto pres = presentation_constants(prod, f, true);
                QCohClass cls = quantum_product(QCohClass::basis(f, u),
                                                QCohClass::basis(f, v));
                std::map<std::pair<QMonomial, Permutation>, long long> comb;
                for (auto& [key, c] : cls.terms()) comb.emplace(key, c);
                CHECK(pres == comb);
            }
    }
}

TEST_CASE("verification suites pass on small flags") {
    for (auto* fs : {"1;2", "1,2;3"}) {
        Flag f = Flag::parse(fs);
        for (auto& name : verify_suite_names()) {
            VerifyReport rep = verify_suite(name, f);
            INFO(name, " on ", fs, ": ",
                 rep.failures.empty() ? "" : rep.failures.front());
            CHECK(rep.pass);
            CHECK(rep.cases > 0);
        }
    }
    CHECK_THROWS_AS(verify_suite("nope", Flag::parse("1;2")), std::invalid_argument);
}
