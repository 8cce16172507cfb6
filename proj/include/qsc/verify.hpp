#pragma once

#include <string>
#include <vector>

#include "qsc/flag.hpp"

namespace qsc {

struct VerifyReport {
    std::string suite;
    Flag flag;
    bool pass = true;
    long long cases = 0;
    std::vector<std::string> failures;   // one line per counterexample

    VerifyReport(std::string s, Flag f) : suite(std::move(s)), flag(std::move(f)) {}

    void record(bool ok, const std::string& what) {
        ++cases;
        if (!ok) {
            pass = false;
            failures.push_back(what);
        }
    }
};

const std::vector<std::string>& verify_suite_names();

/// Runs a named identity suite exhaustively over its parameter space.
/// Names: cor3_7, lemma3_5, lemma3_6, thm3_9, thm3_16, thm3_18,
/// presentation_vs_pieri.
VerifyReport verify_suite(const std::string& name, const Flag& flag);

}  // namespace qsc
