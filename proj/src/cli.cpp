#include "qsc/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsc/cache.hpp"
#include "qsc/classical.hpp"
#include "qsc/perm.hpp"
#include "qsc/presentation.hpp"
#include "qsc/qpolys.hpp"
#include "qsc/quantum.hpp"
#include "qsc/schubert.hpp"
#include "qsc/verify.hpp"

namespace qsc {

namespace {

using Json = nlohmann::ordered_json;

Json flag_json(const Flag& flag) {
    return Json{{"ranks", flag.ranks()}, {"n", flag.n()}};
}

std::vector<Permutation> parse_classes(const std::string& text, const Flag& flag) {
    std::vector<Permutation> out;
    std::stringstream ss(text);
    std::string field;
    while (std::getline(ss, field, '|')) {
        Permutation w = Permutation::parse(field);
        if (w.size() != flag.n())
            throw std::invalid_argument("class \"" + field + "\" does not match the flag");
        out.push_back(std::move(w));
    }
    if (out.empty()) throw std::invalid_argument("no classes given");
    return out;
}

QMonomial parse_multidegree(const std::string& text, const Flag& flag) {
    QMonomial d;
    std::stringstream ss(text);
    std::string field;
    while (std::getline(ss, field, ',')) {
        try {
            d.push_back(std::stoi(field));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad multidegree entry \"" + field + "\"");
        }
    }
    if (static_cast<int>(d.size()) != flag.k())
        throw std::invalid_argument("multidegree needs exactly k entries");
    for (int e : d)
        if (e < 0) throw std::invalid_argument("multidegree entries must be >= 0");
    return d;
}

Json classical_terms_json(const CohClass& c) {
    Json terms = Json::array();
    for (auto& [w, coeff] : c.terms())
        terms.push_back(Json{{"perm", w.one_line()}, {"coeff", coeff}});
    return terms;
}

Json quantum_terms_json(const QCohClass& c) {
    // sorted by (weighted q-degree, q lex, perm lex)
    std::vector<std::pair<QMonomial, Permutation>> keys;
    for (auto& [key, coeff] : c.terms()) keys.push_back(key);
    std::sort(keys.begin(), keys.end(), [&](const auto& a, const auto& b) {
        int da = q_weighted_degree(a.first, c.flag()), db = q_weighted_degree(b.first, c.flag());
        if (da != db) return da < db;
        return a < b;
    });
    Json terms = Json::array();
    for (auto& key : keys)
        terms.push_back(Json{{"q", key.first},
                             {"perm", key.second.one_line()},
                             {"coeff", c.coefficient(key.first, key.second)}});
    return terms;
}

std::string classical_table(const CohClass& c) {
    std::ostringstream os;
    for (auto& [w, coeff] : c.terms())
        os << coeff << "  [" << w.to_string() << "]\n";
    if (c.is_zero()) os << "0\n";
    return os.str();
}

std::string quantum_table(const QCohClass& c) {
    std::ostringstream os;
    for (auto& [key, coeff] : c.terms()) {
        os << coeff << "  q=(";
        for (size_t j = 0; j < key.first.size(); ++j) {
            if (j) os << ',';
            os << key.first[j];
        }
        os << ")  [" << key.second.to_string() << "]\n";
    }
    if (c.is_zero()) os << "0\n";
    return os.str();
}

struct Request {
    std::string command;
    std::string flag_text;
    std::string u, v, perm, classes, d, suite;
    bool classical_marker = false;
    bool table = false;
    bool no_cache = false;
    bool timing = false;
};

std::string cache_key(const Request& r) {
    return r.command + "|" + r.flag_text + "|" + r.u + "|" + r.v + "|" + r.perm + "|" +
           r.classes + "|" + r.d + "|" + r.suite;
}

std::string evaluate(const Request& r) {
    Flag flag = Flag::parse(r.flag_text);
    Json out;
    out["command"] = r.command;
    out["engine"] = kEngineVersion;
    out["flag"] = flag_json(flag);
    if (r.command == "product") {
        Permutation u = Permutation::parse(r.u), v = Permutation::parse(r.v);
        CohClass prod = classical_product(CohClass::basis(flag, u), CohClass::basis(flag, v));
        out["inputs"] = Json{{"u", u.one_line()}, {"v", v.one_line()}};
        if (r.table) return classical_table(prod);
        out["terms"] = classical_terms_json(prod);
    } else if (r.command == "qproduct") {
        Permutation u = Permutation::parse(r.u), v = Permutation::parse(r.v);
        QCohClass prod =
            quantum_product(QCohClass::basis(flag, u), QCohClass::basis(flag, v));
        out["inputs"] = Json{{"u", u.one_line()}, {"v", v.one_line()}};
        if (r.table) return quantum_table(prod);
        out["terms"] = quantum_terms_json(prod);
    } else if (r.command == "gw") {
        auto classes = parse_classes(r.classes, flag);
        QMonomial d = parse_multidegree(r.d, flag);
        long long value = gw_invariant(classes, d, flag);
        Json cls = Json::array();
        for (auto& w : classes) cls.push_back(w.one_line());
        out["inputs"] = Json{{"classes", cls}, {"d", d}};
        if (r.table) return std::to_string(value) + "\n";
        out["value"] = value;
    } else if (r.command == "giambelli" || r.command == "qgiambelli") {
        Permutation w = Permutation::parse(r.perm);
        Poly p = r.command == "giambelli" ? giambelli_poly(w, flag)
                                          : quantum_giambelli_poly(w, flag);
        out["inputs"] = Json{{"perm", w.one_line()}};
        if (r.table) return p.to_string() + "\n";
        out["poly"] = p.to_string();
    } else if (r.command == "basis") {
        auto perms = coset_set(flag);
        Json jp = Json::array();
        for (auto& w : perms)
            jp.push_back(Json{{"perm", w.one_line()},
                              {"length", w.length()},
                              {"dual", dual(w, flag).one_line()}});
        Json jl = Json::array();
        for (auto& L : lambda_indices(flag))
            jl.push_back(Json{{"parts", L.parts}, {"weight", L.weight()}});
        out["perms"] = jp;
        out["lambdas"] = jl;
        out["counts"] = Json{{"perms", perms.size()}, {"lambdas", jl.size()}};
        if (r.table) {
            std::ostringstream os;
            for (auto& w : perms)
                os << "[" << w.to_string() << "]  length " << w.length() << "  dual ["
                   << dual(w, flag).to_string() << "]\n";
            return os.str();
        }
    } else if (r.command == "verify") {
        VerifyReport rep = verify_suite(r.suite, flag);
        out["suite"] = rep.suite;
        out["pass"] = rep.pass;
        out["cases"] = rep.cases;
        out["failures"] = rep.failures;
        if (r.table) {
            std::ostringstream os;
            os << rep.suite << " on " << flag.to_string() << ": "
               << (rep.pass ? "pass" : "FAIL") << " (" << rep.cases << " cases)\n";
            for (auto& f : rep.failures) os << "  " << f << "\n";
            return os.str();
        }
    } else {
        throw std::invalid_argument("unknown command \"" + r.command + "\"");
    }
    return out.dump() + "\n";
}

bool cacheable(const Request& r) {
    return !r.table &&
           (r.command == "product" || r.command == "qproduct" || r.command == "gw");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Schubert calculus on partial flag varieties: classical and small "
                 "quantum products, Gromov-Witten invariants, Giambelli polynomials"};
    app.require_subcommand(1);
    Request req;
    app.add_flag("--no-cache", req.no_cache, "bypass the result cache");
    app.add_flag("--table", req.table, "human-readable output instead of JSON");
    app.add_flag("--timing", req.timing, "report wall time on stderr");

    auto add_flag_opt = [&](CLI::App* sub) {
        sub->add_option("--flag", req.flag_text, "flag type \"n1,...,nk;n\"")->required();
    };
    CLI::App* product = app.add_subcommand("product", "classical product of two classes");
    add_flag_opt(product);
    product->add_option("--u", req.u, "first permutation")->required();
    product->add_option("--v", req.v, "second permutation")->required();
    product->add_flag("--classical", req.classical_marker,
                      "marker flag; product is always classical");
    CLI::App* qproduct = app.add_subcommand("qproduct", "quantum product of two classes");
    add_flag_opt(qproduct);
    qproduct->add_option("--u", req.u, "first permutation")->required();
    qproduct->add_option("--v", req.v, "second permutation")->required();
    CLI::App* gw = app.add_subcommand("gw", "Gromov-Witten invariant");
    add_flag_opt(gw);
    gw->add_option("--classes", req.classes, "permutations separated by '|'")->required();
    gw->add_option("--d", req.d, "multidegree \"d1,...,dk\"")->required();
    CLI::App* giambelli = app.add_subcommand("giambelli", "Giambelli polynomial");
    add_flag_opt(giambelli);
    giambelli->add_option("--perm", req.perm, "permutation in S")->required();
    CLI::App* qgiambelli =
        app.add_subcommand("qgiambelli", "quantum Giambelli polynomial");
    add_flag_opt(qgiambelli);
    qgiambelli->add_option("--perm", req.perm, "permutation in S")->required();
    CLI::App* basis = app.add_subcommand("basis", "Schubert basis and monomial indices");
    add_flag_opt(basis);
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    add_flag_opt(verify);
    std::string suites;
    for (auto& s : verify_suite_names()) suites += (suites.empty() ? "" : ", ") + s;
    verify->add_option("--suite", req.suite, "one of: " + suites)->required();

    std::vector<const char*> argv;
    argv.push_back("qschub");
    for (auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    for (auto* sub : {product, qproduct, gw, giambelli, qgiambelli, basis, verify})
        if (sub->parsed()) req.command = sub->get_name();

    try {
        auto start = std::chrono::steady_clock::now();
        std::optional<ConstantCache> cache;
        if (!req.no_cache && cacheable(req)) {
            if (const char* dir = std::getenv(kCacheEnvVar)) cache.emplace(dir);
        }
        std::string result;
        if (cache) {
            if (auto hit = cache->get(cache_key(req))) result = *hit;
        }
        if (result.empty()) {
            result = evaluate(req);
            if (cache) cache->put(cache_key(req), result);
        }
        if (cache)
            for (auto& w : cache->take_warnings()) err << "warning: " << w << "\n";
        out << result;
        if (req.timing) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
            err << "time: " << ms << " ms\n";
        }
        if (req.command == "verify" && !req.table) {
            auto j = nlohmann::json::parse(result);
            if (!j.at("pass").get<bool>()) return 1;
        }
        return 0;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace qsc
