#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsc/flag.hpp"

namespace qsc {

using Int = boost::multiprecision::cpp_int;

enum class Family : uint8_t { X = 0, Sigma = 1, Q = 2 };

/// Variable identifier: x_a (Family::X), sigma_a^b (Family::Sigma), q_a (Family::Q).
struct VarId {
    Family fam;
    int a = 0;
    int b = 0;

    static VarId x(int i) { return {Family::X, i, 0}; }
    static VarId sigma(int i, int j) { return {Family::Sigma, i, j}; }
    static VarId q(int j) { return {Family::Q, j, 0}; }

    std::string name() const;   // "x1", "s1_2", "q1"

    auto operator<=>(const VarId&) const = default;
};

/// Exponent vector: sorted by VarId, all exponents positive.
using Monomial = std::vector<std::pair<VarId, int>>;

Monomial monomial_mul(const Monomial& a, const Monomial& b);
int monomial_total_degree(const Monomial& m);

/// Sparse multivariate polynomial with exact integer coefficients.
/// Canonical storage: ordered term map, no zero coefficients, so equality is
/// structural.
class Poly {
public:
    Poly() = default;
    Poly(int c);
    Poly(Int c);
    static Poly var(VarId v, int exp = 1);
    static Poly parse(const std::string& text);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Int>& terms() const { return terms_; }
    Int coefficient(const Monomial& m) const;
    Int constant_term() const { return coefficient({}); }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    Poly scaled(const Int& c) const;

    bool operator==(const Poly&) const = default;

    /// Substitutes variables by polynomials; untouched variables persist.
    Poly substitute(const std::map<VarId, Poly>& repl) const;

    /// Sets every q variable to zero.
    Poly drop_q() const;

    bool depends_on(Family fam) const;

    void add_term(const Monomial& m, const Int& c);

    std::string to_string() const;

private:
    std::map<Monomial, Int> terms_;
};

/// deg x_i = 1, deg sigma_i^j = i, deg q_j = n_{j+1} - n_{j-1}.
int weighted_var_degree(VarId v, const Flag& flag);
int weighted_monomial_degree(const Monomial& m, const Flag& flag);

/// Common weighted degree of all terms, nullopt if inhomogeneous or zero.
std::optional<int> weighted_degree(const Poly& p, const Flag& flag);

/// Divided difference: (p - s_i p) / (x_i - x_{i+1}); p over x variables.
Poly divided_difference(int i, const Poly& p);

/// Rewrites a polynomial in x, symmetric within each block
/// {x_{n_{j-1}+1},...,x_{n_j}}, as a polynomial in the sigma_i^j.  Throws
/// std::invalid_argument if the input is not blockwise symmetric.
Poly blockwise_elementary_reduce(const Poly& p, const Flag& flag);

/// Elementary symmetric polynomial e_i of block j expanded in the x variables.
Poly block_elementary(int i, int j, const Flag& flag);

/// Square matrix of polynomials.
class PolyMatrix {
public:
    explicit PolyMatrix(int m) : m_(m), e_(static_cast<size_t>(m) * m) {}
    int dim() const { return m_; }
    Poly& at(int r, int c) { return e_[static_cast<size_t>(r) * m_ + c]; }
    const Poly& at(int r, int c) const { return e_[static_cast<size_t>(r) * m_ + c]; }
    PolyMatrix leading_submatrix(int m) const;

private:
    int m_;
    std::vector<Poly> e_;
};

/// Coefficients (c_1,...,c_m) of det(A + t I) = t^m + c_1 t^{m-1} + ... + c_m,
/// computed division-free as sums of principal minors.
std::vector<Poly> char_poly_coeffs(const PolyMatrix& A);

}  // namespace qsc
