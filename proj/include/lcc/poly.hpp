#pragma once

#include "lcc/scalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lcc {

/// One of the commuting formal symbols a polynomial may mention:
/// `d` (the translation symbol brackets are written over), `x` (the
/// bracket-side lambda) and `x1, x2, ...` (the cochain-side lambdas).
/// Keeping `x` distinct from `x1` is what makes the differential's
/// substitutions capture-free.
class VarId {
public:
    static VarId del() { return VarId(0); }
    static VarId x() { return VarId(1); }
    static VarId lam(int i); // 1-based

    bool is_del() const { return code_ == 0; }
    bool is_x() const { return code_ == 1; }
    bool is_lam() const { return code_ >= 2; }
    int lam_index() const; // requires is_lam()

    /// Total significance order: d, x, x1, x2, ...
    int code() const { return code_; }
    static VarId from_code(int code);

    std::string str() const;

    friend bool operator==(VarId a, VarId b) { return a.code_ == b.code_; }
    friend bool operator!=(VarId a, VarId b) { return a.code_ != b.code_; }
    friend bool operator<(VarId a, VarId b) { return a.code_ < b.code_; }

private:
    explicit VarId(int code) : code_(code) {}
    int code_;
};

/// Exponent vector indexed by VarId code, trailing zeros trimmed.
/// Ordered graded-lexicographically with `d` most significant.
class Monomial {
public:
    Monomial() = default;
    static Monomial var(VarId v, int exp = 1);

    int exponent(VarId v) const;
    int total_degree() const;
    bool is_constant() const { return e_.empty(); }
    const std::vector<int>& exponents() const { return e_; }

    Monomial operator*(const Monomial& o) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
    friend bool operator<(const Monomial& a, const Monomial& b);

    std::string str() const; // "d*d*x1" style; "1" for the empty product

private:
    std::vector<int> e_;
    void trim();
    friend class Poly;
};

/// Sparse exact multivariate polynomial: a canonical map from monomials to
/// nonzero rational coefficients. Two polynomials are equal iff their term
/// maps are equal. Values are immutable in spirit: all operations return
/// new polynomials.
class Poly {
public:
    Poly() = default; // zero
    static Poly zero() { return Poly(); }
    static Poly constant(const Scalar& c);
    static Poly var(VarId v, int exp = 1);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Scalar>& terms() const { return terms_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Scalar& c, const Poly& p);
    friend Poly operator*(const Poly& p, const Scalar& c) { return c * p; }
    Poly pow(int n) const; // n >= 0

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// -1 for the zero polynomial (sentinel; callers must branch on it).
    int total_degree() const;
    Poly homogeneous_component(int d) const;
    bool is_homogeneous() const;
    bool contains(VarId v) const;
    /// Largest i with x_i occurring, 0 if none.
    int max_lam_index() const;
    Scalar coefficient(const Monomial& m) const;

    /// Replaces every occurrence of v by r. Rejects r containing v.
    Poly substitute(VarId v, const Poly& r) const;
    /// Simultaneous substitution; variables absent from the map are fixed.
    Poly compose(const std::map<VarId, Poly>& images) const;
    /// x_i -> x_{sigma[i-1]} for i <= sigma.size(); other variables fixed.
    Poly permute_lambdas(const std::vector<int>& sigma) const;
    Poly derivative(VarId v) const;
    /// Exact division by a nonzero polynomial of total degree <= 1;
    /// empty when f does not divide. Rejects f = 0 and deg f > 1.
    std::optional<Poly> divide_by_affine(const Poly& f) const;

    /// Canonical rendering: terms in decreasing graded-lex order, powers as
    /// repeated factors, rationals as p/q. The same text appears in .lca
    /// files and JSON output.
    std::string str() const;

private:
    std::map<Monomial, Scalar> terms_;
    void add_term(const Monomial& m, const Scalar& c);
};

/// Sum x1 + ... + xq (zero when q = 0).
Poly lambda_sum(int q);

} // namespace lcc
