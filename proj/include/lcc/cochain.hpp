#pragma once

#include "lcc/algebra.hpp"
#include "lcc/poly.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace lcc {

/// Multiset of generators: the slot pattern a cochain component lives on.
/// For the extended Schrodinger-Virasoro built-in these are the familiar
/// (k, l, m, n) quadruples.
class ComponentKey {
public:
    ComponentKey() = default;
    explicit ComponentKey(std::vector<int> counts);
    static ComponentKey empty(int rank) { return ComponentKey(std::vector<int>(rank, 0)); }
    static ComponentKey from_tuple(int rank, std::span<const int> tuple);

    int rank() const { return static_cast<int>(counts_.size()); }
    int count(int gen) const { return counts_.at(gen); }
    const std::vector<int>& counts() const { return counts_; }
    int q() const;

    ComponentKey with(int gen, int delta) const;
    bool contains_any(const std::vector<bool>& mask) const;

    /// Generator indices in canonical (non-decreasing) order.
    std::vector<int> canonical_tuple() const;

    friend bool operator==(const ComponentKey& a, const ComponentKey& b) { return a.counts_ == b.counts_; }
    friend bool operator!=(const ComponentKey& a, const ComponentKey& b) { return !(a == b); }
    friend bool operator<(const ComponentKey& a, const ComponentKey& b) { return a.counts_ < b.counts_; }

    std::string str(const Algebra& a) const; // "(L,N,N)"

private:
    std::vector<int> counts_;
};

/// Stable-sorts the tuple into canonical generator order, carrying the sign
/// of the permutation into the polynomial: returns the key and
/// sign(sigma) * p with lambdas renamed along sigma.
std::pair<ComponentKey, Poly> canonicalize(int rank, std::span<const int> tuple, const Poly& p);

/// Minimal polynomial degree forced by antisymmetry in repeated slots:
/// sum of C(multiplicity, 2) over generators.
int vandermonde_degree(const ComponentKey& key);

/// Basis of homogeneous degree-d polynomials in x1..xq antisymmetric within
/// every block of equal generators: the block Vandermonde product times the
/// orbit-sum basis of block-symmetric polynomials of the residual degree.
/// Empty when d < vandermonde_degree(key). Rejects negative d.
std::vector<Poly> antisym_basis(const ComponentKey& key, int d);

/// Degree-q cochain with trivial coefficients: values on canonical generator
/// tuples, block-antisymmetric in the lambdas; absent keys are zero.
class Cochain {
public:
    Cochain() : q_(0), rank_(0) {}
    Cochain(int q, int rank);
    /// The 0-cochain with the given constant value.
    static Cochain scalar(int rank, const Scalar& value);

    int q() const { return q_; }
    int rank() const { return rank_; }
    bool is_zero() const { return values_.empty(); }
    const std::map<ComponentKey, Poly>& components() const { return values_; }

    /// Canonicalizes the tuple and accumulates the value.
    void add_component(std::span<const int> tuple, const Poly& p);
    /// Sets the value on an already-canonical key (variables in canonical
    /// tuple order). Replaces any existing value.
    void set_canonical(const ComponentKey& key, const Poly& p);
    Poly component(const ComponentKey& key) const;

    /// Value on an arbitrarily ordered tuple, in the caller's variable order.
    Poly evaluate(std::span<const int> tuple) const;

    /// True when every stored value is antisymmetric under in-block
    /// transpositions of lambdas.
    bool block_antisymmetric() const;

    Cochain operator-() const;
    Cochain& operator+=(const Cochain& o);
    Cochain& operator-=(const Cochain& o);
    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
    friend Cochain operator*(const Scalar& c, const Cochain& g);

    friend bool operator==(const Cochain& a, const Cochain& b) {
        return a.q_ == b.q_ && a.values_ == b.values_;
    }
    friend bool operator!=(const Cochain& a, const Cochain& b) { return !(a == b); }

private:
    int q_;
    int rank_;
    std::map<ComponentKey, Poly> values_;
};

// Permutation helpers (1-based images in sigma[i-1]).
int permutation_sign(const std::vector<int>& sigma);
std::vector<int> permutation_inverse(const std::vector<int>& sigma);

} // namespace lcc
