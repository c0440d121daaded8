#pragma once

#include "lcc/poly.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lcc {

struct Generator {
    std::string name;
    std::optional<Scalar> weight; // declared conformal weight, if any

    friend bool operator==(const Generator& a, const Generator& b) {
        return a.name == b.name && a.weight == b.weight;
    }
};

/// One bracket value: list of (target generator, coefficient in d and x),
/// coefficients nonzero, targets strictly increasing.
using BracketValue = std::vector<std::pair<int, Poly>>;

/// Finite Lie conformal algebra presented by generators and bracket
/// structure constants on ordered generator pairs. Values are immutable
/// after validation; generator order in the definition is the canonical
/// order used for cochain canonicalization.
class Algebra {
public:
    Algebra() = default;
    Algebra(std::string name, std::vector<Generator> gens);

    const std::string& name() const { return name_; }
    int rank() const { return static_cast<int>(generators_.size()); }
    const std::vector<Generator>& generators() const { return generators_; }
    const Generator& generator(int i) const { return generators_.at(i); }
    std::optional<int> generator_index(const std::string& name) const;

    bool has_entry(int i, int j) const;
    /// Entry for the ordered pair (i, j); empty when absent or zero.
    const BracketValue& bracket(int i, int j) const;
    /// Sets the entry; zero coefficients are dropped, an all-zero value is
    /// recorded as explicitly given (skew completion cross-checks it).
    void set_bracket(int i, int j, BracketValue value);

    std::optional<int> virasoro() const { return virasoro_; }
    void set_virasoro(int idx);

    friend bool operator==(const Algebra& a, const Algebra& b);

private:
    std::string name_;
    std::vector<Generator> generators_;
    std::map<std::pair<int, int>, BracketValue> entries_;
    std::optional<int> virasoro_;
};

/// x -> -x - d, the substitution skew-symmetry is written with. Involutive.
Poly skew_transform(const Poly& p);
/// Negated skew transform of a whole bracket value.
BracketValue skew_opposite(const BracketValue& v);

struct SkewConflict {
    int i, j;      // ordered pair whose entries disagree
    int target;    // generator index the residual multiplies
    Poly residual; // entry(i,j) + skew(entry(j,i)), nonzero
};

struct CompletionResult {
    Algebra algebra;
    std::vector<SkewConflict> conflicts; // empty on success
};

/// Fills each missing transpose entry from the given direction; entries given
/// in both directions (and diagonal entries) are cross-checked instead.
CompletionResult complete_by_skew(const Algebra& a);

struct SkewReport {
    std::vector<SkewConflict> violations;
    bool ok() const { return violations.empty(); }
};
SkewReport check_skew(const Algebra& a);

struct JacobiViolation {
    int a, b, c;   // generator triple
    int target;
    Poly residual; // in d, x1 (lambda), x2 (mu)
};
struct JacobiReport {
    std::vector<JacobiViolation> violations;
    bool ok() const { return violations.empty(); }
};
JacobiReport check_jacobi(const Algebra& a);

/// Result of conformal-weight inference against a designated generator L:
/// every [L_ g] must be exactly (d + W*x) g with the d-coefficient 1, and L
/// itself must have weight 2.
struct WeightInference {
    std::optional<std::vector<Scalar>> weights;
    std::string offender; // generator name on failure
    std::string message;
    bool ok() const { return weights.has_value(); }
};
WeightInference infer_weights(const Algebra& a, int virasoro_index);
/// Uses the algebra's designated generator; fails when none is set.
WeightInference infer_weights(const Algebra& a);

bool is_subalgebra(const Algebra& a, const std::vector<int>& subset);
bool is_ideal(const Algebra& a, const std::vector<int>& subset);
/// Deletes the ideal's generators and drops them from the remaining
/// brackets. Rejects non-ideals.
Algebra quotient(const Algebra& a, const std::vector<int>& ideal);

// Built-in algebras (validated, skew-complete, canonical generator order).
Algebra builtin_vir();  // Virasoro: L
Algebra builtin_hv();   // Heisenberg-Virasoro: L, N
Algebra builtin_sv();   // Schrodinger-Virasoro: L, Y, M
Algebra builtin_esv();  // extended Schrodinger-Virasoro: L, Y, M, N
/// Lookup by CLI name (vir | hv | sv | esv); empty when unknown.
std::optional<Algebra> builtin_algebra(const std::string& name);

} // namespace lcc
