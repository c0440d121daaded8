#pragma once

#include "lcc/complex.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lcc {

/// Thrown when a driver needs inferred conformal weights and the algebra has
/// none (no designated Virasoro generator, or a bracket outside the primary
/// form). The message names the offending generator.
class WeightError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Mode { Basic, Reduced, Relative };

struct TableRow {
    ComponentKey key;
    int degree;      // forced polynomial degree
    int vandermonde; // minimal degree from antisymmetry
    int dim;         // slot basis dimension
};

struct Group {
    int q = 0;
    int dim = 0;
    std::vector<Cochain> representatives; // verified cocycles, one per dimension
};

struct Certificate {
    std::string description;
    std::optional<Cochain> witness;
};

struct CohomologyReport {
    Mode mode = Mode::Basic;
    std::string algebra_name;
    Scalar a_param;                       // reduced mode
    std::vector<std::string> subalgebra;  // relative mode
    std::vector<Scalar> weights;          // inferred weights (empty in window mode)
    bool truncation_verified = true;
    std::optional<int> manual_bound;
    std::vector<TableRow> table;
    std::vector<Group> groups;
    std::vector<Certificate> certificates;
    std::vector<std::string> verification_flags;

    int dim(int q) const;
    std::vector<int> dims() const; // indexed by q, covering all reported groups
};

/// Slot spaces of one Euler eigenvalue, per cohomological degree.
class EigenComplex {
public:
    EigenComplex(const Algebra& a, std::vector<Scalar> weights, const Scalar& eigenvalue);
    int qmax() const { return qmax_; }
    const SlotSpace& space(int q) const; // empty space beyond the range
    const Algebra& algebra() const { return *algebra_; }

private:
    const Algebra* algebra_;
    std::vector<Scalar> weights_;
    Scalar eigenvalue_;
    int qmax_;
    mutable std::map<int, SlotSpace> spaces_;
};

std::vector<Scalar> require_weights(const Algebra& a); // throws WeightError

/// Dimensions and representative cocycles of the basic cohomology with
/// trivial coefficients, computed on the eigenvalue-zero subcomplex.
CohomologyReport basic_cohomology(const Algebra& a);

/// Window-truncated variant for algebras without inferred weights: computes
/// the same linear algebra on all slots of polynomial degree <= bound and
/// flags the output as unverified (plus leak flags when the differential
/// escapes the window).
CohomologyReport windowed_basic_cohomology(const Algebra& a, int bound);

/// Exact preimage search: a (q-1)-cochain phi with d(phi) = g, or empty.
/// Off-eigenvalue-zero parts of a cocycle use the homotopy certificate
/// tau(g)/eigenvalue; the zero-eigenvalue part is a linear solve.
std::optional<Cochain> is_coboundary(const Cochain& g, const Algebra& a);

/// Reduced cohomology with coefficients where the translation symbol acts by
/// a_param. For a_param = 0: dimensions via the basic dimensions, reps are
/// the basic reps together with tau applied to their translation multiples,
/// each verified reduced-closed, with per-slice direct cross-checks. For
/// a_param != 0: the divisibility certificate is run on every retained slot
/// basis element and the report declares vanishing only when it passes.
CohomologyReport reduced_cohomology(const Algebra& a, const Scalar& a_param);

/// Searches phi, psi with g = d(phi) + (sum of lambdas) psi as one exact
/// linear system per Euler slice. Only the a_param = 0 case is supported.
std::optional<std::pair<Cochain, Cochain>> is_reduced_coboundary(const Cochain& g, const Algebra& a,
                                                                 const Scalar& a_param);

/// Directly computed dimension of one Euler slice of the reduced cohomology
/// (a_param = 0). Used as an independent cross-check of the dimension
/// formula.
int reduced_slice_dimension(const Algebra& a, int q, const Scalar& eigenvalue);

/// Cohomology of the subcomplex of cochains vanishing on the subalgebra B
/// (values and differentials alike). Verifies that the contraction operator
/// preserves the relative subspace on the retained slices and flags the
/// report otherwise.
CohomologyReport relative_cohomology(const Algebra& a, const std::vector<int>& B);

struct CrosscheckReport {
    CohomologyReport relative;
    CohomologyReport quotient_basic;
    std::vector<int> dims_relative;
    std::vector<int> dims_quotient;
    bool agree = false;
};
/// Relative cohomology modulo an ideal against the basic cohomology of the
/// quotient algebra; reports per-degree dimension agreement.
CrosscheckReport ideal_quotient_crosscheck(const Algebra& a, const std::vector<int>& B);

/// Extends a cochain over a subalgebra by zero along an embedding of its
/// generators. The embedding must be injective and bracket-compatible.
Cochain extend_by_zero(const Cochain& g, const Algebra& sub, const Algebra& parent,
                       const std::vector<int>& embedding);

/// Basis of the space of coefficient vectors t with sum_i t_i g_i a
/// coboundary. Inputs must be supported on the eigenvalue-zero retained
/// slots. Empty result = classes are linearly independent.
std::vector<std::vector<Scalar>> cocycle_relations(const std::vector<Cochain>& gs, const Algebra& a);

/// Same modulo reduced coboundaries d(phi) + (sum of lambdas) psi, slice by
/// slice (a_param = 0).
std::vector<std::vector<Scalar>> reduced_class_relations(const std::vector<Cochain>& gs,
                                                         const Algebra& a);

} // namespace lcc
