#pragma once

#include "lcc/algebra.hpp"
#include "lcc/cochain.hpp"
#include "lcc/linalg.hpp"

#include <optional>
#include <vector>

namespace lcc {

/// Differential of a q-cochain with trivial coefficients: only the bracket
/// terms of the general formula survive, with the bracket's d evaluated at
/// -(xi+xj) and its x at xi. Returns a (q+1)-cochain.
Cochain differential(const Cochain& g, const Algebra& a);

/// Contraction with the designated Virasoro generator in the last slot
/// followed by the lambda-derivative at zero, with sign (-1)^(q-1).
/// For q = 0 the result is zero. Rejects algebras without a designated
/// Virasoro generator.
Cochain tau(const Cochain& g, const Algebra& a);

/// Same as tau with the derivative step omitted (evaluation at lambda = 0).
Cochain tau2(const Cochain& g, const Algebra& a);

/// Module action of the translation symbol: componentwise multiplication by
/// (a_param + x1 + ... + xq).
Cochain partial_mult(const Cochain& g, const Scalar& a_param);

/// d - sum multiplicity*(weight - 1): the grading the homotopy identity
/// contracts along. Cohomology is carried entirely by eigenvalue zero.
Scalar euler_eigenvalue(const ComponentKey& key, int degree, const std::vector<Scalar>& weights);

struct GradedSlot {
    ComponentKey key;
    int degree;              // forced polynomial degree of the slot
    std::vector<Poly> basis; // nonempty (empty slots are pruned)
};

/// All slot patterns whose forced degree (weight budget + eigenvalue) is a
/// nonnegative integer at least the Vandermonde degree, each with its
/// antisymmetric basis. Finite by the surplus bound; sorted by (q, counts).
std::vector<GradedSlot> enumerate_slots(const Algebra& a, const std::vector<Scalar>& weights,
                                        const Scalar& eigenvalue);
std::vector<GradedSlot> enumerate_zero_slots(const Algebra& a, const std::vector<Scalar>& weights);

/// Window truncation for algebras without inferred weights: every slot of
/// polynomial degree <= bound, one GradedSlot per (key, degree).
std::vector<GradedSlot> enumerate_bounded_slots(const Algebra& a, int bound);

/// Coordinates over an ordered family of slots of one cohomological degree.
/// A cochain lies in the space when each component splits into the slots'
/// homogeneous degrees and each part lies in the slot's basis span.
class SlotSpace {
public:
    SlotSpace() : q_(0), rank_(0), dim_(0) {}
    SlotSpace(int q, int rank, std::vector<GradedSlot> slots);

    int q() const { return q_; }
    int dim() const { return dim_; }
    const std::vector<GradedSlot>& slots() const { return slots_; }
    int slot_offset(int slot_index) const { return offsets_.at(slot_index); }

    /// Throws std::domain_error when the cochain is not in the span.
    std::vector<Scalar> coordinates(const Cochain& g) const;
    /// Leak-tolerant variant: parts outside the space are dropped and
    /// reported through `leaked`.
    std::vector<Scalar> coordinates_window(const Cochain& g, bool& leaked) const;
    Cochain cochain(const std::vector<Scalar>& coords) const;
    Cochain basis_cochain(int index) const;

private:
    int q_;
    int rank_;
    int dim_;
    std::vector<GradedSlot> slots_;
    std::vector<int> offsets_;
    std::vector<Scalar> coordinates_impl(const Cochain& g, bool* leaked) const;
};

/// Matrix of the differential between two slot spaces (cod.q == dom.q + 1).
LinearMap differential_matrix(const SlotSpace& dom, const SlotSpace& cod, const Algebra& a);
/// Window variant: leaking components set `leaked` instead of throwing.
LinearMap differential_matrix_window(const SlotSpace& dom, const SlotSpace& cod, const Algebra& a,
                                     bool& leaked);

} // namespace lcc
