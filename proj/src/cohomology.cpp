#include "lcc/cohomology.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <set>

namespace lcc {

int CohomologyReport::dim(int q) const {
    for (const auto& g : groups)
        if (g.q == q)
            return g.dim;
    return 0;
}

std::vector<int> CohomologyReport::dims() const {
    int qmax = 0;
    for (const auto& g : groups)
        qmax = std::max(qmax, g.q);
    std::vector<int> out(qmax + 1, 0);
    for (const auto& g : groups)
        out[g.q] = g.dim;
    return out;
}

EigenComplex::EigenComplex(const Algebra& a, std::vector<Scalar> weights, const Scalar& eigenvalue)
    : algebra_(&a), weights_(std::move(weights)), eigenvalue_(eigenvalue), qmax_(0) {
    auto slots = enumerate_slots(a, weights_, eigenvalue_);
    std::map<int, std::vector<GradedSlot>> by_q;
    for (auto& s : slots) {
        int q = s.key.q();
        qmax_ = std::max(qmax_, q);
        by_q[q].push_back(std::move(s));
    }
    for (auto& [q, group] : by_q)
        spaces_.emplace(q, SlotSpace(q, a.rank(), std::move(group)));
}

const SlotSpace& EigenComplex::space(int q) const {
    auto it = spaces_.find(q);
    if (it == spaces_.end())
        it = spaces_.emplace(q, SlotSpace(std::max(q, 0), algebra_->rank(), {})).first;
    return it->second;
}

std::vector<Scalar> require_weights(const Algebra& a) {
    auto wi = infer_weights(a);
    if (!wi.ok())
        throw WeightError(wi.message +
                          " (truncation-based cohomology needs the primary form; "
                          "supply an explicit degree bound to run anyway)");
    return *wi.weights;
}

namespace {

std::vector<TableRow> make_table(const std::vector<GradedSlot>& slots) {
    std::vector<TableRow> rows;
    rows.reserve(slots.size());
    for (const auto& s : slots)
        rows.push_back({s.key, s.degree, vandermonde_degree(s.key), static_cast<int>(s.basis.size())});
    return rows;
}

struct DegreewiseResult {
    std::vector<Group> groups;
    std::vector<std::string> flags;
};

/// Kernel-modulo-image extraction over a chain of matrices mats[q] mapping
/// coordinate space q to q+1, with a cochain factory for representatives.
DegreewiseResult solve_degreewise(const std::vector<int>& dims, const std::vector<LinearMap>& mats,
                                  const std::function<Cochain(int, const std::vector<Scalar>&)>& to_cochain,
                                  const std::function<bool(int, const Cochain&)>& verify_rep) {
    DegreewiseResult out;
    const int qtop = static_cast<int>(dims.size()) - 1;
    for (int q = 0; q <= qtop; ++q) {
        Group grp;
        grp.q = q;
        RowReducer red(dims[q]);
        if (q > 0)
            for (int c = 0; c < mats[q - 1].cols(); ++c)
                red.add(mats[q - 1].column(c));
        const int boundary_rank = red.rank();
        auto kernel = mats[q].kernel_basis();
        grp.dim = static_cast<int>(kernel.size()) - boundary_rank;
        for (const auto& v : kernel) {
            auto r = red.reduce(v);
            int pivot = -1;
            for (int i = 0; i < dims[q]; ++i)
                if (!r[i].is_zero()) {
                    pivot = i;
                    break;
                }
            if (pivot < 0)
                continue;
            Scalar inv = r[pivot].reciprocal();
            for (auto& c : r)
                c *= inv;
            red.add(r);
            Cochain rep = to_cochain(q, r);
            if (!verify_rep(q, rep))
                out.flags.push_back("representative at q=" + std::to_string(q) +
                                    " failed closedness verification");
            grp.representatives.push_back(std::move(rep));
        }
        if (static_cast<int>(grp.representatives.size()) != grp.dim)
            out.flags.push_back("rank bookkeeping mismatch at q=" + std::to_string(q));
        out.groups.push_back(std::move(grp));
    }
    return out;
}

CohomologyReport basic_with_weights(const Algebra& a, std::vector<Scalar> weights) {
    CohomologyReport rep;
    rep.mode = Mode::Basic;
    rep.algebra_name = a.name();
    rep.weights = weights;
    rep.truncation_verified = true;

    EigenComplex cx(a, weights, Scalar(0));
    rep.table = make_table(enumerate_zero_slots(a, weights));

    const int qtop = cx.qmax() + 1; // one trailing zero degree
    std::vector<int> dims(qtop + 1);
    std::vector<LinearMap> mats(qtop + 1);
    for (int q = 0; q <= qtop; ++q) {
        dims[q] = cx.space(q).dim();
        mats[q] = differential_matrix(cx.space(q), cx.space(q + 1), a);
    }
    auto solved = solve_degreewise(
        dims, mats, [&](int q, const std::vector<Scalar>& v) { return cx.space(q).cochain(v); },
        [&](int, const Cochain& g) { return differential(g, a).is_zero(); });
    rep.groups = std::move(solved.groups);
    rep.verification_flags = std::move(solved.flags);
    if (rep.verification_flags.empty())
        rep.certificates.push_back({"every representative verified closed: d(rep) = 0 exactly", {}});
    return rep;
}

} // namespace

CohomologyReport basic_cohomology(const Algebra& a) {
    return basic_with_weights(a, require_weights(a));
}

CohomologyReport windowed_basic_cohomology(const Algebra& a, int bound) {
    CohomologyReport rep;
    rep.mode = Mode::Basic;
    rep.algebra_name = a.name();
    rep.truncation_verified = false;
    rep.manual_bound = bound;
    rep.verification_flags.push_back("unverified truncation: manual degree bound " +
                                     std::to_string(bound));

    auto slots = enumerate_bounded_slots(a, bound);
    rep.table = make_table(slots);
    std::map<int, std::vector<GradedSlot>> by_q;
    int qmax = 0;
    for (auto& s : slots) {
        qmax = std::max(qmax, s.key.q());
        by_q[s.key.q()].push_back(std::move(s));
    }
    const int qtop = qmax + 1;
    std::vector<SlotSpace> spaces(qtop + 2);
    for (int q = 0; q <= qtop + 1; ++q) {
        auto it = by_q.find(q);
        spaces[q] = SlotSpace(q, a.rank(),
                              it == by_q.end() ? std::vector<GradedSlot>{} : std::move(it->second));
    }
    bool leaked = false;
    std::vector<int> dims(qtop + 1);
    std::vector<LinearMap> mats(qtop + 1);
    for (int q = 0; q <= qtop; ++q) {
        dims[q] = spaces[q].dim();
        mats[q] = differential_matrix_window(spaces[q], spaces[q + 1], a, leaked);
    }
    if (leaked)
        rep.verification_flags.push_back(
            "truncation leak: the differential left the degree window; dimensions are window-relative");
    auto solved = solve_degreewise(
        dims, mats, [&](int q, const std::vector<Scalar>& v) { return spaces[q].cochain(v); },
        [&](int, const Cochain& g) { return differential(g, a).is_zero(); });
    rep.groups = std::move(solved.groups);
    for (auto& f : solved.flags)
        rep.verification_flags.push_back("window " + f);
    return rep;
}

namespace {
/// Splits a cochain into its (key, homogeneous degree) parts grouped by
/// Euler eigenvalue.
std::map<Scalar, Cochain> eigen_decompose(const Cochain& g, const std::vector<Scalar>& weights) {
    std::map<Scalar, Cochain> parts;
    for (const auto& [key, value] : g.components()) {
        for (int d = 0; d <= value.total_degree(); ++d) {
            Poly part = value.homogeneous_component(d);
            if (part.is_zero())
                continue;
            Scalar e = euler_eigenvalue(key, d, weights);
            auto it = parts.find(e);
            if (it == parts.end())
                it = parts.emplace(e, Cochain(g.q(), g.rank())).first;
            Poly existing = it->second.component(key);
            it->second.set_canonical(key, existing + part);
        }
    }
    return parts;
}
} // namespace

std::optional<Cochain> is_coboundary(const Cochain& g, const Algebra& a) {
    auto weights = require_weights(a);
    const int q = g.q();
    if (q == 0) {
        // the space of (-1)-cochains is zero: only the zero 0-cochain is a
        // coboundary, with the empty certificate
        if (g.is_zero())
            return Cochain(0, g.rank());
        return std::nullopt;
    }
    if (!differential(g, a).is_zero())
        return std::nullopt; // d^2 = 0: non-cocycles are never coboundaries

    Cochain cert(q - 1, g.rank());
    for (auto& [e, part] : eigen_decompose(g, weights)) {
        if (!e.is_zero()) {
            cert += e.reciprocal() * tau(part, a);
            continue;
        }
        EigenComplex cx(a, weights, Scalar(0));
        auto coords = cx.space(q).coordinates(part);
        LinearMap dmat = differential_matrix(cx.space(q - 1), cx.space(q), a);
        auto sol = dmat.solve(coords);
        if (!sol)
            return std::nullopt;
        cert += cx.space(q - 1).cochain(*sol);
    }
    if (differential(cert, a) != g)
        throw std::logic_error("is_coboundary: certificate verification failed");
    return cert;
}

int reduced_slice_dimension(const Algebra& a, int q, const Scalar& eigenvalue) {
    auto weights = require_weights(a);
    EigenComplex at(a, weights, eigenvalue);
    EigenComplex below(a, weights, eigenvalue - Scalar(1));
    const SlotSpace& vq = at.space(q);
    const SlotSpace& vq1 = at.space(q + 1);
    const SlotSpace& wq = below.space(q);
    const SlotSpace& wq1 = below.space(q + 1);

    LinearMap d = differential_matrix(vq, vq1, a);
    LinearMap p1(vq1.dim(), wq1.dim());
    for (int j = 0; j < wq1.dim(); ++j)
        p1.set_column(j, vq1.coordinates(partial_mult(wq1.basis_cochain(j), Scalar(0))));
    // reduced cocycles: x with d x in the image of the translation action
    LinearMap aug = d.augmented(p1);
    int kdim = static_cast<int>(aug.kernel_basis().size()) - static_cast<int>(p1.kernel_basis().size());

    // reduced coboundaries inside the slice
    std::vector<std::vector<Scalar>> jcols;
    if (q >= 1) {
        LinearMap dm1 = differential_matrix(at.space(q - 1), vq, a);
        for (int j = 0; j < dm1.cols(); ++j)
            jcols.push_back(dm1.column(j));
    }
    for (int j = 0; j < wq.dim(); ++j)
        jcols.push_back(vq.coordinates(partial_mult(wq.basis_cochain(j), Scalar(0))));
    int jrank = LinearMap::from_columns(vq.dim(), jcols).rank();
    return kdim - jrank;
}

CohomologyReport reduced_cohomology(const Algebra& a, const Scalar& a_param) {
    auto weights = require_weights(a);
    CohomologyReport rep;
    rep.mode = Mode::Reduced;
    rep.algebra_name = a.name();
    rep.a_param = a_param;
    rep.weights = weights;
    rep.table = make_table(enumerate_zero_slots(a, weights));

    if (!a_param.is_zero()) {
        // vanishing is asserted only when the divisibility certificate passes
        EigenComplex cx(a, weights, Scalar(0));
        int checked = 0;
        bool all_ok = true;
        for (int q = 0; q <= cx.qmax(); ++q) {
            const SlotSpace& sp = cx.space(q);
            Poly divisor = Poly::constant(a_param) + lambda_sum(q);
            for (int j = 0; j < sp.dim(); ++j) {
                Cochain g = sp.basis_cochain(j);
                Cochain r = differential(tau2(g, a), a) + tau2(differential(g, a), a) + a_param * g;
                for (const auto& [key, value] : r.components()) {
                    (void)key;
                    if (!value.divide_by_affine(divisor)) {
                        all_ok = false;
                        rep.verification_flags.push_back(
                            "divisibility certificate failed on slot " + key.str(a) + " at q=" +
                            std::to_string(q));
                    }
                }
                ++checked;
            }
        }
        if (all_ok) {
            rep.certificates.push_back(
                {"(d tau2 + tau2 d + a) value divisible by (a + sum of lambdas) on all " +
                     std::to_string(checked) + " retained basis elements; scalar action invertible",
                 {}});
            for (int q = 0; q <= cx.qmax() + 1; ++q)
                rep.groups.push_back({q, 0, {}});
        } else {
            rep.verification_flags.push_back(
                "vanishing not asserted: divisibility certificate failed");
        }
        return rep;
    }

    CohomologyReport basic = basic_with_weights(a, weights);
    auto basic_reps = [&](int q) -> const std::vector<Cochain>* {
        for (const auto& g : basic.groups)
            if (g.q == q)
                return &g.representatives;
        return nullptr;
    };
    const int qtop = static_cast<int>(basic.dims().size()); // includes a trailing zero
    for (int q = 0; q <= qtop; ++q) {
        Group grp;
        grp.q = q;
        if (q == 0) {
            // computed directly: the translation action on 0-cochains is
            // multiplication by a = 0, so nothing is collapsed and d0 = 0
            grp.dim = 1;
            grp.representatives.push_back(Cochain::scalar(a.rank(), Scalar(1)));
            if (grp.dim != basic.dim(0) + basic.dim(1))
                rep.verification_flags.push_back(
                    "q=0: direct computation disagrees with the degree-shift formula");
        } else {
            grp.dim = basic.dim(q) + basic.dim(q + 1);
            if (const auto* own = basic_reps(q))
                for (const auto& r : *own)
                    grp.representatives.push_back(r);
            if (const auto* above = basic_reps(q + 1)) {
                for (const auto& r : *above) {
                    Cochain lifted = tau(partial_mult(r, Scalar(0)), a);
                    // reduced-closed: d(lift) = translation multiple of the
                    // original representative
                    Cochain d = differential(lifted, a);
                    Poly divisor = lambda_sum(q + 1);
                    bool ok = true;
                    for (const auto& [key, value] : d.components()) {
                        (void)key;
                        if (!value.divide_by_affine(divisor))
                            ok = false;
                    }
                    if (!ok)
                        rep.verification_flags.push_back(
                            "lifted representative at q=" + std::to_string(q) + " is not reduced-closed");
                    else if (d == partial_mult(r, Scalar(0)))
                        rep.certificates.push_back(
                            {"q=" + std::to_string(q) +
                                 " lifted representative: d(lift) = (sum of lambdas) * source representative",
                             r});
                    grp.representatives.push_back(std::move(lifted));
                }
            }
            if (static_cast<int>(grp.representatives.size()) != grp.dim)
                rep.verification_flags.push_back("q=" + std::to_string(q) +
                                                 ": representative count disagrees with dimension");
        }
        rep.groups.push_back(std::move(grp));
    }

    // independent per-slice cross-check of the dimension formula
    for (int q = 0; q <= qtop; ++q) {
        if (reduced_slice_dimension(a, q, Scalar(0)) != basic.dim(q))
            rep.verification_flags.push_back("slice cross-check failed at q=" + std::to_string(q) +
                                             ", eigenvalue 0");
        if (reduced_slice_dimension(a, q, Scalar(1)) != basic.dim(q + 1))
            rep.verification_flags.push_back("slice cross-check failed at q=" + std::to_string(q) +
                                             ", eigenvalue 1");
    }
    // representatives must stay independent modulo reduced coboundaries
    for (const auto& g : rep.groups) {
        if (g.dim == 0 || g.q == 0)
            continue;
        if (!reduced_class_relations(g.representatives, a).empty())
            rep.verification_flags.push_back("q=" + std::to_string(g.q) +
                                             ": representatives are dependent modulo reduced coboundaries");
    }
    if (rep.verification_flags.empty())
        rep.certificates.push_back(
            {"per-slice direct computation matches the degree-shift dimension formula", {}});
    return rep;
}

namespace {
struct SliceSystem {
    const SlotSpace* vq;
    const SlotSpace* vqm1;
    const SlotSpace* wq; // eigenvalue - 1 sources at degree q
    LinearMap d;         // vqm1 -> vq
    LinearMap p;         // wq -> vq (translation multiplication)
};

SliceSystem make_slice(const Algebra& a, EigenComplex& at, EigenComplex& below, int q) {
    SliceSystem s{&at.space(q), &at.space(q - 1), &below.space(q), {}, {}};
    if (q >= 1)
        s.d = differential_matrix(*s.vqm1, *s.vq, a);
    else
        s.d = LinearMap(s.vq->dim(), 0);
    s.p = LinearMap(s.vq->dim(), s.wq->dim());
    for (int j = 0; j < s.wq->dim(); ++j)
        s.p.set_column(j, s.vq->coordinates(partial_mult(s.wq->basis_cochain(j), Scalar(0))));
    return s;
}
} // namespace

std::optional<std::pair<Cochain, Cochain>> is_reduced_coboundary(const Cochain& g, const Algebra& a,
                                                                 const Scalar& a_param) {
    if (!a_param.is_zero())
        throw std::invalid_argument(
            "is_reduced_coboundary: only a = 0 is supported; vanishing for a != 0 "
            "is certified through the contraction operator instead");
    auto weights = require_weights(a);
    const int q = g.q();
    Cochain phi(std::max(q - 1, 0), g.rank());
    Cochain psi(q, g.rank());
    for (auto& [e, part] : eigen_decompose(g, weights)) {
        EigenComplex at(a, weights, e);
        EigenComplex bel(a, weights, e - Scalar(1));
        SliceSystem s = make_slice(a, at, bel, q);
        auto coords = s.vq->coordinates(part);
        LinearMap aug = s.d.augmented(s.p);
        auto sol = aug.solve(coords);
        if (!sol)
            return std::nullopt;
        std::vector<Scalar> xphi(sol->begin(), sol->begin() + s.d.cols());
        std::vector<Scalar> xpsi(sol->begin() + s.d.cols(), sol->end());
        if (q >= 1)
            phi += s.vqm1->cochain(xphi);
        psi += s.wq->cochain(xpsi);
    }
    Cochain check = partial_mult(psi, Scalar(0));
    if (q >= 1)
        check += differential(phi, a);
    if (check != g)
        throw std::logic_error("is_reduced_coboundary: certificate verification failed");
    return std::make_pair(phi, psi);
}

std::vector<std::vector<Scalar>> cocycle_relations(const std::vector<Cochain>& gs, const Algebra& a) {
    if (gs.empty())
        return {};
    auto weights = require_weights(a);
    const int q = gs.front().q();
    for (const auto& g : gs)
        if (g.q() != q)
            throw std::invalid_argument("cocycle_relations: mixed degrees");
    EigenComplex cx(a, weights, Scalar(0));
    const SlotSpace& sp = cx.space(q);
    const int n = static_cast<int>(gs.size());
    LinearMap gmat(sp.dim(), n);
    for (int j = 0; j < n; ++j)
        gmat.set_column(j, sp.coordinates(gs[j]));
    LinearMap dmat = differential_matrix(cx.space(q - 1), sp, a);
    LinearMap aug = gmat.augmented(dmat);
    RowReducer proj(n);
    std::vector<std::vector<Scalar>> out;
    for (const auto& k : aug.kernel_basis()) {
        std::vector<Scalar> t(k.begin(), k.begin() + n);
        if (proj.add(t))
            out.push_back(std::move(t));
    }
    return out;
}

std::vector<std::vector<Scalar>> reduced_class_relations(const std::vector<Cochain>& gs,
                                                         const Algebra& a) {
    if (gs.empty())
        return {};
    auto weights = require_weights(a);
    const int q = gs.front().q();
    const int n = static_cast<int>(gs.size());
    // Euler slices that carry any input component
    std::set<Scalar> eigenvalues;
    std::vector<std::map<Scalar, Cochain>> parts;
    for (const auto& g : gs) {
        if (g.q() != q)
            throw std::invalid_argument("reduced_class_relations: mixed degrees");
        parts.push_back(eigen_decompose(g, weights));
        for (const auto& [e, c] : parts.back()) {
            (void)c;
            eigenvalues.insert(e);
        }
    }
    // block rows per slice; shared t columns, per-slice phi and psi columns
    std::vector<SliceSystem> systems;
    std::vector<std::unique_ptr<EigenComplex>> keep;
    int rows = 0, cols = n;
    for (const auto& e : eigenvalues) {
        keep.push_back(std::make_unique<EigenComplex>(a, weights, e));
        keep.push_back(std::make_unique<EigenComplex>(a, weights, e - Scalar(1)));
        EigenComplex& at = *keep[keep.size() - 2];
        EigenComplex& bel = *keep[keep.size() - 1];
        systems.push_back(make_slice(a, at, bel, q));
        rows += systems.back().vq->dim();
        cols += systems.back().d.cols() + systems.back().p.cols();
    }
    LinearMap big(rows, cols);
    int row0 = 0, col0 = n;
    int si = 0;
    for (const auto& e : eigenvalues) {
        SliceSystem& s = systems[si++];
        for (int j = 0; j < n; ++j) {
            auto it = parts[j].find(e);
            if (it == parts[j].end())
                continue;
            auto coords = s.vq->coordinates(it->second);
            for (int r = 0; r < s.vq->dim(); ++r)
                big.at(row0 + r, j) = coords[r];
        }
        for (int c = 0; c < s.d.cols(); ++c)
            for (int r = 0; r < s.vq->dim(); ++r)
                big.at(row0 + r, col0 + c) = -s.d.at(r, c);
        col0 += s.d.cols();
        for (int c = 0; c < s.p.cols(); ++c)
            for (int r = 0; r < s.vq->dim(); ++r)
                big.at(row0 + r, col0 + c) = -s.p.at(r, c);
        col0 += s.p.cols();
        row0 += s.vq->dim();
    }
    RowReducer proj(n);
    std::vector<std::vector<Scalar>> out;
    for (const auto& k : big.kernel_basis()) {
        std::vector<Scalar> t(k.begin(), k.begin() + n);
        if (proj.add(t))
            out.push_back(std::move(t));
    }
    return out;
}

CohomologyReport relative_cohomology(const Algebra& a, const std::vector<int>& B) {
    if (!is_subalgebra(a, B))
        throw std::invalid_argument("relative_cohomology: the chosen generators do not span a subalgebra");
    auto weights = require_weights(a);
    CohomologyReport rep;
    rep.mode = Mode::Relative;
    rep.algebra_name = a.name();
    rep.weights = weights;
    for (int g : B)
        rep.subalgebra.push_back(a.generator(g).name);
    rep.table = make_table(enumerate_zero_slots(a, weights));

    std::vector<bool> mask(a.rank(), false);
    for (int g : B)
        mask[g] = true;

    EigenComplex cx(a, weights, Scalar(0));
    const int qtop = cx.qmax() + 1;

    // the relative subspace sits inside the B-free slots, carved out by the
    // constraint that the differential vanish on B-touching slots
    struct Level {
        SlotSpace free;
        LinearMap to_full;        // d: free -> full coordinates at q+1
        std::vector<int> full_is_b; // row classification of full space q
        std::vector<std::vector<Scalar>> rel_basis; // vectors in free coords
    };
    std::vector<Level> levels(qtop + 2);
    for (int q = 0; q <= qtop + 1; ++q) {
        std::vector<GradedSlot> free_slots;
        for (const auto& s : cx.space(q).slots())
            if (!s.key.contains_any(mask))
                free_slots.push_back(s);
        levels[q].free = SlotSpace(q, a.rank(), std::move(free_slots));
        const SlotSpace& full = cx.space(q);
        for (std::size_t si = 0; si < full.slots().size(); ++si)
            for (std::size_t b = 0; b < full.slots()[si].basis.size(); ++b)
                levels[q].full_is_b.push_back(full.slots()[si].key.contains_any(mask) ? 1 : 0);
    }
    for (int q = 0; q <= qtop; ++q) {
        levels[q].to_full = differential_matrix(levels[q].free, cx.space(q + 1), a);
        // constraint rows: image components on B-touching slots must vanish
        int crows = 0;
        for (int f : levels[q + 1].full_is_b)
            crows += f;
        LinearMap constraint(crows, levels[q].free.dim());
        int r = 0;
        for (int row = 0; row < levels[q].to_full.rows(); ++row) {
            if (!levels[q + 1].full_is_b[row])
                continue;
            for (int c = 0; c < levels[q].to_full.cols(); ++c)
                constraint.at(r, c) = levels[q].to_full.at(row, c);
            ++r;
        }
        levels[q].rel_basis = constraint.kernel_basis();
    }
    levels[qtop + 1].rel_basis = {};

    // free-coordinate extraction of a full-coordinate vector
    auto restrict_free = [&](int q, const std::vector<Scalar>& full_coords) {
        std::vector<Scalar> out;
        out.reserve(levels[q].free.dim());
        for (std::size_t i = 0; i < full_coords.size(); ++i)
            if (!levels[q].full_is_b[i])
                out.push_back(full_coords[i]);
        return out;
    };

    std::vector<int> dims(qtop + 1);
    std::vector<LinearMap> mats(qtop + 1);
    for (int q = 0; q <= qtop; ++q) {
        dims[q] = static_cast<int>(levels[q].rel_basis.size());
        const auto& next = levels[q + 1].rel_basis;
        LinearMap next_mat =
            LinearMap::from_columns(levels[q + 1].free.dim(),
                                    std::vector<std::vector<Scalar>>(next.begin(), next.end()));
        LinearMap m(static_cast<int>(next.size()), dims[q]);
        for (int j = 0; j < dims[q]; ++j) {
            auto full = levels[q].to_full.apply(levels[q].rel_basis[j]);
            for (std::size_t i = 0; i < full.size(); ++i)
                if (levels[q + 1].full_is_b[i] && !full[i].is_zero())
                    throw std::logic_error("relative_cohomology: constraint violated");
            auto freev = restrict_free(q + 1, full);
            auto sol = next_mat.solve(freev);
            if (!sol)
                throw std::logic_error("relative_cohomology: differential left the relative subspace");
            m.set_column(j, *sol);
        }
        mats[q] = std::move(m);
    }

    auto to_cochain = [&](int q, const std::vector<Scalar>& relv) {
        std::vector<Scalar> freev(levels[q].free.dim());
        for (std::size_t j = 0; j < relv.size(); ++j)
            if (!relv[j].is_zero())
                for (int i = 0; i < levels[q].free.dim(); ++i)
                    freev[i] += relv[j] * levels[q].rel_basis[j][i];
        return levels[q].free.cochain(freev);
    };
    auto solved = solve_degreewise(dims, mats, to_cochain, [&](int, const Cochain& g) {
        return differential(g, a).is_zero();
    });
    rep.groups = std::move(solved.groups);
    rep.verification_flags = std::move(solved.flags);

    // contraction operator must preserve the relative subspace on the
    // retained slices, otherwise the truncation is not justified
    for (int q = 1; q <= qtop; ++q) {
        for (std::size_t j = 0; j < levels[q].rel_basis.size(); ++j) {
            std::vector<Scalar> unit(levels[q].rel_basis.size());
            unit[j] = Scalar(1);
            Cochain tg = tau(to_cochain(q, unit), a);
            bool ok = true;
            for (const auto& [key, value] : tg.components()) {
                (void)value;
                if (key.contains_any(mask))
                    ok = false;
            }
            if (ok && !tg.is_zero()) {
                try {
                    auto freec = levels[q - 1].free.coordinates(tg);
                    auto full = levels[q - 1].to_full.apply(freec);
                    for (std::size_t i = 0; i < full.size(); ++i)
                        if (levels[q].full_is_b[i] && !full[i].is_zero())
                            ok = false;
                } catch (const std::domain_error&) {
                    ok = false;
                }
            }
            if (!ok) {
                rep.verification_flags.push_back(
                    "contraction operator left the relative subspace at q=" + std::to_string(q));
                break;
            }
        }
    }
    if (rep.verification_flags.empty())
        rep.certificates.push_back(
            {"contraction operator preserves the relative subspace on all retained slices", {}});
    return rep;
}

CrosscheckReport ideal_quotient_crosscheck(const Algebra& a, const std::vector<int>& B) {
    if (!is_ideal(a, B))
        throw std::invalid_argument("ideal_quotient_crosscheck: the chosen generators do not span an ideal");
    CrosscheckReport out;
    out.relative = relative_cohomology(a, B);
    out.quotient_basic = basic_cohomology(quotient(a, B));
    out.dims_relative = out.relative.dims();
    out.dims_quotient = out.quotient_basic.dims();
    std::size_t n = std::max(out.dims_relative.size(), out.dims_quotient.size());
    out.agree = true;
    for (std::size_t q = 0; q < n; ++q) {
        int dr = q < out.dims_relative.size() ? out.dims_relative[q] : 0;
        int dq = q < out.dims_quotient.size() ? out.dims_quotient[q] : 0;
        if (dr != dq)
            out.agree = false;
    }
    return out;
}

Cochain extend_by_zero(const Cochain& g, const Algebra& sub, const Algebra& parent,
                       const std::vector<int>& embedding) {
    if (static_cast<int>(embedding.size()) != sub.rank())
        throw std::invalid_argument("extend_by_zero: embedding size mismatch");
    std::set<int> image;
    for (int t : embedding) {
        if (t < 0 || t >= parent.rank() || !image.insert(t).second)
            throw std::invalid_argument("extend_by_zero: embedding is not injective into the parent");
    }
    // bracket compatibility: the embedded generators form a subalgebra with
    // the same structure constants
    for (int i = 0; i < sub.rank(); ++i)
        for (int j = 0; j < sub.rank(); ++j) {
            BracketValue mapped;
            for (const auto& [t, p] : sub.bracket(i, j))
                mapped.emplace_back(embedding[t], p);
            std::sort(mapped.begin(), mapped.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            if (mapped != parent.bracket(embedding[i], embedding[j]))
                throw std::invalid_argument("extend_by_zero: embedding is not bracket-compatible");
        }
    Cochain out(g.q(), parent.rank());
    for (const auto& [key, value] : g.components()) {
        std::vector<int> tuple;
        for (int gi : key.canonical_tuple())
            tuple.push_back(embedding[gi]);
        out.add_component(tuple, value);
    }
    return out;
}

} // namespace lcc
