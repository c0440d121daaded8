#include "lcc/complex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lcc {

Cochain differential(const Cochain& g, const Algebra& a) {
    const int q = g.q();
    const int n = q + 1;
    const int rank = a.rank();
    if (g.rank() != rank)
        throw std::invalid_argument("differential: cochain rank does not match algebra");

    // candidate target keys: replace one generator of a source key by a
    // bracketing pair that can produce it
    std::set<ComponentKey> targets;
    for (const auto& [key, value] : g.components()) {
        (void)value;
        for (int gi = 0; gi < rank; ++gi)
            for (int gj = 0; gj < rank; ++gj)
                for (const auto& [t, c] : a.bracket(gi, gj)) {
                    (void)c;
                    if (key.count(t) > 0)
                        targets.insert(key.with(t, -1).with(gi, +1).with(gj, +1));
                }
    }

    Cochain out(n, rank);
    for (const ComponentKey& key : targets) {
        const std::vector<int> tuple = key.canonical_tuple();
        Poly val;
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                const BracketValue& entries = a.bracket(tuple[i - 1], tuple[j - 1]);
                if (entries.empty())
                    continue;
                const Poly xi = Poly::var(VarId::lam(i));
                const Poly xj = Poly::var(VarId::lam(j));
                // variable plan for the evaluated q-cochain: the bracket
                // slot takes xi + xj, the survivors keep their lambdas
                std::map<VarId, Poly> varmap;
                varmap.emplace(VarId::lam(1), xi + xj);
                std::vector<int> rest;
                rest.reserve(q);
                int s = 2;
                for (int t = 1; t <= n; ++t) {
                    if (t == i || t == j)
                        continue;
                    rest.push_back(tuple[t - 1]);
                    varmap.emplace(VarId::lam(s), Poly::var(VarId::lam(t)));
                    ++s;
                }
                const std::map<VarId, Poly> coeffmap = {{VarId::del(), -(xi + xj)}, {VarId::x(), xi}};
                for (const auto& [target, c] : entries) {
                    std::vector<int> arg;
                    arg.reserve(q);
                    arg.push_back(target);
                    arg.insert(arg.end(), rest.begin(), rest.end());
                    Poly gv = g.evaluate(arg);
                    if (gv.is_zero())
                        continue;
                    Poly term = c.compose(coeffmap) * gv.compose(varmap);
                    if ((i + j) % 2)
                        val -= term;
                    else
                        val += term;
                }
            }
        }
        if (!val.is_zero())
            out.set_canonical(key, val);
    }
    return out;
}

namespace {
Cochain contract_with_virasoro(const Cochain& g, const Algebra& a, bool with_derivative) {
    if (!a.virasoro())
        throw std::invalid_argument("tau: algebra has no designated Virasoro generator");
    const int L = *a.virasoro();
    const int q = g.q();
    if (q == 0)
        return Cochain(0, g.rank()); // nothing to consume
    Cochain out(q - 1, g.rank());
    const VarId last = VarId::lam(q);
    for (const auto& [key, value] : g.components()) {
        (void)value;
        if (key.count(L) == 0)
            continue;
        ComponentKey key2 = key.with(L, -1);
        std::vector<int> arg = key2.canonical_tuple();
        arg.push_back(L);
        Poly v = g.evaluate(arg);
        if (with_derivative)
            v = v.derivative(last);
        v = v.substitute(last, Poly::zero());
        if ((q - 1) % 2)
            v = -v;
        if (!v.is_zero())
            out.set_canonical(key2, v);
    }
    return out;
}
} // namespace

Cochain tau(const Cochain& g, const Algebra& a) {
    return contract_with_virasoro(g, a, true);
}

Cochain tau2(const Cochain& g, const Algebra& a) {
    return contract_with_virasoro(g, a, false);
}

Cochain partial_mult(const Cochain& g, const Scalar& a_param) {
    Cochain out(g.q(), g.rank());
    Poly mult = Poly::constant(a_param) + lambda_sum(g.q());
    for (const auto& [key, value] : g.components()) {
        Poly v = mult * value;
        if (!v.is_zero())
            out.set_canonical(key, v);
    }
    return out;
}

Scalar euler_eigenvalue(const ComponentKey& key, int degree, const std::vector<Scalar>& weights) {
    Scalar e(degree);
    for (int gidx = 0; gidx < key.rank(); ++gidx)
        e -= Scalar(key.count(gidx)) * (weights.at(gidx) - Scalar(1));
    return e;
}

namespace {
Scalar binom2(int c) {
    return Scalar(c * (c - 1) / 2);
}
} // namespace

std::vector<GradedSlot> enumerate_slots(const Algebra& a, const std::vector<Scalar>& weights,
                                        const Scalar& eigenvalue) {
    const int rank = a.rank();
    if (static_cast<int>(weights.size()) != rank)
        throw std::invalid_argument("enumerate_slots: weight vector size mismatch");

    // global surplus: how much the linear weight budget can outrun the
    // quadratic Vandermonde cost, summed over weight > 1 generators
    Scalar surplus(0);
    for (int g = 0; g < rank; ++g) {
        Scalar wm1 = weights[g] - Scalar(1);
        if (!(wm1 > Scalar(0)))
            continue;
        Scalar best(0);
        for (int c = 1;; ++c) {
            Scalar v = Scalar(c) * wm1 - binom2(c);
            if (v > best)
                best = v;
            if (v < Scalar(0) && Scalar(c) > Scalar(2) * wm1 + Scalar(2))
                break;
        }
        surplus += best;
    }

    const Scalar limit = surplus + eigenvalue;
    std::vector<GradedSlot> out;
    if (limit < Scalar(0))
        return out;

    // per-generator multiplicity bound: largest c with C(c,2) - c(w-1) <= limit
    std::vector<int> bound(rank, 0);
    for (int g = 0; g < rank; ++g) {
        Scalar wm1 = weights[g] - Scalar(1);
        int c = 0;
        while (binom2(c + 1) - Scalar(c + 1) * wm1 <= limit)
            ++c;
        bound[g] = c;
    }

    std::vector<int> counts(rank, 0);
    auto emit = [&](const std::vector<int>& cs) {
        ComponentKey key{std::vector<int>(cs)};
        Scalar deg = eigenvalue;
        for (int g = 0; g < rank; ++g)
            deg += Scalar(cs[g]) * (weights[g] - Scalar(1));
        if (!deg.is_integer() || deg.is_negative())
            return;
        int d = static_cast<int>(deg.numerator());
        if (d < vandermonde_degree(key))
            return;
        auto basis = antisym_basis(key, d);
        if (basis.empty())
            return;
        out.push_back({std::move(key), d, std::move(basis)});
    };
    // iterate the finite box and filter exactly
    std::vector<int> idx(rank, 0);
    while (true) {
        emit(idx);
        int g = rank - 1;
        while (g >= 0 && idx[g] == bound[g]) {
            idx[g] = 0;
            --g;
        }
        if (g < 0)
            break;
        ++idx[g];
    }
    std::sort(out.begin(), out.end(), [](const GradedSlot& a, const GradedSlot& b) {
        if (a.key.q() != b.key.q())
            return a.key.q() < b.key.q();
        return b.key.counts() < a.key.counts(); // within q: decreasing lex
    });
    return out;
}

std::vector<GradedSlot> enumerate_zero_slots(const Algebra& a, const std::vector<Scalar>& weights) {
    return enumerate_slots(a, weights, Scalar(0));
}

std::vector<GradedSlot> enumerate_bounded_slots(const Algebra& a, int bound) {
    if (bound < 0)
        throw std::invalid_argument("enumerate_bounded_slots: negative bound");
    const int rank = a.rank();
    // multiplicities are capped by the Vandermonde cost alone
    std::vector<int> cap(rank, 0);
    for (int g = 0; g < rank; ++g) {
        int c = 0;
        while (binom2(c + 1) <= Scalar(bound))
            ++c;
        cap[g] = c;
    }
    std::vector<GradedSlot> out;
    std::vector<int> idx(rank, 0);
    while (true) {
        ComponentKey key{std::vector<int>(idx)};
        for (int d = vandermonde_degree(key); d <= bound; ++d) {
            auto basis = antisym_basis(key, d);
            if (!basis.empty())
                out.push_back({key, d, std::move(basis)});
        }
        int g = rank - 1;
        while (g >= 0 && idx[g] == cap[g]) {
            idx[g] = 0;
            --g;
        }
        if (g < 0)
            break;
        ++idx[g];
    }
    std::sort(out.begin(), out.end(), [](const GradedSlot& a, const GradedSlot& b) {
        if (a.key.q() != b.key.q())
            return a.key.q() < b.key.q();
        if (a.key != b.key)
            return b.key.counts() < a.key.counts();
        return a.degree < b.degree;
    });
    return out;
}

SlotSpace::SlotSpace(int q, int rank, std::vector<GradedSlot> slots)
    : q_(q), rank_(rank), dim_(0), slots_(std::move(slots)) {
    for (const auto& s : slots_) {
        if (s.key.q() != q_)
            throw std::invalid_argument("SlotSpace: slot of wrong degree");
        offsets_.push_back(dim_);
        dim_ += static_cast<int>(s.basis.size());
    }
}

std::vector<Scalar> SlotSpace::coordinates_impl(const Cochain& g, bool* leaked) const {
    if (g.q() != q_ && !g.is_zero())
        throw std::invalid_argument("SlotSpace::coordinates: cochain degree mismatch");
    std::vector<Scalar> out(dim_);
    for (const auto& [key, value] : g.components()) {
        // homogeneous parts must match slots (key, degree) exactly
        int lo = 0, hi = value.total_degree();
        for (int d = lo; d <= hi; ++d) {
            Poly part = value.homogeneous_component(d);
            if (part.is_zero())
                continue;
            int slot_index = -1;
            for (std::size_t s = 0; s < slots_.size(); ++s)
                if (slots_[s].key == key && slots_[s].degree == d) {
                    slot_index = static_cast<int>(s);
                    break;
                }
            if (slot_index < 0) {
                if (leaked) {
                    *leaked = true;
                    continue;
                }
                throw std::domain_error("SlotSpace::coordinates: component outside the retained slots");
            }
            const auto& basis = slots_[slot_index].basis;
            // solve for the expansion in the slot basis over monomial coords
            std::map<Monomial, int> monos;
            for (const auto& b : basis)
                for (const auto& [m, c] : b.terms())
                    monos.emplace(m, 0);
            for (const auto& [m, c] : part.terms())
                monos.emplace(m, 0);
            int row = 0;
            for (auto& [m, r] : monos)
                r = row++;
            LinearMap mat(row, static_cast<int>(basis.size()));
            for (std::size_t c = 0; c < basis.size(); ++c)
                for (const auto& [m, coef] : basis[c].terms())
                    mat.at(monos[m], static_cast<int>(c)) = coef;
            std::vector<Scalar> rhs(row);
            for (const auto& [m, coef] : part.terms())
                rhs[monos[m]] = coef;
            auto sol = mat.solve(rhs);
            if (!sol) {
                if (leaked) {
                    *leaked = true;
                    continue;
                }
                throw std::domain_error("SlotSpace::coordinates: component not in the slot basis span");
            }
            for (std::size_t c = 0; c < sol->size(); ++c)
                out[offsets_[slot_index] + static_cast<int>(c)] += (*sol)[c];
        }
    }
    return out;
}

std::vector<Scalar> SlotSpace::coordinates(const Cochain& g) const {
    return coordinates_impl(g, nullptr);
}

std::vector<Scalar> SlotSpace::coordinates_window(const Cochain& g, bool& leaked) const {
    return coordinates_impl(g, &leaked);
}

Cochain SlotSpace::cochain(const std::vector<Scalar>& coords) const {
    if (static_cast<int>(coords.size()) != dim_)
        throw std::invalid_argument("SlotSpace::cochain: coordinate size mismatch");
    Cochain out(q_, rank_);
    for (std::size_t s = 0; s < slots_.size(); ++s) {
        Poly v;
        for (std::size_t b = 0; b < slots_[s].basis.size(); ++b) {
            const Scalar& c = coords[offsets_[s] + static_cast<int>(b)];
            if (!c.is_zero())
                v += c * slots_[s].basis[b];
        }
        if (!v.is_zero()) {
            Poly existing = out.component(slots_[s].key);
            out.set_canonical(slots_[s].key, existing + v);
        }
    }
    return out;
}

Cochain SlotSpace::basis_cochain(int index) const {
    std::vector<Scalar> coords(dim_);
    coords.at(index) = Scalar(1);
    return cochain(coords);
}

LinearMap differential_matrix(const SlotSpace& dom, const SlotSpace& cod, const Algebra& a) {
    LinearMap m(cod.dim(), dom.dim());
    for (int j = 0; j < dom.dim(); ++j)
        m.set_column(j, cod.coordinates(differential(dom.basis_cochain(j), a)));
    return m;
}

LinearMap differential_matrix_window(const SlotSpace& dom, const SlotSpace& cod, const Algebra& a,
                                     bool& leaked) {
    LinearMap m(cod.dim(), dom.dim());
    for (int j = 0; j < dom.dim(); ++j)
        m.set_column(j, cod.coordinates_window(differential(dom.basis_cochain(j), a), leaked));
    return m;
}

} // namespace lcc
