#include "lcc/algebra.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lcc {

namespace {
const BracketValue kEmptyValue{};

BracketValue normalize_value(BracketValue v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    BracketValue out;
    for (auto& [t, p] : v) {
        if (p.is_zero())
            continue;
        if (!out.empty() && out.back().first == t)
            out.back().second += p;
        else
            out.emplace_back(t, std::move(p));
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const auto& e) { return e.second.is_zero(); }), out.end());
    return out;
}
} // namespace

Algebra::Algebra(std::string name, std::vector<Generator> gens)
    : name_(std::move(name)), generators_(std::move(gens)) {
    std::set<std::string> seen;
    for (const auto& g : generators_)
        if (!seen.insert(g.name).second)
            throw std::invalid_argument("Algebra: duplicate generator name " + g.name);
}

std::optional<int> Algebra::generator_index(const std::string& name) const {
    for (int i = 0; i < rank(); ++i)
        if (generators_[i].name == name)
            return i;
    return std::nullopt;
}

bool Algebra::has_entry(int i, int j) const {
    return entries_.count({i, j}) > 0;
}

const BracketValue& Algebra::bracket(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? kEmptyValue : it->second;
}

void Algebra::set_bracket(int i, int j, BracketValue value) {
    if (i < 0 || i >= rank() || j < 0 || j >= rank())
        throw std::out_of_range("Algebra::set_bracket: bad generator index");
    for (const auto& [t, p] : value) {
        if (t < 0 || t >= rank())
            throw std::out_of_range("Algebra::set_bracket: bad target index");
        if (p.contains(VarId::lam(1)) || p.max_lam_index() > 0)
            throw std::invalid_argument("Algebra::set_bracket: coefficients live in d and x only");
    }
    entries_[{i, j}] = normalize_value(std::move(value));
}

void Algebra::set_virasoro(int idx) {
    if (idx < 0 || idx >= rank())
        throw std::out_of_range("Algebra::set_virasoro: bad generator index");
    virasoro_ = idx;
}

bool operator==(const Algebra& a, const Algebra& b) {
    return a.name_ == b.name_ && a.generators_ == b.generators_ && a.virasoro_ == b.virasoro_ &&
           a.entries_ == b.entries_;
}

Poly skew_transform(const Poly& p) {
    static const std::map<VarId, Poly> images = {
        {VarId::x(), -(Poly::var(VarId::x()) + Poly::var(VarId::del()))}};
    return p.compose(images);
}

BracketValue skew_opposite(const BracketValue& v) {
    BracketValue out;
    out.reserve(v.size());
    for (const auto& [t, p] : v)
        out.emplace_back(t, -skew_transform(p));
    return out;
}

namespace {
// entry(i,j) + skew(entry(j,i)) per target; nonzero residuals are conflicts
std::vector<SkewConflict> pair_residuals(const Algebra& a, int i, int j) {
    std::map<int, Poly> residual;
    for (const auto& [t, p] : a.bracket(i, j))
        residual[t] += p;
    for (const auto& [t, p] : a.bracket(j, i))
        residual[t] += skew_transform(p);
    std::vector<SkewConflict> out;
    for (auto& [t, p] : residual)
        if (!p.is_zero())
            out.push_back({i, j, t, p});
    return out;
}
} // namespace

CompletionResult complete_by_skew(const Algebra& a) {
    CompletionResult res{a, {}};
    const int n = a.rank();
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            bool fwd = a.has_entry(i, j);
            bool bwd = a.has_entry(j, i);
            if (i == j || (fwd && bwd)) {
                auto conflicts = pair_residuals(a, i, j);
                res.conflicts.insert(res.conflicts.end(), conflicts.begin(), conflicts.end());
            } else if (fwd && !bwd) {
                res.algebra.set_bracket(j, i, skew_opposite(a.bracket(i, j)));
            } else if (bwd && !fwd) {
                res.algebra.set_bracket(i, j, skew_opposite(a.bracket(j, i)));
            }
        }
    }
    return res;
}

SkewReport check_skew(const Algebra& a) {
    SkewReport rep;
    const int n = a.rank();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            auto conflicts = pair_residuals(a, i, j);
            rep.violations.insert(rep.violations.end(), conflicts.begin(), conflicts.end());
        }
    return rep;
}

JacobiReport check_jacobi(const Algebra& a) {
    JacobiReport rep;
    const int n = a.rank();
    const Poly lam = Poly::var(VarId::lam(1)); // scratch symbol for lambda
    const Poly mu = Poly::var(VarId::lam(2));  // scratch symbol for mu
    const Poly d = Poly::var(VarId::del());
    for (int ga = 0; ga < n; ++ga)
        for (int gb = 0; gb < n; ++gb)
            for (int gc = 0; gc < n; ++gc) {
                std::map<int, Poly> residual;
                // [a_lam [b_mu c]]: inner coefficient gets x->mu, then the
                // outer nesting shifts its d by lam.
                for (const auto& [k, pk] : a.bracket(gb, gc)) {
                    Poly inner = pk.compose({{VarId::x(), mu}, {VarId::del(), d + lam}});
                    for (const auto& [t, qt] : a.bracket(ga, k))
                        residual[t] += inner * qt.substitute(VarId::x(), lam);
                }
                // -[[a_lam b]_{lam+mu} c]: first-slot polynomial evaluates at
                // d -> -(lam+mu), x -> lam.
                for (const auto& [k, pk] : a.bracket(ga, gb)) {
                    Poly first = pk.compose({{VarId::x(), lam}, {VarId::del(), -(lam + mu)}});
                    for (const auto& [t, qt] : a.bracket(k, gc))
                        residual[t] -= first * qt.substitute(VarId::x(), lam + mu);
                }
                // -[b_mu [a_lam c]]
                for (const auto& [k, pk] : a.bracket(ga, gc)) {
                    Poly inner = pk.compose({{VarId::x(), lam}, {VarId::del(), d + mu}});
                    for (const auto& [t, qt] : a.bracket(gb, k))
                        residual[t] -= inner * qt.substitute(VarId::x(), mu);
                }
                for (auto& [t, p] : residual)
                    if (!p.is_zero())
                        rep.violations.push_back({ga, gb, gc, t, p});
            }
    return rep;
}

WeightInference infer_weights(const Algebra& a, int L) {
    WeightInference out;
    if (L < 0 || L >= a.rank()) {
        out.message = "no designated Virasoro generator";
        return out;
    }
    std::vector<Scalar> weights(a.rank());
    const Monomial md = Monomial::var(VarId::del());
    const Monomial mx = Monomial::var(VarId::x());
    for (int g = 0; g < a.rank(); ++g) {
        const auto& val = a.bracket(L, g);
        bool good = val.size() == 1 && val[0].first == g;
        Scalar delta(0);
        if (good) {
            const Poly& p = val[0].second;
            delta = p.coefficient(mx);
            Poly expected = Poly::var(VarId::del()) + delta * Poly::var(VarId::x());
            good = p.coefficient(md) == Scalar(1) && p == expected;
        }
        if (!good) {
            out.offender = a.generator(g).name;
            out.message = "bracket of the designated generator with " + out.offender +
                          " is not of the primary form (d + W*x) " + out.offender;
            return out;
        }
        weights[g] = delta;
    }
    if (weights[L] != Scalar(2)) {
        out.offender = a.generator(L).name;
        out.message = "designated Virasoro generator must have weight 2, found " + weights[L].str();
        return out;
    }
    out.weights = std::move(weights);
    return out;
}

WeightInference infer_weights(const Algebra& a) {
    if (!a.virasoro()) {
        WeightInference out;
        out.message = "no designated Virasoro generator";
        return out;
    }
    return infer_weights(a, *a.virasoro());
}

namespace {
bool value_in_span(const BracketValue& v, const std::vector<bool>& member) {
    for (const auto& [t, p] : v)
        if (!member[t])
            return false;
    return true;
}

std::vector<bool> member_mask(const Algebra& a, const std::vector<int>& subset) {
    std::vector<bool> member(a.rank(), false);
    for (int g : subset) {
        if (g < 0 || g >= a.rank())
            throw std::out_of_range("subset: bad generator index");
        member[g] = true;
    }
    return member;
}
} // namespace

bool is_subalgebra(const Algebra& a, const std::vector<int>& subset) {
    auto member = member_mask(a, subset);
    for (int i = 0; i < a.rank(); ++i)
        for (int j = 0; j < a.rank(); ++j)
            if (member[i] && member[j] && !value_in_span(a.bracket(i, j), member))
                return false;
    return true;
}

bool is_ideal(const Algebra& a, const std::vector<int>& subset) {
    auto member = member_mask(a, subset);
    for (int i = 0; i < a.rank(); ++i)
        for (int j = 0; j < a.rank(); ++j)
            if ((member[i] || member[j]) && !value_in_span(a.bracket(i, j), member))
                return false;
    return true;
}

Algebra quotient(const Algebra& a, const std::vector<int>& ideal) {
    if (!is_ideal(a, ideal))
        throw std::invalid_argument("quotient: subset is not an ideal");
    auto member = member_mask(a, ideal);
    std::vector<int> newindex(a.rank(), -1);
    std::vector<Generator> gens;
    for (int i = 0; i < a.rank(); ++i)
        if (!member[i]) {
            newindex[i] = static_cast<int>(gens.size());
            gens.push_back(a.generator(i));
        }
    Algebra q(a.name() + "_mod", std::move(gens));
    for (int i = 0; i < a.rank(); ++i) {
        if (member[i])
            continue;
        for (int j = 0; j < a.rank(); ++j) {
            if (member[j] || !a.has_entry(i, j))
                continue;
            BracketValue v;
            for (const auto& [t, p] : a.bracket(i, j))
                if (!member[t])
                    v.emplace_back(newindex[t], p);
            q.set_bracket(newindex[i], newindex[j], std::move(v));
        }
    }
    if (a.virasoro() && !member[*a.virasoro()])
        q.set_virasoro(newindex[*a.virasoro()]);
    return q;
}

namespace {
Poly primary(const Scalar& w) {
    return Poly::var(VarId::del()) + w * Poly::var(VarId::x());
}

Algebra finish(Algebra a) {
    auto res = complete_by_skew(a);
    if (!res.conflicts.empty())
        throw std::logic_error("builtin algebra failed skew completion");
    return res.algebra;
}
} // namespace

Algebra builtin_vir() {
    Algebra a("vir", {{"L", Scalar(2)}});
    a.set_virasoro(0);
    a.set_bracket(0, 0, {{0, primary(Scalar(2))}});
    return finish(a);
}

Algebra builtin_hv() {
    Algebra a("hv", {{"L", Scalar(2)}, {"N", Scalar(1)}});
    a.set_virasoro(0);
    a.set_bracket(0, 0, {{0, primary(Scalar(2))}});
    a.set_bracket(0, 1, {{1, primary(Scalar(1))}});
    return finish(a);
}

Algebra builtin_sv() {
    Algebra a("sv", {{"L", Scalar(2)}, {"Y", Scalar(3, 2)}, {"M", Scalar(1)}});
    a.set_virasoro(0);
    a.set_bracket(0, 0, {{0, primary(Scalar(2))}});
    a.set_bracket(0, 1, {{1, primary(Scalar(3, 2))}});
    a.set_bracket(0, 2, {{2, primary(Scalar(1))}});
    a.set_bracket(1, 1, {{2, primary(Scalar(2))}});
    return finish(a);
}

Algebra builtin_esv() {
    Algebra a("esv", {{"L", Scalar(2)}, {"Y", Scalar(3, 2)}, {"M", Scalar(1)}, {"N", Scalar(1)}});
    a.set_virasoro(0);
    a.set_bracket(0, 0, {{0, primary(Scalar(2))}});
    a.set_bracket(0, 1, {{1, primary(Scalar(3, 2))}});
    a.set_bracket(0, 2, {{2, primary(Scalar(1))}});
    a.set_bracket(0, 3, {{3, primary(Scalar(1))}});
    a.set_bracket(1, 1, {{2, primary(Scalar(2))}});
    a.set_bracket(3, 1, {{1, Poly::constant(Scalar(1))}});
    a.set_bracket(3, 2, {{2, Poly::constant(Scalar(2))}});
    return finish(a);
}

std::optional<Algebra> builtin_algebra(const std::string& name) {
    if (name == "vir")
        return builtin_vir();
    if (name == "hv")
        return builtin_hv();
    if (name == "sv")
        return builtin_sv();
    if (name == "esv")
        return builtin_esv();
    return std::nullopt;
}

} // namespace lcc
