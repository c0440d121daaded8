#include "lcc/cochain.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lcc {

ComponentKey::ComponentKey(std::vector<int> counts) : counts_(std::move(counts)) {
    for (int c : counts_)
        if (c < 0)
            throw std::invalid_argument("ComponentKey: negative multiplicity");
}

ComponentKey ComponentKey::from_tuple(int rank, std::span<const int> tuple) {
    std::vector<int> counts(rank, 0);
    for (int g : tuple) {
        if (g < 0 || g >= rank)
            throw std::out_of_range("ComponentKey: bad generator index");
        ++counts[g];
    }
    return ComponentKey(std::move(counts));
}

int ComponentKey::q() const {
    return std::accumulate(counts_.begin(), counts_.end(), 0);
}

ComponentKey ComponentKey::with(int gen, int delta) const {
    std::vector<int> c = counts_;
    c.at(gen) += delta;
    if (c[gen] < 0)
        throw std::invalid_argument("ComponentKey::with: multiplicity went negative");
    return ComponentKey(std::move(c));
}

bool ComponentKey::contains_any(const std::vector<bool>& mask) const {
    for (std::size_t g = 0; g < counts_.size(); ++g)
        if (counts_[g] > 0 && mask[g])
            return true;
    return false;
}

std::vector<int> ComponentKey::canonical_tuple() const {
    std::vector<int> t;
    for (std::size_t g = 0; g < counts_.size(); ++g)
        t.insert(t.end(), counts_[g], static_cast<int>(g));
    return t;
}

std::string ComponentKey::str(const Algebra& a) const {
    std::string s = "(";
    bool first = true;
    for (int g : canonical_tuple()) {
        if (!first)
            s += ",";
        s += a.generator(g).name;
        first = false;
    }
    return s + ")";
}

int permutation_sign(const std::vector<int>& sigma) {
    int inv = 0;
    for (std::size_t i = 0; i < sigma.size(); ++i)
        for (std::size_t j = i + 1; j < sigma.size(); ++j)
            if (sigma[i] > sigma[j])
                ++inv;
    return inv % 2 ? -1 : 1;
}

std::vector<int> permutation_inverse(const std::vector<int>& sigma) {
    std::vector<int> inv(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i)
        inv[sigma[i] - 1] = static_cast<int>(i) + 1;
    return inv;
}

namespace {
// stable-sort permutation: sigma[i-1] = canonical position of slot i
std::vector<int> sorting_permutation(std::span<const int> tuple) {
    std::vector<int> order(tuple.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return tuple[a] < tuple[b]; });
    std::vector<int> sigma(tuple.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos)
        sigma[order[pos]] = static_cast<int>(pos) + 1;
    return sigma;
}
} // namespace

std::pair<ComponentKey, Poly> canonicalize(int rank, std::span<const int> tuple, const Poly& p) {
    auto sigma = sorting_permutation(tuple);
    int sign = permutation_sign(sigma);
    Poly q = p.permute_lambdas(sigma);
    if (sign < 0)
        q = -q;
    return {ComponentKey::from_tuple(rank, tuple), q};
}

int vandermonde_degree(const ComponentKey& key) {
    int d = 0;
    for (int c : key.counts())
        d += c * (c - 1) / 2;
    return d;
}

namespace {
// non-increasing exponent tuples of the given length summing to total
void partitions_into(int length, int total, int maxpart, std::vector<int>& acc,
                     std::vector<std::vector<int>>& out) {
    if (length == 0) {
        if (total == 0)
            out.push_back(acc);
        return;
    }
    for (int e = std::min(total, maxpart); e >= 0; --e) {
        if (e * length < total)
            break; // remaining slots cannot absorb the total
        acc.push_back(e);
        partitions_into(length - 1, total - e, e, acc, out);
        acc.pop_back();
    }
}

std::vector<std::vector<int>> block_partitions(int length, int total) {
    std::vector<std::vector<int>> out;
    std::vector<int> acc;
    partitions_into(length, total, total, acc, out);
    return out;
}
} // namespace

std::vector<Poly> antisym_basis(const ComponentKey& key, int d) {
    if (d < 0)
        throw std::invalid_argument("antisym_basis: negative degree");
    const int q = key.q();
    const int vdm = vandermonde_degree(key);
    if (d < vdm)
        return {};
    if (q == 0)
        return d == 0 ? std::vector<Poly>{Poly::constant(Scalar(1))} : std::vector<Poly>{};

    // blocks of equal generators: (first 1-based lambda index, size)
    std::vector<std::pair<int, int>> blocks;
    int pos = 1;
    for (int g = 0; g < key.rank(); ++g) {
        int c = key.count(g);
        if (c > 0) {
            blocks.emplace_back(pos, c);
            pos += c;
        }
    }

    Poly vand = Poly::constant(Scalar(1));
    for (const auto& [start, size] : blocks)
        for (int i = 0; i < size; ++i)
            for (int j = i + 1; j < size; ++j)
                vand = vand * (Poly::var(VarId::lam(start + i)) - Poly::var(VarId::lam(start + j)));

    // residual block-symmetric basis: one orbit sum per tuple of
    // non-increasing block exponent vectors with total degree d - vdm
    const int r = d - vdm;
    std::vector<Poly> basis;
    struct Rec {
        const std::vector<std::pair<int, int>>& blocks;
        std::vector<std::vector<int>> current;
        std::vector<Poly>& out;
        const Poly& vand;
        void run(std::size_t b, int remaining) {
            if (b == blocks.size()) {
                if (remaining != 0)
                    return;
                // orbit sum over distinct within-block rearrangements
                Poly sum;
                std::vector<std::vector<std::vector<int>>> orbits;
                for (std::size_t i = 0; i < blocks.size(); ++i) {
                    std::vector<int> e = current[i];
                    std::sort(e.begin(), e.end());
                    std::vector<std::vector<int>> orbit;
                    do {
                        orbit.push_back(e);
                    } while (std::next_permutation(e.begin(), e.end()));
                    orbits.push_back(std::move(orbit));
                }
                std::vector<std::size_t> pick(blocks.size(), 0);
                bool done = false;
                while (!done) {
                    Poly term = Poly::constant(Scalar(1));
                    for (std::size_t i = 0; i < blocks.size(); ++i) {
                        int start = blocks[i].first;
                        const auto& e = orbits[i][pick[i]];
                        for (std::size_t k = 0; k < e.size(); ++k)
                            if (e[k] > 0)
                                term = term * Poly::var(VarId::lam(start + static_cast<int>(k)), e[k]);
                    }
                    sum += term;
                    std::size_t i = 0;
                    for (; i < pick.size(); ++i) {
                        if (++pick[i] < orbits[i].size())
                            break;
                        pick[i] = 0;
                    }
                    done = (i == pick.size());
                }
                out.push_back(vand * sum);
                return;
            }
            for (int part = remaining; part >= 0; --part)
                for (const auto& exps : block_partitions(blocks[b].second, part)) {
                    current.push_back(exps);
                    run(b + 1, remaining - part);
                    current.pop_back();
                }
        }
    };
    Rec rec{blocks, {}, basis, vand};
    rec.run(0, r);
    return basis;
}

Cochain::Cochain(int q, int rank) : q_(q), rank_(rank) {
    if (q < 0 || rank < 0)
        throw std::invalid_argument("Cochain: bad degree or rank");
}

Cochain Cochain::scalar(int rank, const Scalar& value) {
    Cochain c(0, rank);
    if (!value.is_zero())
        c.values_.emplace(ComponentKey::empty(rank), Poly::constant(value));
    return c;
}

void Cochain::add_component(std::span<const int> tuple, const Poly& p) {
    if (static_cast<int>(tuple.size()) != q_)
        throw std::invalid_argument("Cochain::add_component: tuple length != q");
    if (p.is_zero())
        return;
    if (p.max_lam_index() > q_ || p.contains(VarId::del()) || p.contains(VarId::x()))
        throw std::invalid_argument("Cochain::add_component: value must live in x1..xq");
    auto [key, canon] = canonicalize(rank_, tuple, p);
    auto it = values_.find(key);
    if (it == values_.end()) {
        if (!canon.is_zero())
            values_.emplace(key, std::move(canon));
    } else {
        it->second += canon;
        if (it->second.is_zero())
            values_.erase(it);
    }
}

void Cochain::set_canonical(const ComponentKey& key, const Poly& p) {
    if (key.q() != q_ || key.rank() != rank_)
        throw std::invalid_argument("Cochain::set_canonical: key mismatch");
    if (p.is_zero())
        values_.erase(key);
    else
        values_[key] = p;
}

Poly Cochain::component(const ComponentKey& key) const {
    auto it = values_.find(key);
    return it == values_.end() ? Poly::zero() : it->second;
}

Poly Cochain::evaluate(std::span<const int> tuple) const {
    if (static_cast<int>(tuple.size()) != q_)
        throw std::invalid_argument("Cochain::evaluate: tuple length != q");
    ComponentKey key = ComponentKey::from_tuple(rank_, tuple);
    auto it = values_.find(key);
    if (it == values_.end())
        return Poly::zero();
    auto sigma = sorting_permutation(tuple);
    int sign = permutation_sign(sigma);
    Poly p = it->second.permute_lambdas(permutation_inverse(sigma));
    return sign < 0 ? -p : p;
}

bool Cochain::block_antisymmetric() const {
    for (const auto& [key, p] : values_) {
        int pos = 1;
        for (int g = 0; g < key.rank(); ++g) {
            int c = key.count(g);
            for (int i = 0; i + 1 < c; ++i) {
                std::vector<int> swap(q_);
                for (int k = 0; k < q_; ++k)
                    swap[k] = k + 1;
                std::swap(swap[pos + i - 1], swap[pos + i]);
                if (p.permute_lambdas(swap) != -p)
                    return false;
            }
            pos += c;
        }
    }
    return true;
}

Cochain Cochain::operator-() const {
    Cochain c(q_, rank_);
    for (const auto& [k, p] : values_)
        c.values_.emplace(k, -p);
    return c;
}

Cochain& Cochain::operator+=(const Cochain& o) {
    if (o.q_ != q_ || o.rank_ != rank_)
        throw std::invalid_argument("Cochain: degree/rank mismatch in addition");
    for (const auto& [k, p] : o.values_) {
        auto it = values_.find(k);
        if (it == values_.end()) {
            values_.emplace(k, p);
        } else {
            it->second += p;
            if (it->second.is_zero())
                values_.erase(it);
        }
    }
    return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) {
    return *this += -o;
}

Cochain operator*(const Scalar& c, const Cochain& g) {
    Cochain out(g.q_, g.rank_);
    if (c.is_zero())
        return out;
    for (const auto& [k, p] : g.values_)
        out.values_.emplace(k, c * p);
    return out;
}

} // namespace lcc
