#include "lcc/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace lcc {

VarId VarId::lam(int i) {
    if (i < 1)
        throw std::invalid_argument("VarId: lambda indices are 1-based");
    return VarId(i + 1);
}

int VarId::lam_index() const {
    if (!is_lam())
        throw std::logic_error("VarId: not a lambda variable");
    return code_ - 1;
}

VarId VarId::from_code(int code) {
    if (code < 0)
        throw std::invalid_argument("VarId: negative code");
    return VarId(code);
}

std::string VarId::str() const {
    if (is_del())
        return "d";
    if (is_x())
        return "x";
    return "x" + std::to_string(lam_index());
}

void Monomial::trim() {
    while (!e_.empty() && e_.back() == 0)
        e_.pop_back();
}

Monomial Monomial::var(VarId v, int exp) {
    if (exp < 0)
        throw std::invalid_argument("Monomial: negative exponent");
    Monomial m;
    if (exp > 0) {
        m.e_.assign(v.code() + 1, 0);
        m.e_[v.code()] = exp;
    }
    return m;
}

int Monomial::exponent(VarId v) const {
    int c = v.code();
    return c < static_cast<int>(e_.size()) ? e_[c] : 0;
}

int Monomial::total_degree() const {
    int d = 0;
    for (int e : e_)
        d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial m;
    m.e_.resize(std::max(e_.size(), o.e_.size()), 0);
    for (std::size_t i = 0; i < e_.size(); ++i)
        m.e_[i] += e_[i];
    for (std::size_t i = 0; i < o.e_.size(); ++i)
        m.e_[i] += o.e_[i];
    m.trim();
    return m;
}

bool operator<(const Monomial& a, const Monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db)
        return da < db;
    std::size_t n = std::max(a.e_.size(), b.e_.size());
    for (std::size_t i = 0; i < n; ++i) {
        int ea = i < a.e_.size() ? a.e_[i] : 0;
        int eb = i < b.e_.size() ? b.e_[i] : 0;
        if (ea != eb)
            return ea < eb;
    }
    return false;
}

std::string Monomial::str() const {
    std::string s;
    for (std::size_t i = 0; i < e_.size(); ++i)
        for (int k = 0; k < e_[i]; ++k) {
            if (!s.empty())
                s += "*";
            s += VarId::from_code(static_cast<int>(i)).str();
        }
    return s.empty() ? "1" : s;
}

Poly Poly::constant(const Scalar& c) {
    Poly p;
    p.add_term(Monomial(), c);
    return p;
}

Poly Poly::var(VarId v, int exp) {
    Poly p;
    p.add_term(Monomial::var(v, exp), Scalar(1));
    return p;
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero())
        return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly p;
    for (const auto& [m, c] : terms_)
        p.terms_.emplace(m, -c);
    return p;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly p;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            p.add_term(ma * mb, ca * cb);
    return p;
}

Poly operator*(const Scalar& c, const Poly& p) {
    Poly r;
    if (c.is_zero())
        return r;
    for (const auto& [m, pc] : p.terms_)
        r.terms_.emplace(m, c * pc);
    return r;
}

Poly Poly::pow(int n) const {
    if (n < 0)
        throw std::invalid_argument("Poly: negative power");
    Poly r = Poly::constant(Scalar(1));
    for (int i = 0; i < n; ++i)
        r = r * *this;
    return r;
}

int Poly::total_degree() const {
    if (terms_.empty())
        return -1;
    // graded order: the last term has maximal degree
    return terms_.rbegin()->first.total_degree();
}

Poly Poly::homogeneous_component(int d) const {
    Poly p;
    for (const auto& [m, c] : terms_)
        if (m.total_degree() == d)
            p.terms_.emplace(m, c);
    return p;
}

bool Poly::is_homogeneous() const {
    if (terms_.empty())
        return true;
    int d = terms_.begin()->first.total_degree();
    return terms_.rbegin()->first.total_degree() == d;
}

bool Poly::contains(VarId v) const {
    for (const auto& [m, c] : terms_)
        if (m.exponent(v) > 0)
            return true;
    return false;
}

int Poly::max_lam_index() const {
    int mx = 0;
    for (const auto& [m, c] : terms_) {
        const auto& e = m.exponents();
        for (int i = static_cast<int>(e.size()) - 1; i >= 2; --i)
            if (e[i] > 0) {
                mx = std::max(mx, i - 1);
                break;
            }
    }
    return mx;
}

Scalar Poly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

Poly Poly::substitute(VarId v, const Poly& r) const {
    if (r.contains(v))
        throw std::invalid_argument("Poly::substitute: replacement contains the substituted variable " + v.str());
    return compose({{v, r}});
}

Poly Poly::compose(const std::map<VarId, Poly>& images) const {
    Poly result;
    for (const auto& [m, c] : terms_) {
        Poly term = Poly::constant(c);
        Monomial fixed;
        const auto& e = m.exponents();
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            VarId v = VarId::from_code(static_cast<int>(i));
            auto it = images.find(v);
            if (it == images.end())
                fixed = fixed * Monomial::var(v, e[i]);
            else
                term = term * it->second.pow(e[i]);
        }
        if (!fixed.is_constant()) {
            Poly fp;
            fp.terms_.emplace(fixed, Scalar(1));
            term = term * fp;
        }
        result += term;
    }
    return result;
}

Poly Poly::permute_lambdas(const std::vector<int>& sigma) const {
    Poly result;
    for (const auto& [m, c] : terms_) {
        const auto& e = m.exponents();
        Monomial out;
        out.e_ = e;
        for (std::size_t i = 2; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            int lam = static_cast<int>(i) - 1;
            if (lam <= static_cast<int>(sigma.size()) && sigma[lam - 1] != lam) {
                int target = sigma[lam - 1];
                if (target < 1)
                    throw std::invalid_argument("permute_lambdas: bad permutation image");
                out.e_[i] = 0;
                std::size_t tc = static_cast<std::size_t>(target) + 1;
                if (out.e_.size() <= tc)
                    out.e_.resize(tc + 1, 0);
                out.e_[tc] += e[i];
            }
        }
        out.trim();
        result.add_term(out, c);
    }
    return result;
}

Poly Poly::derivative(VarId v) const {
    Poly result;
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(v);
        if (e == 0)
            continue;
        Monomial out;
        out.e_ = m.exponents();
        out.e_[v.code()] -= 1;
        out.trim();
        result.add_term(out, c * Scalar(e));
    }
    return result;
}

std::optional<Poly> Poly::divide_by_affine(const Poly& f) const {
    if (f.is_zero())
        throw std::invalid_argument("divide_by_affine: zero divisor");
    if (f.total_degree() > 1)
        throw std::invalid_argument("divide_by_affine: divisor of degree > 1");
    if (is_zero())
        return Poly::zero();
    // constant divisor
    if (f.total_degree() == 0)
        return f.terms_.begin()->second.reciprocal() * *this;
    // pick the lowest-code variable with a linear term in f
    VarId pivot = VarId::del();
    Scalar lead(0);
    for (const auto& [m, c] : f.terms_) {
        if (m.total_degree() == 1) {
            const auto& e = m.exponents();
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] == 1) {
                    pivot = VarId::from_code(static_cast<int>(i));
                    lead = c;
                    break;
                }
            break; // terms are in graded order: first degree-1 term has the lowest code
        }
    }
    Poly rem = *this;
    Poly quot;
    Scalar inv = lead.reciprocal();
    while (true) {
        // highest pivot-degree term of rem
        int top = 0;
        for (const auto& [m, c] : rem.terms_)
            top = std::max(top, m.exponent(pivot));
        if (top == 0)
            break;
        // t = (coefficient of pivot^top in rem) * pivot^(top-1) / lead
        Poly t;
        for (const auto& [m, c] : rem.terms_) {
            if (m.exponent(pivot) != top)
                continue;
            Monomial out;
            out.e_ = m.exponents();
            out.e_[pivot.code()] = top - 1;
            out.trim();
            t.add_term(out, c * inv);
        }
        quot += t;
        rem -= t * f;
    }
    if (!rem.is_zero())
        return std::nullopt;
    return quot;
}

std::string Poly::str() const {
    if (terms_.empty())
        return "0";
    std::string s;
    // decreasing graded-lex order
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Scalar& c = it->second;
        bool neg = c.is_negative();
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        Scalar mag = c.abs();
        std::string mono = it->first.str();
        if (mono == "1")
            s += mag.str();
        else if (mag == Scalar(1))
            s += mono;
        else
            s += mag.str() + "*" + mono;
    }
    return s;
}

Poly lambda_sum(int q) {
    Poly p;
    for (int i = 1; i <= q; ++i)
        p += Poly::var(VarId::lam(i));
    return p;
}

} // namespace lcc
