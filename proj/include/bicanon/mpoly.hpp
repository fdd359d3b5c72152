/*
   Copyright 2026 The bicanon Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef BICANON_MPOLY_HPP
#define BICANON_MPOLY_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"
#include "errors.hpp"

namespace bicanon {

enum class VarRole { geometric, parameter };

/// Ordered variable names with their role. Polynomials sharing a table can
/// be combined; the order also fixes the term order used for printing.
class VarTable {
public:
    struct Entry {
        std::string name;
        VarRole role;
        friend bool operator==(const Entry &, const Entry &) = default;
    };

    VarTable() = default;
    explicit VarTable(std::vector<Entry> entries) : entries_(std::move(entries)) {
        for (std::size_t i = 0; i < entries_.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (entries_[i].name == entries_[j].name)
                    throw invariant_error("duplicate variable name '" + entries_[i].name + "'");
    }

    /// w y z W Y Z (geometric) followed by A B C D E F alpha (parameters).
    static const std::shared_ptr<const VarTable> &standard() {
        static const auto table = std::make_shared<const VarTable>(standard_entries());
        return table;
    }

    /// The standard table extended with extra parameter names, or the shared
    /// standard table itself when nothing needs adding.
    static std::shared_ptr<const VarTable> with_parameters(const std::vector<std::string> &params) {
        auto entries = standard_entries();
        bool added = false;
        for (const auto &p : params) {
            if (std::none_of(entries.begin(), entries.end(), [&](const Entry &e) { return e.name == p; })) {
                entries.push_back({p, VarRole::parameter});
                added = true;
            }
        }
        if (!added) return standard();
        return std::make_shared<const VarTable>(std::move(entries));
    }

    std::size_t size() const { return entries_.size(); }
    const std::string &name(std::size_t i) const { return entries_.at(i).name; }
    VarRole role(std::size_t i) const { return entries_.at(i).role; }
    bool is_parameter(std::size_t i) const { return role(i) == VarRole::parameter; }

    std::optional<std::size_t> find(std::string_view name) const {
        for (std::size_t i = 0; i < entries_.size(); ++i)
            if (entries_[i].name == name) return i;
        return std::nullopt;
    }
    std::size_t index(std::string_view name) const {
        if (auto i = find(name)) return *i;
        throw schema_error("unknown variable '" + std::string(name) + "'");
    }

    friend bool operator==(const VarTable &, const VarTable &) = default;

private:
    static std::vector<Entry> standard_entries() {
        std::vector<Entry> e;
        for (const char *g : {"w", "y", "z", "W", "Y", "Z"}) e.push_back({g, VarRole::geometric});
        for (const char *p : {"A", "B", "C", "D", "E", "F", "alpha"}) e.push_back({p, VarRole::parameter});
        return e;
    }

    std::vector<Entry> entries_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;
using Exponent = std::vector<std::uint16_t>;

inline unsigned total_degree(const Exponent &e) {
    unsigned d = 0;
    for (auto x : e) d += x;
    return d;
}

/// Graded lexicographic order, largest first: higher total degree wins, ties
/// broken by the first differing exponent in table order.
struct GrlexGreater {
    bool operator()(const Exponent &a, const Exponent &b) const {
        const unsigned da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db;
        return a > b;
    }
};

namespace detail {
inline unsigned &degree_cap_ref() {
    thread_local unsigned cap = 64;
    return cap;
}
} // namespace detail

/// Total-degree cap for intermediate polynomials on this thread (default 64).
inline unsigned degree_cap() { return detail::degree_cap_ref(); }

/// Temporarily changes the degree cap for the current thread.
class DegreeCapScope {
public:
    explicit DegreeCapScope(unsigned cap) : saved_(detail::degree_cap_ref()) { detail::degree_cap_ref() = cap; }
    ~DegreeCapScope() { detail::degree_cap_ref() = saved_; }
    DegreeCapScope(const DegreeCapScope &) = delete;
    DegreeCapScope &operator=(const DegreeCapScope &) = delete;

private:
    unsigned saved_;
};

/// Sparse multivariate polynomial over Q(zeta8). Terms are kept in graded
/// lexicographic order, largest first; no zero coefficient is ever stored.
class MPoly {
public:
    using TermMap = std::map<Exponent, FieldElem, GrlexGreater>;

    MPoly() : MPoly(VarTable::standard()) {}
    explicit MPoly(VarTablePtr vars) : vars_(std::move(vars)) {}

    static MPoly constant(VarTablePtr vars, const FieldElem &c) {
        MPoly p(vars);
        if (!c.is_zero()) p.terms_.emplace(Exponent(p.vars_->size(), 0), c);
        return p;
    }
    static MPoly variable(VarTablePtr vars, std::size_t index) {
        Exponent e(vars->size(), 0);
        e.at(index) = 1;
        return monomial(std::move(vars), std::move(e), FieldElem(1));
    }
    static MPoly variable(VarTablePtr vars, std::string_view name) {
        const auto i = vars->index(name);
        return variable(std::move(vars), i);
    }
    static MPoly monomial(VarTablePtr vars, Exponent e, const FieldElem &c) {
        if (e.size() != vars->size()) throw invariant_error("exponent vector length does not match variable table");
        MPoly p(std::move(vars));
        if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
        p.check_degree();
        return p;
    }

    const VarTablePtr &vars() const { return vars_; }
    const TermMap &terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && bicanon::total_degree(terms_.begin()->first) == 0);
    }
    /// Constant term value; only meaningful when is_constant().
    FieldElem constant_value() const {
        if (terms_.empty()) return FieldElem(0);
        if (!is_constant()) throw invariant_error("polynomial is not constant");
        return terms_.begin()->second;
    }

    const Exponent &leading_exponent() const {
        if (terms_.empty()) throw invariant_error("leading term of zero polynomial");
        return terms_.begin()->first;
    }
    const FieldElem &leading_coefficient() const {
        if (terms_.empty()) throw invariant_error("leading term of zero polynomial");
        return terms_.begin()->second;
    }

    unsigned total_degree() const { return terms_.empty() ? 0 : bicanon::total_degree(terms_.begin()->first); }
    unsigned degree_in(std::size_t var) const {
        unsigned d = 0;
        for (const auto &[e, c] : terms_) d = std::max<unsigned>(d, e[var]);
        return d;
    }
    bool depends_on(std::size_t var) const { return degree_in(var) > 0; }
    /// Total degree counted over the given variables only.
    unsigned degree_in(std::initializer_list<std::size_t> vs) const {
        unsigned d = 0;
        for (const auto &[e, c] : terms_) {
            unsigned s = 0;
            for (auto v : vs) s += e[v];
            d = std::max(d, s);
        }
        return d;
    }

    FieldElem coefficient(const Exponent &e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? FieldElem(0) : it->second;
    }

    /// Coefficient of prod v_k^{d_k} viewed as a polynomial in the remaining
    /// variables.
    MPoly coefficient_of(const std::vector<std::pair<std::size_t, unsigned>> &powers) const {
        MPoly out(vars_);
        for (const auto &[e, c] : terms_) {
            bool match = true;
            for (auto [v, d] : powers) match = match && e[v] == d;
            if (!match) continue;
            Exponent rest = e;
            for (auto [v, d] : powers) rest[v] = 0;
            out.add_term(rest, c);
        }
        return out;
    }

    /// Componentwise minimum of all exponents (the monomial content).
    Exponent min_exponent() const {
        Exponent m(vars_->size(), 0);
        if (terms_.empty()) return m;
        m = terms_.begin()->first;
        for (const auto &[e, c] : terms_)
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
        return m;
    }

    void add_term(const Exponent &e, const FieldElem &c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MPoly operator-() const {
        MPoly r(vars_);
        for (const auto &[e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
        return r;
    }
    MPoly &operator+=(const MPoly &o) {
        require_same_table(o);
        for (const auto &[e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MPoly &operator-=(const MPoly &o) {
        require_same_table(o);
        for (const auto &[e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    MPoly &operator*=(const FieldElem &s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto &[e, c] : terms_) c *= s;
        return *this;
    }
    friend MPoly operator+(MPoly a, const MPoly &b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly &b) { return a -= b; }
    friend MPoly operator*(MPoly a, const FieldElem &s) { return a *= s; }
    friend MPoly operator*(const FieldElem &s, MPoly a) { return a *= s; }

    friend MPoly operator*(const MPoly &a, const MPoly &b) {
        a.require_same_table(b);
        MPoly r(a.vars_);
        if (a.is_zero() || b.is_zero()) return r;
        if (bicanon::total_degree(a.leading_exponent()) + bicanon::total_degree(b.leading_exponent()) > degree_cap())
            throw degree_overflow("product of degree " +
                                  std::to_string(a.total_degree() + b.total_degree()) + " exceeds cap " +
                                  std::to_string(degree_cap()));
        Exponent e(a.vars_->size());
        for (const auto &[ea, ca] : a.terms_)
            for (const auto &[eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
                r.add_term(e, ca * cb);
            }
        return r;
    }
    MPoly &operator*=(const MPoly &o) { return *this = *this * o; }

    MPoly pow(unsigned n) const {
        MPoly result = constant(vars_, FieldElem(1));
        MPoly base = *this;
        while (n) {
            if (n & 1U) result *= base;
            n >>= 1U;
            if (n) base *= base;
        }
        return result;
    }

    /// Multiplies by the monomial x^e.
    MPoly shifted(const Exponent &e) const {
        MPoly r(vars_);
        for (const auto &[ex, c] : terms_) {
            Exponent s = ex;
            for (std::size_t i = 0; i < s.size(); ++i) s[i] = static_cast<std::uint16_t>(s[i] + e[i]);
            r.terms_.emplace(std::move(s), c);
        }
        r.check_degree();
        return r;
    }
    /// Divides by the monomial x^e; every term must be divisible.
    MPoly unshifted(const Exponent &e) const {
        MPoly r(vars_);
        for (const auto &[ex, c] : terms_) {
            Exponent s = ex;
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (s[i] < e[i]) throw invariant_error("monomial does not divide polynomial");
                s[i] = static_cast<std::uint16_t>(s[i] - e[i]);
            }
            r.terms_.emplace(std::move(s), c);
        }
        return r;
    }

    /// Formal partial derivative.
    MPoly derivative(std::size_t var) const {
        MPoly r(vars_);
        for (const auto &[e, c] : terms_) {
            if (e[var] == 0) continue;
            Exponent d = e;
            --d[var];
            r.add_term(d, c * FieldElem(static_cast<long>(e[var])));
        }
        return r;
    }

    /// Quotient r with p = q*r, or nullopt. For exact division the leading
    /// term of every intermediate remainder must be divisible by LT(q).
    friend std::optional<MPoly> try_divide(const MPoly &p, const MPoly &q) {
        return divide_impl(p, q, nullptr);
    }

    /// Exact division; throws indivisible_error carrying the remainder.
    friend MPoly exact_divide(const MPoly &p, const MPoly &q) {
        MPoly rem(p.vars_);
        if (auto r = divide_impl(p, q, &rem)) return *r;
        throw indivisible_error("polynomial is not divisible by " + q.to_string(), rem.to_string());
    }

    friend bool operator==(const MPoly &a, const MPoly &b) {
        return (a.vars_ == b.vars_ || *a.vars_ == *b.vars_) && a.terms_ == b.terms_;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto &[e, c] : terms_) {
            std::string mono;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (!e[i]) continue;
                if (!mono.empty()) mono += '*';
                mono += vars_->name(i);
                if (e[i] > 1) mono += '^' + std::to_string(e[i]);
            }
            FieldElem coef = c;
            bool negative = false;
            // A single negative coordinate prints as a subtraction.
            int nonzero = 0;
            for (std::size_t k = 0; k < 4; ++k) nonzero += !c[k].is_zero();
            if (nonzero == 1) {
                for (std::size_t k = 0; k < 4; ++k)
                    if (!c[k].is_zero() && c[k].sign() < 0) negative = true;
                if (negative) coef = -c;
            }
            std::string cs = coef.to_expression();
            if (nonzero > 1) cs = '(' + cs + ')';
            if (first) {
                if (negative) os << '-';
            } else {
                os << (negative ? " - " : " + ");
            }
            first = false;
            if (mono.empty()) {
                os << cs;
            } else if (coef.is_one()) {
                os << mono;
            } else {
                os << cs << '*' << mono;
            }
        }
        return os.str();
    }

    friend std::ostream &operator<<(std::ostream &os, const MPoly &p) { return os << p.to_string(); }

    void require_same_table(const MPoly &o) const {
        if (vars_ != o.vars_ && !(*vars_ == *o.vars_))
            throw invariant_error("polynomials over different variable tables");
    }

private:
    void check_degree() const {
        if (!terms_.empty() && total_degree() > degree_cap())
            throw degree_overflow("polynomial of degree " + std::to_string(total_degree()) + " exceeds cap " +
                                  std::to_string(degree_cap()));
    }

    static bool divides(const Exponent &d, const Exponent &e) {
        for (std::size_t i = 0; i < d.size(); ++i)
            if (d[i] > e[i]) return false;
        return true;
    }

    static std::optional<MPoly> divide_impl(const MPoly &p, const MPoly &q, MPoly *remainder_out) {
        p.require_same_table(q);
        if (q.is_zero()) throw division_by_zero("polynomial division by zero");
        MPoly quotient(p.vars_);
        MPoly rem = p;
        const Exponent &lq = q.leading_exponent();
        const FieldElem lq_inv = q.leading_coefficient().inverse();
        Exponent step(p.vars_->size());
        while (!rem.is_zero()) {
            const Exponent &lr = rem.leading_exponent();
            if (!divides(lq, lr)) {
                if (remainder_out) *remainder_out = std::move(rem);
                return std::nullopt;
            }
            for (std::size_t i = 0; i < step.size(); ++i) step[i] = static_cast<std::uint16_t>(lr[i] - lq[i]);
            const FieldElem c = rem.leading_coefficient() * lq_inv;
            quotient.add_term(step, c);
            for (const auto &[e, qc] : q.terms_) {
                Exponent s = e;
                for (std::size_t i = 0; i < s.size(); ++i) s[i] = static_cast<std::uint16_t>(s[i] + step[i]);
                rem.add_term(s, -(qc * c));
            }
        }
        return quotient;
    }

    VarTablePtr vars_;
    TermMap terms_;
};

inline MPoly partial_derivative(const MPoly &p, std::size_t var) { return p.derivative(var); }

} // namespace bicanon

#endif
