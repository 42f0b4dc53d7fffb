#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "scalar.hpp"

namespace symcart {

/// Exponent multi-index alpha in N^l.
using Exponent = std::vector<unsigned>;

inline unsigned total_degree(const Exponent& e) {
    return std::accumulate(e.begin(), e.end(), 0u);
}

/// Graded reverse lexicographic order: true iff a > b.
inline bool grevlex_greater(const Exponent& a, const Exponent& b) {
    assert(a.size() == b.size());
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    for (std::size_t k = a.size(); k-- > 0;) {
        if (a[k] != b[k]) return a[k] < b[k];
    }
    return false;
}

struct GrevlexDescending {
    bool operator()(const Exponent& a, const Exponent& b) const { return grevlex_greater(a, b); }
};

inline bool divides(const Exponent& d, const Exponent& e) {
    for (std::size_t k = 0; k < d.size(); ++k)
        if (d[k] > e[k]) return false;
    return true;
}

/// All exponents of total degree d in n variables, in ascending grevlex order.
inline std::vector<Exponent> monomials_of_degree(std::size_t n, unsigned d) {
    std::vector<Exponent> out;
    if (n == 0) {
        if (d == 0) out.emplace_back();
        return out;
    }
    Exponent e(n, 0);
    auto rec = [&](auto&& self, std::size_t k, unsigned left) -> void {
        if (k + 1 == n) {
            e[k] = left;
            out.push_back(e);
            return;
        }
        for (unsigned v = 0; v <= left; ++v) {
            e[k] = v;
            self(self, k + 1, left - v);
        }
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(), [](const Exponent& a, const Exponent& b) { return grevlex_greater(b, a); });
    return out;
}

/// Sparse multivariate polynomial over Q(i). Terms are kept in descending
/// grevlex order and zero coefficients are never stored.
class MultiPoly {
  public:
    using Terms = std::map<Exponent, Scalar, GrevlexDescending>;

    MultiPoly() = default;
    explicit MultiPoly(std::size_t num_vars) : n_(num_vars) {}

    static MultiPoly constant(std::size_t num_vars, const Scalar& c) {
        MultiPoly p(num_vars);
        p.add_term(Exponent(num_vars, 0), c);
        return p;
    }
    static MultiPoly variable(std::size_t num_vars, std::size_t k) {
        if (k >= num_vars) throw Error("variable index out of range");
        Exponent e(num_vars, 0);
        e[k] = 1;
        MultiPoly p(num_vars);
        p.add_term(e, Scalar(1));
        return p;
    }
    static MultiPoly monomial(const Exponent& e, const Scalar& c = Scalar(1)) {
        MultiPoly p(e.size());
        p.add_term(e, c);
        return p;
    }
    /// Linear form sum_k coeffs[k] * x_k.
    static MultiPoly linear(std::span<const Scalar> coeffs) {
        MultiPoly p(coeffs.size());
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            Exponent e(coeffs.size(), 0);
            e[k] = 1;
            p.add_term(e, coeffs[k]);
        }
        return p;
    }

    std::size_t num_vars() const noexcept { return n_; }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
    }
    Scalar constant_term() const { return coefficient(Exponent(n_, 0)); }

    Scalar coefficient(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    /// Total degree; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(total_degree(e)));
        return d;
    }
    int min_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int t = static_cast<int>(total_degree(e));
            if (d < 0 || t < d) d = t;
        }
        return d;
    }
    bool is_homogeneous() const { return terms_.empty() || degree() == min_degree(); }

    const Exponent& leading_exponent() const {
        if (terms_.empty()) throw Error("leading term of zero polynomial");
        return terms_.begin()->first;
    }
    const Scalar& leading_coefficient() const {
        if (terms_.empty()) throw Error("leading term of zero polynomial");
        return terms_.begin()->second;
    }

    void add_term(const Exponent& e, const Scalar& c) {
        if (e.size() != n_) throw Error("exponent arity mismatch");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MultiPoly homogeneous_component(unsigned d) const {
        MultiPoly p(n_);
        for (const auto& [e, c] : terms_)
            if (total_degree(e) == d) p.terms_.emplace(e, c);
        return p;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        check_arity(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        check_arity(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    MultiPoly& operator*=(const Scalar& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator-(MultiPoly a) { return a *= Scalar(-1); }
    friend MultiPoly operator*(MultiPoly a, const Scalar& s) { return a *= s; }
    friend MultiPoly operator*(const Scalar& s, MultiPoly a) { return a *= s; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_arity(b);
        MultiPoly r(a.n_);
        Exponent e(a.n_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t k = 0; k < a.n_; ++k) e[k] = ea[k] + eb[k];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    MultiPoly pow(unsigned k) const {
        MultiPoly r = constant(n_, Scalar(1));
        MultiPoly base = *this;
        while (k) {
            if (k & 1u) r *= base;
            k >>= 1u;
            if (k) base *= base;
        }
        return r;
    }

    MultiPoly derivative(std::size_t k) const {
        MultiPoly r(n_);
        for (const auto& [e, c] : terms_) {
            if (e[k] == 0) continue;
            Exponent f = e;
            --f[k];
            r.add_term(f, c * Scalar(static_cast<long>(e[k])));
        }
        return r;
    }

    Scalar evaluate(std::span<const Scalar> point) const {
        if (point.size() != n_) throw Error("evaluation point arity mismatch");
        Scalar acc(0);
        for (const auto& [e, c] : terms_) {
            Scalar t = c;
            for (std::size_t k = 0; k < n_; ++k)
                for (unsigned j = 0; j < e[k]; ++j) t *= point[k];
            acc += t;
        }
        return acc;
    }

    /// Substitutes x_k -> images[k]; images share a common arity.
    MultiPoly compose(std::span<const MultiPoly> images) const {
        if (images.size() != n_) throw Error("composition arity mismatch");
        std::size_t m = images.empty() ? 0 : images[0].num_vars();
        for (const auto& im : images)
            if (im.num_vars() != m) throw Error("composition images of mixed arity");
        std::vector<std::vector<MultiPoly>> powers(n_);
        auto power = [&](std::size_t k, unsigned j) -> const MultiPoly& {
            auto& cache = powers[k];
            if (cache.empty()) cache.push_back(constant(m, Scalar(1)));
            while (cache.size() <= j) cache.push_back(cache.back() * images[k]);
            return cache[j];
        };
        MultiPoly r(m);
        for (const auto& [e, c] : terms_) {
            MultiPoly t = constant(m, c);
            for (std::size_t k = 0; k < n_; ++k)
                if (e[k]) t *= power(k, e[k]);
            r += t;
        }
        return r;
    }

    MultiPoly conj() const {
        MultiPoly r(n_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.conj());
        return r;
    }

    bool has_real_coefficients() const {
        return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_real(); });
    }

    /// Scaled so the grevlex-leading coefficient is 1 (zero stays zero).
    MultiPoly monic() const {
        if (is_zero()) return *this;
        return *this * leading_coefficient().inverse();
    }

    /// Canonical rendering, e.g. "(3/2 + 1i)*x0^2*x1 - x1 + 4".
    std::string str(std::span<const std::string> names = {}) const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            std::string mono;
            for (std::size_t k = 0; k < n_; ++k) {
                if (e[k] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += k < names.size() ? names[k] : "x" + std::to_string(k);
                if (e[k] > 1) mono += "^" + std::to_string(e[k]);
            }
            std::string term;
            if (mono.empty()) {
                term = c.str();
            } else if (c.is_one()) {
                term = mono;
            } else if (c == Scalar(-1)) {
                term = "-" + mono;
            } else {
                term = c.str() + "*" + mono;
            }
            if (first) {
                out = term;
                first = false;
            } else if (term.front() == '-') {
                out += " - " + term.substr(1);
            } else {
                out += " + " + term;
            }
        }
        return out;
    }

  private:
    void check_arity(const MultiPoly& o) const {
        if (o.n_ != n_) throw Error("polynomial arity mismatch");
    }

    std::size_t n_ = 0;
    Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

struct DivisionResult {
    MultiPoly quotient;
    MultiPoly remainder;
};

/// Multivariate division of f by the single divisor p under grevlex.
/// A single polynomial is a Groebner basis of its ideal, so the remainder
/// vanishes exactly when p divides f.
inline DivisionResult divide(const MultiPoly& f, const MultiPoly& p) {
    if (p.is_zero()) throw Error("division by the zero polynomial");
    if (f.num_vars() != p.num_vars()) throw Error("polynomial arity mismatch");
    const std::size_t n = f.num_vars();
    MultiPoly q(n), r(n), rest = f;
    const Exponent& lp = p.leading_exponent();
    const Scalar inv_lc = p.leading_coefficient().inverse();
    Exponent shift(n);
    while (!rest.is_zero()) {
        Exponent lr = rest.leading_exponent();
        Scalar lc = rest.leading_coefficient();
        if (divides(lp, lr)) {
            for (std::size_t k = 0; k < n; ++k) shift[k] = lr[k] - lp[k];
            MultiPoly t = MultiPoly::monomial(shift, lc * inv_lc);
            q += t;
            rest -= t * p;
        } else {
            MultiPoly t = MultiPoly::monomial(lr, lc);
            r += t;
            rest -= t;
        }
    }
    return {std::move(q), std::move(r)};
}

/// Exact quotient f / p when p divides f, otherwise nullopt.
inline std::optional<MultiPoly> poly_divides(const MultiPoly& f, const MultiPoly& p) {
    auto [q, r] = divide(f, p);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

/// x -> M x + shift for each variable; M given row-major (rows = old vars).
inline MultiPoly substitute_affine(const MultiPoly& f, const std::vector<std::vector<Scalar>>& rows,
                                   const std::vector<Scalar>& shift) {
    const std::size_t n = f.num_vars();
    if (rows.size() != n) throw Error("affine substitution arity mismatch");
    std::size_t m = n == 0 ? 0 : rows[0].size();
    std::vector<MultiPoly> images;
    images.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        MultiPoly im = MultiPoly::linear(rows[k]);
        if (!shift.empty()) im += MultiPoly::constant(m, shift[k]);
        images.push_back(std::move(im));
    }
    return f.compose(images);
}

/// f(x + shift).
inline MultiPoly translate(const MultiPoly& f, const std::vector<Scalar>& shift) {
    const std::size_t n = f.num_vars();
    std::vector<std::vector<Scalar>> id(n, std::vector<Scalar>(n, Scalar(0)));
    for (std::size_t k = 0; k < n; ++k) id[k][k] = Scalar(1);
    return substitute_affine(f, id, shift);
}

}  // namespace symcart
