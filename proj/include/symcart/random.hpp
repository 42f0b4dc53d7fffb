#pragma once

#include <random>
#include <vector>

#include "invariants.hpp"

namespace symcart {

/// Seeded source of small exact test data. Values are drawn with plain
/// modular reduction so sequences do not depend on the standard library.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) {
        auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(rng_() % span);
    }

    /// Nonzero Gaussian integer with parts in [-bound, bound]; real with probability 2/3.
    Scalar coefficient(long bound = 3) {
        for (;;) {
            long re = integer(-bound, bound);
            long im = integer(0, 2) == 0 ? integer(-bound, bound) : 0;
            if (re != 0 || im != 0) return Scalar(Rational(re), Rational(im));
        }
    }

    Exponent exponent(std::size_t n, unsigned degree) {
        Exponent e(n, 0);
        for (unsigned k = 0; k < degree && n > 0; ++k) ++e[static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1))];
        return e;
    }

    MultiPoly polynomial(std::size_t n, unsigned max_degree, std::size_t terms = 4) {
        MultiPoly p(n);
        for (std::size_t t = 0; t < terms; ++t)
            p.add_term(exponent(n, static_cast<unsigned>(integer(0, max_degree))), coefficient());
        return p;
    }

    MultiPoly invariant(const WeylGroup& w, unsigned max_degree, std::size_t terms = 4) {
        return reynolds(w, polynomial(w.rank, max_degree, terms));
    }

    PolyVectorField field(std::size_t n, unsigned max_degree, std::size_t terms = 3) {
        std::vector<MultiPoly> c;
        for (std::size_t k = 0; k < n; ++k) c.push_back(polynomial(n, max_degree, terms));
        return PolyVectorField(std::move(c));
    }

    PolyVectorField invariant_field(const WeylGroup& w, unsigned max_degree, std::size_t terms = 3) {
        return reynolds_field(w, field(w.rank, max_degree, terms));
    }

    Vector point(std::size_t n, long bound = 9) {
        Vector v;
        for (std::size_t k = 0; k < n; ++k) v.push_back(Scalar(integer(-bound, bound)));
        return v;
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace symcart
