#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "invariants.hpp"
#include "jets.hpp"
#include "random.hpp"
#include "report.hpp"
#include "roots.hpp"
#include "vecfields.hpp"

namespace symcart {

/// Everything derived from a validated pair.
struct PairContext {
    SymmetricPair pair;
    RestrictedRootSystem roots;
    WeylGroup weyl;
    InvariantChart chart;
};

inline PairContext analyze(SymmetricPair pair, std::uint64_t seed = 0) {
    PairContext c;
    c.roots = restricted_roots(pair, seed);
    c.weyl = weyl_group(c.roots, pair.kappa_on_cartan());
    c.chart = invariant_chart(c.roots, c.weyl, pair.kappa_on_cartan());
    c.pair = std::move(pair);
    return c;
}

/// Nonzero real point of a on which some but as few roots as possible vanish.
/// Candidates are the canonical kernel vectors of each root's real and
/// imaginary parts. Absent when every root has trivial real kernel.
inline std::optional<Vector> singular_point(const RestrictedRootSystem& sys) {
    const std::size_t l = sys.rank;
    std::optional<Vector> best;
    std::size_t best_count = 0;
    for (const auto& r : sys.roots) {
        ScalarMatrix m(2, l, Scalar(0));
        for (std::size_t k = 0; k < l; ++k) {
            m(0, k) = Scalar(r.functional[k].re());
            m(1, k) = Scalar(r.functional[k].im());
        }
        for (const auto& v : kernel(m)) {
            std::size_t count = 0;
            for (const auto& s : sys.roots)
                if (s(v).is_zero()) ++count;
            if (!best || count < best_count) {
                best = v;
                best_count = count;
            }
        }
    }
    return best;
}

/// A regular point with small integer coordinates.
inline Vector regular_point(const InvariantChart& chart, Sampler& s) {
    for (;;) {
        Vector x = s.point(chart.rank, 5);
        if (!chart.phi.evaluate(x).is_zero()) return x;
    }
}

struct SuiteOptions {
    std::uint64_t seed = 0;
    std::size_t fields = 50;          // random invariant fields, degree <= field_degree
    unsigned field_degree = 8;
    std::size_t derivations = 25;     // random phi, degree <= derivation_degree
    unsigned derivation_degree = 4;
    std::size_t jet_pairs = 100;
    std::size_t gradient_pairs = 50;
    std::size_t zero_set_points = 100;
};

namespace suite_detail {

inline std::string count_str(std::size_t n, const char* what) { return std::to_string(n) + " " + what; }

inline std::string structure(const PairContext& c, bool& ok) {
    SymmetricPair copy = c.pair;
    copy.algebra.validate();
    validate_pair_structure(copy);
    validate_cartan(copy);
    ok = true;
    return "dim g = " + std::to_string(copy.dim()) + ", dim h = " + std::to_string(copy.h_basis.size()) +
           ", dim q = " + std::to_string(copy.q_basis.size()) + ", rank " + std::to_string(copy.rank());
}

inline std::string bookkeeping(const PairContext& c, bool& ok) {
    const auto& sys = c.roots;
    std::size_t total = sys.centralizer_dim + sys.multiplicity_sum();
    ok = total == c.pair.dim() && permutes_roots(c.weyl, sys);
    ScalarMatrix id = scalar_identity(sys.rank);
    for (const auto& g : c.weyl.generators) ok = ok && g * g == id;
    return "|roots| = " + std::to_string(sys.size()) + ", |W| = " + std::to_string(c.weyl.order()) +
           ", dim z(a) + sum mult = " + std::to_string(total);
}

inline std::string degrees(const PairContext& c, bool& ok) {
    unsigned long prod = 1;
    std::string ds;
    for (unsigned d : c.chart.degrees) {
        prod *= d;
        ds += (ds.empty() ? "" : ",") + std::to_string(d);
    }
    ok = prod == c.weyl.order() && !jacobian_determinant(c.chart.generators, c.chart.rank).is_zero();
    for (const auto& p : c.chart.generators) ok = ok && is_invariant(p, c.weyl);
    return "degrees (" + ds + "), product " + std::to_string(prod);
}

inline std::string discriminant(const PairContext& c, bool& ok) {
    const auto& ch = c.chart;
    ok = !ch.gram_constant.is_zero() && ch.gram_det == ch.phi * ch.gram_constant;
    for (const auto& w : c.weyl.elements) ok = ok && compose_linear(ch.phi, w) == ch.phi;
    return "Phi = " + ch.phi.str() + ", c = " + ch.gram_constant.str();
}

inline std::string zero_set(const PairContext& c, const SuiteOptions& o, bool& ok) {
    Sampler s(o.seed + 11);
    std::size_t singular = 0;
    for (std::size_t k = 0; k < o.zero_set_points; ++k) {
        Vector x = s.point(c.chart.rank, 3);
        bool root_vanishes = false;
        for (const auto& r : c.roots.roots) root_vanishes = root_vanishes || r(x).is_zero();
        singular += root_vanishes;
        if (c.chart.phi.evaluate(x).is_zero() != root_vanishes) {
            ok = false;
            return "mismatch at " + vector_str(x);
        }
    }
    return count_str(o.zero_set_points, "points") + ", " + count_str(singular, "singular");
}

inline std::string solomon(const PairContext& c, const SuiteOptions& o, bool& ok) {
    Sampler s(o.seed + 23);
    std::size_t nonzero = 0;
    for (std::size_t k = 0; k < o.fields; ++k) {
        PolyVectorField x = s.invariant_field(c.weyl, o.field_degree);
        nonzero += !x.is_zero();
        SolomonResult r = solomon_decompose(x, c.chart, c.weyl);
        for (const auto& coef : r.coefficients)
            if (!is_invariant(coef, c.weyl)) return ok = false, std::string("non-invariant coefficient");
        if (r.kernel_dim != 0 || !(reassemble(r.coefficients, c.chart.gradients) == x)) {
            ok = false;
            return "round trip failed for field " + std::to_string(k);
        }
    }
    ok = true;
    return count_str(o.fields, "fields") + " (" + std::to_string(nonzero) + " nonzero), unique";
}

inline std::string lifting(const PairContext& c, const SuiteOptions& o, bool& ok) {
    Sampler s(o.seed + 37);
    const auto& ch = c.chart;
    for (std::size_t k = 0; k < o.derivations; ++k) {
        std::vector<MultiPoly> phi;
        for (std::size_t i = 0; i < ch.generators.size(); ++i) phi.push_back(s.invariant(c.weyl, o.derivation_degree));
        PolyVectorField x = reassemble(phi, ch.gradients);
        if (ch.generators.empty()) x = PolyVectorField::zero(ch.rank);
        InvariantDerivation d = induced_derivation(x, ch);
        StabilityResult st = ideal_stable(d, ch);
        if (!st.stable) {
            ok = false;
            return "induced derivation " + std::to_string(k) + " not stable, remainder " + st.remainder.str();
        }
        LiftResult lr = lift_derivation(d, ch);
        if (!std::holds_alternative<Lifted>(lr)) {
            ok = false;
            return "induced derivation " + std::to_string(k) + " not liftable";
        }
        if (!(std::get<Lifted>(lr).phi == phi)) {
            ok = false;
            return "lift of derivation " + std::to_string(k) + " differs from its origin";
        }
    }
    ok = true;
    return count_str(o.derivations, "derivations") + " stable and lifted back exactly";
}

/// D p_i = 1 for one i, other images 0, plus random invariant images:
/// stability and liftability must agree on each.
inline std::string equivalence(const PairContext& c, const SuiteOptions& o, bool& ok) {
    Sampler s(o.seed + 41);
    const auto& ch = c.chart;
    const std::size_t l = ch.generators.size();
    std::vector<InvariantDerivation> cases;
    for (std::size_t i = 0; i < l; ++i) {
        InvariantDerivation d{std::vector<MultiPoly>(l, MultiPoly(ch.rank))};
        d.images[i] = MultiPoly::constant(ch.rank, Scalar(1));
        cases.push_back(std::move(d));
    }
    for (std::size_t k = 0; k < 10; ++k) {
        InvariantDerivation d;
        for (std::size_t i = 0; i < l; ++i) d.images.push_back(s.invariant(c.weyl, 6));
        cases.push_back(std::move(d));
    }
    std::size_t stable = 0;
    for (std::size_t k = 0; k < cases.size(); ++k) {
        bool st = ideal_stable(cases[k], ch).stable;
        bool li = std::holds_alternative<Lifted>(lift_derivation(cases[k], ch));
        stable += st;
        if (st != li) {
            ok = false;
            return "case " + std::to_string(k) + ": stable " + (st ? "true" : "false") + ", liftable " +
                   (li ? "true" : "false");
        }
    }
    ok = true;
    return count_str(cases.size(), "derivations") + ", " + count_str(stable, "stable");
}

inline std::string slice_at(const PairContext& c, const Vector& a, bool& ok) {
    LocalChart lc = local_chart(c.roots, c.weyl, c.chart, a);
    TransitionMatrix t = transition_matrix(c.chart, lc);
    Jet jd = jet_of(t.det, a, default_jet_order(c.chart));
    ok = lc.psi * lc.phi_local == c.chart.phi && !lc.psi.evaluate(a).is_zero() && jd.is_invertible() &&
         !t.det_at_point.is_zero();
    for (std::size_t j = 0; j < c.chart.gradients.size(); ++j) {
        std::vector<MultiPoly> col;
        for (std::size_t i = 0; i < t.m.rows(); ++i) col.push_back(t.m(i, j));
        ok = ok && reassemble(col, lc.gradients) == c.chart.gradients[j];
    }
    return vector_str(a) + ": |roots_a| = " + std::to_string(lc.local.roots.size()) + ", Psi(a) = " +
           lc.psi.evaluate(a).str() + ", det m(a) = " + t.det_at_point.str();
}

inline std::string jets(const PairContext& c, const SuiteOptions& o, bool& ok) {
    Sampler s(o.seed + 53);
    const auto& ch = c.chart;
    const std::size_t n = default_jet_order(ch), l = ch.rank;
    for (std::size_t k = 0; k < o.jet_pairs; ++k) {
        Vector a = s.point(l, 3);
        MultiPoly f = s.polynomial(l, 4), g = s.polynomial(l, 4);
        if (!(jet_of(f * g, a, n) == jet_mul(jet_of(f, a, n), jet_of(g, a, n)))) {
            ok = false;
            return "jet_of not multiplicative for pair " + std::to_string(k);
        }
        Jet jf = jet_of(f, a, n);
        if (jf.is_invertible()) {
            if (!(jet_mul(jf, jet_invert(jf)) == Jet::unit(a, n))) return ok = false, std::string("bad inverse");
        } else {
            bool threw = false;
            try {
                (void)jet_invert(jf);
            } catch (const Error&) {
                threw = true;
            }
            if (!threw) return ok = false, std::string("inverse of a jet with P_0 = 0");
        }
    }
    for (std::size_t k = 0; k < o.gradient_pairs; ++k) {
        Vector a = s.point(l, 3);
        unsigned d = static_cast<unsigned>(s.integer(1, 3));
        MultiPoly h(l);
        while (h.is_zero()) h = s.polynomial(l, d, 3).homogeneous_component(d);
        MultiPoly r = translate(h, scale(a, Scalar(-1)));
        MultiPoly f = s.polynomial(l, 5);
        Jet lhs = jet_gradient_action(r, jet_of(f, a, n), ch.kappa_inv);
        Jet rhs = jet_of(gradient(r, ch.kappa_inv).apply(f), a, lhs.order);
        if (!(lhs == rhs)) {
            ok = false;
            return "gradient action mismatch for pair " + std::to_string(k);
        }
    }
    ok = true;
    return count_str(o.jet_pairs, "product pairs") + ", " + count_str(o.gradient_pairs, "gradient pairs") +
           ", order " + std::to_string(n);
}

}  // namespace suite_detail

/// All per-pair checks.
inline CheckReport verify_pair(const PairContext& c, const SuiteOptions& o = {}) {
    using namespace suite_detail;
    CheckReport rep;
    rep.run("structure", [&](bool& ok) { return structure(c, ok); });
    rep.run("root-bookkeeping", [&](bool& ok) { return bookkeeping(c, ok); });
    rep.run("chevalley-degrees", [&](bool& ok) { return degrees(c, ok); });
    rep.run("gram-discriminant", [&](bool& ok) { return discriminant(c, ok); });
    rep.run("zero-set", [&](bool& ok) { return zero_set(c, o, ok); });
    rep.run("solomon", [&](bool& ok) { return solomon(c, o, ok); });
    rep.run("lift-forward-backward", [&](bool& ok) { return lifting(c, o, ok); });
    rep.run("stable-iff-liftable", [&](bool& ok) { return equivalence(c, o, ok); });
    Sampler s(o.seed + 67);
    rep.run("slice-origin", [&](bool& ok) { return slice_at(c, Vector(c.chart.rank, Scalar(0)), ok); });
    rep.run("slice-regular", [&](bool& ok) { return slice_at(c, regular_point(c.chart, s), ok); });
    if (auto sp = singular_point(c.roots))
        rep.run("slice-singular", [&](bool& ok) { return slice_at(c, *sp, ok); });
    rep.run("jets", [&](bool& ok) { return jets(c, o, ok); });
    return rep;
}

}  // namespace symcart
