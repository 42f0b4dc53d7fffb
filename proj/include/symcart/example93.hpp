#pragma once

#include <string>
#include <vector>

#include "catalog.hpp"
#include "invariants.hpp"
#include "random.hpp"
#include "report.hpp"

namespace symcart {

/// sl(3,R)/so(2,1) with the printed matrices. The knobs sigma_sign and v
/// exist so negative controls can perturb the data.
struct Example93Data {
    SymmetricPair pair;
    std::vector<ScalarMatrix> a_basis;      // x and y directions of a
    std::vector<ScalarMatrix> mc_witnesses;  // centralizer of a_C in H_C
    std::vector<ScalarMatrix> m_real;        // centralizer of a in H
    std::vector<ScalarMatrix> qm_shape;      // x, y, z directions of q^M
    ScalarMatrix v;
    Scalar sigma_sign{1};  // group involution g -> sign * I21 g^{-T} I21
};

inline ScalarMatrix matrix3(std::initializer_list<std::initializer_list<Scalar>> rows) {
    ScalarMatrix m(3, 3, Scalar(0));
    std::size_t r = 0;
    for (const auto& row : rows) {
        std::size_t c = 0;
        for (const auto& v : row) m(r, c++) = v;
        ++r;
    }
    return m;
}

inline Example93Data example93_data() {
    const Scalar i = Scalar::i(), mi = -Scalar::i();
    Example93Data d;
    d.pair = make_sl3_so21();
    d.a_basis = {matrix3({{1, 0, 0}, {0, -2, 0}, {0, 0, 1}}), matrix3({{0, 0, 1}, {0, 0, 0}, {-1, 0, 0}})};
    d.mc_witnesses = {
        matrix3({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
        matrix3({{-1, 0, 0}, {0, 1, 0}, {0, 0, -1}}),
        matrix3({{0, 0, i}, {0, -1, 0}, {mi, 0, 0}}),
        matrix3({{0, 0, mi}, {0, -1, 0}, {i, 0, 0}}),
    };
    d.m_real = {d.mc_witnesses[0], d.mc_witnesses[1]};
    d.qm_shape = {matrix3({{1, 0, 0}, {0, 0, 0}, {0, 0, -1}}), matrix3({{0, 0, 1}, {0, 0, 0}, {-1, 0, 0}}),
                  matrix3({{0, 0, 0}, {0, 1, 0}, {0, 0, -1}})};
    d.v = matrix3({{1, 0, 0}, {0, 0, 0}, {0, 0, -1}});
    return d;
}

namespace ex93_detail {

inline Vector flatten(const ScalarMatrix& m) {
    Vector v;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
    return v;
}

/// Subspace of q fixed by conjugation under every group element, as flattened matrices.
inline std::vector<Vector> fixed_in_q(const Example93Data& d, const std::vector<ScalarMatrix>& group) {
    const MatrixBasis& rep = *d.pair.representation;
    std::vector<ScalarMatrix> q;
    for (const auto& x : d.pair.q_basis) q.push_back(rep.element(x));
    std::vector<Vector> cols(q.size());
    for (const auto& g : group) {
        ScalarMatrix gi = *inverse(g);
        for (std::size_t k = 0; k < q.size(); ++k) {
            Vector part = flatten(g * q[k] * gi - q[k]);
            cols[k].insert(cols[k].end(), part.begin(), part.end());
        }
    }
    ScalarMatrix sys = from_columns(cols, cols.empty() ? 0 : cols[0].size());
    std::vector<Vector> out;
    for (const auto& c : kernel(sys)) {
        ScalarMatrix m(3, 3, Scalar(0));
        for (std::size_t k = 0; k < q.size(); ++k) m = m + c[k] * q[k];
        out.push_back(flatten(m));
    }
    return out;
}

inline std::vector<Vector> flatten_all(const std::vector<ScalarMatrix>& ms) {
    std::vector<Vector> out;
    for (const auto& m : ms) out.push_back(flatten(m));
    return out;
}

}  // namespace ex93_detail

inline CheckReport verify_example93(const Example93Data& d, std::uint64_t seed = 0) {
    using namespace ex93_detail;
    CheckReport rep;
    const SymmetricPair& p = d.pair;
    const ScalarMatrix j = i21();

    rep.run("dimensions", [&](bool& ok) {
        ok = p.h_basis.size() == 3 && p.q_basis.size() == 5;
        return "dim h = " + std::to_string(p.h_basis.size()) + ", dim q = " + std::to_string(p.q_basis.size());
    });

    rep.run("cartan-subspace", [&](bool& ok) {
        const MatrixBasis& mb = *p.representation;
        SymmetricPair probe = p;
        probe.cartan.clear();
        for (const auto& a : d.a_basis) probe.cartan.push_back(mb.coordinates(a));
        validate_cartan(probe, seed);
        ok = same_span(probe.cartan, p.cartan, p.dim());
        return std::string(ok ? "abelian, semisimple, self-centralizing" : "printed a differs from the catalog a");
    });

    rep.run("mc-centralizer", [&](bool& ok) {
        std::string w;
        for (std::size_t k = 0; k < d.mc_witnesses.size() && ok; ++k) {
            const ScalarMatrix& g = d.mc_witnesses[k];
            auto gi = inverse(g);
            if (!gi || !(d.sigma_sign * (j * gi->transpose() * j) == g)) {
                ok = false;
                w = "witness " + std::to_string(k) + " is not a fixed point of the involution: " + matrix_str(g);
            } else if (!(determinant(g) == Scalar(1))) {
                ok = false;
                w = "witness " + std::to_string(k) + " has det " + determinant(g).str();
            } else {
                for (const auto& a : d.a_basis)
                    if (!(g * a * *gi == a)) {
                        ok = false;
                        w = "witness " + std::to_string(k) + " does not centralize " + matrix_str(a);
                    }
            }
        }
        if (ok) {
            std::vector<Vector> fixed = fixed_in_q(d, d.mc_witnesses);
            if (!same_span(fixed, flatten_all(d.a_basis), 9)) {
                ok = false;
                w = "fixed space of M_C in q_C has dim " + std::to_string(fixed.size()) + ", expected a_C";
            } else {
                w = std::to_string(d.mc_witnesses.size()) + " witnesses valid; q_C^{M_C} = a_C";
            }
        }
        return w;
    });

    rep.run("qM-shape", [&](bool& ok) {
        std::vector<Vector> fixed = fixed_in_q(d, d.m_real);
        ok = fixed.size() == 3 && same_span(fixed, flatten_all(d.qm_shape), 9);
        return "dim q^M = " + std::to_string(fixed.size());
    });

    rep.run("v-orthogonal-to-a", [&](bool& ok) {
        const MatrixBasis& mb = *p.representation;
        std::vector<Vector> qm = fixed_in_q(d, d.m_real);
        std::vector<Vector> with_v = qm;
        with_v.push_back(flatten(d.v));
        if (!in_q(p, mb.coordinates(d.v)) || !same_span(qm, with_v, 9)) {
            ok = false;
            return std::string("v is not in q^M");
        }
        std::string w = "kappa(v, a) = [";
        for (std::size_t k = 0; k < d.a_basis.size(); ++k) {
            Scalar t = trace(d.v * d.a_basis[k]);
            if (!t.is_zero()) ok = false;
            w += (k ? ", " : "") + t.str();
        }
        return w + "]";
    });

    rep.run("gradient-rank", [&](bool& ok) {
        RestrictedRootSystem sys = restricted_roots(p, seed);
        WeylGroup w = weyl_group(sys, p.kappa_on_cartan());
        InvariantChart ch = invariant_chart(sys, w, p.kappa_on_cartan());
        Sampler s(seed);
        int tested = 0;
        std::string wit;
        while (tested < 5) {
            Vector x = s.point(2);
            if (ch.phi.evaluate(x).is_zero()) continue;
            ++tested;
            std::vector<Vector> cols;
            for (const auto& g : ch.gradients) cols.push_back(g.evaluate(x));
            std::size_t r = rank(from_columns(cols, 2));
            if (r != 2) {
                ok = false;
                wit = "rank " + std::to_string(r) + " at " + vector_str(x);
            }
        }
        return ok ? std::string("rank 2 at 5 regular points") : wit;
    });
    return rep;
}

}  // namespace symcart
