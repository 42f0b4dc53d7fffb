#pragma once

// Pair-definition documents and JSON rendering of results. Needs nlohmann/json.

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "catalog.hpp"
#include "error.hpp"
#include "invariants.hpp"
#include "parse.hpp"
#include "report.hpp"
#include "roots.hpp"

namespace symcart {

using json = nlohmann::ordered_json;

// ---- reading ---------------------------------------------------------------

/// Scalar from a JSON integer or a string such as "3/2", "-1/2i", "1/2+3i".
inline Scalar scalar_from_json(const json& j) {
    if (j.is_number_integer()) return Scalar(j.get<long>());
    if (j.is_string()) return parse_scalar(j.get<std::string>());
    throw InputError("expected a scalar (integer or string), got " + j.dump());
}

inline Vector vector_from_json(const json& j, std::size_t expected, const std::string& what) {
    if (!j.is_array() || j.size() != expected)
        throw InputError(what + " must be an array of " + std::to_string(expected) + " scalars");
    Vector v;
    for (const auto& e : j) v.push_back(scalar_from_json(e));
    return v;
}

inline ScalarMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& what) {
    if (!j.is_array() || j.size() != rows)
        throw InputError(what + " must have " + std::to_string(rows) + " rows");
    ScalarMatrix m(rows, cols, Scalar(0));
    for (std::size_t r = 0; r < rows; ++r) {
        Vector row = vector_from_json(j[r], cols, what + " row " + std::to_string(r));
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
    }
    return m;
}

inline std::vector<std::string> variable_names(std::size_t n) {
    std::vector<std::string> v;
    for (std::size_t k = 0; k < n; ++k) v.push_back("x" + std::to_string(k));
    return v;
}

inline std::vector<MultiPoly> polys_from_json(const json& j, std::size_t num_vars, const std::string& what) {
    if (!j.is_array()) throw InputError(what + " must be a JSON array of polynomial strings");
    std::vector<MultiPoly> out;
    for (const auto& e : j) {
        if (e.is_number_integer()) {
            out.push_back(MultiPoly::constant(num_vars, Scalar(e.get<long>())));
        } else if (e.is_string()) {
            out.push_back(parse_poly(e.get<std::string>(), num_vars));
        } else {
            throw InputError(what + " entries must be polynomial strings");
        }
    }
    return out;
}

inline json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(what + " is not valid JSON: " + e.what());
    }
}

/// Builds and validates a pair from a definition document:
///   {"name", "dim", "brackets": [[i, j, k, c], ...], "sigma", "kappa"?, "rep"?, "cartan"}
/// Indices are 0-based; [e_i, e_j] = sum_k c e_k and the entry for (j, i, k) is
/// implied unless given. Column j of sigma is sigma(e_j). Without "kappa" the
/// trace form of "rep" is used, or the Killing form when "rep" is absent.
inline SymmetricPair pair_from_json(const json& doc) {
    if (!doc.is_object()) throw InputError("pair document must be a JSON object");
    auto need = [&](const char* key) -> const json& {
        if (!doc.contains(key)) throw InputError(std::string("pair document lacks \"") + key + "\"");
        return doc.at(key);
    };
    const json& jdim = need("dim");
    if (!jdim.is_number_integer() || jdim.get<long>() <= 0) throw InputError("\"dim\" must be a positive integer");
    const std::size_t n = jdim.get<std::size_t>();

    SymmetricPair p;
    p.name = doc.value("name", std::string("custom"));
    p.algebra = LieAlgebra(n);
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> given;
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>> entries;
    const json& br = need("brackets");
    if (!br.is_array()) throw InputError("\"brackets\" must be an array");
    for (const auto& e : br) {
        if (!e.is_array() || e.size() != 4) throw InputError("bracket entries are [i, j, k, c]");
        std::size_t idx[3];
        for (int t = 0; t < 3; ++t) {
            if (!e[t].is_number_integer() || e[t].get<long>() < 0 || e[t].get<std::size_t>() >= n)
                throw InputError("bracket index out of range in " + e.dump());
            idx[t] = e[t].get<std::size_t>();
        }
        Scalar c = scalar_from_json(e[3]);
        if (!given.insert({idx[0], idx[1], idx[2]}).second) throw InputError("duplicate bracket entry " + e.dump());
        entries.emplace_back(idx[0], idx[1], idx[2], c);
        p.algebra.c(idx[0], idx[1], idx[2]) = c;
    }
    for (const auto& [i, j, k, c] : entries)
        if (!given.count({j, i, k})) p.algebra.c(j, i, k) = -c;
    p.algebra.validate();

    p.sigma = matrix_from_json(need("sigma"), n, n, "sigma");
    if (doc.contains("rep")) {
        const json& rep = doc.at("rep");
        if (!rep.is_array() || rep.size() != n) throw InputError("\"rep\" must list one matrix per basis vector");
        std::size_t size = rep[0].is_array() ? rep[0].size() : 0;
        std::vector<ScalarMatrix> mats;
        for (std::size_t k = 0; k < n; ++k) mats.push_back(matrix_from_json(rep[k], size, size, "rep matrix"));
        MatrixBasis mb(std::move(mats));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!(mb.coordinates(commutator(mb[i], mb[j])) == p.bracket(p.algebra.basis_vector(i),
                                                                             p.algebra.basis_vector(j))))
                    throw ValidationError("rep-homomorphism", "matrices do not satisfy the bracket relations");
        p.representation = std::move(mb);
    }
    if (doc.contains("kappa"))
        p.kappa = matrix_from_json(doc.at("kappa"), n, n, "kappa");
    else if (p.representation)
        p.kappa = trace_form(*p.representation);
    else
        p.kappa = killing_form(p.algebra);

    const json& cart = need("cartan");
    if (!cart.is_array()) throw InputError("\"cartan\" must be an array of coordinate vectors");
    for (const auto& v : cart) p.cartan.push_back(vector_from_json(v, n, "cartan vector"));
    validate_pair_structure(p);
    validate_cartan(p);
    return p;
}

inline SymmetricPair pair_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open pair file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return pair_from_json(parse_json_text(ss.str(), "pair file '" + path + "'"));
}

// ---- writing ---------------------------------------------------------------

inline json to_json(const Scalar& s) { return s.str(); }

inline json to_json(const Vector& v) {
    json j = json::array();
    for (const auto& s : v) j.push_back(s.str());
    return j;
}

inline json to_json(const ScalarMatrix& m) {
    json j = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) j.push_back(to_json(m.row(r)));
    return j;
}

inline json to_json(const MultiPoly& p) { return p.str(variable_names(p.num_vars())); }

inline json to_json(const std::vector<MultiPoly>& ps) {
    json j = json::array();
    for (const auto& p : ps) j.push_back(to_json(p));
    return j;
}

inline json to_json(const PolyVectorField& x) { return to_json(x.components); }

inline json to_json(const PolyMatrix& m) {
    json j = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) j.push_back(to_json(m.row(r)));
    return j;
}

inline json to_json(const RestrictedRootSystem& sys) {
    json roots = json::array();
    for (const auto& r : sys.roots)
        roots.push_back({{"functional", to_json(r.functional)},
                         {"multiplicity", r.multiplicity},
                         {"reduced", r.is_reduced}});
    return {{"rank", sys.rank}, {"centralizer_dim", sys.centralizer_dim}, {"count", sys.size()}, {"roots", roots}};
}

inline json to_json(const CheckReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"pass", c.ok}, {"witness", c.witness}});
    return {{"pass", rep.ok()}, {"checks", checks}};
}

}  // namespace symcart
