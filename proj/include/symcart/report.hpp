#pragma once

#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace symcart {

struct Check {
    std::string name;
    bool ok = false;
    std::string witness;  // failing value, or a short description of what held
};

struct CheckReport {
    std::vector<Check> checks;

    bool ok() const {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }
    const Check* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
    void add(std::string name, bool ok, std::string witness) { checks.push_back({std::move(name), ok, std::move(witness)}); }

    /// Runs body; an exception becomes a failing check with its message as witness.
    void run(std::string name, const std::function<std::string(bool&)>& body) {
        bool ok = true;
        std::string w;
        try {
            w = body(ok);
        } catch (const std::exception& e) {
            ok = false;
            w = e.what();
        }
        add(std::move(name), ok, std::move(w));
    }
};

inline std::string vector_str(const Vector& v) {
    std::string s = "[";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + v[k].str();
    return s + "]";
}

inline std::string matrix_str(const ScalarMatrix& m) {
    std::string s = "[";
    for (std::size_t r = 0; r < m.rows(); ++r) s += (r ? ", " : "") + vector_str(m.row(r));
    return s + "]";
}

}  // namespace symcart
