#pragma once

#include "gvmlab/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace gvmlab {

/// Basis element E_{i,j} of gl(m), 1-based indices. i == j is a Cartan generator,
/// i > j lowering, i < j raising.
struct GlGenerator {
    std::size_t i = 0, j = 0;

    bool is_cartan() const { return i == j; }
    bool is_lowering() const { return i > j; }
    bool is_raising() const { return i < j; }

    std::string str() const {
        return "E(" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
    friend bool operator==(const GlGenerator& a, const GlGenerator& b) {
        return a.i == b.i && a.j == b.j;
    }
};

/// [E_{ab}, E_{cd}] = d_{bc} E_{ad} - d_{da} E_{cb}, as a list of (coeff, generator).
/// Diagonal outputs stay as E_{aa} terms; callers treat them as Cartan generators.
std::vector<std::pair<Rational, GlGenerator>> gl_bracket(const GlGenerator& x,
                                                         const GlGenerator& y);

}  // namespace gvmlab
