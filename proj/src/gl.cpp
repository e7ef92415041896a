#include "gvmlab/gl.hpp"

namespace gvmlab {

std::vector<std::pair<Rational, GlGenerator>> gl_bracket(const GlGenerator& x,
                                                         const GlGenerator& y) {
    std::vector<std::pair<Rational, GlGenerator>> out;
    if (x.j == y.i)
        out.push_back({Rational(1), GlGenerator{x.i, y.j}});
    if (y.j == x.i) {
        // Merge with an equal term instead of keeping duplicates.
        GlGenerator g{y.i, x.j};
        bool merged = false;
        for (auto& [c, h] : out)
            if (h == g) {
                c -= 1;
                merged = true;
            }
        if (!merged)
            out.push_back({Rational(-1), g});
    }
    std::vector<std::pair<Rational, GlGenerator>> nonzero;
    for (auto& t : out)
        if (!t.first.is_zero())
            nonzero.push_back(t);
    return nonzero;
}

}  // namespace gvmlab
