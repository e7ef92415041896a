#include "gvmlab/multi_index.hpp"

namespace gvmlab {

namespace {
void rec(std::size_t m, long d, std::vector<long>& cur, std::vector<MultiIndex>& out) {
    if (cur.size() + 1 == m) {
        cur.push_back(d);
        out.emplace_back(cur);
        cur.pop_back();
        return;
    }
    for (long x = 0; x <= d; ++x) {
        cur.push_back(x);
        rec(m, d - x, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<MultiIndex> compositions_of_degree(std::size_t m, long d) {
    if (m == 0) {
        if (d == 0)
            return {MultiIndex()};
        return {};
    }
    std::vector<MultiIndex> out;
    std::vector<long> cur;
    rec(m, d, cur, out);
    return out;
}

}  // namespace gvmlab
