#ifndef LKCONVEX_TESTS_FIXTURES_HPP
#define LKCONVEX_TESTS_FIXTURES_HPP

#include <initializer_list>
#include <vector>

#include <lkconvex/generators.hpp>

namespace lkconvex::fixtures {

// The two-step example graph is labeled 1..7; ids are label - 1.
inline VertexSet lbl(std::initializer_list<int> labels) {
    VertexSet s(7);
    for (int l : labels) s.insert(static_cast<vertex_t>(l - 1));
    return s;
}

inline std::vector<vertex_t> lbl_seq(std::initializer_list<int> labels) {
    std::vector<vertex_t> out;
    for (int l : labels) out.push_back(static_cast<vertex_t>(l - 1));
    return out;
}

inline VertexSet set(std::size_t n, std::initializer_list<vertex_t> ids) { return VertexSet(n, ids); }

/// gem(4) plus y1 ~ {x0, x1, x2, u4} and y2 ~ {x2, x3, x4, u4, y1}: the base
/// gem is solved by x0, y1, y2, x4.
inline Graph solved_gem4() {
    // x0..x4 = 0..4, u4 = 5, y1 = 6, y2 = 7
    return Graph::from_edge_list(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 5}, {1, 5}, {2, 5}, {3, 5}, {4, 5},
                                     {6, 0}, {6, 1}, {6, 2}, {6, 5}, {7, 2}, {7, 3}, {7, 4}, {7, 5}, {7, 6}});
}

} // namespace lkconvex::fixtures

#endif // LKCONVEX_TESTS_FIXTURES_HPP
