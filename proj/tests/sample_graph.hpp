#ifndef KDELTA_TESTS_SAMPLE_GRAPH_HPP
#define KDELTA_TESTS_SAMPLE_GRAPH_HPP

#include "kdelta/graph.hpp"

// The 6-vertex graph used throughout the walkthrough tests. DFS from 0 with
// ascending neighbor order discovers 0,1,2,3,4,5; degrees are (1,3,3,3,3,3).
inline kdelta::Graph sample_graph() {
    return kdelta::Graph(6, {{0, 1},
                             {1, 2},
                             {1, 5},
                             {2, 3},
                             {2, 4},
                             {3, 4},
                             {3, 5},
                             {4, 5}});
}

#endif
