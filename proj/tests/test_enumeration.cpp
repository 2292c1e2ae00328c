#include <doctest.h>

#include "test_support.hpp"
#include "wsc/enumeration.hpp"

using namespace wsc;
using namespace testsupport;

TEST_CASE("isomorphism testing") {
    CHECK(are_isomorphic(cycle(5), cycle(5)));
    CHECK_FALSE(are_isomorphic(cycle(5), path3()));
    CHECK_FALSE(are_isomorphic(cycle(6), cycle(5)));

    // C6 vs two triangles glued? same degrees: prism vs K_{3,3} classic pair
    Graph k33 = complete_bipartite(3, 3);
    Graph prism(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
    CHECK_FALSE(are_isomorphic(k33, prism));
    CHECK(are_isomorphic(prism, prism));

    // relabeled wheel
    Graph w5 = wheel(5);
    Graph w5b(6, {{5, 4}, {4, 3}, {3, 2}, {2, 1}, {1, 5}, {5, 0}, {4, 0}, {3, 0}, {2, 0}, {1, 0}});
    CHECK(are_isomorphic(w5, w5b));
}

TEST_CASE("connected graph counts match the classical tallies") {
    const int expected[] = {0, 1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) {
        auto graphs = enumerate_connected_graphs(n);
        CHECK(int(graphs.size()) == expected[n]);
        for (const Graph& g : graphs) {
            CHECK(g.vertex_count() == n);
            CHECK(g.connected());
        }
        // spot check pairwise non-isomorphism on the small levels
        if (n <= 5)
            for (std::size_t i = 0; i < graphs.size(); ++i)
                for (std::size_t j = i + 1; j < graphs.size(); ++j)
                    CHECK_FALSE(are_isomorphic(graphs[i], graphs[j]));
    }
    CHECK(int(enumerate_connected_graphs_up_to(6).size()) == 1 + 1 + 2 + 6 + 21 + 112);
}
