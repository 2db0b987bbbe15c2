#include <doctest.h>

#include <random>

#include "idom/errors.hpp"
#include "idom/generators.hpp"
#include "idom/structure.hpp"
#include "test_support.hpp"

using namespace idom;

namespace {

Digraph disjoint_union(const Digraph &a, const Digraph &b) {
    std::vector<Arc> arcs(a.arcs().begin(), a.arcs().end());
    const auto shift = static_cast<Vertex>(a.size());
    for (const auto &[u, v] : b.arcs()) arcs.emplace_back(u + shift, v + shift);
    return Digraph(a.size() + b.size(), arcs);
}

void check_arc_rule(const Digraph &d, const LayerDecomposition &l) {
    for (const auto &[u, v] : d.arcs()) REQUIRE(l.layer_of[v] == (l.layer_of[u] + 1) % l.period);
    std::size_t total = 0;
    for (const auto &layer : l.layers) {
        REQUIRE_FALSE(layer.empty());
        total += layer.size();
        if (l.period > 1) REQUIRE(is_independent(d, layer).independent);
    }
    REQUIRE(total == d.size());
}

} // namespace

TEST_CASE("sccs") {
    auto c3 = sccs(gen_cycle(3));
    CHECK(c3.count() == 1);
    CHECK(c3.components[0] == std::vector<Vertex>{0, 1, 2});

    auto path = sccs(gen_path(3));
    CHECK(path.count() == 3);
    CHECK(path.components[0] == std::vector<Vertex>{0});
    CHECK(path.components[2] == std::vector<Vertex>{2});

    auto paw = sccs(gen_paw());
    REQUIRE(paw.count() == 2);
    CHECK(paw.components[0] == std::vector<Vertex>{kPawPendant});
    CHECK(paw.components[1] == std::vector<Vertex>{kPawT1, kPawT2, kPawT3});
}

TEST_CASE("scc listing is topological and numbering is deterministic") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        const auto d = random_digraph(1 + rng() % 12, 0.15, rng());
        const auto dec = sccs(d);
        for (const auto &[u, v] : d.arcs()) CHECK(dec.component_of[u] <= dec.component_of[v]);
        for (std::size_t c = 0; c < dec.count(); ++c)
            for (Vertex v : dec.components[c]) CHECK(dec.component_of[v] == c);
        // Mutual reachability defines the partition.
        const auto cond = condensation(d);
        CHECK(is_acyclic(cond.dag));
        CHECK(cycle_gcd_oracle(cond.dag) == 0);
    }
}

TEST_CASE("condensation") {
    auto paw = condensation(gen_paw());
    CHECK(paw.dag.size() == 2);
    CHECK(paw.dag.arcs() == std::vector<Arc>{{0, 1}});
    CHECK(paw.source_components() == std::vector<std::size_t>{0});

    auto strong = condensation(gen_cycle(5));
    CHECK(strong.dag.size() == 1);
    CHECK(strong.dag.arc_count() == 0);

    auto two = condensation(disjoint_union(gen_cycle(3), gen_cycle(4)));
    CHECK(two.dag.size() == 2);
    CHECK(two.dag.arc_count() == 0);
    CHECK(two.source_components().size() == 2);
}

TEST_CASE("scc_period") {
    CHECK(scc_period(gen_cycle(4)) == 4);
    CHECK(scc_period(gen_cycle(2)) == 2);
    const Digraph chord(3, {{0, 1}, {1, 2}, {2, 0}, {0, 2}});
    CHECK(cycle_gcd_oracle(chord) == 1);
    CHECK(scc_period(chord) == 1);

    CHECK_THROWS_AS(scc_period(gen_path(3)), PreconditionError);
    CHECK_THROWS_AS(scc_period(Digraph(1, {})), PreconditionError);
    CHECK_THROWS_AS(scc_period(disjoint_union(gen_cycle(3), gen_cycle(3))), PreconditionError);
}

TEST_CASE("period") {
    CHECK(period(gen_path(3)) == 0);
    CHECK(period(Digraph(3, {})) == 0);
    CHECK(period(disjoint_union(gen_cycle(4), gen_cycle(6))) == 2);
    const auto mixed = disjoint_union(gen_cycle(3), gen_cycle(2));
    CHECK(cycle_gcd_oracle(mixed) == 1);
    CHECK(period(mixed) == 1);
    CHECK(period(gen_paw()) == 3);
}

TEST_CASE("layer_decomposition") {
    auto c6 = layer_decomposition(gen_cycle(6));
    CHECK(c6.period == 6);
    for (Vertex v = 0; v < 6; ++v) CHECK(c6.layers[v] == VertexSet(6, {v}));

    auto k2 = layer_decomposition(gen_cycle(2));
    CHECK(k2.period == 2);
    CHECK(k2.layers[0] == VertexSet(2, {0}));
    CHECK(k2.layers[1] == VertexSet(2, {1}));

    auto d53 = gen_dhk({5, 3, DhkVariant::IdsFree, DhkRules::Text});
    auto l = layer_decomposition(d53.graph);
    CHECK(l.period == 5);
    CHECK(l.layer_sizes() == std::vector<std::size_t>{3, 6, 6, 3, 6});
    check_arc_rule(d53.graph, l);

    CHECK_THROWS_AS(layer_decomposition(gen_path(4)), PreconditionError);
}

TEST_CASE("from_labels validates the cyclic arc rule") {
    const auto c4 = gen_cycle(4);
    CHECK_NOTHROW(LayerDecomposition::from_labels(c4, 2, {0, 1, 0, 1}));
    CHECK_THROWS_AS(LayerDecomposition::from_labels(c4, 2, {0, 0, 1, 1}), PreconditionError);
    CHECK_THROWS_AS(LayerDecomposition::from_labels(c4, 3, {0, 1, 0, 1}), PreconditionError);
    CHECK_THROWS_AS(LayerDecomposition::from_labels(c4, 2, {0, 1, 0}), PreconditionError);
}

TEST_CASE("cycle_gcd_oracle") {
    CHECK(cycle_gcd_oracle(gen_cycle(5)) == 5);
    CHECK(cycle_gcd_oracle(gen_path(6)) == 0);
    CHECK(cycle_gcd_oracle(random_dag(10, 0.4, 3)) == 0);
    const Digraph c3_anti(3, {{0, 1}, {1, 2}, {2, 0}, {1, 0}});
    CHECK(cycle_gcd_oracle(c3_anti) == 1);
    CHECK_THROWS_AS(cycle_gcd_oracle(gen_cycle(13)), CapExceeded);
}

TEST_CASE("period matches the cycle oracle on random graphs") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 300; ++i) {
        const std::size_t n = 1 + rng() % 12;
        const double p = 0.05 + 0.05 * static_cast<double>(rng() % 6);
        const auto d = random_digraph(n, p, rng());
        REQUIRE(period(d) == cycle_gcd_oracle(d));
        if (n >= 2 && is_strongly_connected(d)) REQUIRE(scc_period(d) == cycle_gcd_oracle(d));
    }
}

TEST_CASE("period of strongly connected graphs: oracle, root and relabelling invariance") {
    std::mt19937_64 rng(99);
    int checked = 0;
    for (int i = 0; i < 400 && checked < 150; ++i) {
        const auto d = idom::testing::largest_scc(random_digraph(4 + rng() % 9, 0.2, rng()));
        if (d.size() < 2) continue;
        ++checked;
        const auto h = scc_period(d);
        REQUIRE(h == cycle_gcd_oracle(d));
        REQUIRE(scc_period(d, static_cast<Vertex>(rng() % d.size())) == h);
        const auto perm = idom::testing::random_permutation(d.size(), rng);
        REQUIRE(scc_period(idom::testing::relabel(d, perm)) == h);
        check_arc_rule(d, layer_decomposition(d));
    }
    CHECK(checked >= 100);
}

TEST_CASE("layered random graphs have the requested period and a valid layering") {
    for (std::size_t h : {1u, 2u, 3u, 4u, 5u, 6u}) {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const auto d = random_layered_strong(h, 3, 0.4, seed);
            const auto l = layer_decomposition(d);
            REQUIRE(l.period == h);
            check_arc_rule(d, l);
        }
    }
}
