#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "globwb/generators.hpp"
#include "globwb/zigzag.hpp"

using namespace globwb;

TEST_CASE("unit zig-zag") {
    SetZigZag u = unit_zigzag<FiniteGlobularSet, GlobularSetMap>(disk(2));
    CHECK(u.length() == 0);
    CHECK(u.shape_ok());
    CHECK(colimit_zigzag(u).apex == disk(2));
}

TEST_CASE("concat and slice") {
    Rng rng(2);
    SetZigZag z = random_zigzag(rng, 5, 4, 3);
    CHECK(z.length() == 5);
    SetZigZag a = slice(z, 0, 2), b = slice(z, 2, 3);
    CHECK(concat(a, b) == z);
    CHECK(slice(z, 0, z.length()) == z);
    SetZigZag c = random_zigzag(rng, 1, 4, 3);
    if (!(c.tops.front() == z.tops.back())) CHECK_THROWS_AS(concat(z, c), StructuralError);
}

TEST_CASE("validation catches mismatched legs") {
    Rng rng(4);
    SetZigZag z = random_zigzag(rng, 2, 4, 2);
    SetZigZag bad = z;
    bad.left.pop_back();
    CHECK_THROWS_AS(validate(bad), StructuralError);
    bad = z;
    std::swap(bad.left[0], bad.right[1]);
    if (!(bad.left[0].domain == bad.tops[0]) || !(bad.left[0].codomain == bad.bottoms[0]))
        CHECK_THROWS_AS(validate(bad), StructuralError);
}

TEST_CASE("colimit of a glueing zig-zag is the globular sum") {
    Rng rng(8);
    for (int i = 0; i < 150; ++i) {
        Table t = random_table(rng, 5, 4);
        SetZigZag g = glueing_zigzag(t);
        validate(g);
        CHECK(g.tops.front().counts.empty());
        CHECK(g.tops.back().counts.empty());
        CHECK(isomorphic(colimit_zigzag(g).apex, realize_table(t).set));
    }
}

TEST_CASE("colimit is invariant under chunking") {
    Rng rng(12);
    for (int i = 0; i < 300; ++i) {
        std::size_t len = rng() % 7;
        SetZigZag z = random_zigzag(rng, len, 4, 3);
        auto part = random_partition(rng, len);
        SetZigZag c = chunk(z, part);
        validate(c);
        CHECK(c.length() == part.size());
        CHECK(isomorphic(colimit_zigzag(z).apex, colimit_zigzag(c).apex));
    }
}

TEST_CASE("chunking with singletons is the identity") {
    Rng rng(13);
    SetZigZag z = random_zigzag(rng, 4, 4, 3);
    CHECK(chunk(z, {1, 1, 1, 1}) == z);
}

TEST_CASE("chunk rejects bad partitions") {
    Rng rng(14);
    SetZigZag z = random_zigzag(rng, 3, 4, 2);
    CHECK_THROWS_AS(chunk(z, {1, 1}), ValidationError);
    CHECK_THROWS_AS(chunk(z, {3, 0}), ValidationError);
}

TEST_CASE("cocone legs commute") {
    Rng rng(15);
    for (int i = 0; i < 50; ++i) {
        SetZigZag z = random_zigzag(rng, 3, 4, 3);
        Diagram d = to_diagram(z);
        Cocone c = colimit(d);
        for (const auto& e : d.edges) CHECK(compose(c.legs[e.to], e.map) == c.legs[e.from]);
    }
}

TEST_CASE("json round trip") {
    Rng rng(16);
    for (int i = 0; i < 30; ++i) {
        SetZigZag z = random_zigzag(rng, rng() % 4, 4, 3);
        CHECK(zigzag_from_json(to_json(z)) == z);
    }
}
