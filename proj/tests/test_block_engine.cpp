#include "doctest.h"

#include <map>
#include <set>

#include "common.hpp"
#include "hecke/block_engine.hpp"
#include "hecke/group_blocks.hpp"
#include "tables.hpp"

using namespace hecke;
using testing_data::group;

namespace {

// three characters over an S3-shaped table; xi = (1, 2, 2)
GroupDatum fixture(bool shared_monomial) {
    GroupDatum g;
    g.name = "T";
    g.field_conductor = 1;
    g.mu_order = 2;
    g.group_order = 6;
    g.orbits = {{"a", "x", 2}};
    g.characters = {{2, 1, 0}, {1, 0, 0}, {1, 3, 0}};
    g.character_table = testing_data::s3_table();
    VFormEntry e0{"phi{2,1}", CycInt::integer(1), {0, 0}, {}};
    VFormEntry e1{"phi{1,0}", CycInt::integer(2), {0, 0}, {}};
    VFormEntry e2{"phi{1,3}", CycInt::integer(2), {0, 0}, {}};
    if (shared_monomial) {
        e0.xi = CycInt::integer(1);
        e1.xi = CycInt::integer(1);
        e2.xi = CycInt::integer(1);
        e1.factors = {{2, 1, {1, -1}, 1}};
        e2.factors = {{2, 1, {1, -1}, 1}};
    }
    g.schur_entries = {e0, e1, e2};
    resolve_schur(g);
    return g;
}

std::vector<IntVec> box(std::size_t len, std::int64_t b) {
    std::vector<IntVec> out{{}};
    for (std::size_t i = 0; i < len; ++i) {
        std::vector<IntVec> next;
        for (auto &v : out)
            for (std::int64_t x = -b; x <= b; ++x) {
                auto w = v;
                w.push_back(x);
                next.push_back(w);
            }
        out = next;
    }
    return out;
}

std::set<const HyperplaneTable *> hit(const GroupDatum &g, const IntVec &n) {
    auto v = hyperplanes_containing(g.hyperplane_tables, n);
    return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("hyperplanes containing a specialization") {
    const auto &g = group("G4");
    auto h = hyperplanes_containing(g.hyperplane_tables, {0, 1, 2});
    REQUIRE(h.size() == 1);
    CHECK(*h[0]->normal == IntVec{1, -2, 1});
    CHECK(hyperplanes_containing(g.hyperplane_tables, {0, 1, 5}).empty());
    CHECK(hyperplanes_containing(g.hyperplane_tables, {0, 0, 0}).size() == 6);
}

TEST_CASE("rouquier blocks from tables") {
    const auto &g = group("G4");
    CHECK(rouquier_from_tables(g, {0, 1, 2}) == Partition::from_one_based(7, {{1}, {2, 5, 7}, {3}, {4}, {6}}));
    CHECK(rouquier_from_tables(g, {0, 1, 5}).is_singletons());
    CHECK(rouquier_from_tables(g, {0, 0, 0}) == Partition::whole(7));
    CHECK(rouquier_from_tables(group("G6"), {0, 0, 0, 0, 0}) == Partition::whole(14));
}

TEST_CASE("rouquier blocks are scale invariant and monotone") {
    for (const char *name : {"G4", "G6"}) {
        const auto &g = group(name);
        auto pts = box(g.slot_count(), g.slot_count() == 3 ? 2 : 1);
        std::vector<Partition> parts;
        std::vector<std::set<const HyperplaneTable *>> hits;
        for (auto &n : pts) {
            parts.push_back(rouquier_from_tables(g, n));
            hits.push_back(hit(g, n));
            for (std::int64_t a : {-3, -1, 2}) CHECK(rouquier_from_tables(g, scaled(n, a)) == parts.back());
        }
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = 0; j < pts.size(); ++j)
                if (std::includes(hits[j].begin(), hits[j].end(), hits[i].begin(), hits[i].end()))
                    CHECK(parts[i].refines(parts[j]));
    }
}

TEST_CASE("missing tables") {
    GroupDatum g = fixture(false);
    CHECK_THROWS_AS(rouquier_from_tables(g, {1, 0}), MissingPayloadError);
}

TEST_CASE("blocks with no hyperplane") {
    auto g = fixture(false);
    CHECK(blocks_no_hyperplane(g, 2) == Partition::from_one_based(3, {{1}, {2, 3}}));
    CHECK(blocks_no_hyperplane(g, 5).is_singletons());
    const auto &g4 = group("G4");
    CHECK(blocks_no_hyperplane(g4, 5).is_singletons());
    for (std::int64_t p : {2, 3}) {
        auto b = blocks_no_hyperplane(g4, p);
        CHECK(b.refines(p_blocks(*g4.character_table, p)));
        CHECK(matches_stored_table(g4, std::nullopt, b));
    }
}

TEST_CASE("blocks on one hyperplane") {
    auto g = fixture(true);
    CHECK(blocks_no_hyperplane(g, 2).is_singletons());
    CHECK(blocks_one_hyperplane(g, 2, {1, -1}) == Partition::from_one_based(3, {{1}, {2, 3}}));

    // a hyperplane essential for nobody leaves the no-hyperplane blocks
    auto g2 = fixture(false);
    CHECK(blocks_one_hyperplane(g2, 2, {1, -1}) == blocks_no_hyperplane(g2, 2));

    const auto &g4 = group("G4");
    auto h = blocks_one_hyperplane(g4, 2, {1, -2, 1});
    CHECK(join(h, blocks_no_hyperplane(g4, 3)) == Partition::from_one_based(7, {{1}, {2, 5, 7}, {3}, {4}, {6}}));
}

TEST_CASE("schur path against stored tables for G4") {
    const auto &g = group("G4");
    for (auto &h : essential_hyperplanes(g, 0)) {
        Partition acc = Partition(7);
        for (auto p : hyperplane_primes(g, h)) acc = join(acc, blocks_one_hyperplane(g, p, h));
        CHECK(matches_stored_table(g, h, acc));
    }
    CHECK(rouquier_from_schur(g, {0, 1, 2}) == rouquier_from_tables(g, {0, 1, 2}));
    CHECK(rouquier_from_schur(g, {0, 2, 4}) == rouquier_from_schur(g, {0, 1, 2}));
    CHECK(rouquier_from_schur(g, {0, 0, 0}) == Partition::whole(7));
    CHECK(rouquier_from_schur(g, {0, 1, 5}).is_singletons());
}

TEST_CASE("a + A is constant on the no-hyperplane parts") {
    const auto &g = group("G4");
    for (std::int64_t p : {2, 3}) {
        auto b = blocks_no_hyperplane(g, p);
        auto specs = admissible_specializations(g, essential_hyperplanes(g, p), std::nullopt, 8);
        CHECK(specs.size() == 8);
        for (auto &n : specs) {
            auto s = sum_aA(g, n);
            for (auto &part : b.parts())
                for (auto i : part) CHECK(*s[i] == *s[part[0]]);
        }
    }
}

TEST_CASE("admissible specializations") {
    const auto &g = group("G4");
    auto hs = essential_hyperplanes(g, 0);
    auto off = admissible_specializations(g, hs, std::nullopt, 5);
    REQUIRE(off.size() == 5);
    for (auto &n : off) {
        CHECK(is_primitive(n));
        for (auto &h : hs) CHECK(dot(h, n) != 0);
    }
    CHECK(admissible_specializations(g, hs, std::nullopt, 5) == off);
    IntVec h{1, -2, 1};
    auto on = admissible_specializations(g, hs, h, 4);
    REQUIRE(on.size() == 4);
    for (auto &n : on) {
        CHECK(dot(h, n) == 0);
        for (auto &k : hs)
            if (k != h) CHECK(dot(k, n) != 0);
    }
}

TEST_CASE("serial and parallel a + A agree") {
    for (const char *name : {"G4", "G7"}) {
        const auto &g = group(name);
        std::mt19937 rng(13);
        std::uniform_int_distribution<int> u(-6, 6);
        for (int it = 0; it < 30; ++it) {
            IntVec n(g.slot_count());
            for (auto &x : n) x = u(rng);
            CHECK(sum_aA(g, n) == sum_aA_serial(g, n));
        }
    }
}
