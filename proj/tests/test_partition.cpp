#include "doctest.h"

#include <random>

#include "common.hpp"
#include "hecke/partition.hpp"

using namespace hecke;

namespace {

Partition random_partition(std::mt19937 &rng, std::size_t n) {
    std::uniform_int_distribution<std::size_t> u(0, n / 2 + 1);
    std::vector<std::size_t> keys(n);
    for (auto &k : keys) k = u(rng);
    return Partition::from_keys(keys);
}

}  // namespace

TEST_CASE("meet and join examples") {
    Partition a = Partition::from_one_based(4, {{1, 2}, {3, 4}});
    Partition b = Partition::from_one_based(4, {{1, 3}, {2, 4}});
    CHECK(meet(a, b).is_singletons());
    CHECK(meet(a, Partition(4)).is_singletons());
    CHECK(meet(a, a) == a);
    CHECK(join(a, b) == Partition::whole(4));
    CHECK(join(std::vector<Partition>{a}) == a);

    Partition c = Partition::from_one_based(3, {{1, 2}, {3}});
    Partition d = Partition::from_one_based(3, {{2, 3}, {1}});
    CHECK(join(c, d) == Partition::whole(3));
    CHECK_THROWS(meet(a, c));
    CHECK_THROWS(join(a, c));
}

TEST_CASE("canonical form and validation") {
    Partition p(5, {{4, 2}, {0}, {3, 1}});
    CHECK(p.str() == "[[1],[2,4],[3,5]]");
    CHECK(p.one_based() == std::vector<std::vector<std::size_t>>{{1}, {2, 4}, {3, 5}});
    CHECK(p.same_part(1, 3));
    CHECK(!p.same_part(0, 1));
    CHECK_THROWS(Partition(3, {{0, 1}, {1, 2}}));
    CHECK_THROWS(Partition(3, {{0, 1}}));
    CHECK(partition_problems(3, {{0, 1}, {1, 2}}).size() == 1);
    CHECK(!partition_problems(3, {{0, 1}, {5}}).empty());
    CHECK(partition_problems(3, {{0, 1}, {2}}).empty());
}

TEST_CASE("lattice laws on random partitions") {
    std::mt19937 rng(8);
    for (int it = 0; it < 400; ++it) {
        std::size_t n = 1 + it % 10;
        auto a = random_partition(rng, n), b = random_partition(rng, n), c = random_partition(rng, n);
        CHECK(meet(a, a) == a);
        CHECK(join(a, a) == a);
        CHECK(meet(a, b) == meet(b, a));
        CHECK(join(a, b) == join(b, a));
        CHECK(meet(meet(a, b), c) == meet(a, meet(b, c)));
        CHECK(join(join(a, b), c) == join(a, join(b, c)));
        CHECK(meet(a, b).refines(a));
        CHECK(meet(a, b).refines(b));
        CHECK(a.refines(join(a, b)));
        CHECK(b.refines(join(a, b)));
        // absorption
        CHECK(meet(a, join(a, b)) == a);
        CHECK(join(a, meet(a, b)) == a);

        // meet by brute force: same part in both
        auto m = meet(a, b);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) CHECK(m.same_part(i, j) == (a.same_part(i, j) && b.same_part(i, j)));
    }
}

TEST_CASE("join of the G4 tables is one block") {
    const auto &g = testing_data::group("G4");
    std::vector<Partition> ps;
    for (auto &t : g.hyperplane_tables) ps.push_back(t.blocks);
    CHECK(join(ps) == Partition::whole(7));
}
