#include "doctest.h"

#include <random>

#include "common.hpp"
#include "hecke/errors.hpp"
#include "hecke/group_blocks.hpp"
#include "tables.hpp"

using namespace hecke;
using testing_data::cyclic_table;

namespace {

// closure by iterating pi <- join(pi, sigma(pi)) over all sigma
Partition brute_close(const CharacterTable &t, Partition pi) {
    const std::int64_t N = t.conductor;
    for (bool changed = true; changed;) {
        changed = false;
        for (std::int64_t k = 1; k < N; ++k) {
            if (gcd64(k, N) != 1) continue;
            std::vector<std::size_t> img(t.values.size());
            for (std::size_t r = 0; r < t.values.size(); ++r) {
                for (std::size_t s = 0; s < t.values.size(); ++s) {
                    bool eq = true;
                    for (std::size_t c = 0; c < t.class_sizes.size() && eq; ++c) eq = t.values[r][c].galois(k) == t.values[s][c];
                    if (eq) img[r] = s;
                }
            }
            std::vector<std::vector<std::size_t>> parts;
            for (auto &part : pi.parts()) {
                std::vector<std::size_t> q;
                for (auto x : part) q.push_back(img[x]);
                parts.push_back(q);
            }
            Partition moved(pi.size(), parts);
            Partition next = join(pi, moved);
            if (!(next == pi)) {
                pi = next;
                changed = true;
            }
        }
    }
    return pi;
}

}  // namespace

TEST_CASE("central characters") {
    auto c3 = cyclic_table(3);
    for (std::size_t c = 0; c < 3; ++c) CHECK(central_character(c3, 0, c) == CycInt::integer(1));
    for (std::size_t chi = 0; chi < 3; ++chi) CHECK(central_character(c3, chi, 0) == CycInt::integer(1));
    auto w = central_character(c3, 1, 1);
    CHECK((w == CycInt::root({3, 1}) || w == CycInt::root({3, 2})));

    auto s3 = testing_data::s3_table();
    CHECK(central_character(s3, 1, 1) == CycInt::integer(3));
    CHECK(central_character(s3, 0, 2) == CycInt::integer(-1));
    // a corrupted value breaks exact division
    s3.values[0][1] = CycInt::integer(1);
    CHECK_THROWS_AS(central_character(s3, 0, 1), ValidationError);
}

TEST_CASE("p-blocks of small groups") {
    CHECK(p_blocks(cyclic_table(2), 2) == Partition::whole(2));
    CHECK(p_blocks(cyclic_table(3), 3) == Partition::whole(3));
    CHECK(p_blocks(cyclic_table(5), 5) == Partition::whole(5));
    CHECK(p_blocks(cyclic_table(2), 3).is_singletons());
    CHECK(p_blocks(cyclic_table(5), 2).is_singletons());
    auto s3 = testing_data::s3_table();
    CHECK(p_blocks(s3, 2) == Partition::from_one_based(3, {{1}, {2, 3}}));
    CHECK(p_blocks(s3, 3) == Partition::whole(3));
}

TEST_CASE("p-blocks of G4 join to one block") {
    const auto &g = testing_data::group("G4");
    const auto &t = *g.character_table;
    auto b2 = p_blocks(t, 2), b3 = p_blocks(t, 3);
    CHECK(join(b2, b3) == Partition::whole(7));
    CHECK(p_blocks(t, 5).is_singletons());
    CHECK(table_problems(g, t).empty());
}

TEST_CASE("p-blocks are Galois-stable, congruence-linked, and serial equals parallel") {
    for (auto &[name, g] : testing_data::db().groups()) {
        if (!g.character_table) continue;
        const auto &t = *g.character_table;
        for (std::int64_t p : {2, 3, 5, 7}) {
            auto b = p_blocks(t, p);
            CHECK(galois_close(t, b) == b);
            CHECK(p_blocks_serial(t, p) == b);
            if (g.group_order % p) CHECK(b.is_singletons());

            // every part is connected by congruence at the handle plus Galois moves
            auto h = prime_handle(p, t.conductor);
            std::vector<std::size_t> keys;
            std::vector<std::vector<Poly>> res;
            for (std::size_t chi = 0; chi < t.values.size(); ++chi) {
                std::vector<Poly> r;
                for (std::size_t c = 0; c < t.class_sizes.size(); ++c) r.push_back(residue(central_character(t, chi, c).lift(t.conductor), h));
                res.push_back(r);
            }
            Partition cong = Partition::from_keys(res);
            CHECK(cong.refines(b));
            CHECK(galois_close(t, cong) == b);
        }
    }
}

TEST_CASE("galois closure") {
    auto s3 = testing_data::s3_table();
    auto pi = Partition::from_one_based(3, {{1, 2}, {3}});
    CHECK(galois_close(s3, pi) == pi);

    auto c3 = cyclic_table(3);
    CHECK(galois_close(c3, Partition(3)).is_singletons());
    CHECK(galois_close(c3, Partition::from_one_based(3, {{1, 2}, {3}})) == Partition::whole(3));

    std::mt19937 rng(12);
    for (std::int64_t n : {3, 4, 5, 8, 12}) {
        auto t = cyclic_table(n);
        std::uniform_int_distribution<std::size_t> u(0, static_cast<std::size_t>(n) / 2);
        for (int it = 0; it < 30; ++it) {
            std::vector<std::size_t> keys(static_cast<std::size_t>(n));
            for (auto &k : keys) k = u(rng);
            auto pi = Partition::from_keys(keys);
            CHECK(galois_close(t, pi) == brute_close(t, pi));
        }
    }
}
