#include "doctest.h"

#include <map>
#include <random>

#include "common.hpp"
#include "hecke/clifford.hpp"

using namespace hecke;
using testing_data::group;

namespace {

const CliffordLink &link(const GroupDatum &parent, const std::string &child) {
    for (auto &l : parent.clifford_links)
        if (l.child == child) return l;
    FAIL("no link");
    throw;
}

std::size_t idx(const GroupDatum &g, const std::string &label) {
    auto i = g.char_index(label);
    REQUIRE(i.has_value());
    return *i;
}

}  // namespace

TEST_CASE("links are well formed") {
    const auto &g7 = group("G7"), &g6 = group("G6"), &g4 = group("G4");
    CHECK(link_problems(link(g7, "G6"), g7, g6).empty());
    CHECK(link_problems(link(g7, "G4"), g7, g4).empty());
    CHECK(link_problems(link(g6, "G4"), g6, g4).empty());
    CliffordLink bad = link(g7, "G6");
    bad.induction[0].parents.pop_back();
    CHECK(!link_problems(bad, g7, g6).empty());
}

TEST_CASE("restricting normals") {
    const auto &g7 = group("G7"), &g6 = group("G6");
    const auto &l = link(g7, "G6");
    CHECK(is_zero(restrict_normal(l, g7, g6, {0, 0, 0, 1, -1, 0, 0, 0})));
    CHECK(restrict_normal(l, g7, g6, {1, -1, -2, 1, 1, -2, 1, 1}) == IntVec{1, -1, -2, 1, 1});
    CHECK(restrict_normal(l, g7, g6, {0, 0, 0, 0, 0, 0, 1, -1}) == IntVec{0, 0, 0, 1, -1});
}

TEST_CASE("transport of the phi{3,2} row") {
    const auto &g7 = group("G7"), &g6 = group("G6");
    const auto &l = link(g7, "G6");
    auto base = g7.no_hyperplane_table()->blocks;
    CHECK(base.same_part(idx(g7, "phi{3,6}"), idx(g7, "phi{3,10}")));
    CHECK(base.same_part(idx(g7, "phi{3,6}"), idx(g7, "phi{3,2}")));
    auto child = transport_blocks(l, g7, g6, base);
    std::size_t c = idx(g6, "phi{3,2}");
    for (std::size_t j = 0; j < g6.char_count(); ++j)
        if (j != c) CHECK(!child.same_part(c, j));
}

TEST_CASE("singleton parents inside distinct rows give singletons") {
    const auto &g7 = group("G7"), &g6 = group("G6");
    const auto &l = link(g7, "G6");
    // group each row's parents together: every child row alone
    std::vector<std::size_t> keys(g7.char_count());
    for (std::size_t r = 0; r < l.induction.size(); ++r)
        for (auto &p : l.induction[r].parents) keys[idx(g7, p)] = r;
    auto rows = Partition::from_keys(keys);
    CHECK(transport_blocks(l, g7, g6, rows).is_singletons());
}

TEST_CASE("descend then transport matches the stored G6 tables") {
    const auto &g7 = group("G7"), &g6 = group("G6");
    const auto &l = link(g7, "G6");
    auto d = descend_hyperplanes(l, g7, g6, g7.hyperplane_tables);
    REQUIRE(!d.empty());
    CHECK(!d[0].normal.has_value());
    CHECK(d[0].blocks == g6.no_hyperplane_table()->blocks);
    std::size_t shared = 0;
    for (auto &t : d) {
        if (!t.normal) continue;
        for (auto &s : g6.hyperplane_tables)
            if (s.normal == t.normal) {
                ++shared;
                CHECK(s.blocks == t.blocks);
            }
    }
    CHECK(shared >= 4);
    CHECK(transport_mismatches(l, g7, g6).empty());
}

TEST_CASE("transport is monotone") {
    const auto &g7 = group("G7"), &g6 = group("G6");
    const auto &l = link(g7, "G6");
    // parent partitions stable under the cyclic action: the base joined with every table that
    // restricts to zero, plus whole groups of tables sharing a restricted normal
    Partition base = g7.no_hyperplane_table()->blocks;
    std::map<IntVec, Partition> groups;
    for (auto &t : g7.hyperplane_tables) {
        if (!t.normal) continue;
        IntVec r = restrict_normal(l, g7, g6, *t.normal);
        if (is_zero(r)) {
            base = join(base, t.blocks);
            continue;
        }
        r = sign_canonical(primitive_part(r).first);
        auto it = groups.find(r);
        if (it == groups.end())
            groups.emplace(r, t.blocks);
        else
            it->second = join(it->second, t.blocks);
    }
    REQUIRE(groups.size() >= 2);
    std::mt19937 rng(14);
    std::uniform_int_distribution<int> coin(0, 2);
    for (int it = 0; it < 40; ++it) {
        Partition fine = base, coarse = base;
        for (auto &[r, p] : groups) {
            int c = coin(rng);
            if (c >= 1) coarse = join(coarse, p);
            if (c == 2) fine = join(fine, p);
        }
        CHECK(fine.refines(coarse));
        CHECK(transport_blocks(l, g7, g6, fine).refines(transport_blocks(l, g7, g6, coarse)));
    }
}

TEST_CASE("Schur scaling along the links") {
    const auto &g7 = group("G7"), &g6 = group("G6"), &g4 = group("G4");
    CHECK(validate_schur_scaling(link(g7, "G6"), g7, g6).empty());
    CHECK(validate_schur_scaling(link(g7, "G4"), g7, g4).empty());
    CHECK(validate_schur_scaling(link(g6, "G4"), g6, g4).empty());

    // phi{3,6} specialized to G6 is three times phi{3,2}
    const auto &l = link(g7, "G6");
    const XFormEntry *e = nullptr;
    for (auto &s : g7.schur_entries)
        if (auto *x = std::get_if<XFormEntry>(&s); x && x->character == "phi{3,6}") e = x;
    REQUIRE(e != nullptr);
    auto sp = specialize_to_child(l, g7, g6, *e, idx(g6, "phi{3,2}"));
    auto child = *g6.schur[idx(g6, "phi{3,2}")];
    CHECK(sp.xi == child.xi * 3);

    // corrupted child coefficient
    GroupDatum broken = g6;
    broken.schur[idx(g6, "phi{3,2}")]->xi = broken.schur[idx(g6, "phi{3,2}")]->xi * 2;
    CHECK(!validate_schur_scaling(l, g7, broken).empty());
}
