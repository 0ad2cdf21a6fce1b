#pragma once

#include "hecke/datum.hpp"
#include "hecke/schur.hpp"

namespace hecke {

struct EngineOptions {
    std::size_t min_specs = 5;      // a+A meets before stabilization may stop the search
    std::size_t stable_window = 5;  // consecutive specializations without refinement
    std::size_t max_specs = 200;
    std::int64_t max_bound = 64;
    bool parallel = true;
};

// tables whose normal is orthogonal to n (the no-hyperplane table is never returned)
std::vector<const HyperplaneTable *> hyperplanes_containing(const std::vector<HyperplaneTable> &tables, const IntVec &n);
Partition rouquier_from_tables(const GroupDatum &g, const IntVec &n);

// p-essential hyperplanes read off whichever Schur elements are present
std::vector<IntVec> schur_hyperplanes(const GroupDatum &g, std::int64_t p);

// a + A per character at one specialization; characters without Schur data get nullopt
std::vector<std::optional<Rational>> sum_aA(const GroupDatum &g, const IntVec &n);
std::vector<std::optional<Rational>> sum_aA_serial(const GroupDatum &g, const IntVec &n);

// deterministic search: primitive n in [-B,B]^m, lexicographic, B = 1, 2, 4, ...
// on_hyperplane: n must lie on it and on no other entry of avoid
std::vector<IntVec> admissible_specializations(const GroupDatum &g, const std::vector<IntVec> &avoid,
                                               const std::optional<IntVec> &on_hyperplane, std::size_t count,
                                               std::int64_t max_bound = 64);

Partition blocks_no_hyperplane(const GroupDatum &g, std::int64_t p, const EngineOptions &opt = {});
Partition blocks_one_hyperplane(const GroupDatum &g, std::int64_t p, const IntVec &h, const EngineOptions &opt = {});
Partition rouquier_from_schur(const GroupDatum &g, const IntVec &n, const EngineOptions &opt = {});

// true when the partition equals the stored table for h (nullopt: no-hyperplane table)
bool matches_stored_table(const GroupDatum &g, const std::optional<IntVec> &h, const Partition &p);

}  // namespace hecke
