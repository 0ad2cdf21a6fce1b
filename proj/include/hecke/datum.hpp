#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hecke/cyclo.hpp"
#include "hecke/lattice.hpp"
#include "hecke/partition.hpp"

namespace hecke {

struct Orbit {
    std::string letter;  // display letter: a, b, c ...
    std::string param;   // x-form variable stem: x, y, z ...
    std::int64_t order = 2;

    bool operator==(const Orbit &) const = default;
};

struct CharLabel {
    std::int64_t degree = 1;
    std::int64_t b = 0;
    int marks = 0;  // 0-3 apostrophes

    std::string str() const;  // phi{d,b}''
    static std::optional<CharLabel> parse(const std::string &s);
    bool operator==(const CharLabel &) const = default;
};

// Phi_n(twist * x^(num/den))^mult, x ranging over the x-form slots
struct SchurFactorX {
    std::int64_t cyc_index = 1;
    RootOfUnity twist;
    IntVec num;
    std::int64_t den = 1;
    std::int64_t mult = 1;
};

// Psi(v^monomial)^mult
struct SchurFactorV {
    KCyclotomic psi;
    IntVec monomial;
    std::int64_t mult = 1;

    bool operator==(const SchurFactorV &) const = default;
};

struct SchurElement {
    std::size_t char_index = 0;
    CycInt xi;
    IntVec lead;
    std::vector<SchurFactorV> factors;
};

// x-form entry as written in the data file; expressions are parsed by schur normalization
struct Radical {
    std::string name;  // e.g. "r"
    std::int64_t root = 2;
    std::string radicand;  // monomial expression, e.g. "x0x1y1y2z1z2"

    bool operator==(const Radical &) const = default;
};

struct XFormEntry {
    std::string character;
    CycInt coeff = CycInt::integer(1);
    std::string lead = "1";
    std::vector<std::string> factors;
    std::vector<Radical> radicals;
};

struct VFormFactor {
    std::int64_t order = 2;  // root order d
    std::int64_t exp = 1;    // root exponent
    IntVec monomial;
    std::int64_t mult = 1;
};

struct VFormEntry {
    std::string character;
    CycInt xi = CycInt::integer(1);
    IntVec lead;
    std::vector<VFormFactor> factors;
};

using SchurEntry = std::variant<XFormEntry, VFormEntry>;

struct CharacterTable {
    std::int64_t conductor = 1;
    std::vector<std::int64_t> class_sizes;
    std::vector<std::string> class_labels;
    std::vector<std::vector<CycInt>> values;  // rows follow GroupDatum::characters
};

struct HyperplaneTable {
    std::optional<IntVec> normal;  // nullopt: no essential hyperplane
    std::vector<std::int64_t> primes;
    Partition blocks;
    std::map<std::int64_t, Partition> per_prime;
    std::string notes;
};

struct InductionRow {
    std::string child;
    std::vector<std::string> parents;
};

struct SchurPair {
    std::string parent;
    std::string child;
};

struct CliffordLink {
    std::string parent;
    std::string child;
    std::int64_t cyclic_order = 1;
    // one entry per parent slot: a child slot name ("z0") or "fixed" (x_{C,j} -> zeta_{e_C}^j)
    std::vector<std::string> parameter_spec;
    std::vector<InductionRow> induction;
    std::vector<SchurPair> schur_pairs;
    std::string notes;
};

class GroupDatum {
public:
    std::string name;
    std::int64_t field_conductor = 1;
    std::int64_t mu_order = 2;
    std::int64_t group_order = 1;
    std::vector<Orbit> orbits;
    std::vector<CharLabel> characters;
    std::vector<SchurEntry> schur_entries;
    std::optional<CharacterTable> character_table;
    std::vector<HyperplaneTable> hyperplane_tables;
    std::vector<CliffordLink> clifford_links;
    bool partial = false;
    std::vector<std::string> notes;

    // resolved v-form per character, filled by resolve_schur (store does this on load)
    std::vector<std::optional<SchurElement>> schur;

    std::size_t slot_count() const;
    // (orbit index, j) for each slot
    std::pair<std::size_t, std::int64_t> slot(std::size_t s) const;
    std::size_t slot_offset(std::size_t orbit) const;
    std::optional<std::size_t> slot_by_param(const std::string &name) const;  // "z1"
    std::string slot_display(std::size_t s) const;                            // "c_1"
    std::optional<std::size_t> char_index(const std::string &label) const;
    std::size_t char_count() const { return characters.size(); }

    bool has_full_schur() const;
    bool has_any_schur() const;
    const HyperplaneTable *no_hyperplane_table() const;
};

}  // namespace hecke
