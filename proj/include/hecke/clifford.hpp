#pragma once

#include "hecke/datum.hpp"
#include "hecke/schur.hpp"

namespace hecke {

// structural problems of a link against its two groups; empty means fine
std::vector<std::string> link_problems(const CliffordLink &link, const GroupDatum &parent, const GroupDatum &child);

// child slot of each parent slot, nullopt for fixed slots
std::vector<std::optional<std::size_t>> slot_map(const CliffordLink &link, const GroupDatum &parent, const GroupDatum &child);
// parent normal restricted to the child slots; may be zero
IntVec restrict_normal(const CliffordLink &link, const GroupDatum &parent, const GroupDatum &child, const IntVec &normal);

Partition transport_blocks(const CliffordLink &link, const GroupDatum &parent, const GroupDatum &child,
                           const Partition &parent_blocks);
// no-hyperplane table first, then restricted hyperplanes in order of first appearance; each is
// transported from the join of the parent tables restricting to it (and to zero)
std::vector<HyperplaneTable> descend_hyperplanes(const CliffordLink &link, const GroupDatum &parent, const GroupDatum &child,
                                                 const std::vector<HyperplaneTable> &parent_tables);

// parent x-form entry with the fixed slots set to their roots of unity, normalized over the child
SchurElement specialize_to_child(const CliffordLink &link, const GroupDatum &parent, const GroupDatum &child,
                                 const XFormEntry &entry, std::size_t child_index);
// parent Schur element specialized versus |Omega| times the child's, for every pair with both present
std::vector<std::string> validate_schur_scaling(const CliffordLink &link, const GroupDatum &parent, const GroupDatum &child);

// stored child tables against descended parent tables, for hyperplanes present in both
std::vector<std::string> transport_mismatches(const CliffordLink &link, const GroupDatum &parent, const GroupDatum &child);

}  // namespace hecke
