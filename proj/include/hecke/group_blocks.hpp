#pragma once

#include "hecke/datum.hpp"

namespace hecke {

// |C| chi(g) / chi(1); throws ValidationError when the division is not exact
CycInt central_character(const CharacterTable &t, std::size_t chi, std::size_t cls);
Partition p_blocks(const CharacterTable &t, std::int64_t p);
Partition p_blocks_serial(const CharacterTable &t, std::int64_t p);
// closure under the row permutations induced by Gal(Q(zeta_N)/Q)
Partition galois_close(const CharacterTable &t, const Partition &pi);
// sanity checks on an ingested table; empty means fine
std::vector<std::string> table_problems(const GroupDatum &g, const CharacterTable &t);

}  // namespace hecke
