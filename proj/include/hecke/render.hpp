#pragma once

#include "hecke/datum.hpp"

namespace hecke {

// "c_0-2c_1+c_2=0"; terms in slot order, unit coefficients suppressed
std::string render_hyperplane(const GroupDatum &g, const IntVec &normal);
std::string render_partition_index(const Partition &p);                      // [[1],[2,5,7]]
std::string render_partition_names(const GroupDatum &g, const Partition &p);  // [["phi{1,0}"],...]
// "0,1,2" -> (0,1,2); throws ArityError on a wrong count, std::invalid_argument on junk
IntVec parse_exponents(const std::string &text, std::size_t expected);

}  // namespace hecke
