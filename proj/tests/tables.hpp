#pragma once

#include "hecke/datum.hpp"

namespace testing_data {

// C_n with rows chi_k(g^j) = zeta_n^{jk}
inline hecke::CharacterTable cyclic_table(std::int64_t n) {
    hecke::CharacterTable t;
    t.conductor = n;
    t.class_sizes.assign(static_cast<std::size_t>(n), 1);
    for (std::int64_t k = 0; k < n; ++k) {
        std::vector<hecke::CycInt> row;
        for (std::int64_t j = 0; j < n; ++j)
            row.push_back(hecke::CycInt::root(hecke::RootOfUnity::from_fraction(j * k, n), n));
        t.values.push_back(row);
    }
    return t;
}

// S3 with the reflection character first, then trivial and sign; classes 1, (12), (123)
inline hecke::CharacterTable s3_table() {
    using hecke::CycInt;
    hecke::CharacterTable t;
    t.class_sizes = {1, 3, 2};
    t.values = {{CycInt::integer(2), CycInt::integer(0), CycInt::integer(-1)},
                {CycInt::integer(1), CycInt::integer(1), CycInt::integer(1)},
                {CycInt::integer(1), CycInt::integer(-1), CycInt::integer(1)}};
    return t;
}

}  // namespace testing_data
