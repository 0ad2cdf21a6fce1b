#pragma once

#include <random>

#include "hecke/store.hpp"

namespace testing_data {

inline const hecke::Database &db() {
    static const hecke::Database d = hecke::Database::open(HECKE_TEST_DATA);
    return d;
}

inline const hecke::GroupDatum &group(const std::string &name) { return db().get(name); }

inline hecke::CycInt random_cyc(std::mt19937 &rng, std::int64_t conductor, int lo = -5, int hi = 5) {
    std::uniform_int_distribution<int> u(lo, hi);
    std::vector<std::int64_t> c(static_cast<std::size_t>(hecke::euler_phi(conductor)));
    for (auto &x : c) x = u(rng);
    return hecke::CycInt(conductor, c);
}

}  // namespace testing_data
