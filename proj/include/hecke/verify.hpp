#pragma once

#include "json.hpp"

#include "hecke/store.hpp"

namespace hecke {

struct VerifyReport {
    std::vector<std::string> files;
    std::vector<std::string> problems;

    bool ok() const { return problems.empty(); }
    nlohmann::json to_json() const;
};

// files or directories; every validator plus cross-group Clifford checks
VerifyReport verify_paths(const std::vector<std::string> &paths);
// cross-group checks on already parsed groups
std::vector<std::string> cross_group_problems(const std::map<std::string, GroupDatum> &groups);

}  // namespace hecke
