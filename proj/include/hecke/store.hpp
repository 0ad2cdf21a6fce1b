#pragma once

#include <map>
#include <string>

#include "json.hpp"

#include "hecke/datum.hpp"

namespace hecke {

CycInt cycint_from_json(const nlohmann::json &j, const std::string &where);
nlohmann::json cycint_to_json(const CycInt &c);

// structural parse only; throws ValidationError naming the offending field
GroupDatum datum_from_json(const nlohmann::json &j);
nlohmann::json datum_to_json(const GroupDatum &g);

// semantic checks: Schur shape and value at one, partitions, tables, character table
std::vector<std::string> datum_problems(const GroupDatum &g);

GroupDatum parse_file(const std::string &path);  // parse + resolve, no semantic validation
GroupDatum load(const std::string &path);        // parse + full validation
void save(const GroupDatum &g, const std::string &path);

std::string default_db_dir();  // $HECKE_DB or the build-time default

class Database {
public:
    static Database open(const std::string &dir);
    const GroupDatum &get(const std::string &name) const;  // throws MissingPayloadError
    const GroupDatum *find(const std::string &name) const;
    const std::map<std::string, GroupDatum> &groups() const { return groups_; }
    void add(GroupDatum g);

private:
    std::map<std::string, GroupDatum> groups_;
};

}  // namespace hecke
