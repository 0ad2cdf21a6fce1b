#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

// Each error kind carries the CLI exit code it maps to.
class HeckeError : public std::runtime_error {
public:
    HeckeError(const std::string &what, int code) : std::runtime_error(what), code_(code) {}
    int exit_code() const { return code_; }

private:
    int code_;
};

struct BadPrimeError : HeckeError {
    BadPrimeError() : HeckeError("The number p should divide the order of the group", 2) {}
};

struct MissingPayloadError : HeckeError {
    explicit MissingPayloadError(const std::string &what) : HeckeError(what, 3) {}
};

struct ArityError : HeckeError {
    explicit ArityError(const std::string &what) : HeckeError(what, 4) {}
};

struct ValidationError : HeckeError {
    ValidationError(const std::string &what, std::vector<std::string> problems = {})
        : HeckeError(what, 5), problems(std::move(problems)) {}
    std::vector<std::string> problems;
};

}  // namespace hecke
