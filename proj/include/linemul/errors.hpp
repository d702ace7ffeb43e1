#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace linemul {

// Domain errors carry a stable name that also prefixes what().
// The CLI maps any Error to exit code 1 and prints the name.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& message)
        : std::runtime_error(name + ": " + message), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

struct EmptyInput : Error {
    explicit EmptyInput(const std::string& m) : Error("EmptyInput", m) {}
};

struct InvalidDigit : Error {
    explicit InvalidDigit(const std::string& m) : Error("InvalidDigit", m) {}
};

struct InvalidBase : Error {
    explicit InvalidBase(const std::string& m) : Error("InvalidBase", m) {}
};

struct BaseMismatch : Error {
    explicit BaseMismatch(const std::string& m) : Error("BaseMismatch", m) {}
};

struct InvalidConfig : Error {
    explicit InvalidConfig(const std::string& m) : Error("InvalidConfig", m) {}
};

} // namespace linemul
