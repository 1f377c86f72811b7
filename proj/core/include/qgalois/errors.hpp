#pragma once

#include <stdexcept>
#include <string>

namespace qg {

struct DivisionByZero : std::runtime_error {
    explicit DivisionByZero(const std::string& what = "division by zero")
        : std::runtime_error(what) {}
};

struct ForbiddenSpecialization : std::runtime_error {
    explicit ForbiddenSpecialization(const std::string& what)
        : std::runtime_error(what) {}
};

struct KindMismatch : std::runtime_error {
    explicit KindMismatch(const std::string& what = "algebra kind mismatch")
        : std::runtime_error(what) {}
};

struct NotAMonomial : std::runtime_error {
    explicit NotAMonomial(const std::string& what = "element is not a single monomial")
        : std::runtime_error(what) {}
};

struct ActionMismatch : std::runtime_error {
    explicit ActionMismatch(const std::string& what = "skew elements carry different actions")
        : std::runtime_error(what) {}
};

struct DataMismatch : std::runtime_error {
    explicit DataMismatch(const std::string& what = "GWA elements carry different data")
        : std::runtime_error(what) {}
};

struct UnknownInstance : std::runtime_error {
    explicit UnknownInstance(const std::string& name)
        : std::runtime_error("unknown GWA instance: " + name) {}
};

struct MissingImage : std::runtime_error {
    explicit MissingImage(const std::string& gen)
        : std::runtime_error("no image given for generator: " + gen) {}
};

struct UndefinedAction : std::runtime_error {
    explicit UndefinedAction(const std::string& what = "action undefined on this algebra")
        : std::runtime_error(what) {}
};

struct GroupTooLarge : std::runtime_error {
    explicit GroupTooLarge(const std::string& what = "group closure exceeds configured cap")
        : std::runtime_error(what) {}
};

struct UnknownClaim : std::runtime_error {
    explicit UnknownClaim(const std::string& id)
        : std::runtime_error("unknown claim id: " + id) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qg
