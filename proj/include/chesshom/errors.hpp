#pragma once

#include <stdexcept>
#include <string>

namespace chesshom {

struct NotAFace : std::runtime_error {
    explicit NotAFace(const std::string& what) : std::runtime_error(what) {}
};

struct DisjointnessViolation : std::runtime_error {
    explicit DisjointnessViolation(const std::string& what) : std::runtime_error(what) {}
};

struct CollisionError : std::runtime_error {
    explicit CollisionError(const std::string& what) : std::runtime_error(what) {}
};

struct NotASubcomplex : std::runtime_error {
    explicit NotASubcomplex(const std::string& what) : std::runtime_error(what) {}
};

struct NotACycle : std::runtime_error {
    explicit NotACycle(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct LabelError : std::runtime_error {
    explicit LabelError(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownCase : std::runtime_error {
    explicit UnknownCase(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace chesshom
