#pragma once

#include <stdexcept>
#include <string>

namespace swc {

struct InvalidInput : std::runtime_error {
    explicit InvalidInput(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotPositiveDefinite : std::runtime_error {
    explicit NotPositiveDefinite(const std::string& msg) : std::runtime_error(msg) {}
};

struct UnsupportedNorm : std::runtime_error {
    explicit UnsupportedNorm(const std::string& msg) : std::runtime_error(msg) {}
};

struct UnsupportedPair : std::runtime_error {
    explicit UnsupportedPair(const std::string& msg) : std::runtime_error(msg) {}
};

struct OutOfDomain : std::runtime_error {
    explicit OutOfDomain(const std::string& msg) : std::runtime_error(msg) {}
};

struct MissingBound : std::runtime_error {
    explicit MissingBound(const std::string& msg) : std::runtime_error(msg) {}
};

struct Infeasible : std::runtime_error {
    explicit Infeasible(const std::string& msg) : std::runtime_error(msg) {}
};

struct UnsupportedGraph : std::runtime_error {
    explicit UnsupportedGraph(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace swc
