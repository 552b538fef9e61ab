#pragma once

#include <stdexcept>
#include <string>

namespace logtb {

/// Structural problem in an input document (missing key, bad type, dangling index).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Input parsed but violates a mathematical invariant (non-primitive ray, ...).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// An operation was called outside its contract (non-smooth fan for betti, ...).
class PreconditionFailed : public std::runtime_error {
public:
    explicit PreconditionFailed(const std::string& what) : std::runtime_error(what) {}
};

class DimensionMismatch : public std::runtime_error {
public:
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

class NotUnimodular : public std::runtime_error {
public:
    explicit NotUnimodular(const std::string& what) : std::runtime_error(what) {}
};

class NonSmoothCone : public std::runtime_error {
public:
    explicit NonSmoothCone(const std::string& what) : std::runtime_error(what) {}
};

class NotPure : public std::runtime_error {
public:
    explicit NotPure(const std::string& what) : std::runtime_error(what) {}
};

class NotSnc : public std::runtime_error {
public:
    explicit NotSnc(const std::string& what) : std::runtime_error(what) {}
};

class NotLogarithmic : public std::runtime_error {
public:
    explicit NotLogarithmic(const std::string& what) : std::runtime_error(what) {}
};

class NonUnimodularMap : public std::runtime_error {
public:
    explicit NonUnimodularMap(const std::string& what) : std::runtime_error(what) {}
};

class ZeroDirection : public std::runtime_error {
public:
    explicit ZeroDirection(const std::string& what) : std::runtime_error(what) {}
};

class NotHopf : public std::runtime_error {
public:
    explicit NotHopf(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace logtb
