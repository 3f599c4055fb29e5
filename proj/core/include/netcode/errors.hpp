#pragma once

#include <stdexcept>
#include <string>

namespace netcode {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad field parameters, cross-field operation, division by zero.
class FieldError : public Error {
public:
    using Error::Error;
};

/// Evaluation of a rational function at a root of its denominator.
class PoleError : public Error {
public:
    using Error::Error;
};

/// Malformed or cyclic network description.
class GraphError : public Error {
public:
    using Error::Error;
};

/// Mincut below the demanded rate; carries the violating sink.
class MincutError : public Error {
public:
    MincutError(const std::string& what, std::string sink)
        : Error(what), sink_(std::move(sink)) {}
    const std::string& sink() const { return sink_; }

private:
    std::string sink_;
};

/// LIF cannot proceed: no coefficient choice keeps all sink bases full rank.
class FieldTooSmallError : public Error {
public:
    FieldTooSmallError(const std::string& what, int edge, int sink_count)
        : Error(what), edge_(edge), sink_count_(sink_count) {}
    int edge() const { return edge_; }
    int sink_count() const { return sink_count_; }

private:
    int edge_;
    int sink_count_;
};

/// Exhaustive search ran past its exploration budget.
class CapExceededError : public Error {
public:
    CapExceededError(const std::string& what, double space_size)
        : Error(what), space_size_(space_size) {}
    double space_size() const { return space_size_; }

private:
    double space_size_;
};

}  // namespace netcode
