#ifndef XRPERF_ERRORS_HPP
#define XRPERF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace xrperf {

/// Base class for all model-level errors raised by evaluation operations.
class ModelError : public std::runtime_error {
public:
    explicit ModelError(const std::string& what) : std::runtime_error(what) {}
};

/// An M/M/1 buffer was asked for its sojourn time with service rate <= arrival rate.
class UnstableQueue : public ModelError {
public:
    explicit UnstableQueue(const std::string& what) : ModelError(what) {}
};

/// A remote offload plan was evaluated with no edge servers configured.
class NoEdgeConfigured : public ModelError {
public:
    explicit NoEdgeConfigured(const std::string& what) : ModelError(what) {}
};

/// An AoI average was requested over an empty sample list.
class EmptyUpdates : public ModelError {
public:
    explicit EmptyUpdates(const std::string& what) : ModelError(what) {}
};

/// RoI was requested for a non-positive average AoI.
class DegenerateAoi : public ModelError {
public:
    explicit DegenerateAoi(const std::string& what) : ModelError(what) {}
};

/// The least-squares normal system is singular at the configured tolerance.
class RankDeficient : public ModelError {
public:
    explicit RankDeficient(const std::string& what) : ModelError(what) {}
};

/// Fewer observations than unknown coefficients.
class InsufficientData : public ModelError {
public:
    explicit InsufficientData(const std::string& what) : ModelError(what) {}
};

/// Malformed scenario file, CSV, or parameter path.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace xrperf

#endif // XRPERF_ERRORS_HPP
