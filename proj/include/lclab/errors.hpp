#ifndef LCLAB_ERRORS_HPP
#define LCLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lclab {

// Base class for all engine failures.
struct EngineError : std::runtime_error {
    explicit EngineError(const std::string& what) : std::runtime_error(what) {}
};

// Mismatched ambient data: wrong number of variables, wrong rank, wrong ring.
struct StructuralError : EngineError {
    explicit StructuralError(const std::string& what) : EngineError(what) {}
};

// Operation applied to an input it is not defined for (e.g. initial form of 0).
struct UndefinedInputError : EngineError {
    explicit UndefinedInputError(const std::string& what) : EngineError(what) {}
};

// A precondition stated by the public contract was violated by the caller.
struct PreconditionError : EngineError {
    explicit PreconditionError(const std::string& what) : EngineError(what) {}
};

// Safety valve: an internal iteration exceeded its (very generous) step cap.
struct LimitError : EngineError {
    explicit LimitError(const std::string& what) : EngineError(what) {}
};

}  // namespace lclab

#endif
