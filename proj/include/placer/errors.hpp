#pragma once

#include <stdexcept>
#include <string>

namespace placer {

/// Base class for all domain errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// No relation expression found in an instruction; caller may route to the LLM client.
class ParseFailure : public Error {
public:
    using Error::Error;
};

/// LLM completion contained no parseable tuple lines.
class LlmFormatFailure : public Error {
public:
    using Error::Error;
};

/// LLM endpoint unreachable or returned a non-2xx status.
class LlmUnavailable : public Error {
public:
    using Error::Error;
};

/// Embedding store lookup miss.
class KeyNotFound : public Error {
public:
    using Error::Error;
};

/// Remote encoder unreachable or returned malformed data.
class ProviderUnavailable : public Error {
public:
    using Error::Error;
};

/// Matrix/vector dimensions inconsistent with the configured (D, h).
class ShapeError : public Error {
public:
    using Error::Error;
};

/// Zero-norm token row fed to cosine similarity.
class DegenerateToken : public Error {
public:
    using Error::Error;
};

/// Bad magic, version, shape or truncation in a serialized artifact.
class FormatError : public Error {
public:
    using Error::Error;
};

/// Every cell of a placement field is masked off; the instruction contradicts the scene.
class InfeasiblePlacement : public Error {
public:
    using Error::Error;
};

/// Scene or instruction generation exhausted its retry budget.
class GenerationError : public Error {
public:
    using Error::Error;
};

} // namespace placer
