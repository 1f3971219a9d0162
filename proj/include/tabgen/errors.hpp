#pragma once

#include <stdexcept>
#include <string>

namespace tabgen {

// Base for all library errors. The CLI maps these to nonzero exit codes.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
    using Error::Error;
};
struct SchemaError : Error {
    using Error::Error;
};
struct PreprocessError : Error {
    using Error::Error;
};
struct DecodeError : Error {
    using Error::Error;
};
struct SplitError : Error {
    using Error::Error;
};
struct ShapeError : Error {
    using Error::Error;
};
struct ConfigError : Error {
    using Error::Error;
};
struct FoldError : Error {
    using Error::Error;
};
struct CacheError : Error {
    using Error::Error;
};
struct TrainError : Error {
    using Error::Error;
};
struct DomainError : Error {
    using Error::Error;
};
struct LabelError : Error {
    using Error::Error;
};
struct BindingError : Error {
    using Error::Error;
};
struct BundleError : Error {
    using Error::Error;
};
struct CorruptionError : BundleError {
    using BundleError::BundleError;
};
struct ArgumentError : Error {
    using Error::Error;
};

}  // namespace tabgen
