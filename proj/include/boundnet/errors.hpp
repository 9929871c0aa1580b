#pragma once

#include <stdexcept>
#include <string>

namespace boundnet {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Fewer than 3 sites, or all sites collinear.
class DegenerateInput : public Error {
public:
    using Error::Error;
};

/// Two sites share exactly the same coordinates.
class DuplicateSite : public Error {
public:
    using Error::Error;
};

/// A value is outside its documented domain (non-finite coordinate,
/// threshold out of range, non-unit normal, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// An activation set references a node id >= layout size.
class InvalidNodeId : public Error {
public:
    using Error::Error;
};

/// Readings length does not match the layout.
class LengthMismatch : public Error {
public:
    using Error::Error;
};

/// An aggregate operation received no input.
class EmptyInput : public Error {
public:
    using Error::Error;
};

/// A filter left nothing to operate on (e.g. scatter plot of a missing n).
class EmptyAfterFilter : public Error {
public:
    using Error::Error;
};

/// A configuration or data file violates its schema. `path` points at the
/// offending field, e.g. "field.center[0]".
class SchemaError : public Error {
public:
    SchemaError(const std::string& path, const std::string& what)
        : Error(path + ": " + what), path_(path) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

/// Filesystem failure (open, write, rename).
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace boundnet
