#pragma once

#include <stdexcept>
#include <string>

namespace coverplan {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};

// Carries the JSON-ish field path of the offending entry, e.g. "goals[0]".
struct ValidationError : Error {
    std::string field;
    ValidationError(std::string field_path, const std::string& what)
        : Error(field_path + ": " + what), field(std::move(field_path)) {}
};

struct EmptyConfigRegion : Error {
    using Error::Error;
};

struct DegenerateGeometry : Error {
    using Error::Error;
};

struct InvalidPath : Error {
    using Error::Error;
};

struct CombinationExplosion : Error {
    using Error::Error;
};

struct OutOfRegion : Error {
    using Error::Error;
};

struct ArtifactMismatch : Error {
    using Error::Error;
};

struct UnknownTarget : Error {
    using Error::Error;
};

}  // namespace coverplan
