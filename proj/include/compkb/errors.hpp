#pragma once

#include <stdexcept>
#include <string>

namespace compkb {

// Base for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad user configuration: unknown keys, out-of-range values, missing roots.
struct ConfigError : Error {
    using Error::Error;
};

// Malformed input data (taxonomy dumps, tables, stores). Messages name the
// offending line when one exists.
struct IngestError : Error {
    using Error::Error;
};

// Failure inside a language-model or scoring backend.
struct BackendError : Error {
    using Error::Error;
};

// Remote protocol failure; carries the request id for log correlation.
struct RemoteError : BackendError {
    RemoteError(const std::string& msg, std::string request_id)
        : BackendError(msg + " [request " + request_id + "]"),
          request_id(std::move(request_id)) {}
    std::string request_id;
};

// Discriminator training cannot proceed (e.g. single-class data).
struct TrainError : Error {
    using Error::Error;
};

// A pipeline stage failed; prior checkpoints remain valid.
struct StageError : Error {
    using Error::Error;
};

}  // namespace compkb
