#pragma once

#include <stdexcept>
#include <string>

namespace tgp {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid experiment settings. key() names the offending setting when known.
class ConfigError : public Error {
public:
    ConfigError(std::string key, const std::string& message)
        : Error(key.empty() ? message : key + ": " + message)
        , key_(std::move(key))
    {
    }

    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

// An operation was called in violation of its preconditions.
class UsageError : public Error {
public:
    using Error::Error;
};

class EvaluationError : public Error {
public:
    using Error::Error;
};

} // namespace tgp
