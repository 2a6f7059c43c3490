#pragma once

#include <stdexcept>
#include <string>

namespace gcgal {

// Base for everything this library throws on its own behalf.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct GrammarError : Error {
    using Error::Error;
};

// Unknown surface token handed to the parser / scorer.
struct UnknownTokenError : Error {
    explicit UnknownTokenError(const std::string& token)
        : Error("unknown token: '" + token + "'"), token(token) {}
    std::string token;
};

// A ParseLimits bound was exceeded; `limit` names which one.
struct LimitError : Error {
    LimitError(const std::string& limit, const std::string& detail)
        : Error("limit exceeded: " + limit + " (" + detail + ")"), limit(limit) {}
    std::string limit;
};

struct CorpusError : Error {
    using Error::Error;
};

struct CurriculumError : Error {
    using Error::Error;
};

struct TrainError : Error {
    using Error::Error;
};

struct MetricError : Error {
    using Error::Error;
};

// Experiment configuration problems map to CLI exit code 2.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace gcgal
