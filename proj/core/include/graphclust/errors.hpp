#ifndef GRAPHCLUST_ERRORS_HPP
#define GRAPHCLUST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace graphclust {

/// Dimension mismatch between operands; the message names both shapes.
class ShapeError : public std::invalid_argument {
public:
    explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

/// Invalid configuration value (neighbor count out of range, bad cluster count, ...).
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed or unusable input data (parse failures, asymmetric affinity, I/O).
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// Non-finite value produced during iteration; carries the iteration index.
class NumericError : public std::runtime_error {
public:
    NumericError(const std::string& what, long iteration)
        : std::runtime_error(what + " (iteration " + std::to_string(iteration) + ")"),
          iteration_(iteration) {}
    long iteration() const { return iteration_; }

private:
    long iteration_;
};

} // namespace graphclust

#endif
