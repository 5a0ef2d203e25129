#ifndef RINGFORGE_ERRORS_HPP
#define RINGFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ringforge {

// Contract violations: bad arguments, malformed configs, shape mismatches.
// The CLI maps these to exit code 1.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem and format failures: unreadable files, bad magic, truncation.
// The CLI maps these to exit code 2.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ringforge

#endif
