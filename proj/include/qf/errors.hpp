#pragma once

#include <stdexcept>
#include <string>

namespace qf {

// Malformed input: bad file syntax, out-of-range table entries,
// structurally invalid arguments. CLI exit code 2.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Parse failure with a source position. CLI exit code 2.
class parse_error : public input_error {
public:
    parse_error(int line, int col, const std::string& msg)
        : input_error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg),
          line(line), col(col) {}
    int line;
    int col;
};

// A stated hypothesis of a construction does not hold (e.g. t <= 0 for a
// right-order extension, nonempty stabilizer at the base point). CLI exit code 2.
class hypothesis_error : public input_error {
public:
    explicit hypothesis_error(const std::string& msg) : input_error(msg) {}
};

// A configured resource bound was hit; the result is unknown, never wrong.
// CLI exit code 3.
class limit_error : public std::runtime_error {
public:
    explicit limit_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace qf
