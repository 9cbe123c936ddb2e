#ifndef QBMG_ERRORS_HPP
#define QBMG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qbmg {

// Malformed input text (.qdg/.udg/tree/truncation files). line is 1-based,
// 0 when no line applies.
class parse_error : public std::runtime_error {
public:
    parse_error(std::string message, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : message),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_ = 0;
};

// A hard size guard was exceeded (isomorphism search, assignment space,
// orientation fallback, biclique search).
class guard_error : public std::runtime_error {
public:
    explicit guard_error(const std::string& message) : std::runtime_error(message) {}
};

// A documented precondition was violated; reported distinctly from a
// property failing.
class precondition_error : public std::invalid_argument {
public:
    explicit precondition_error(const std::string& message)
        : std::invalid_argument(message) {}
};

}  // namespace qbmg

#endif
