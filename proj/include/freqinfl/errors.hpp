#ifndef FREQINFL_ERRORS_HPP
#define FREQINFL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace freqinfl {

// Process exit codes used by the CLI. Library code throws the exception
// types below; the tool maps them to these codes at the boundary.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitData = 2,
    kExitNumeric = 3,
};

/// Bad command line or config file usage.
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed or inconsistent input data (parse failures, coverage gaps,
/// empty inputs, insufficient lemmas).
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Parse failure in a structured text file; carries position info.
class ParseError : public DataError {
public:
    ParseError(const std::string& file, std::size_t line_number,
               std::size_t byte_offset, const std::string& msg)
        : DataError(file + ":" + std::to_string(line_number) + " (byte offset " +
                    std::to_string(byte_offset) + "): " + msg),
          file_(file),
          line_number_(line_number),
          byte_offset_(byte_offset) {}

    const std::string& file() const { return file_; }
    std::size_t line_number() const { return line_number_; }
    std::size_t byte_offset() const { return byte_offset_; }

private:
    std::string file_;
    std::size_t line_number_;
    std::size_t byte_offset_;
};

/// Floating-point range problems (overflow to infinity, weight dynamic
/// range beyond what doubles can represent).
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace freqinfl

#endif // FREQINFL_ERRORS_HPP
