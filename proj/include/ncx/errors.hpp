#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncx {

// Argument outside a computed range (table or sieve limit, empty range).
class RangeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A computation would exceed its storage contract (one byte per table
// entry, 32-bit sieve entries, ...).
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// 64-bit arithmetic overflow while evaluating an expression value.
class OverflowError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Rejected expression text. offset() is the byte position of the offending
// character; equals text.size() for an unexpected end of input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at offset " + std::to_string(offset)),
          offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// Stream / file failures.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Table file rejections, one class per failure mode so callers can tell
// them apart.
class TableIoError : public IoError {
public:
    using IoError::IoError;
};
class BadMagicError : public TableIoError {
public:
    using TableIoError::TableIoError;
};
class BadVersionError : public TableIoError {
public:
    using TableIoError::TableIoError;
};
class TruncatedFileError : public TableIoError {
public:
    using TableIoError::TableIoError;
};

}  // namespace ncx
