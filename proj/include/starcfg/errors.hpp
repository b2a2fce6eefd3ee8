#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace starcfg {

/// Malformed text input; `position` is a 0-based offset into the source.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          pos_(position) {}
    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

/// A form whose degree contradicts what the operation requires, including
/// non-homogeneous parser input.
class DegreeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Two of the given lines coincide. Indices are 0-based.
class DuplicateLineError : public std::invalid_argument {
public:
    DuplicateLineError(int i, int j)
        : std::invalid_argument("lines " + std::to_string(i + 1) + " and " +
                                std::to_string(j + 1) + " coincide"),
          i_(i), j_(j) {}
    int first() const noexcept { return i_; }
    int second() const noexcept { return j_; }

private:
    int i_, j_;
};

/// Three of the given lines pass through one point. Indices are 0-based.
class ConcurrentLinesError : public std::invalid_argument {
public:
    ConcurrentLinesError(int i, int j, int k)
        : std::invalid_argument("lines " + std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + "," + std::to_string(k + 1) +
                                " meet in a point"),
          i_(i), j_(j), k_(k) {}
    int first() const noexcept { return i_; }
    int second() const noexcept { return j_; }
    int third() const noexcept { return k_; }

private:
    int i_, j_, k_;
};

/// The linear conditions of an interpolation problem admit only the zero form.
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A rejection-sampling loop hit its retry cap.
class RetryCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A consistency check that must hold did not.
class CheckFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A group-law construction produced coincident points or a bad line
/// arrangement; the caller should pick a different generic point.
class DegeneracyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace starcfg
