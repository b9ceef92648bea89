#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ewit {

/// Failure categories surfaced to callers, scan samples and the CLI.
enum class ErrorKind {
    domain,
    unreachable_witness,
    sign_inconsistent_witness,
    degenerate_geometry,
    parse,
    monotonicity,
    non_positive_limit,
    kind_mismatch,
    usage,
    config,
    io,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what)
{
    throw Error(kind, what);
}

} // namespace ewit
