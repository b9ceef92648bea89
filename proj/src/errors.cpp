#include "ewit/errors.hpp"

namespace ewit {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::unreachable_witness: return "unreachable_witness";
    case ErrorKind::sign_inconsistent_witness: return "sign_inconsistent_witness";
    case ErrorKind::degenerate_geometry: return "degenerate_geometry";
    case ErrorKind::parse: return "parse";
    case ErrorKind::monotonicity: return "monotonicity";
    case ErrorKind::non_positive_limit: return "non_positive_limit";
    case ErrorKind::kind_mismatch: return "kind_mismatch";
    case ErrorKind::usage: return "usage";
    case ErrorKind::config: return "config";
    case ErrorKind::io: return "io";
    }
    return "unknown";
}

} // namespace ewit
