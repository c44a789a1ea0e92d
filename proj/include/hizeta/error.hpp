#pragma once

#include <stdexcept>
#include <string>

namespace hizeta {

/// Base of every failure raised by the library. `kind()` is the stable,
/// machine-readable tag used by the CLI (`error:<kind>:<message>`).
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define HIZETA_ERROR(Name, tag)                                             \
    class Name : public Error {                                             \
    public:                                                                 \
        explicit Name(const std::string& what) : Error(tag, what) {}        \
    }

HIZETA_ERROR(DomainError, "domain");
HIZETA_ERROR(PoleError, "pole");
HIZETA_ERROR(NearPoleError, "near-pole");
HIZETA_ERROR(ShapeError, "shape");
HIZETA_ERROR(CapacityError, "capacity");
HIZETA_ERROR(UnsupportedError, "unsupported");
HIZETA_ERROR(ContinuationError, "continuation");
HIZETA_ERROR(DivergenceError, "divergence");
HIZETA_ERROR(TruncationError, "truncation");
HIZETA_ERROR(OrderError, "order");

#undef HIZETA_ERROR

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what, int line = 0)
        : Error("parse", line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    /// 1-based line number of the offending input, 0 when not line oriented.
    int line() const noexcept { return line_; }

private:
    int line_;
};

}  // namespace hizeta
