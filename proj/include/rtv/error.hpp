#pragma once

#include <stdexcept>
#include <string>

namespace rtv {

/// Error carrying a stable machine-readable code ("MissingColumn", "InvalidN", ...).
/// The code is what HTTP error bodies and CLI reports expose.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

} // namespace rtv
