#pragma once

#include <stdexcept>
#include <string>

namespace rwlab {

enum class errc {
    invalid_argument,
    generation_failed,
    resource_limit,
    io_failure,
    internal,
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace rwlab
