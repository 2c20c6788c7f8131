#pragma once

#include <stdexcept>
#include <string>

namespace ricci {

enum class errc {
    malformed_input = 1,
    unknown_node = 2,
    not_an_edge = 3,
    degree_mismatch = 4,
    oracle_too_large = 5,
    domain_error = 6,
    precondition_violation = 7,
    unsupported_regime = 8,
    io_error = 9,
    internal = 10,
};

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace ricci
