#pragma once

#include <stdexcept>
#include <string>

namespace qmf {

// Mirrors qmf_status in qmf.h.
enum class Status : int {
    ok = 0,
    invalid_argument = 1,
    domain = 2,
    pole = 3,
    unsupported = 4,
    convergence = 5,
    parse = 6,
    budget = 7,
    internal = 8,
};

class Error : public std::runtime_error {
public:
    Error(Status code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Status code() const noexcept { return code_; }

private:
    Status code_;
};

[[noreturn]] inline void fail(Status code, const std::string& what) { throw Error(code, what); }

inline const char* status_name(Status s) {
    switch (s) {
    case Status::ok: return "ok";
    case Status::invalid_argument: return "invalid argument";
    case Status::domain: return "domain error";
    case Status::pole: return "pole";
    case Status::unsupported: return "unsupported";
    case Status::convergence: return "convergence failure";
    case Status::parse: return "parse error";
    case Status::budget: return "budget exceeded";
    case Status::internal: return "internal error";
    }
    return "unknown";
}

}  // namespace qmf
