#pragma once

#include <stdexcept>
#include <string>

namespace kdp {

// Domain failures map to CLI exit code 3, schema failures to exit code 2.
enum class errc {
    not_in_p,
    out_of_range,
    not_an_extension,
    not_downward_closed,
    zero_polynomial,
    unknown_family,
    cap_exceeded,
};

const char* errc_name(errc c);

class domain_error : public std::runtime_error {
public:
    domain_error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

class schema_error : public std::runtime_error {
public:
    explicit schema_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace kdp
