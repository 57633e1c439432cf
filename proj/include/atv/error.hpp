#ifndef ATV_ERROR_HPP
#define ATV_ERROR_HPP

#include <stdexcept>
#include <string>

namespace atv {

enum class ErrorCode {
    parse_error = 1,
    validation_error = 2,
    degree_out_of_range = 3,
    not_connected = 4,
    enumeration_cap_exceeded = 5,
    invalid_parameters = 6,
    internal_inconsistency = 7,
    ill_formed_pairing = 8,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace atv

#endif
