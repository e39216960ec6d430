#ifndef LEFSCHETZ_ERRORS_HPP
#define LEFSCHETZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lefschetz {

/// Error categories surfaced by the library. The CLI maps any thrown
/// Error to exit code 1 and prints the code tag together with the message.
enum class ErrorCode {
    NotAFace,
    VertexClash,
    FaceTooSmall,
    BadParameters,
    BadPrime,
    BadSpec,
    BadT,
    DegreeOutOfRange,
    NotArtinian,
    NotArtinianSeed,
    NotGorensteinShaped,
    NotGorensteinStar,
    ParseError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what_arg)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what_arg),
          code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

}  // namespace lefschetz

#endif
