#ifndef POLYWALK_ERRORS_HPP
#define POLYWALK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polywalk {

// Error categories map onto CLI exit codes: invalid input -> 2,
// unsupported/budget -> 3.
enum class ErrorKind {
  InvalidInput,
  Unsupported,
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& code, const std::string& what)
      : std::runtime_error(code + ": " + what), kind_(kind), code_(code) {}
  ErrorKind kind() const { return kind_; }
  const std::string& code() const { return code_; }

private:
  ErrorKind kind_;
  std::string code_;
};

inline Error invalid(const std::string& code, const std::string& what) {
  return Error(ErrorKind::InvalidInput, code, what);
}
inline Error unsupported(const std::string& code, const std::string& what) {
  return Error(ErrorKind::Unsupported, code, what);
}

}  // namespace polywalk

#endif
