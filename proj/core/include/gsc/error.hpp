#ifndef GSC_ERROR_HPP_
#define GSC_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace gsc {

// Every recoverable failure is thrown as an Error. Kind maps onto the CLI
// exit codes: Parse and Precondition exit 2, Budget exits 3.
class Error : public std::runtime_error {
 public:
  enum class Kind { Parse, Precondition, Budget };

  Error(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  Kind kind() const { return kind_; }

  static Error parse(const std::string& m) { return {Kind::Parse, m}; }
  static Error precondition(const std::string& m) {
    return {Kind::Precondition, m};
  }
  static Error budget(const std::string& m) { return {Kind::Budget, m}; }

 private:
  Kind kind_;
};

}  // namespace gsc

#endif  // GSC_ERROR_HPP_
