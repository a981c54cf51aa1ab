#pragma once

#include <stdexcept>
#include <string>

namespace kcx {

// Error categories map onto CLI exit codes: usage=1, data=2, network=3.
enum class ErrorKind {
  usage,
  data,          // malformed or inconsistent input
  precondition,  // operation contract violated by the caller
  lookup,        // unknown language/article/country key
  network,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  int exit_code() const noexcept {
    switch (kind_) {
      case ErrorKind::usage: return 1;
      case ErrorKind::network: return 3;
      default: return 2;
    }
  }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void throw_data(std::string msg) { throw Error(ErrorKind::data, std::move(msg)); }
[[noreturn]] inline void throw_precondition(std::string msg) { throw Error(ErrorKind::precondition, std::move(msg)); }
[[noreturn]] inline void throw_lookup(std::string msg) { throw Error(ErrorKind::lookup, std::move(msg)); }
[[noreturn]] inline void throw_network(std::string msg) { throw Error(ErrorKind::network, std::move(msg)); }

}  // namespace kcx
