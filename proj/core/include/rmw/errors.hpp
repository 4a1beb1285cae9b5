// Error types shared by all modules.  Each error carries a stable code string
// so that command-line front ends can map it to an exit status and a
// machine-readable witness.
#pragma once

#include <stdexcept>
#include <string>

namespace rmw {

class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what) : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }
  // True for errors caused by bad user input (as opposed to failed checks).
  virtual bool input_error() const { return false; }

 private:
  std::string code_;
};

class InputError : public Error {
 public:
  using Error::Error;
  bool input_error() const override { return true; }
};

}  // namespace rmw
