// Copyright 2026 The peersel Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PEERSEL_ERROR_HPP
#define PEERSEL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace peersel {

enum class ErrorCode {
  InvalidArgument,  // malformed input: out-of-range ids, bad parameters
  Parse,            // text that does not follow the instance format
  Domain,           // a mechanism or analysis precondition does not hold
  Budget,           // enumeration would exceed the configured budget
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace peersel

#endif  // PEERSEL_ERROR_HPP
