// Copyright 2026 The peersel Authors
// SPDX-License-Identifier: Apache-2.0

#include "parallel.hpp"

#include <cstdlib>
#include <string>

namespace peersel::detail {

int worker_count() {
  if (const char* env = std::getenv("PEERSEL_THREADS")) {
    try {
      const int value = std::stoi(env);
      if (value > 0) return value;
    } catch (const std::exception&) {
      // fall through to the default
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace peersel::detail
