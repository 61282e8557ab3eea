// Copyright (C) 2026 The ndspec Authors
// SPDX-License-Identifier: Apache-2.0

#include "ndspec/error.hpp"

#include <sstream>
#include <utility>

namespace ndspec {

namespace {

std::string pivot_message(std::size_t pivot, std::size_t stage,
                          const std::vector<std::size_t>& frequency) {
  std::ostringstream os;
  os << "matrix is not positive definite (pivot " << pivot << ")";
  if (stage != 0) {
    os << " at stage " << stage << ", frequency indices (";
    for (std::size_t i = 0; i < frequency.size(); ++i) os << (i ? "," : "") << frequency[i];
    os << ")";
  }
  return os.str();
}

}  // namespace

NotPositiveDefinite::NotPositiveDefinite(std::size_t pivot)
    : Error(pivot_message(pivot, 0, {})), pivot_(pivot) {}

NotPositiveDefinite::NotPositiveDefinite(std::size_t pivot, std::size_t stage,
                                         std::vector<std::size_t> frequency)
    : Error(pivot_message(pivot, stage, frequency)),
      pivot_(pivot),
      stage_(stage),
      frequency_(std::move(frequency)) {}

}  // namespace ndspec
