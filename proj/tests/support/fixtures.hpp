#pragma once

#include <cctype>
#include <string>

#include <gtest/gtest.h>

#include "algebras.hpp"

namespace bfl::testing {

inline std::string algebra_name(const ::testing::TestParamInfo<NamedAlgebra>& info) {
  std::string s;
  for (char c : info.param.name) s += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  return s;
}

}  // namespace bfl::testing
