#pragma once

#include <gtest/gtest.h>

#include <functional>

#include "semilab/error.hpp"

namespace semilab::testing {

// Passes when fn throws semilab::Error with the given code.
inline ::testing::AssertionResult throws_code(const std::function<void()>& fn, Errc code) {
  try {
    fn();
  } catch (const Error& e) {
    if (e.code() == code) return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure() << "threw " << to_string(e.code()) << ": " << e.what();
  } catch (const std::exception& e) {
    return ::testing::AssertionFailure() << "threw a foreign exception: " << e.what();
  }
  return ::testing::AssertionFailure() << "did not throw " << to_string(code);
}

}  // namespace semilab::testing

#define EXPECT_ERRC(stmt, code) EXPECT_TRUE(::semilab::testing::throws_code([&] { (void)(stmt); }, code))
