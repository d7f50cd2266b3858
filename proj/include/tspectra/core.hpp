#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace tspectra {

using i64 = std::int64_t;

// C(m,2); zero for m < 2.
constexpr i64 choose2(i64 m) { return m < 2 ? 0 : m * (m - 1) / 2; }

// m-th triangular number; zero for m < 1.
constexpr i64 triangular(i64 m) { return m < 1 ? 0 : m * (m + 1) / 2; }

// Floor division (C++ / truncates toward zero, wrong for negatives).
constexpr i64 floor_div(i64 a, i64 b) {
  i64 q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

constexpr i64 ceil_div(i64 a, i64 b) { return -floor_div(-a, b); }

enum class Errc {
  NonPositivePart,
  NotMonotone,
  InvalidSpec,
  OutOfRange,
  NonMonotoneOutput,
  ResourceLimit,
  RoundingFailure,
  FirstRowTooSmall,
  Unreachable,
  NoPlanFound,
  NotFound,
  BadArgument,
};

std::string_view errc_name(Errc c);

struct Error {
  Errc code;
  std::string message;
  i64 detail = -1;  // e.g. first offending index for NotMonotone
};

// Minimal expected-style carrier: a value or an Error.
template <typename T>
class Result {
 public:
  Result(T value) : v_(std::move(value)) {}
  Result(Error err) : v_(std::move(err)) {}

  bool ok() const { return std::holds_alternative<T>(v_); }
  explicit operator bool() const { return ok(); }

  const T& value() const& { return std::get<T>(v_); }
  T&& value() && { return std::get<T>(std::move(v_)); }
  const Error& error() const { return std::get<Error>(v_); }

  const T& operator*() const& { return value(); }
  const T* operator->() const { return &value(); }

 private:
  std::variant<T, Error> v_;
};

inline Error make_error(Errc code, std::string message, i64 detail = -1) {
  return Error{code, std::move(message), detail};
}

}  // namespace tspectra
