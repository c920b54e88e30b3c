#pragma once

#include <optional>
#include <string>

namespace kahler {

/// Three-way result for sound certification. `Inconclusive` never claims the
/// negation of the property; `Fails` means a hypothesis is definitively violated.
enum class Status { Certified, Inconclusive, Fails };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Certified: return "certified";
    case Status::Inconclusive: return "inconclusive";
    case Status::Fails: return "fails";
  }
  return "unknown";
}

template <typename T>
struct Verdict {
  Status status = Status::Inconclusive;
  std::optional<T> value;
  std::string reason;

  static Verdict certified(T v) { return {Status::Certified, std::move(v), {}}; }
  static Verdict inconclusive(std::string why) { return {Status::Inconclusive, std::nullopt, std::move(why)}; }
  static Verdict fails(std::string why) { return {Status::Fails, std::nullopt, std::move(why)}; }

  bool ok() const { return status == Status::Certified; }
  explicit operator bool() const { return ok(); }
  const T& operator*() const { return *value; }
  const T* operator->() const { return &*value; }
};

}  // namespace kahler
