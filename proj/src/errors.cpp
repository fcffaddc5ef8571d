#include "maxdet/errors.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace maxdet {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + what),
      line_(line),
      column_(column) {}

VerificationMismatch::VerificationMismatch(std::size_t row, std::size_t col,
                                           const std::string& what)
    : std::runtime_error(what), row_(row), col_(col), has_position_(true) {}

VerificationMismatch::VerificationMismatch(const std::string& what) : std::runtime_error(what) {}

namespace {

std::size_t initial_guard() {
  if (const char* env = std::getenv("MAXDET_SIZE_GUARD")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 4096;
}

std::atomic<std::size_t>& guard_value() {
  static std::atomic<std::size_t> value{initial_guard()};
  return value;
}

}  // namespace

std::size_t size_guard() { return guard_value().load(); }

void set_size_guard(std::size_t limit) {
  if (limit == 0) throw InvalidArgument("size guard must be positive");
  guard_value().store(limit);
}

void check_size_guard(std::size_t order, std::string_view what) {
  if (order > size_guard()) {
    throw SizeGuardExceeded(std::string(what) + ": order " + std::to_string(order) +
                            " exceeds the size guard " + std::to_string(size_guard()));
  }
}

}  // namespace maxdet
