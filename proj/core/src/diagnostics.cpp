#include "fuzzy/diagnostics.hpp"

#include <iostream>
#include <mutex>
#include <utility>

namespace fuzzy {
namespace {

std::mutex& handler_mutex() {
  static std::mutex m;
  return m;
}

WarningHandler& handler_slot() {
  static WarningHandler h = [](std::string_view msg) {
    std::cerr << "fuzzy: warning: " << msg << '\n';
  };
  return h;
}

}  // namespace

void warn(std::string_view message) {
  WarningHandler h;
  {
    std::lock_guard lock(handler_mutex());
    h = handler_slot();
  }
  if (h) h(message);
}

WarningHandler set_warning_handler(WarningHandler handler) {
  std::lock_guard lock(handler_mutex());
  return std::exchange(handler_slot(), std::move(handler));
}

}  // namespace fuzzy
