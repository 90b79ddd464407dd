#ifndef FUZZY_DIAGNOSTICS_HPP
#define FUZZY_DIAGNOSTICS_HPP

#include <functional>
#include <string_view>

namespace fuzzy {

using WarningHandler = std::function<void(std::string_view)>;

// Non-fatal numeric warnings (monotonicity repair, clamped levels) are routed
// here. The default handler writes one line to stderr.
void warn(std::string_view message);

// Installs a handler and returns the previous one. Pass an empty function to
// silence warnings.
WarningHandler set_warning_handler(WarningHandler handler);

// RAII helper that captures warnings for the lifetime of the object.
class ScopedWarningHandler {
 public:
  explicit ScopedWarningHandler(WarningHandler handler)
      : previous_(set_warning_handler(std::move(handler))) {}
  ~ScopedWarningHandler() { set_warning_handler(std::move(previous_)); }
  ScopedWarningHandler(const ScopedWarningHandler&) = delete;
  ScopedWarningHandler& operator=(const ScopedWarningHandler&) = delete;

 private:
  WarningHandler previous_;
};

}  // namespace fuzzy

#endif  // FUZZY_DIAGNOSTICS_HPP
