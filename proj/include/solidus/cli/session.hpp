#pragma once

#include <string>
#include <string_view>

#include "solidus/axioms/check.hpp"

namespace solidus::cli {

/// Command interpreter shared by the REPL and batch mode.
class Session {
 public:
  Session() = default;
  explicit Session(axioms::GeneratorConfig cfg) : cfg_(std::move(cfg)) {}

  /// Executes one line (a `:command` or an expression) and returns the text
  /// to print. Domain and syntax errors are rendered, never thrown.
  std::string run_command(std::string_view line);

  bool quit_requested() const { return quit_; }
  /// True once any `:check` in this session reported a failure.
  bool checks_failed() const { return checks_failed_; }

 private:
  std::string dispatch(std::string_view line);
  std::string run_checks(std::string_view args);

  axioms::GeneratorConfig cfg_;
  bool quit_ = false;
  bool checks_failed_ = false;
};

/// One-shot convenience over a fresh Session.
std::string run_command(std::string_view line);

/// Renders an error as `error: <Code>[ at column N]: <message>`.
std::string render_error(const std::exception& e);

}  // namespace solidus::cli
