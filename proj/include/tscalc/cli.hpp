#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "tscalc/scalar.hpp"

namespace tscalc::cli {

inline constexpr std::uint64_t kDefaultSeed = 7;

struct GlobalOptions {
  std::optional<Mode> mode;
  std::optional<std::string> out;
  std::optional<std::string> format;  // "json" or "csv"
};

// Exit codes: 0 success/certified, 2 hypothesis violated or bound not dominating, 1 error.

int cmd_bound(const std::string& config_path, const GlobalOptions& opts, std::ostream& out,
              std::ostream& err);
int cmd_verify(const std::string& theorem, std::size_t cases, std::uint64_t seed,
               std::size_t max_window, const GlobalOptions& opts, std::ostream& out,
               std::ostream& err);
int cmd_ibvp(const std::string& config_path, const GlobalOptions& opts, std::ostream& out,
             std::ostream& err);
int cmd_example31(std::ostream& out);

}  // namespace tscalc::cli
