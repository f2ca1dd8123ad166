#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>

#include "couples/engine/iterate.hpp"

namespace couples::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitUsage = 2;

struct Options {
  Sides side = Sides::both;
  std::size_t depth = 1;
  std::optional<std::filesystem::path> out;
  /// Include witness morphisms in reports and tree documents.
  bool certificate = false;
  std::uint64_t seed = 0;
  /// When set, semistability is probed even where the backend certifies it.
  std::optional<std::size_t> probes;
  bool parallel = false;

  SemistabilityOptions semistability() const;
};

int cmd_check(const std::filesystem::path& path, const Options& opts, std::ostream& out, std::ostream& err);
int cmd_derive(const std::filesystem::path& path, const Options& opts, std::ostream& out, std::ostream& err);
int cmd_cohomology(const std::filesystem::path& path, const Options& opts, std::ostream& out, std::ostream& err);

/// Full command line: `couples <check|derive|cohomology> FILE [flags]`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace couples::cli
