#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

namespace jsjd::cli {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kIndeterminate = 3,
  kUnfactored = 4,
};

inline constexpr const char* kBoundVariable = "JSJ_SEARCH_BOUND";
inline constexpr const char* kVersion = "0.1.0";

struct Classify {
  std::string word;
  /// Extension-node budget; falls back to JSJ_SEARCH_BOUND, then the default.
  std::optional<std::size_t> bound;
  std::string format = "json";
  std::string out;
};
struct OrbitMin {
  std::string word;
};
struct IsPrimitive {
  std::string word;
};
struct AutEquiv {
  std::string first;
  std::string second;
};
struct Membership {
  std::string word;
  std::string subgroup;
  bool rewrite = false;
};
struct IvanovEmit {
  bool compact = false;
};
struct IvanovVerify {
  std::string suite = "all";
  /// Per-suite defaults when unset.
  std::optional<std::size_t> samples;
  std::uint64_t seed = 1;
  std::optional<std::size_t> max_len;
};
struct MrFactor {
  std::string hom;
  std::optional<long long> k_bound;
};
struct MrSeparability {
  std::size_t samples = 500;
  std::uint64_t seed = 1;
};
struct Version {};

using Command = std::variant<Classify, OrbitMin, IsPrimitive, AutEquiv, Membership, IvanovEmit,
                             IvanovVerify, MrFactor, MrSeparability, Version>;

/// Parses every word argument, then dispatches. Records go to `out` as JSON
/// (or DOT for classify --emit dot), diagnostics to `err`.
int run(const Command& cmd, std::ostream& out, std::ostream& err);

}  // namespace jsjd::cli
