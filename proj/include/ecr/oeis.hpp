#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ecr/rational.hpp"

namespace ecr::oeis {

/// "A" followed by exactly six digits.
bool valid_id(std::string_view id);

/// b-file lines "n a(n)"; '#' comments and blank lines are skipped.
std::vector<std::pair<long, Integer>> parse_bfile(std::string_view text);

/// Bundled prefixes for A000108, A010892, A023431, A025243.
std::optional<std::string_view> fixture(std::string_view id);

struct Comparison {
  bool match = false;
  long offset = 0;            // seq[i] is compared with ref[i + offset]
  std::size_t compared = 0;
  std::optional<std::size_t> first_mismatch;  // index into seq, at offset 0 when nothing matched
};

/// Aligns seq against ref by the best offset in {-2..2}: the smallest |offset|
/// whose overlap (at least 3 terms) matches entirely, preferring positive
/// offsets on ties.
Comparison compare(const std::vector<Rational>& seq, const std::vector<Integer>& ref);

struct LookupOptions {
  bool offline = false;
  std::filesystem::path cache_dir;
  std::string base_url = "https://oeis.org";
};

enum class LookupStatus { Found, UnknownOffline, NetworkFailure, BadId };

struct LookupResult {
  LookupStatus status = LookupStatus::BadId;
  std::vector<Integer> values;
  std::string source;  // "fixture", "cache" or "network"
  std::string message;
};

/// EC_RIORDAN_CACHE, else $XDG_CACHE_HOME/ec-riordan, else ~/.cache/ec-riordan.
std::filesystem::path default_cache_dir();

/// Offline: bundled fixtures only. Online: cache, then an HTTP fetch of
/// <base_url>/Axxxxxx/bxxxxxx.txt which is written back to the cache.
LookupResult lookup(const std::string& id, const LookupOptions& opts);

}  // namespace ecr::oeis
