#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "weaklink/big.hpp"
#include "weaklink/charset.hpp"

namespace weaklink::oracle {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

struct EnumerationResult {
  std::string charset_name;
  std::int64_t length = 0;
  BigCount enumerated_count;
  double elapsed_seconds = 0.0;
  double throughput_keys_per_second = 0.0;
};

struct SearchTrial {
  std::string target;
  std::uint64_t tries_until_found = 0;
};

/// Calls `visit` for every length-`length` sequence over the charset's members
/// in odometer order (rightmost symbol fastest). `visit` returns false to stop
/// early. Returns the number of candidates visited.
///
/// Throws InvalidSpec when the charset has no members or length < 1, and
/// EnumerationCapExceeded when size^length > cap.
std::uint64_t for_each_candidate(const CharacterSet& charset, std::int64_t length,
                                 const std::function<bool(std::string_view)>& visit,
                                 std::uint64_t cap = kDefaultEnumerationCap);

/// Generates and counts the whole space, timing the run.
EnumerationResult enumerate_keyspace(const CharacterSet& charset, std::int64_t length,
                                     std::uint64_t cap = kDefaultEnumerationCap);

/// Simulated brute-force search: 1-based position of `target` in odometer
/// order. Throws InvalidSpec when the target has the wrong length or a symbol
/// outside the charset.
SearchTrial find_target(const CharacterSet& charset, std::int64_t length,
                        std::string_view target,
                        std::uint64_t cap = kDefaultEnumerationCap);

/// keyspace / measured throughput: the worst-case model evaluated at a locally
/// measured rate instead of the ASIC farm. Throws InvalidSpec on a
/// non-positive throughput.
double extrapolate_local_crack_time(const EnumerationResult& measured, const BigCount& keyspace);
double extrapolate_local_crack_time(double throughput_keys_per_second, const BigCount& keyspace);

}  // namespace weaklink::oracle
