#include "weaklink/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <vector>

#include "weaklink/error.hpp"

namespace weaklink::oracle {

namespace {

// Size of the space by repeated multiplication, stopping as soon as it passes
// the cap. Deliberately not passphrase_keyspace(): this is the oracle side.
void check_enumerable(const CharacterSet& charset, std::int64_t length, std::uint64_t cap) {
  if (!charset.has_members()) {
    throw InvalidSpec("character set '" + charset.name() +
                      "' has no member list; use the analytic keyspace instead");
  }
  if (length < 1) throw InvalidSpec("passphrase length must be at least 1");
  const auto size = static_cast<std::uint64_t>(charset.size());
  std::uint64_t space = 1;
  for (std::int64_t i = 0; i < length; ++i) {
    if (space > cap / size) {
      throw EnumerationCapExceeded(charset.name() + "^" + std::to_string(length) +
                                   " exceeds the enumeration cap of " + std::to_string(cap) +
                                   "; use the analytic path");
    }
    space *= size;
  }
}

}  // namespace

std::uint64_t for_each_candidate(const CharacterSet& charset, std::int64_t length,
                                 const std::function<bool(std::string_view)>& visit,
                                 std::uint64_t cap) {
  check_enumerable(charset, length, cap);
  const std::string_view members = charset.members();
  const auto n = static_cast<std::size_t>(length);
  const std::size_t radix = members.size();

  std::vector<std::size_t> digits(n, 0);
  std::string candidate(n, members.front());
  std::uint64_t visited = 0;
  while (true) {
    ++visited;
    if (!visit(candidate)) return visited;

    // Odometer step, rightmost position fastest.
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < radix) {
        candidate[pos] = members[digits[pos]];
        break;
      }
      digits[pos] = 0;
      candidate[pos] = members.front();
      if (pos == 0) return visited;
    }
  }
}

EnumerationResult enumerate_keyspace(const CharacterSet& charset, std::int64_t length,
                                     std::uint64_t cap) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  const std::uint64_t count = for_each_candidate(
      charset, length, [](std::string_view) { return true; }, cap);
  const std::chrono::duration<double> elapsed = clock::now() - start;

  EnumerationResult r;
  r.charset_name = charset.name();
  r.length = length;
  r.enumerated_count = BigCount(count);
  // A clock tick is the resolution floor; keeps throughput finite.
  r.elapsed_seconds = std::max(elapsed.count(), 1e-9);
  r.throughput_keys_per_second = static_cast<double>(count) / r.elapsed_seconds;
  return r;
}

SearchTrial find_target(const CharacterSet& charset, std::int64_t length, std::string_view target,
                        std::uint64_t cap) {
  if (static_cast<std::int64_t>(target.size()) != length) {
    throw InvalidSpec("target '" + std::string(target) + "' is not " + std::to_string(length) +
                      " symbols long");
  }
  for (char c : target) {
    if (!charset.index_of(c)) {
      throw InvalidSpec("target symbol '" + std::string(1, c) + "' is not in character set '" +
                        charset.name() + "'");
    }
  }
  std::uint64_t tries = 0;
  for_each_candidate(
      charset, length,
      [&](std::string_view candidate) {
        ++tries;
        return candidate != target;
      },
      cap);
  return {std::string(target), tries};
}

double extrapolate_local_crack_time(double throughput_keys_per_second, const BigCount& keyspace) {
  if (!(throughput_keys_per_second > 0.0) || !std::isfinite(throughput_keys_per_second)) {
    throw InvalidSpec("throughput must be a positive finite rate");
  }
  return keyspace.to_double() / throughput_keys_per_second;
}

double extrapolate_local_crack_time(const EnumerationResult& measured, const BigCount& keyspace) {
  return extrapolate_local_crack_time(measured.throughput_keys_per_second, keyspace);
}

}  // namespace weaklink::oracle
