#pragma once

#include "cycloseq/pattern.hpp"
#include "cycloseq/tnumbers.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace cycloseq {

/// A cyclic binary sequence of length N <= 64; bit t holds digit t.
using Word = std::uint64_t;

constexpr unsigned default_oracle_cap = 20;

struct OracleConfig {
  unsigned cap = default_oracle_cap;
  /// Worker count; 0 picks the hardware concurrency, 1 runs on the calling thread.
  unsigned threads = 0;
};

/// Joint tally of several statistics: each key lists one value per pattern.
struct JointDistribution {
  std::optional<SequenceFamily> family;  // empty for an all-words scope
  unsigned length = 0;
  std::vector<Pattern> patterns;
  std::map<std::vector<unsigned>, BigNat> entries;

  BigNat at(const std::vector<unsigned>& key) const {
    auto it = entries.find(key);
    return it == entries.end() ? BigNat(0) : it->second;
  }

  BigNat total() const {
    BigNat sum = 0;
    for (const auto& [key, count] : entries) sum += count;
    return sum;
  }

  /// Distribution of coordinate `axis` alone.
  CountDistribution marginal(std::size_t axis, IndexKind kind = IndexKind::occurrences) const {
    CountDistribution d{family.value_or(SequenceFamily(length, 0)), kind, {}};
    for (const auto& [key, count] : entries) d.entries[key.at(axis)] += count;
    d.normalize();
    return d;
  }

  friend bool operator==(const JointDistribution&, const JointDistribution&) = default;
};

namespace oracle {

inline Word low_mask(unsigned bits) { return bits >= 64 ? ~Word(0) : (Word(1) << bits) - 1; }

inline Word word_from_string(std::string_view digits) {
  Word w = 0;
  for (std::size_t t = 0; t < digits.size(); ++t) {
    if (digits[t] != '0' && digits[t] != '1')
      throw DomainError(ErrorKind::InvalidArgument, "sequence must contain only 0 and 1");
    if (digits[t] == '1') w |= Word(1) << t;
  }
  return w;
}

inline std::string word_to_string(Word w, unsigned length) {
  std::string s;
  for (unsigned t = 0; t < length; ++t) s.push_back((w >> t) & 1 ? '1' : '0');
  return s;
}

/// Cyclic left rotation by one digit position.
inline Word rotate(Word w, unsigned length, unsigned by = 1) {
  by %= length;
  if (by == 0) return w;
  return ((w >> by) | (w << (length - by))) & low_mask(length);
}

/// Boundaries between unequal neighbours on the cycle.
inline unsigned jumps(Word w, unsigned length) {
  return static_cast<unsigned>(std::popcount(w ^ rotate(w, length)));
}

/// Number of the `length` cyclic windows (wraparound included) that read `pattern`.
inline unsigned occurrences(Word w, unsigned length, const Pattern& pattern) {
  const unsigned len = static_cast<unsigned>(pattern.size());
  const Word target = pattern.bits();
  const Word mask = low_mask(len);
  unsigned count = 0;
  if (2 * length <= 64 && len <= length) {
    const Word doubled = w | (w << length);
    for (unsigned i = 0; i < length; ++i) count += ((doubled >> i) & mask) == target;
    return count;
  }
  for (unsigned i = 0; i < length; ++i) {
    bool hit = true;
    for (unsigned t = 0; t < len && hit; ++t)
      hit = ((w >> ((i + t) % length)) & 1) == pattern[t];
    count += hit;
  }
  return count;
}

/// Block-length structure of a sequence with both digits present.
inline SequenceType type_signature(Word w, unsigned length) {
  const unsigned ones = static_cast<unsigned>(std::popcount(w & low_mask(length)));
  if (ones == 0 || ones == length)
    throw DomainError(ErrorKind::ConstantSequence, "a constant sequence has no block type");
  // start the scan just after a jump so no block straddles the origin
  unsigned start = 0;
  while (((w >> start) & 1) == ((w >> ((start + length - 1) % length)) & 1)) ++start;
  SequenceType type;
  unsigned run = 0;
  unsigned digit = (w >> start) & 1;
  for (unsigned t = 0; t < length; ++t) {
    unsigned d = (w >> ((start + t) % length)) & 1;
    if (d != digit) {
      (digit ? type.one_blocks : type.zero_blocks).push_back(run);
      run = 0;
      digit = d;
    }
    ++run;
  }
  (digit ? type.one_blocks : type.zero_blocks).push_back(run);
  std::sort(type.zero_blocks.rbegin(), type.zero_blocks.rend());
  std::sort(type.one_blocks.rbegin(), type.one_blocks.rend());
  return type;
}

inline SequenceType type_signature(std::string_view digits) {
  return type_signature(word_from_string(digits), static_cast<unsigned>(digits.size()));
}

/// Colex rank -> combination, the inverse of the combinatorial number system.
inline Word unrank_colex(std::uint64_t rank, unsigned length, unsigned ones) {
  Word w = 0;
  for (unsigned k = ones; k >= 1; --k) {
    // largest c with C(c, k) <= rank
    unsigned c = k - 1;
    while (c + 1 < length && binomial(c + 1, k) <= rank) ++c;
    rank -= static_cast<std::uint64_t>(binomial(c, k));
    w |= Word(1) << c;
  }
  return w;
}

/// Next word with the same popcount in colex order (Gosper).
inline Word next_colex(Word w) {
  const Word c = w & (~w + 1);
  const Word r = w + c;
  return (((r ^ w) >> 2) / c) | r;
}

inline void check_cap(unsigned length, const OracleConfig& config) {
  if (length > config.cap || length > 32)
    throw DomainError(ErrorKind::CapExceeded, "N = " + std::to_string(length) +
                                                  " exceeds the oracle cap of " +
                                                  std::to_string(std::min(config.cap, 32u)));
  if (length == 0) throw DomainError(ErrorKind::InvalidArgument, "N must be positive");
}

inline unsigned worker_count(const OracleConfig& config, std::uint64_t work) {
  unsigned t = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  if (work < 4096) t = 1;
  return static_cast<unsigned>(std::min<std::uint64_t>(t, work));
}

/// Tallies `key(word)` over every word of the scope. A fixed family walks the
/// C(N, n) words in colex order; `ones` empty walks all 2^N words. Workers
/// take contiguous rank ranges and their tallies are merged by exact addition.
template <class Key, class KeyFn>
std::map<Key, BigNat> tally(unsigned length, std::optional<unsigned> ones, KeyFn key,
                            const OracleConfig& config = {}) {
  check_cap(length, config);
  const std::uint64_t total = ones ? static_cast<std::uint64_t>(binomial(length, *ones))
                                   : (std::uint64_t(1) << length);
  const unsigned workers = worker_count(config, total);
  std::vector<std::map<Key, std::uint64_t>> partial(workers);

  auto run = [&](unsigned worker) {
    const std::uint64_t lo = total * worker / workers, hi = total * (worker + 1) / workers;
    if (lo >= hi) return;
    auto& out = partial[worker];
    if (!ones) {
      for (std::uint64_t w = lo; w < hi; ++w) ++out[key(Word(w))];
      return;
    }
    if (*ones == 0) {
      ++out[key(Word(0))];
      return;
    }
    Word w = unrank_colex(lo, length, *ones);
    for (std::uint64_t r = lo; r < hi; ++r) {
      ++out[key(w)];
      if (r + 1 < hi) w = next_colex(w);
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(run, t);
    for (auto& th : pool) th.join();
  }

  std::map<Key, BigNat> merged;
  for (const auto& part : partial)
    for (const auto& [k, c] : part) merged[k] += c;
  return merged;
}

/// Jump distribution of a family; {0: 1} for a degenerate family.
inline CountDistribution jump_distribution(const SequenceFamily& family,
                                           const OracleConfig& config = {}) {
  const unsigned length = family.length();
  auto counts = tally<unsigned>(length, family.ones(),
                                [&](Word w) { return jumps(w, length); }, config);
  CountDistribution d{family, IndexKind::tau, {}};
  for (auto& [tau, c] : counts) d.entries[tau] = c;
  return d;
}

inline CountDistribution pattern_distribution(const SequenceFamily& family, const Pattern& pattern,
                                              const OracleConfig& config = {}) {
  const unsigned length = family.length();
  auto counts = tally<unsigned>(length, family.ones(),
                                [&](Word w) { return occurrences(w, length, pattern); }, config);
  CountDistribution d{family, IndexKind::occurrences, {}};
  for (auto& [h, c] : counts) d.entries[h] = c;
  d.normalize();
  return d;
}

/// Joint occurrence counts of several patterns. `family` empty means all 2^N words.
inline JointDistribution joint_distribution(std::optional<SequenceFamily> family, unsigned length,
                                            const std::vector<Pattern>& patterns,
                                            const OracleConfig& config = {}) {
  if (family) length = family->length();
  std::optional<unsigned> ones;
  if (family) ones = family->ones();
  JointDistribution d{family, length, patterns, {}};
  d.entries = tally<std::vector<unsigned>>(
      length, ones,
      [&](Word w) {
        std::vector<unsigned> key;
        key.reserve(patterns.size());
        for (const auto& p : patterns) key.push_back(occurrences(w, length, p));
        return key;
      },
      config);
  return d;
}

/// Occurrence distribution of `pattern` over all 2^N words.
inline std::map<unsigned, BigNat> all_words_distribution(unsigned length, const Pattern& pattern,
                                                         const OracleConfig& config = {}) {
  return tally<unsigned>(length, std::nullopt,
                         [&](Word w) { return occurrences(w, length, pattern); }, config);
}

/// Multiplicity of each block type in a family.
inline std::map<SequenceType, BigNat> type_tally(const SequenceFamily& family,
                                                 const OracleConfig& config = {}) {
  family.require_nondegenerate();
  const unsigned length = family.length();
  return tally<SequenceType>(length, family.ones(),
                             [&](Word w) { return type_signature(w, length); }, config);
}

/// Ring Boltzmann sum: sum over words of exp((N - 2 tau) nu), restricted to
/// `ones` ones when given. Terms are grouped by tau before summation.
inline double ising_boltzmann_sum(unsigned length, std::optional<unsigned> ones, double nu,
                                  const OracleConfig& config = {}) {
  auto counts = tally<unsigned>(length, ones, [&](Word w) { return jumps(w, length); }, config);
  double z = 0;
  for (const auto& [tau, c] : counts)
    z += to_double(c) * std::exp((static_cast<double>(length) - 2.0 * tau) * nu);
  return z;
}

/// Residual tableaux after deleting the first s+1 columns of every composition
/// of `weight` into `height` parts, tallied by (dimension, weight) of the remainder.
inline std::map<std::pair<unsigned, unsigned>, BigNat> tableau_census(unsigned s, unsigned weight,
                                                                      unsigned height) {
  std::map<std::pair<unsigned, unsigned>, BigNat> census;
  for_each_composition(weight, height, [&](const std::vector<unsigned>& rows) {
    unsigned dim = 0, rest = 0;
    for (unsigned r : rows)
      if (r > s + 1) {
        ++dim;
        rest += r - (s + 1);
      }
    census[{dim, rest}] += 1;
  });
  return census;
}

}  // namespace oracle
}  // namespace cycloseq
