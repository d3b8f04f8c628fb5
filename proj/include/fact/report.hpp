#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace fact {

/// A witness names the verdict it refutes and the tuple of element ids
/// involved; the note explains the roles of the tuple entries.
struct Witness {
  std::string verdict;
  std::vector<long long> tuple;
  std::string note;

  bool operator==(const Witness&) const = default;
};

/// Verification outcome of one check: named boolean verdicts plus witnesses
/// for every failure. Never throws on violations; a red verdict with a
/// witness is data, not an error.
class Report {
 public:
  static constexpr int kMaxWitnessesPerVerdict = 8;

  Report() = default;
  explicit Report(std::string subject) : subject_(std::move(subject)) {}

  const std::string& subject() const { return subject_; }
  void set_subject(std::string s) { subject_ = std::move(s); }

  /// Declare a verdict true unless already failed.
  void pass(const std::string& name);

  /// Fail a verdict, attaching a witness (capped per verdict).
  void fail(const std::string& name, std::vector<long long> tuple, std::string note = {});

  void require(const std::string& name, bool ok, std::vector<long long> tuple = {},
               std::string note = {});

  void stat(const std::string& name, long long value);
  void set_seed(std::uint64_t s) { seed_ = s; }

  /// Merge another report in, prefixing its verdict/witness/stat names.
  void absorb(const Report& other, const std::string& prefix);

  bool all_green() const;
  std::optional<bool> verdict(const std::string& name) const;
  long long stat_value(const std::string& name, long long fallback = -1) const;

  const std::vector<std::pair<std::string, bool>>& verdicts() const { return verdicts_; }
  const std::vector<Witness>& witnesses() const { return witnesses_; }
  const std::vector<std::pair<std::string, long long>>& stats() const { return stats_; }
  const std::optional<std::uint64_t>& seed() const { return seed_; }

  void print_text(std::ostream& os) const;

  bool operator==(const Report&) const = default;

  // for deserialization only
  void restore(std::vector<std::pair<std::string, bool>> verdicts, std::vector<Witness> witnesses,
               std::vector<std::pair<std::string, long long>> stats,
               std::optional<std::uint64_t> seed);

 private:
  int find(const std::string& name) const;
  int witness_count(const std::string& name) const;

  std::string subject_;
  std::vector<std::pair<std::string, bool>> verdicts_;
  std::vector<Witness> witnesses_;
  std::vector<std::pair<std::string, long long>> stats_;
  std::optional<std::uint64_t> seed_;
};

}  // namespace fact
