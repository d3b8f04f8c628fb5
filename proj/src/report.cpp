#include "fact/report.hpp"

#include <algorithm>

namespace fact {

int Report::find(const std::string& name) const {
  for (size_t i = 0; i < verdicts_.size(); ++i)
    if (verdicts_[i].first == name) return static_cast<int>(i);
  return -1;
}

int Report::witness_count(const std::string& name) const {
  int c = 0;
  for (const auto& w : witnesses_)
    if (w.verdict == name) ++c;
  return c;
}

void Report::pass(const std::string& name) {
  if (find(name) < 0) verdicts_.emplace_back(name, true);
}

void Report::fail(const std::string& name, std::vector<long long> tuple, std::string note) {
  int i = find(name);
  if (i < 0)
    verdicts_.emplace_back(name, false);
  else
    verdicts_[i].second = false;
  if (witness_count(name) < kMaxWitnessesPerVerdict)
    witnesses_.push_back(Witness{name, std::move(tuple), std::move(note)});
}

void Report::require(const std::string& name, bool ok, std::vector<long long> tuple,
                     std::string note) {
  if (ok)
    pass(name);
  else
    fail(name, std::move(tuple), std::move(note));
}

void Report::stat(const std::string& name, long long value) { stats_.emplace_back(name, value); }

void Report::absorb(const Report& other, const std::string& prefix) {
  for (const auto& [name, ok] : other.verdicts_) {
    int i = find(prefix + name);
    if (i < 0)
      verdicts_.emplace_back(prefix + name, ok);
    else
      verdicts_[i].second = verdicts_[i].second && ok;
  }
  for (const auto& w : other.witnesses_)
    witnesses_.push_back(Witness{prefix + w.verdict, w.tuple, w.note});
  for (const auto& [name, v] : other.stats_) stats_.emplace_back(prefix + name, v);
  if (other.seed_ && !seed_) seed_ = other.seed_;
}

bool Report::all_green() const {
  return std::all_of(verdicts_.begin(), verdicts_.end(), [](const auto& v) { return v.second; });
}

std::optional<bool> Report::verdict(const std::string& name) const {
  int i = find(name);
  if (i < 0) return std::nullopt;
  return verdicts_[i].second;
}

long long Report::stat_value(const std::string& name, long long fallback) const {
  for (const auto& [k, v] : stats_)
    if (k == name) return v;
  return fallback;
}

void Report::print_text(std::ostream& os) const {
  os << "subject: " << subject_ << "\n";
  for (const auto& [name, ok] : verdicts_) os << "  [" << (ok ? " ok " : "FAIL") << "] " << name << "\n";
  for (const auto& w : witnesses_) {
    os << "    witness " << w.verdict << " (";
    for (size_t i = 0; i < w.tuple.size(); ++i) os << (i ? "," : "") << w.tuple[i];
    os << ")";
    if (!w.note.empty()) os << " " << w.note;
    os << "\n";
  }
  if (!stats_.empty()) {
    os << "  stats:";
    for (const auto& [k, v] : stats_) os << " " << k << "=" << v;
    os << "\n";
  }
  if (seed_) os << "  seed: " << *seed_ << "\n";
}

void Report::restore(std::vector<std::pair<std::string, bool>> verdicts,
                     std::vector<Witness> witnesses,
                     std::vector<std::pair<std::string, long long>> stats,
                     std::optional<std::uint64_t> seed) {
  verdicts_ = std::move(verdicts);
  witnesses_ = std::move(witnesses);
  stats_ = std::move(stats);
  seed_ = seed;
}

}  // namespace fact
