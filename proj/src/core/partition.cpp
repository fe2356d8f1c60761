#include "core/partition.hpp"

#include <algorithm>
#include <numeric>

#include "core/errors.hpp"

namespace ssmthom {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      fail(ErrorKind::InvalidArgument, "partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      fail(ErrorKind::InvalidArgument, "partition parts must be weakly decreasing");
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<std::pair<int, int>> Partition::multiplicities() const {
  std::vector<std::pair<int, int>> out;
  for (int p : parts_) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1);
  }
  return out;
}

std::strong_ordering Partition::operator<=>(const Partition& other) const {
  if (auto c = weight_ <=> other.weight_; c != 0) return c;
  // Same weight: lexicographically larger parts vector sorts first.
  const auto& a = parts_;
  const auto& b = other.parts_;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
    if (auto c = b[i] <=> a[i]; c != 0) return c;
  return b.size() <=> a.size();
}

std::string Partition::render(bool compress_exponents) const {
  if (parts_.empty()) return "0";
  const bool wide = parts_.front() >= 10;
  std::string out;
  if (compress_exponents) {
    for (const auto& [part, mult] : multiplicities()) {
      if (!out.empty() && wide) out += ',';
      out += std::to_string(part);
      if (mult > 1) out += '^' + std::to_string(mult);
    }
  } else {
    for (int p : parts_) {
      if (!out.empty() && wide) out += ',';
      out += std::to_string(p);
    }
  }
  return out;
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) fail(ErrorKind::InvalidArgument, "partitions_of negative weight");
  std::vector<Partition> out;
  std::vector<int> cur;
  // Descending enumeration of parts yields lex-descending order directly.
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

}  // namespace ssmthom
