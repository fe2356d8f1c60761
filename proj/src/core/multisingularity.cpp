#include "core/multisingularity.hpp"

#include <algorithm>
#include <cctype>

#include "core/errors.hpp"

namespace ssmthom {

AlgebraName AlgebraName::parse(const std::string& token) {
  AlgebraName out;
  std::size_t pos = 0;
  if (token.rfind("III", 0) == 0) {
    out.family = III;
    pos = 3;
  } else if (token.rfind("II", 0) == 0) {
    fail(ErrorKind::InvalidArgument, "unknown algebra token '" + token + "'");
  } else if (token.rfind("I", 0) == 0) {
    out.family = I;
    pos = 1;
  } else if (token.rfind("A", 0) == 0) {
    out.family = A;
    pos = 1;
  } else {
    fail(ErrorKind::InvalidArgument, "unknown algebra token '" + token + "'");
  }
  const std::string digits = token.substr(pos);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      }))
    fail(ErrorKind::InvalidArgument, "unknown algebra token '" + token + "'");
  if (out.family == A) {
    out.p = std::stoi(digits);
  } else {
    // Two single-digit indices, a >= b >= 2 up to swap.
    if (digits.size() != 2)
      fail(ErrorKind::InvalidArgument, "algebra token '" + token +
                                           "' needs two single-digit indices");
    out.p = digits[0] - '0';
    out.q = digits[1] - '0';
    if (out.p < 2 || out.q < 2)
      fail(ErrorKind::InvalidArgument, "algebra token '" + token + "' indices must be >= 2");
  }
  return out;
}

std::string AlgebraName::str() const {
  switch (family) {
    case A: return "A" + std::to_string(p);
    case I: return "I" + std::to_string(p) + std::to_string(q);
    case III: return "III" + std::to_string(p) + std::to_string(q);
  }
  return {};
}

long family_scodim(const AlgebraName& name, int l) {
  switch (name.family) {
    case AlgebraName::A:
      return static_cast<long>(name.p) * l + name.p;
    case AlgebraName::I:
      return static_cast<long>(name.p + name.q - 1) * l + (name.p + name.q);
    case AlgebraName::III:
      if (l < 1)
        fail(ErrorKind::InvalidArgument,
             name.str() + " is not realizable for l = " + std::to_string(l));
      return static_cast<long>(name.p + name.q - 2) * l + (name.p + name.q);
  }
  fail(ErrorKind::InvalidArgument, "unreachable family");
}

namespace {

bool token_less(const std::string& a, const std::string& b) {
  return AlgebraName::parse(a) < AlgebraName::parse(b);
}

}  // namespace

Multisingularity::Multisingularity(std::vector<std::pair<std::string, int>> entries,
                                   std::optional<std::string> distinguished)
    : distinguished_(std::move(distinguished)) {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return token_less(a.first, b.first);
  });
  for (const auto& [token, mult] : entries) {
    if (mult <= 0) fail(ErrorKind::InvalidArgument, "multiplicities must be positive");
    if (!entries_.empty() && entries_.back().first == token)
      entries_.back().second += mult;
    else
      entries_.emplace_back(token, mult);
  }
  if (distinguished_) {
    AlgebraName::parse(*distinguished_);  // validates
    if (multiplicity_of(*distinguished_) == 0)
      fail(ErrorKind::InvalidArgument, "distinguished element '" + *distinguished_ +
                                           "' is not a member of the multiset");
  }
}

Multisingularity Multisingularity::parse(const std::string& expr) {
  std::string s;
  for (char c : expr)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) fail(ErrorKind::InvalidArgument, "empty multisingularity expression");

  std::optional<std::string> dist;
  if (auto colon = s.find(':'); colon != std::string::npos) {
    dist = s.substr(0, colon);
    s = s.substr(colon + 1);
    if (dist->empty() || s.empty())
      fail(ErrorKind::InvalidArgument, "malformed distinguished prefix in '" + expr + "'");
  }
  if (s == "1") {
    if (dist) fail(ErrorKind::InvalidArgument, "the empty multisingularity has no distinguished element");
    return Multisingularity();
  }

  std::vector<std::pair<std::string, int>> entries;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t star = s.find('*', pos);
    std::string factor = s.substr(pos, star == std::string::npos ? star : star - pos);
    pos = (star == std::string::npos) ? s.size() : star + 1;
    if (factor.empty()) fail(ErrorKind::InvalidArgument, "empty factor in '" + expr + "'");
    int mult = 1;
    if (auto caret = factor.find('^'); caret != std::string::npos) {
      const std::string m = factor.substr(caret + 1);
      factor = factor.substr(0, caret);
      if (m.empty() || !std::all_of(m.begin(), m.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
          }))
        fail(ErrorKind::InvalidArgument, "malformed multiplicity in '" + expr + "'");
      mult = std::stoi(m);
      if (mult < 1) fail(ErrorKind::InvalidArgument, "multiplicity must be >= 1");
    }
    AlgebraName::parse(factor);  // validates token
    entries.emplace_back(factor, mult);
  }
  return Multisingularity(std::move(entries), std::move(dist));
}

std::string Multisingularity::render() const {
  std::string out;
  if (distinguished_) out = *distinguished_ + ":";
  if (entries_.empty()) return out + "1";
  bool first = true;
  for (const auto& [token, mult] : entries_) {
    if (!first) out += "*";
    first = false;
    out += token;
    if (mult > 1) out += "^" + std::to_string(mult);
  }
  return out;
}

int Multisingularity::total_multiplicity() const {
  int n = 0;
  for (const auto& [token, mult] : entries_) n += mult;
  return n;
}

int Multisingularity::multiplicity_of(const std::string& token) const {
  for (const auto& [t, mult] : entries_)
    if (t == token) return mult;
  return 0;
}

Multisingularity Multisingularity::without_distinguished_mark() const {
  Multisingularity out = *this;
  out.distinguished_.reset();
  return out;
}

Multisingularity Multisingularity::with_distinguished(const std::string& token) const {
  return Multisingularity(entries_, token);
}

Integer Multisingularity::aut_order() const {
  Integer out = 1;
  for (const auto& [token, mult] : entries_) {
    int m = mult;
    if (distinguished_ && token == *distinguished_) m -= 1;
    out *= factorial(static_cast<unsigned>(m));
  }
  return out;
}

std::vector<Multisingularity> Multisingularity::submultisets() const {
  std::vector<Multisingularity> out;
  std::vector<std::pair<std::string, int>> cur;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == entries_.size()) {
      if (distinguished_) {
        bool has_dist = false;
        for (const auto& [t, m] : cur) has_dist |= (t == *distinguished_);
        if (!has_dist) return;
        out.emplace_back(cur, distinguished_);
      } else {
        out.emplace_back(cur);
      }
      return;
    }
    const auto& [token, mult] = entries_[i];
    for (int take = 0; take <= mult; ++take) {
      if (take > 0) cur.emplace_back(token, take);
      self(self, i + 1);
      if (take > 0) cur.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

bool Multisingularity::contains(const Multisingularity& sub) const {
  for (const auto& [token, mult] : sub.entries_)
    if (multiplicity_of(token) < mult) return false;
  return true;
}

std::strong_ordering Multisingularity::operator<=>(const Multisingularity& other) const {
  if (auto c = total_multiplicity() <=> other.total_multiplicity(); c != 0) return c;
  const std::size_t n = std::min(entries_.size(), other.entries_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto an = AlgebraName::parse(entries_[i].first);
    const auto bn = AlgebraName::parse(other.entries_[i].first);
    if (auto c = an <=> bn; c != 0) return c;
    if (auto c = entries_[i].second <=> other.entries_[i].second; c != 0) return c;
  }
  if (auto c = entries_.size() <=> other.entries_.size(); c != 0) return c;
  const std::string a = distinguished_.value_or("");
  const std::string b = other.distinguished_.value_or("");
  return a.compare(b) <=> 0;
}

Codims codims(const Multisingularity& m, int l) {
  if (l < 1) fail(ErrorKind::InvalidArgument, "relative dimension must be >= 1");
  Codims out;
  if (m.empty()) {
    out.empty_multisingularity = true;
    out.scodim = -l;  // keeps tcodim = scodim + l; callers must honor the flag
    out.tcodim = 0;
    return out;
  }
  long sum = 0;
  for (const auto& [token, mult] : m.entries())
    sum += family_scodim(AlgebraName::parse(token), l) * mult;
  const int r = m.total_multiplicity();
  out.scodim = sum + static_cast<long>(r - 1) * l;
  out.tcodim = out.scodim + l;
  return out;
}

}  // namespace ssmthom
