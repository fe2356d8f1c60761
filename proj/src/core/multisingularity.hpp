#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "core/rational.hpp"

namespace ssmthom {

// Algebra token: A{k}, I{a}{b} or III{a}{b}, digits only (A0, A1, I22, III23).
struct AlgebraName {
  enum Family { A, I, III } family;
  int p = 0, q = 0;  // A_k uses p=k; I/III use (p,q)=(a,b)

  static AlgebraName parse(const std::string& token);
  std::string str() const;
  std::strong_ordering operator<=>(const AlgebraName&) const = default;
};

// Family closed-form source codimension mu*l + b. III families need l >= 1.
long family_scodim(const AlgebraName& name, int l);

// Multiset of monosingularity names, optionally with a distinguished element
// (S-flavor). Entries are kept sorted by token with positive multiplicities.
class Multisingularity {
public:
  Multisingularity() = default;
  Multisingularity(std::vector<std::pair<std::string, int>> entries,
                   std::optional<std::string> distinguished = std::nullopt);

  // Grammar: expr := "1" | [dist ":"] factor ("*" factor)* ;
  //          factor := TOKEN ["^" INT]. Whitespace ignored.
  static Multisingularity parse(const std::string& expr);
  std::string render() const;  // canonical; parse(render()) == *this

  const std::vector<std::pair<std::string, int>>& entries() const { return entries_; }
  const std::optional<std::string>& distinguished() const { return distinguished_; }
  bool is_s_flavor() const { return distinguished_.has_value(); }
  bool empty() const { return entries_.empty(); }
  int total_multiplicity() const;
  int multiplicity_of(const std::string& token) const;

  Multisingularity without_distinguished_mark() const;
  Multisingularity with_distinguished(const std::string& token) const;

  // |Aut|: product of multiplicity factorials; the distinguished element's
  // multiplicity enters reduced by one. |Aut(empty)| = 1.
  Integer aut_order() const;

  // All submultisets (T-flavor), or all submultisets containing the
  // distinguished element (S-flavor, distinguished mark preserved).
  std::vector<Multisingularity> submultisets() const;

  bool contains(const Multisingularity& sub) const;

  std::strong_ordering operator<=>(const Multisingularity& other) const;
  bool operator==(const Multisingularity& other) const = default;

private:
  std::vector<std::pair<std::string, int>> entries_;
  std::optional<std::string> distinguished_;
};

struct Codims {
  bool empty_multisingularity = false;  // scodim undefined; tcodim 0 by convention
  long scodim = 0;
  long tcodim = 0;
};

// Summation formula over members plus (r-1)*l; tcodim = scodim + l.
Codims codims(const Multisingularity& m, int l);

}  // namespace ssmthom
