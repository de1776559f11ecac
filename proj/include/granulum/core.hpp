#pragma once

#include <boost/rational.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace granulum {

// Thrown when user-supplied data fails validation (CLI exit code 2).
struct input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Thrown when an operation's stated precondition is violated by the caller.
struct precondition_error : std::logic_error {
  using std::logic_error::logic_error;
};

// Thrown for requests outside the supported desk-scale envelope.
struct unsupported_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// All arithmetic is exact; no floating point anywhere in the library.
using Rational = boost::rational<long long>;

inline Rational rat(long long p, long long q = 1) { return Rational(p, q); }

inline std::string to_frac(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Accepts "p/q" or a bare integer "p".
inline Rational parse_frac(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(text));
    long long p = std::stoll(text.substr(0, slash));
    long long q = std::stoll(text.substr(slash + 1));
    if (q == 0) throw input_error("zero denominator in rational: " + text);
    return Rational(p, q);
  } catch (const std::invalid_argument&) {
    throw input_error("malformed rational: " + text);
  } catch (const std::out_of_range&) {
    throw input_error("rational out of range: " + text);
  }
}

// Checked unit-interval value.
inline Rational unit(const Rational& r) {
  if (r < Rational(0) || r > Rational(1))
    throw input_error("value outside [0,1]: " + to_frac(r));
  return r;
}

// A subset of an indexed universe; universe size is capped at 32 elements.
using Mask = std::uint32_t;

inline int card(Mask m) { return std::popcount(m); }
inline bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }
inline bool has_bit(Mask m, int i) { return (m >> i) & 1u; }

inline constexpr int kMaxUniverse = 32;

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep)) out.push_back(part);
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

// Ordered finite universe of named elements; canonical order = input order.
class Universe {
 public:
  Universe() = default;

  explicit Universe(std::vector<std::string> ids) : ids_(std::move(ids)) {
    if (static_cast<int>(ids_.size()) > kMaxUniverse)
      throw input_error("universe exceeds " + std::to_string(kMaxUniverse) +
                        " elements");
    for (std::size_t i = 0; i < ids_.size(); ++i)
      for (std::size_t j = i + 1; j < ids_.size(); ++j)
        if (ids_[i] == ids_[j])
          throw input_error("duplicate element id: " + ids_[i]);
  }

  int size() const { return static_cast<int>(ids_.size()); }

  int index_of(const std::string& id) const {
    for (std::size_t i = 0; i < ids_.size(); ++i)
      if (ids_[i] == id) return static_cast<int>(i);
    throw input_error("unknown element id: " + id);
  }

  bool contains(const std::string& id) const {
    return std::find(ids_.begin(), ids_.end(), id) != ids_.end();
  }

  const std::string& id(int i) const { return ids_.at(i); }
  const std::vector<std::string>& ids() const { return ids_; }

  Mask full() const {
    return size() == kMaxUniverse ? ~Mask{0} : (Mask{1} << size()) - 1;
  }

  Mask subset(const std::vector<std::string>& names) const {
    Mask m = 0;
    for (const auto& n : names) m |= Mask{1} << index_of(n);
    return m;
  }

  // Parses "a,b,c"; the empty string is the empty set.
  Mask parse_subset(const std::string& csv) const {
    Mask m = 0;
    if (trim(csv).empty()) return m;
    for (const auto& piece : split(csv, ',')) m |= Mask{1} << index_of(trim(piece));
    return m;
  }

  std::vector<std::string> names(Mask m) const {
    std::vector<std::string> out;
    for (int i = 0; i < size(); ++i)
      if (has_bit(m, i)) out.push_back(ids_[i]);
    return out;
  }

  std::string label(Mask m) const {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < size(); ++i)
      if (has_bit(m, i)) {
        if (!first) out += ",";
        out += ids_[i];
        first = false;
      }
    return out + "}";
  }

  bool operator==(const Universe& o) const { return ids_ == o.ids_; }

 private:
  std::vector<std::string> ids_;
};

// One axiom / property / theorem line in a verification report.
struct CheckItem {
  std::string name;
  bool holds = false;
  bool advisory = false;  // informational line, excluded from the aggregate
  std::string witness;    // first counterexample found, empty when none
  std::string note;
};

struct CheckReport {
  std::vector<CheckItem> items;

  CheckItem& add(std::string name) {
    items.push_back(CheckItem{std::move(name), true, false, "", ""});
    return items.back();
  }

  const CheckItem* find(const std::string& name) const {
    for (const auto& it : items)
      if (it.name == name) return &it;
    return nullptr;
  }

  bool all_hold() const {
    return std::all_of(items.begin(), items.end(),
                       [](const CheckItem& c) { return c.holds || c.advisory; });
  }
};

}  // namespace granulum
