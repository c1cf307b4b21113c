#include "polycat/label.hpp"

#include <limits>

#include "polycat/error.hpp"

namespace polycat {

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > std::numeric_limits<std::size_t>::max() / b) return std::numeric_limits<std::size_t>::max();
  return a * b;
}

std::size_t saturating_add(std::size_t a, std::size_t b) {
  if (a > std::numeric_limits<std::size_t>::max() - b) return std::numeric_limits<std::size_t>::max();
  return a + b;
}

std::size_t saturating_pow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r = saturating_mul(r, base);
  return r;
}

}  // namespace polycat

namespace polycat::label {

namespace {

bool reserved(char c) { return kReserved.find(c) != std::string_view::npos; }

// Recursive-descent recognizer; advances `pos` past one term.
bool parse_term(std::string_view s, std::size_t& pos, int depth);

bool parse_sequence(std::string_view s, std::size_t& pos, int depth, char close, bool keyed) {
  if (pos < s.size() && s[pos] == close) {
    ++pos;
    return true;
  }
  while (true) {
    if (!parse_term(s, pos, depth + 1)) return false;
    if (keyed) {
      if (pos >= s.size() || s[pos] != ':') return false;
      ++pos;
      if (!parse_term(s, pos, depth + 1)) return false;
    }
    if (pos >= s.size()) return false;
    if (s[pos] == close) {
      ++pos;
      return true;
    }
    if (s[pos] != ',') return false;
    ++pos;
  }
}

bool parse_term(std::string_view s, std::size_t& pos, int depth) {
  if (depth > 512 || pos >= s.size()) return false;
  if (s[pos] == '(') {
    ++pos;
    return parse_sequence(s, pos, depth, ')', false);
  }
  if (s[pos] == '{') {
    ++pos;
    return parse_sequence(s, pos, depth, '}', true);
  }
  std::size_t start = pos;
  while (pos < s.size() && !reserved(s[pos])) ++pos;
  return pos > start;
}

}  // namespace

bool is_atom(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (reserved(c)) return false;
  return true;
}

bool is_well_formed(std::string_view s) {
  std::size_t pos = 0;
  return parse_term(s, pos, 0) && pos == s.size();
}

std::string tuple(std::span<const std::string> parts) {
  if (parts.size() == 1) return parts[0];
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += parts[i];
  }
  out += ')';
  return out;
}

std::string tuple(std::initializer_list<std::string_view> parts) {
  if (parts.size() == 1) return std::string(*parts.begin());
  std::string out = "(";
  bool first = true;
  for (auto p : parts) {
    if (!first) out += ',';
    first = false;
    out += p;
  }
  out += ')';
  return out;
}

std::string pair(std::string_view a, std::string_view b) {
  std::string out;
  out.reserve(a.size() + b.size() + 3);
  out += '(';
  out += a;
  out += ',';
  out += b;
  out += ')';
  return out;
}

std::string table(std::span<const std::string> keys, std::span<const std::string> values) {
  std::string out = "{";
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (i) out += ',';
    out += keys[i];
    out += ':';
    out += values[i];
  }
  out += '}';
  return out;
}

std::string table(std::span<const std::pair<std::string, std::string>> entries) {
  std::string out = "{";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ',';
    out += entries[i].first;
    out += ':';
    out += entries[i].second;
  }
  out += '}';
  return out;
}

}  // namespace polycat::label
