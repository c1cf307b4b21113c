#pragma once

// Canonical labels for constructed elements.
//
// Every element of every set is an opaque string. Constructed elements
// (tuples, tables, tagged summands) are rendered in a fixed bracket syntax:
//
//   tuple:  (a,b,c)      -- a 1-tuple renders as its sole component
//   table:  {k1:v1,k2:v2}
//
// User-supplied labels must be well-formed terms of this grammar, where an
// atom is any non-empty string free of the reserved characters "(){},:".
// Under that restriction the encoding is injective, so labels of
// constructed sets can be compared and looked up as plain strings.

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polycat::label {

inline constexpr std::string_view kReserved = "(){},:";
inline constexpr std::string_view kPoint = "*";

bool is_atom(std::string_view s);
bool is_well_formed(std::string_view s);

std::string tuple(std::span<const std::string> parts);
std::string tuple(std::initializer_list<std::string_view> parts);
std::string pair(std::string_view a, std::string_view b);

/// Table over keys (in the given order) with the given values.
std::string table(std::span<const std::string> keys, std::span<const std::string> values);
std::string table(std::span<const std::pair<std::string, std::string>> entries);

}  // namespace polycat::label
