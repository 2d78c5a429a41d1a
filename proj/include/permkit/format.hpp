#pragma once

#include <cctype>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "permkit/bigint.hpp"
#include "permkit/errors.hpp"
#include "permkit/permutation.hpp"

namespace permkit {

// One-line form "[1 3 2]".
inline std::string to_one_line_string(const Permutation& p) {
  std::string out = "[";
  for (int k = 1; k <= p.degree(); ++k) {
    if (k > 1) out += ' ';
    out += std::to_string(p(k));
  }
  out += ']';
  return out;
}

// Cycle form "(2,3)(4,9)"; the identity renders as "()".
inline std::string to_cycle_string(const Permutation& p) {
  const auto cycles = p.to_cycles();
  if (cycles.empty()) return "()";
  std::string out;
  for (const Cycle& c : cycles) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  return out;
}

inline Permutation parse_one_line(const std::string& text) {
  std::size_t lo = text.find('[');
  std::size_t hi = text.rfind(']');
  if (lo == std::string::npos || hi == std::string::npos || hi < lo)
    fail(errc::parse_error, "one-line form must be bracketed: " + text);
  std::stringstream ss(text.substr(lo + 1, hi - lo - 1));
  std::vector<int> images;
  int v = 0;
  while (ss >> v) images.push_back(v);
  if (!ss.eof()) fail(errc::parse_error, "bad one-line form: " + text);
  return Permutation::from_one_line(std::move(images));
}

// Parses "(2,3)(4,9)" or "()" against an explicit degree (cycle notation
// does not carry the degree by itself).
inline Permutation parse_cycles(int n, const std::string& text) {
  std::vector<Cycle> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') fail(errc::parse_error, "expected '(' in cycle form: " + text);
    ++i;
    Cycle c;
    skip_space();
    while (i < text.size() && text[i] != ')') {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(text.substr(i), &used);
      } catch (const std::exception&) {
        fail(errc::parse_error, "bad cycle entry in: " + text);
      }
      i += used;
      c.push_back(v);
      skip_space();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_space();
      }
    }
    if (i >= text.size()) fail(errc::parse_error, "unterminated cycle in: " + text);
    ++i;  // ')'
    if (!c.empty()) cycles.push_back(std::move(c));
    skip_space();
  }
  return Permutation::from_cycles(n, cycles);
}

// OEIS b-file: one "n value" pair per line, newline-terminated, no header.
inline std::string emit_bfile(const std::vector<std::pair<std::int64_t, Int>>& rows) {
  std::string out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0 && rows[i].first <= rows[i - 1].first)
      fail(errc::non_monotonic_index, "b-file indices must strictly increase");
    out += std::to_string(rows[i].first);
    out += ' ';
    out += rows[i].second.str();
    out += '\n';
  }
  return out;
}

}  // namespace permkit
