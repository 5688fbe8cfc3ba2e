#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hsg/bitset.hpp"
#include "hsg/semigroup.hpp"

namespace hsg {

struct ParseError : Error {
  ParseError(const std::string& msg, int line, int col);
  int line = 0;
  int col = 0;  // 1-based token position within the line
};

// Cayley-table document: '#' comment lines, element count, n table rows,
// optional "names: ..." line.
FiniteSemigroup parse_semigroup(std::istream& in);
FiniteSemigroup parse_semigroup(const std::string& text);
FiniteSemigroup parse_semigroup_file(const std::string& path);

// Canonical form: no comments, single spaces, newline-terminated rows.
std::string serialize_semigroup(const FiniteSemigroup& s);
void write_semigroup_file(const std::string& path, const FiniteSemigroup& s,
                          const std::string& header_comment = "");

// Subset text form "{i1,i2,...}" with strictly increasing indices.
Bitset parse_subset(const std::string& text, int ground_n);
std::string subset_text(const Bitset& b);

// Action document: one line per group element, "g: p0 p1 ... p_{n-1}".
std::vector<std::vector<int>> parse_action_perms(std::istream& in, int group_n,
                                                 int target_n);
std::string serialize_action_perms(const std::vector<std::vector<int>>& perms);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace hsg
