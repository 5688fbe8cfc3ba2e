#include "hsg/io.hpp"

#include <fstream>
#include <sstream>

namespace hsg {

namespace {

std::string loc(const std::string& msg, int line, int col) {
  std::ostringstream os;
  os << "line " << line << ", token " << col << ": " << msg;
  return os.str();
}

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

// Content lines only; comments ('#') and blank lines skipped.
std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream ls(raw);
    std::vector<std::string> tokens;
    std::string t;
    while (ls >> t) tokens.push_back(t);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    out.push_back({number, std::move(tokens)});
  }
  return out;
}

int parse_int(const std::string& t, int line, int col) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(t, &pos);
  } catch (const std::exception&) {
    throw ParseError("expected an integer, found '" + t + "'", line, col);
  }
  if (pos != t.size())
    throw ParseError("expected an integer, found '" + t + "'", line, col);
  return v;
}

}  // namespace

ParseError::ParseError(const std::string& msg, int line_, int col_)
    : Error(loc(msg, line_, col_)), line(line_), col(col_) {}

FiniteSemigroup parse_semigroup(std::istream& in) {
  auto lines = tokenize(in);
  if (lines.empty()) throw ParseError("empty document", 1, 1);

  std::size_t li = 0;
  const Line& head = lines[li++];
  if (head.tokens.size() != 1)
    throw ParseError("expected a single element count", head.number, 2);
  int n = parse_int(head.tokens[0], head.number, 1);
  if (n <= 0) throw ParseError("element count must be positive", head.number, 1);

  std::vector<int> table;
  table.reserve(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    if (li >= lines.size())
      throw ParseError("missing table row " + std::to_string(r), head.number + r + 1, 1);
    const Line& row = lines[li++];
    if (row.tokens.size() != static_cast<std::size_t>(n))
      throw ParseError("expected " + std::to_string(n) + " entries, found " +
                           std::to_string(row.tokens.size()),
                       row.number, static_cast<int>(row.tokens.size()));
    for (int c = 0; c < n; ++c) {
      int v = parse_int(row.tokens[c], row.number, c + 1);
      if (v < 0 || v >= n)
        throw ParseError("entry " + std::to_string(v) + " out of range [0," +
                             std::to_string(n) + ")",
                         row.number, c + 1);
      table.push_back(v);
    }
  }

  std::vector<std::string> labels;
  if (li < lines.size()) {
    const Line& names = lines[li++];
    if (names.tokens[0] != "names:")
      throw ParseError("unexpected content after table", names.number, 1);
    if (names.tokens.size() != static_cast<std::size_t>(n) + 1)
      throw ParseError("expected " + std::to_string(n) + " names", names.number,
                       static_cast<int>(names.tokens.size()));
    labels.assign(names.tokens.begin() + 1, names.tokens.end());
  }
  if (li < lines.size())
    throw ParseError("unexpected trailing content", lines[li].number, 1);

  return FiniteSemigroup::checked(n, std::move(table), std::move(labels));
}

FiniteSemigroup parse_semigroup(const std::string& text) {
  std::istringstream in(text);
  return parse_semigroup(in);
}

FiniteSemigroup parse_semigroup_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  try {
    return parse_semigroup(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.line, e.col);
  }
}

std::string serialize_semigroup(const FiniteSemigroup& s) {
  std::ostringstream os;
  int n = s.size();
  os << n << "\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j) os << ' ';
      os << s.prod(i, j);
    }
    os << "\n";
  }
  if (s.has_labels()) {
    os << "names:";
    for (const auto& l : s.labels()) os << ' ' << l;
    os << "\n";
  }
  return os.str();
}

void write_semigroup_file(const std::string& path, const FiniteSemigroup& s,
                          const std::string& header_comment) {
  std::ostringstream os;
  if (!header_comment.empty()) os << "# " << header_comment << "\n";
  os << serialize_semigroup(s);
  write_text_file(path, os.str());
}

Bitset parse_subset(const std::string& text, int ground_n) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    throw Error("subset must look like {i1,i2,...}: " + text);
  Bitset b(ground_n);
  std::string body = text.substr(1, text.size() - 2);
  if (body.empty()) throw Error("subset must be non-empty: " + text);
  std::istringstream is(body);
  std::string item;
  int prev = -1;
  while (std::getline(is, item, ',')) {
    std::size_t pos = 0;
    int v;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw Error("bad subset entry '" + item + "'");
    }
    if (pos != item.size()) throw Error("bad subset entry '" + item + "'");
    if (v < 0 || v >= ground_n)
      throw Error("subset entry " + std::to_string(v) + " out of range");
    if (v <= prev) throw Error("subset entries must be strictly increasing");
    prev = v;
    b.set(v);
  }
  return b;
}

std::string subset_text(const Bitset& b) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  b.for_each([&](int i) {
    if (!first) os << ',';
    first = false;
    os << i;
  });
  os << '}';
  return os.str();
}

std::vector<std::vector<int>> parse_action_perms(std::istream& in, int group_n,
                                                 int target_n) {
  auto lines = tokenize(in);
  std::vector<std::vector<int>> perms(group_n);
  std::vector<char> seen(group_n, 0);
  for (const Line& line : lines) {
    const std::string& head = line.tokens[0];
    if (head.empty() || head.back() != ':')
      throw ParseError("expected 'g:' prefix", line.number, 1);
    int g = parse_int(head.substr(0, head.size() - 1), line.number, 1);
    if (g < 0 || g >= group_n)
      throw ParseError("group element " + std::to_string(g) + " out of range",
                       line.number, 1);
    if (seen[g])
      throw ParseError("duplicate permutation for element " + std::to_string(g),
                       line.number, 1);
    seen[g] = 1;
    if (line.tokens.size() != static_cast<std::size_t>(target_n) + 1)
      throw ParseError("expected " + std::to_string(target_n) + " images",
                       line.number, static_cast<int>(line.tokens.size()));
    std::vector<int> p(target_n);
    for (int i = 0; i < target_n; ++i) {
      int v = parse_int(line.tokens[i + 1], line.number, i + 2);
      if (v < 0 || v >= target_n)
        throw ParseError("image out of range", line.number, i + 2);
      p[i] = v;
    }
    perms[g] = std::move(p);
  }
  for (int g = 0; g < group_n; ++g)
    if (!seen[g])
      throw Error("action is missing a permutation for element " + std::to_string(g));
  return perms;
}

std::string serialize_action_perms(const std::vector<std::vector<int>>& perms) {
  std::ostringstream os;
  for (std::size_t g = 0; g < perms.size(); ++g) {
    os << g << ":";
    for (int v : perms[g]) os << ' ' << v;
    os << "\n";
  }
  return os.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << content;
}

}  // namespace hsg
