#include "webvac/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace webvac {

namespace {

// Strict tokenizer: lines separated by single '\n', a trailing newline, and
// tokens separated by single spaces.
std::vector<std::vector<std::string>> tokenize(const std::string& text) {
  if (text.empty() || text.back() != '\n')
    throw FormatError("missing trailing newline", 1);
  std::vector<std::vector<std::string>> lines;
  std::vector<std::string> tokens;
  std::string cur;
  int line = 1;
  for (char ch : text) {
    if (ch == '\n') {
      if (cur.empty()) throw FormatError("empty token or trailing space", line);
      tokens.push_back(cur);
      cur.clear();
      lines.push_back(std::move(tokens));
      tokens.clear();
      ++line;
    } else if (ch == ' ') {
      if (cur.empty()) throw FormatError("empty token or doubled space", line);
      tokens.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  return lines;
}

long long to_int(const std::string& tok, int line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw FormatError("expected an integer, got '" + tok + "'", line);
  return value;
}

// bound for counts and labels in untrusted files, so headers cannot force
// absurd allocations or truncate through int
constexpr long long kMaxLabel = 1000000;

int to_small_int(const std::string& tok, int line) {
  long long v = to_int(tok, line);
  if (v < -kMaxLabel || v > kMaxLabel)
    throw FormatError("integer '" + tok + "' out of supported range", line);
  return static_cast<int>(v);
}

}  // namespace

std::string print_tableau(const StandardTableau& t) {
  std::ostringstream os;
  os << "tableau " << t.shape().rows << " " << t.shape().cols << "\n";
  for (const auto& row : t.grid()) {
    for (size_t c = 0; c < row.size(); ++c) os << (c ? " " : "") << row[c];
    os << "\n";
  }
  return os.str();
}

StandardTableau parse_tableau(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty() || lines[0].size() != 3 || lines[0][0] != "tableau")
    throw FormatError("expected header 'tableau <n> <k>'", 1);
  int n = to_small_int(lines[0][1], 1);
  int k = to_small_int(lines[0][2], 1);
  if (n < 1 || k < 1) throw FormatError("shape must be positive", 1);
  if (static_cast<int>(lines.size()) != n + 1)
    throw FormatError("expected " + std::to_string(n) + " rows", static_cast<int>(lines.size()));
  Grid grid;
  for (int r = 1; r <= n; ++r) {
    if (static_cast<int>(lines[r].size()) != k)
      throw FormatError("expected " + std::to_string(k) + " entries", r + 1);
    std::vector<int> row;
    for (const auto& tok : lines[r]) row.push_back(to_small_int(tok, r + 1));
    grid.push_back(std::move(row));
  }
  try {
    return StandardTableau::validate(std::move(grid));
  } catch (const Error& e) {
    throw FormatError(e.what(), 2);
  }
}

std::string print_ncm(const MulticoloredNcm& m) {
  std::ostringstream os;
  os << "ncm " << m.rank() << " " << m.boundary_count() << "\n";
  for (int x = 1; x <= m.layer_count(); ++x)
    for (const Arc& a : m.layer(x))
      os << "arc " << x << " " << a.start << " " << a.end << "\n";
  return os.str();
}

MulticoloredNcm parse_ncm(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty() || lines[0].size() != 3 || lines[0][0] != "ncm")
    throw FormatError("expected header 'ncm <n> <N>'", 1);
  int n = to_small_int(lines[0][1], 1);
  int total = to_small_int(lines[0][2], 1);
  if (n < 2) throw FormatError("ncm needs n >= 2", 1);
  std::vector<std::vector<Arc>> layers(n - 1);
  for (size_t li = 1; li < lines.size(); ++li) {
    int lineno = static_cast<int>(li) + 1;
    if (lines[li].size() != 4 || lines[li][0] != "arc")
      throw FormatError("expected 'arc <color> <i> <j>'", lineno);
    int color = to_small_int(lines[li][1], lineno);
    if (color < 1 || color > n - 1) throw FormatError("arc color out of range", lineno);
    int i = to_small_int(lines[li][2], lineno);
    int j = to_small_int(lines[li][3], lineno);
    layers[color - 1].push_back({i, j});
  }
  try {
    return MulticoloredNcm::create(n, total, std::move(layers));
  } catch (const Error& e) {
    throw FormatError(e.what(), 2);
  }
}

namespace {

std::string vertex_token(VertexId v) {
  return (v.kind == VertexId::Kind::Boundary ? "b" : "i") + std::to_string(v.num);
}

VertexId parse_vertex_token(const std::string& tok, int line) {
  if (tok.size() < 2 || (tok[0] != 'b' && tok[0] != 'i'))
    throw FormatError("expected vertex token b<label> or i<id>, got '" + tok + "'", line);
  int num = to_small_int(tok.substr(1), line);
  return tok[0] == 'b' ? boundary_vertex(num) : interior_vertex(num);
}

}  // namespace

std::vector<int> web_edge_print_order(const WebGraph& w) {
  std::vector<int> order(w.edges().size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const WebEdge& ea = w.edges()[a];
    const WebEdge& eb = w.edges()[b];
    auto key = [](const WebEdge& e, int idx) {
      return std::make_tuple(e.tail, e.head, e.weight, e.undirected, idx);
    };
    return key(ea, a) < key(eb, b);
  });
  return order;
}

std::string print_web(const WebGraph& w) {
  std::ostringstream os;
  os << "web " << w.rank() << " " << w.boundary_count() << "\n";
  for (const InteriorVertex& iv : w.interior())
    os << "ivertex " << iv.id << " " << iv.pos.x2 << " " << iv.pos.y2 << "\n";
  for (int idx : web_edge_print_order(w)) {
    const WebEdge& e = w.edges()[idx];
    os << "edge " << vertex_token(e.tail) << " " << vertex_token(e.head) << " "
       << e.weight << " " << (e.undirected ? "u" : "-") << "\n";
  }
  return os.str();
}

WebGraph parse_web(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty() || lines[0].size() != 3 || lines[0][0] != "web")
    throw FormatError("expected header 'web <n> <N>'", 1);
  int n = to_small_int(lines[0][1], 1);
  int total = to_small_int(lines[0][2], 1);
  std::vector<InteriorVertex> interior;
  std::vector<WebEdge> edges;
  size_t li = 1;
  for (; li < lines.size() && lines[li][0] == "ivertex"; ++li) {
    int lineno = static_cast<int>(li) + 1;
    if (lines[li].size() != 4)
      throw FormatError("expected 'ivertex <id> <x2> <y2>'", lineno);
    InteriorVertex iv;
    iv.id = to_small_int(lines[li][1], lineno);
    iv.pos = {to_int(lines[li][2], lineno), to_int(lines[li][3], lineno)};
    interior.push_back(iv);
  }
  for (; li < lines.size(); ++li) {
    int lineno = static_cast<int>(li) + 1;
    if (lines[li].size() != 5 || lines[li][0] != "edge")
      throw FormatError("expected 'edge <tail> <head> <weight> <flags>'", lineno);
    WebEdge e;
    e.tail = parse_vertex_token(lines[li][1], lineno);
    e.head = parse_vertex_token(lines[li][2], lineno);
    e.weight = to_small_int(lines[li][3], lineno);
    if (lines[li][4] == "u")
      e.undirected = true;
    else if (lines[li][4] != "-")
      throw FormatError("flags must be '-' or 'u'", lineno);
    edges.push_back(std::move(e));
  }
  try {
    return WebGraph(n, total, std::move(interior), std::move(edges));
  } catch (const Error& e) {
    throw FormatError(e.what(), 2);
  }
}

}  // namespace webvac
