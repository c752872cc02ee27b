#include "efglat/io.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "efglat/error.hpp"

namespace efglat {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

bool is_reserved(char c) { return c == '<' || c == '-' || c == '>'; }

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::string_view text;
  std::size_t number;  // 1-based
};

[[noreturn]] void syntax_error(std::size_t line, std::size_t column, const std::string& what) {
  throw Error(Errc::SyntaxError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

class Reader {
 public:
  explicit Reader(std::string_view text) {
    std::size_t number = 1, start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
      if (i == text.size() || text[i] == '\n') {
        std::string_view line = text.substr(start, i - start);
        std::size_t first = 0;
        while (first < line.size() && is_space(line[first])) ++first;
        if (first < line.size() && line[first] != '#') lines_.push_back(Line{line, number});
        ++number;
        start = i + 1;
      }
    }
    last_line_ = number - 1;
  }

  void expect_header(std::string_view word) {
    if (next_ == lines_.size()) syntax_error(last_line_, 1, "expected header '" + std::string(word) + "'");
    const Line& line = lines_[next_++];
    auto tokens = split(line.text);
    if (tokens.size() != 1 || tokens[0].text != word)
      syntax_error(line.number, tokens.empty() ? 1 : tokens[0].column,
                   "expected header '" + std::string(word) + "'");
  }

  // Reads a "key: tok tok ..." line.
  std::vector<Token> expect_key(std::string_view key, std::size_t& line_number) {
    const std::string wanted = std::string(key) + ":";
    if (next_ == lines_.size()) syntax_error(last_line_, 1, "expected '" + wanted + "' line");
    const Line& line = lines_[next_++];
    line_number = line.number;
    std::size_t at = 0;
    while (at < line.text.size() && is_space(line.text[at])) ++at;
    if (line.text.substr(at, wanted.size()) != wanted)
      syntax_error(line.number, at + 1, "expected '" + wanted + "'");
    std::size_t offset = at + wanted.size();
    auto tokens = split(line.text.substr(offset));
    for (auto& t : tokens) t.column += offset;
    return tokens;
  }

  void expect_end() {
    if (next_ != lines_.size()) syntax_error(lines_[next_].number, 1, "unexpected content after document");
  }

 private:
  static std::vector<Token> split(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && is_space(text[i])) ++i;
      std::size_t start = i;
      while (i < text.size() && !is_space(text[i])) ++i;
      if (i > start) out.push_back(Token{text.substr(start, i - start), start + 1});
    }
    return out;
  }

  std::vector<Line> lines_;
  std::size_t next_ = 0;
  std::size_t last_line_ = 1;
};

void check_label_token(std::string_view label, std::size_t line, std::size_t column) {
  if (label.empty()) syntax_error(line, column, "empty label");
  for (std::size_t i = 0; i < label.size(); ++i)
    if (is_reserved(label[i]))
      syntax_error(line, column + i, "unexpected '" + std::string(1, label[i]) + "' in label");
}

// Splits "a<b", "a-b" or "a->b" around the separator.
std::pair<std::string, std::string> split_pair(const Token& t, std::string_view sep, std::size_t line) {
  auto at = t.text.find(sep);
  if (at == std::string_view::npos)
    syntax_error(line, t.column, "expected a pair written a" + std::string(sep) + "b");
  auto left = t.text.substr(0, at);
  auto right = t.text.substr(at + sep.size());
  if (left.empty()) syntax_error(line, t.column, "missing label before '" + std::string(sep) + "'");
  if (right.empty()) syntax_error(line, t.column + at + sep.size(), "missing label after '" + std::string(sep) + "'");
  check_label_token(left, line, t.column);
  check_label_token(right, line, t.column + at + sep.size());
  return {std::string(left), std::string(right)};
}

std::vector<std::string> labels_of(const std::vector<Token>& tokens, std::size_t line) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) {
    check_label_token(t.text, line, t.column);
    out.emplace_back(t.text);
  }
  return out;
}

void require_document_label(const std::string& label) {
  if (!is_document_label(label))
    throw Error(Errc::InvalidLabel, "label '" + label + "' cannot be written to a document");
}

void append_list(std::string& out, std::string_view key, const std::vector<std::string>& items) {
  out += key;
  out += ':';
  for (const auto& item : items) {
    out += ' ';
    out += item;
  }
  out += '\n';
}

}  // namespace

bool is_document_label(std::string_view label) {
  if (label.empty()) return false;
  return std::none_of(label.begin(), label.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return u <= ' ' || u == 0x7f || is_reserved(c);
  });
}

Poset parse_poset(std::string_view text) {
  Reader r(text);
  r.expect_header("poset");
  std::size_t line = 0;
  auto element_tokens = r.expect_key("elements", line);
  auto elements = labels_of(element_tokens, line);
  auto cover_tokens = r.expect_key("covers", line);
  std::vector<std::pair<std::string, std::string>> pairs;
  pairs.reserve(cover_tokens.size());
  for (const auto& t : cover_tokens) pairs.push_back(split_pair(t, "<", line));
  r.expect_end();
  return build_poset(std::move(elements), pairs);
}

std::string emit_poset(const Poset& p) {
  for (const auto& l : p.labels()) require_document_label(l);
  std::string out = "poset\n";
  append_list(out, "elements", p.labels());
  std::vector<std::string> covers;
  covers.reserve(p.covers().size());
  for (auto [a, b] : p.covers()) covers.push_back(p.label(a) + "<" + p.label(b));
  append_list(out, "covers", covers);
  return out;
}

EfgInstance parse_efg(std::string_view text) {
  Reader r(text);
  r.expect_header("efg");
  std::size_t line = 0;

  EfgInstance e;
  FiringGraph& g = e.graph;
  auto vertex_tokens = r.expect_key("vertices", line);
  g.vertices = labels_of(vertex_tokens, line);
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    if (!index.emplace(g.vertices[i], i).second)
      throw Error(Errc::DuplicateLabel, "label '" + g.vertices[i] + "' appears twice");
  auto lookup = [&](const std::string& label) {
    auto it = index.find(label);
    if (it == index.end()) throw Error(Errc::UnknownLabel, "'" + label + "' is not a vertex");
    return it->second;
  };

  auto sink_tokens = r.expect_key("sink", line);
  if (sink_tokens.empty()) syntax_error(line, 1, "missing sink label");
  if (sink_tokens.size() > 1) syntax_error(line, sink_tokens[1].column, "expected exactly one sink label");
  {
    std::string sink(sink_tokens[0].text);
    check_label_token(sink, line, sink_tokens[0].column);
    auto it = index.find(sink);
    if (it == index.end()) throw Error(Errc::BadSink, "'" + sink + "' is not a vertex");
    g.sink = it->second;
  }

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_of;
  for (const auto& t : r.expect_key("edges", line)) {
    auto [a, b] = split_pair(t, "-", line);
    std::size_t ia = lookup(a), ib = lookup(b);
    if (ia == ib) throw Error(Errc::SelfLoop, a + "-" + b);
    if (!edge_of.emplace(std::minmax(ia, ib), g.edges.size()).second)
      throw Error(Errc::DuplicateEdge, a + "-" + b + " listed twice");
    g.edges.push_back(Edge{ia, ib});
  }

  e.initial = Orientation(g.edges.size());
  std::vector<char> directed(g.edges.size(), 0);
  for (const auto& t : r.expect_key("orientation", line)) {
    auto [a, b] = split_pair(t, "->", line);
    std::size_t ia = lookup(a), ib = lookup(b);
    auto it = edge_of.find(std::minmax(ia, ib));
    if (it == edge_of.end()) throw Error(Errc::OrientationMismatch, a + "->" + b + " has no edge");
    if (directed[it->second]) throw Error(Errc::OrientationMismatch, a + "-" + b + " is directed twice");
    directed[it->second] = 1;
    if (g.edges[it->second].first != ia) e.initial.reversed.set(it->second);
  }
  r.expect_end();
  for (std::size_t k = 0; k < g.edges.size(); ++k)
    if (!directed[k])
      throw Error(Errc::OrientationMismatch, g.vertices[g.edges[k].first] + "-" +
                                                 g.vertices[g.edges[k].second] + " has no direction");
  validate_efg(e);
  return e;
}

std::string emit_efg(const EfgInstance& e) {
  const FiringGraph& g = e.graph;
  for (const auto& l : g.vertices) require_document_label(l);
  if (g.sink >= g.vertices.size()) throw Error(Errc::BadSink, "sink index out of range");
  std::string out = "efg\n";
  append_list(out, "vertices", g.vertices);
  out += "sink: " + g.vertices.at(g.sink) + "\n";
  std::vector<std::string> edges, directions;
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    edges.push_back(g.vertices[g.edges[k].first] + "-" + g.vertices[g.edges[k].second]);
    directions.push_back(g.vertices[tail(g, e.initial, k)] + "->" + g.vertices[head(g, e.initial, k)]);
  }
  append_list(out, "edges", edges);
  append_list(out, "orientation", directions);
  return out;
}

}  // namespace efglat
