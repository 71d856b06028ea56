#pragma once

#include <map>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "matroid/construct.hpp"

namespace matroid {

/// Parse failure carrying the 1-based line number (0 when not tied to a line).
class ParseError : public InputError {
 public:
  ParseError(int line, const std::string& message)
      : InputError(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct InputDocument {
  enum class Kind { matroid, graph, gf2 };
  Kind kind = Kind::matroid;
  std::optional<Matroid> matroid;
  std::optional<Multigraph> graph;
  std::optional<GF2Matrix> gf2;
  std::optional<CircuitFamily> family;  // matroid format: the raw circuit list
  int ground_size = 0;
  std::map<std::string, int> tags;

  Matroid to_matroid() const {
    switch (kind) {
      case Kind::matroid:
        if (!matroid) return Matroid(ground_size, *family);
        return *matroid;
      case Kind::graph: return cycle_matroid(*graph);
      case Kind::gf2: return from_gf2(*gf2);
    }
    throw std::logic_error("unreachable");
  }
};

namespace detail {

inline int parse_int(const std::string& token, int line) {
  try {
    std::size_t used = 0;
    int v = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + token + "'");
  }
}

}  // namespace detail

/// Parses the line-oriented text formats:
///
///   matroid            graph              gf2
///   n 3                vertices 2         rows 2
///   c 0 1              edge 0 1           cols 3
///   c 0 2              edge 0 1           row 1 0 1
///   tag e 0                               row 0 1 1
///
/// Tokens are whitespace separated, '#' starts a comment, indices are 0-based.
/// With require_matroid off, a matroid document only needs to be a clutter.
inline InputDocument parse_input(const std::string& text, bool require_matroid = true) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  InputDocument doc;
  bool have_header = false;

  std::optional<int> n, vertices, rows, cols;
  std::vector<std::pair<Subset, int>> circuits;  // with line numbers
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<std::uint8_t>> matrix;
  std::vector<std::pair<std::pair<std::string, int>, int>> tags;

  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    std::vector<std::string> tok;
    for (std::string w; words >> w;) tok.push_back(w);
    if (tok.empty()) continue;

    if (!have_header) {
      if (tok.size() != 1) throw ParseError(line_no, "expected a header line (matroid, graph or gf2)");
      if (tok[0] == "matroid")
        doc.kind = InputDocument::Kind::matroid;
      else if (tok[0] == "graph")
        doc.kind = InputDocument::Kind::graph;
      else if (tok[0] == "gf2")
        doc.kind = InputDocument::Kind::gf2;
      else
        throw ParseError(line_no, "unknown header '" + tok[0] + "'");
      have_header = true;
      continue;
    }

    const std::string& key = tok[0];
    auto single = [&](std::optional<int>& slot) {
      if (tok.size() != 2) throw ParseError(line_no, "'" + key + "' takes exactly one value");
      if (slot) throw ParseError(line_no, "duplicate '" + key + "' line");
      slot = detail::parse_int(tok[1], line_no);
      if (*slot < 0) throw ParseError(line_no, "'" + key + "' must be non-negative");
    };
    if (key == "tag") {
      if (tok.size() != 3) throw ParseError(line_no, "tag takes a name and an index");
      tags.push_back({{tok[1], detail::parse_int(tok[2], line_no)}, line_no});
      continue;
    }
    switch (doc.kind) {
      case InputDocument::Kind::matroid:
        if (key == "n") {
          single(n);
          if (*n > kMaxElements) throw ParseError(line_no, "ground size exceeds " + std::to_string(kMaxElements));
        } else if (key == "c") {
          if (!n) throw ParseError(line_no, "circuit before 'n' line");
          if (tok.size() < 2) throw ParseError(line_no, "empty circuit");
          Subset c;
          for (std::size_t i = 1; i < tok.size(); ++i) {
            int e = detail::parse_int(tok[i], line_no);
            if (e < 0 || e >= *n) throw ParseError(line_no, "element index " + tok[i] + " out of range");
            if (c.contains(e)) throw ParseError(line_no, "repeated element " + tok[i] + " in circuit");
            c = c.with(e);
          }
          for (auto& [prev, prev_line] : circuits) {
            if (prev == c) throw ParseError(line_no, "duplicate circuit (first on line " + std::to_string(prev_line) + ")");
            if (prev.includes(c) || c.includes(prev))
              throw ParseError(line_no, "circuits are not an antichain (conflicts with line " +
                                            std::to_string(prev_line) + ")");
          }
          circuits.emplace_back(c, line_no);
        } else {
          throw ParseError(line_no, "unknown matroid line '" + key + "'");
        }
        break;
      case InputDocument::Kind::graph:
        if (key == "vertices") {
          single(vertices);
        } else if (key == "edge") {
          if (!vertices) throw ParseError(line_no, "edge before 'vertices' line");
          if (tok.size() != 3) throw ParseError(line_no, "edge takes two endpoints");
          int u = detail::parse_int(tok[1], line_no), v = detail::parse_int(tok[2], line_no);
          if (u < 0 || v < 0 || u >= *vertices || v >= *vertices) throw ParseError(line_no, "edge endpoint out of range");
          edges.emplace_back(u, v);
          if (static_cast<int>(edges.size()) > kMaxElements) throw ParseError(line_no, "too many edges");
        } else {
          throw ParseError(line_no, "unknown graph line '" + key + "'");
        }
        break;
      case InputDocument::Kind::gf2:
        if (key == "rows") {
          single(rows);
        } else if (key == "cols") {
          single(cols);
        } else if (key == "row") {
          if (!rows || !cols) throw ParseError(line_no, "row before 'rows' and 'cols' lines");
          if (static_cast<int>(tok.size()) - 1 != *cols)
            throw ParseError(line_no, "row has " + std::to_string(tok.size() - 1) + " entries, expected " +
                                          std::to_string(*cols));
          if (static_cast<int>(matrix.size()) == *rows) throw ParseError(line_no, "too many rows");
          std::vector<std::uint8_t> r;
          for (std::size_t i = 1; i < tok.size(); ++i) {
            if (tok[i] != "0" && tok[i] != "1") throw ParseError(line_no, "GF(2) entries must be 0 or 1");
            r.push_back(tok[i] == "1");
          }
          matrix.push_back(std::move(r));
        } else {
          throw ParseError(line_no, "unknown gf2 line '" + key + "'");
        }
        break;
    }
  }
  if (!have_header) throw ParseError(0, "empty document");

  int element_count = 0;
  try {
    switch (doc.kind) {
      case InputDocument::Kind::matroid: {
        if (!n) throw ParseError(line_no, "missing 'n' line");
        std::vector<Subset> cs;
        for (auto& [c, l] : circuits) cs.push_back(c);
        doc.family = CircuitFamily(std::move(cs));
        doc.ground_size = *n;
        if (require_matroid) doc.matroid = Matroid(*n, *doc.family);
        element_count = *n;
        break;
      }
      case InputDocument::Kind::graph:
        if (!vertices) throw ParseError(line_no, "missing 'vertices' line");
        doc.graph = Multigraph(*vertices, edges);
        doc.ground_size = static_cast<int>(edges.size());
        element_count = static_cast<int>(edges.size());
        break;
      case InputDocument::Kind::gf2:
        if (!rows || !cols) throw ParseError(line_no, "missing 'rows' or 'cols' line");
        if (static_cast<int>(matrix.size()) != *rows)
          throw ParseError(line_no, "expected " + std::to_string(*rows) + " rows, got " + std::to_string(matrix.size()));
        doc.gf2 = GF2Matrix(*rows, *cols, matrix);
        doc.ground_size = *cols;
        element_count = *cols;
        break;
    }
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    throw ParseError(line_no, e.what());
  }
  for (auto& [tag, l] : tags) {
    if (tag.second < 0 || tag.second >= element_count) throw ParseError(l, "tag index out of range");
    doc.tags[tag.first] = tag.second;
  }
  return doc;
}

/// Text form of a matroid; circuits in canonical order, then tags.
inline std::string emit_matroid(const Matroid& m, const std::map<std::string, int>& tags = {}) {
  std::ostringstream out;
  out << "matroid\n"
      << "n " << m.size() << "\n";
  for (Subset c : m.circuits()) {
    out << "c";
    for (int e : c) out << ' ' << e;
    out << "\n";
  }
  for (auto& [name, index] : tags) out << "tag " << name << ' ' << index << "\n";
  return out.str();
}

inline std::string emit_graph(const Multigraph& g) {
  std::ostringstream out;
  out << "graph\nvertices " << g.vertex_count << "\n";
  for (auto [u, v] : g.edges) out << "edge " << u << ' ' << v << "\n";
  return out.str();
}

/// One-line replayable encoding, e.g. "n=3:{0,1}{0,2}{1,2}".
inline std::string encode_instance(const Matroid& m) {
  std::string s = "n=" + std::to_string(m.size()) + ":";
  for (Subset c : m.circuits()) s += c.to_string();
  return s;
}

inline Matroid decode_instance(const std::string& text) {
  static const std::regex whole(R"(n=(\d+):((\{[0-9,]+\})*))");
  std::smatch match;
  if (!std::regex_match(text, match, whole)) throw InputError("malformed instance encoding: " + text);
  const int n = std::stoi(match[1]);
  std::vector<Subset> cs;
  static const std::regex one(R"(\{([0-9,]+)\})");
  const std::string body = match[2];
  for (auto it = std::sregex_iterator(body.begin(), body.end(), one); it != std::sregex_iterator(); ++it) {
    std::vector<int> elems;
    std::istringstream parts((*it)[1].str());
    for (std::string tok; std::getline(parts, tok, ',');) elems.push_back(std::stoi(tok));
    cs.push_back(Subset::of(elems));
  }
  return Matroid(n, CircuitFamily(std::move(cs)));
}

}  // namespace matroid
