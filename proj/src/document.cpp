#include "mtree/document.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace mtree {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '\r') {
      ++i;
    }
    if (i > start) tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

double parse_number(const Token& token, std::size_t line) {
  double value = 0.0;
  const char* first = token.text.data();
  const char* last = first + token.text.size();
  if (!token.text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw SyntaxError("expected a number, got '" + std::string(token.text) + "'",
                      line, token.column);
  }
  return value;
}

struct PendingPoint {
  std::string name;
  std::vector<Token> tokens;
  std::size_t line;
};

std::string line_prefix(std::size_t line) {
  return "line " + std::to_string(line) + ": ";
}

}  // namespace

bool is_valid_name(std::string_view name) {
  if (name.empty()) return false;
  return std::none_of(name.begin(), name.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '#' ||
           c == ',';
  });
}

std::string format_number(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, ptr);
}

std::optional<NodeId> TreeDocument::find_node(std::string_view name) const {
  const auto it = std::find(node_names.begin(), node_names.end(), name);
  if (it == node_names.end()) return std::nullopt;
  return static_cast<NodeId>(it - node_names.begin());
}

std::optional<TreePoint> TreeDocument::resolve(std::string_view name) const {
  for (const NamedPoint& p : points) {
    if (p.name == name) return p.point;
  }
  if (const auto n = find_node(name)) return tree.node(*n);
  return std::nullopt;
}

TreePoint TreeDocument::require(std::string_view name) const {
  if (auto p = resolve(name)) return *p;
  throw Error(ErrorCode::kUnknownPoint,
              "no point or node named '" + std::string(name) + "'");
}

std::vector<TreePoint> TreeDocument::named_points() const {
  std::vector<TreePoint> out;
  out.reserve(points.size());
  for (const NamedPoint& p : points) out.push_back(p.point);
  return out;
}

TreeDocument make_document(MetricTree tree, std::vector<std::string> node_names,
                           std::vector<NamedPoint> points) {
  if (node_names.empty()) {
    for (NodeId n = 0; n < tree.node_count(); ++n) {
      node_names.push_back(std::to_string(n));
    }
  }
  if (node_names.size() != tree.node_count()) {
    throw Error(ErrorCode::kBadParams, "expected one name per node");
  }
  std::set<std::string_view> seen;
  for (const std::string& name : node_names) {
    if (!is_valid_name(name)) {
      throw Error(ErrorCode::kInvalidName, "bad node name '" + name + "'");
    }
    if (!seen.insert(name).second) {
      throw Error(ErrorCode::kDuplicateName, "node '" + name + "'");
    }
  }
  seen.clear();
  for (const NamedPoint& p : points) {
    if (!is_valid_name(p.name)) {
      throw Error(ErrorCode::kInvalidName, "bad point name '" + p.name + "'");
    }
    if (!seen.insert(p.name).second) {
      throw Error(ErrorCode::kDuplicateName, "point '" + p.name + "'");
    }
    tree.check(p.point);
  }
  return TreeDocument{std::move(tree), std::move(node_names), std::move(points)};
}

TreeDocument parse_tree(std::string_view text, Tolerance tol) {
  std::map<std::string, NodeId, std::less<>> ids;
  std::vector<std::string> names;
  RawTree raw;
  std::vector<PendingPoint> pending;

  auto intern = [&](std::string_view name) {
    if (auto it = ids.find(name); it != ids.end()) return it->second;
    const auto id = static_cast<NodeId>(names.size());
    ids.emplace(std::string(name), id);
    names.emplace_back(name);
    return id;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const std::vector<Token> tokens = tokenize(line);
    if (tokens.empty()) continue;

    const std::string_view keyword = tokens[0].text;
    if (keyword == "node") {
      if (tokens.size() != 2) {
        throw SyntaxError("expected 'node <name>'", line_no, tokens[0].column);
      }
      intern(tokens[1].text);
    } else if (keyword == "edge") {
      if (tokens.size() != 4) {
        throw SyntaxError("expected 'edge <u> <v> <length>'", line_no,
                          tokens[0].column);
      }
      const double length = parse_number(tokens[3], line_no);
      const NodeId u = intern(tokens[1].text);
      const NodeId v = intern(tokens[2].text);
      raw.edges.push_back({u, v, length});
    } else if (keyword == "point") {
      const bool node_form = tokens.size() == 4 && tokens[2].text == "node";
      const bool edge_form = tokens.size() == 6 && tokens[2].text == "edge";
      if (!node_form && !edge_form) {
        throw SyntaxError(
            "expected 'point <name> node <id>' or "
            "'point <name> edge <u> <v> <offset>'",
            line_no, tokens[0].column);
      }
      if (edge_form) parse_number(tokens[5], line_no);
      pending.push_back({std::string(tokens[1].text), tokens, line_no});
    } else {
      throw SyntaxError("unknown keyword '" + std::string(keyword) + "'",
                        line_no, tokens[0].column);
    }
  }

  raw.node_count = names.size();
  MetricTree tree = MetricTree::validate(raw, tol);

  std::vector<NamedPoint> points;
  for (const PendingPoint& p : pending) {
    auto node_of = [&](const Token& t) {
      const auto it = ids.find(t.text);
      if (it == ids.end()) {
        throw Error(ErrorCode::kUnknownNode, line_prefix(p.line) + "node '" +
                                                 std::string(t.text) + "'");
      }
      return it->second;
    };
    try {
      if (p.tokens.size() == 4) {
        points.push_back({p.name, tree.node(node_of(p.tokens[3]))});
      } else {
        const NodeId u = node_of(p.tokens[3]);
        const NodeId v = node_of(p.tokens[4]);
        const double offset = parse_number(p.tokens[5], p.line);
        points.push_back({p.name, tree.point_on(u, v, offset)});
      }
    } catch (const SyntaxError&) {
      throw;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kUnknownNode) throw;
      throw Error(e.code(), line_prefix(p.line) + e.what());
    }
  }
  return make_document(std::move(tree), std::move(names), std::move(points));
}

std::string serialize_tree(const TreeDocument& doc) {
  std::ostringstream out;
  out << "# metric tree: " << doc.tree.node_count() << " nodes, "
      << doc.tree.edge_count() << " edges\n";
  for (const std::string& name : doc.node_names) out << "node " << name << '\n';
  for (const Edge& e : doc.tree.edges()) {
    out << "edge " << doc.node_name(e.u) << ' ' << doc.node_name(e.v) << ' '
        << format_number(e.length) << '\n';
  }
  for (const NamedPoint& p : doc.points) {
    out << "point " << p.name << ' ';
    if (p.point.is_node()) {
      out << "node " << doc.node_name(p.point.node()) << '\n';
    } else {
      const Edge& e = doc.tree.edge(p.point.edge());
      out << "edge " << doc.node_name(e.u) << ' ' << doc.node_name(e.v) << ' '
          << format_number(p.point.offset()) << '\n';
    }
  }
  return out.str();
}

bool structurally_equal(const TreeDocument& a, const TreeDocument& b) {
  if (a.node_names != b.node_names) return false;
  const auto ea = a.tree.edges();
  const auto eb = b.tree.edges();
  if (!std::equal(ea.begin(), ea.end(), eb.begin(), eb.end())) return false;
  if (a.points.size() != b.points.size()) return false;
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    const TreePoint& p = a.points[i].point;
    const TreePoint& q = b.points[i].point;
    if (a.points[i].name != b.points[i].name) return false;
    if (p.is_node() != q.is_node()) return false;
    if (p.is_node() ? p.node() != q.node()
                    : (p.edge() != q.edge() || p.offset() != q.offset())) {
      return false;
    }
  }
  return true;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
}

}  // namespace mtree
