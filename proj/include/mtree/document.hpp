#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mtree/tree.hpp"

namespace mtree {

struct NamedPoint {
  std::string name;
  TreePoint point;
};

/// A tree together with node names and named points. This is what the
/// line-oriented text format stores:
///
///   # comment
///   node <name>
///   edge <u> <v> <length>
///   point <name> node <node>
///   point <name> edge <u> <v> <offset-from-u>
///
/// Nodes are numbered in order of first appearance.
struct TreeDocument {
  MetricTree tree;
  std::vector<std::string> node_names;
  std::vector<NamedPoint> points;

  const std::string& node_name(NodeId n) const { return node_names.at(n); }
  std::optional<NodeId> find_node(std::string_view name) const;
  /// Looks up a named point first, then a node of that name.
  std::optional<TreePoint> resolve(std::string_view name) const;
  /// resolve() or throw kUnknownPoint.
  TreePoint require(std::string_view name) const;
  std::vector<TreePoint> named_points() const;
};

/// Assembles a document, defaulting node names to their decimal ids.
/// Throws kInvalidName / kDuplicateName / kForeignPoint.
TreeDocument make_document(MetricTree tree,
                           std::vector<std::string> node_names = {},
                           std::vector<NamedPoint> points = {});

bool is_valid_name(std::string_view name);

/// Throws SyntaxError (with line and column) for malformed lines and the
/// MetricTree::validate errors for structurally invalid trees.
TreeDocument parse_tree(std::string_view text, Tolerance tol = {});
std::string serialize_tree(const TreeDocument& doc);

/// Same names, edges, and named points (ignoring tree identity).
bool structurally_equal(const TreeDocument& a, const TreeDocument& b);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

/// Shortest decimal text that parses back to the same double.
std::string format_number(double value);

}  // namespace mtree
