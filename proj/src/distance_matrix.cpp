#include "mtree/distance_matrix.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

namespace mtree {

namespace {

struct Cell {
  std::string_view text;
  std::size_t column;
};

std::string_view trim(std::string_view s, std::size_t* lead = nullptr) {
  std::size_t b = 0;
  while (b < s.size() && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  std::size_t e = s.size();
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) {
    --e;
  }
  if (lead) *lead = b;
  return s.substr(b, e - b);
}

std::vector<Cell> split_csv(std::string_view line) {
  std::vector<Cell> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    const std::size_t stop = comma == std::string_view::npos ? line.size() : comma;
    std::size_t lead = 0;
    const std::string_view cell = trim(line.substr(start, stop - start), &lead);
    cells.push_back({cell, start + lead + 1});
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

std::vector<Cell> split_whitespace(std::string_view line) {
  std::vector<Cell> cells;
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
    if (i > start) cells.push_back({line.substr(start, i - start), start + 1});
  }
  return cells;
}

double parse_value(const Cell& cell, std::size_t line) {
  double value = 0.0;
  const char* first = cell.text.data();
  const char* last = first + cell.text.size();
  if (!cell.text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (cell.text.empty() || ec != std::errc() || ptr != last) {
    throw SyntaxError("expected a number, got '" + std::string(cell.text) + "'",
                      line, cell.column);
  }
  return value;
}

struct Line {
  std::string_view text;
  std::size_t number;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t pos = 0;
  std::size_t number = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (!trim(line).empty()) lines.push_back({line, number});
  }
  return lines;
}

DistanceMatrix parse_csv(const std::vector<Line>& lines, Tolerance tol) {
  const std::vector<Cell> header = split_csv(lines[0].text);
  std::vector<std::string> labels;
  for (std::size_t c = 1; c < header.size(); ++c) {
    labels.emplace_back(header[c].text);
  }
  const std::size_t n = labels.size();
  if (n == 0) throw SyntaxError("header has no labels", lines[0].number, 1);
  if (lines.size() != n + 1) {
    const Line& where = lines.size() > n + 1 ? lines[n + 1] : lines.back();
    throw SyntaxError("expected " + std::to_string(n) + " data rows, found " +
                          std::to_string(lines.size() - 1),
                      where.number, 1);
  }
  std::vector<double> entries(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    const Line& line = lines[r + 1];
    const std::vector<Cell> cells = split_csv(line.text);
    if (cells.size() != n + 1) {
      throw SyntaxError("expected " + std::to_string(n + 1) + " cells, found " +
                            std::to_string(cells.size()),
                        line.number, 1);
    }
    if (cells[0].text != labels[r]) {
      throw SyntaxError("row label '" + std::string(cells[0].text) +
                            "' does not match column label '" + labels[r] + "'",
                        line.number, cells[0].column);
    }
    for (std::size_t c = 0; c < n; ++c) {
      entries[r * n + c] = parse_value(cells[c + 1], line.number);
    }
  }
  return DistanceMatrix(std::move(labels), std::move(entries), tol);
}

DistanceMatrix parse_lower_triangle(const std::vector<Line>& lines,
                                    Tolerance tol) {
  const std::size_t n = lines.size();
  std::vector<std::string> labels;
  std::vector<double> entries(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::vector<Cell> cells = split_whitespace(lines[i].text);
    if (cells.size() != i + 1 && cells.size() != i + 2) {
      throw SyntaxError("row " + std::to_string(i) + " needs " +
                            std::to_string(i) + " distances after its label",
                        lines[i].number, cells.empty() ? 1 : cells[0].column);
    }
    labels.emplace_back(cells[0].text);
    for (std::size_t j = 0; j < i; ++j) {
      const double d = parse_value(cells[j + 1], lines[i].number);
      entries[i * n + j] = d;
      entries[j * n + i] = d;
    }
    if (cells.size() == i + 2) {
      entries[i * n + i] = parse_value(cells[i + 1], lines[i].number);
    }
  }
  return DistanceMatrix(std::move(labels), std::move(entries), tol);
}

}  // namespace

DistanceMatrix::DistanceMatrix(std::vector<std::string> labels,
                               std::vector<double> entries, Tolerance tol)
    : labels_(std::move(labels)), entries_(std::move(entries)), tol_(tol) {
  const std::size_t n = labels_.size();
  if (n == 0) throw Error(ErrorCode::kInvalidMatrix, "matrix has no labels");
  if (entries_.size() != n * n) {
    throw Error(ErrorCode::kInvalidMatrix, "matrix is not square");
  }
  std::set<std::string_view> seen;
  for (const std::string& label : labels_) {
    if (!is_valid_name(label)) {
      throw Error(ErrorCode::kInvalidMatrix, "bad label '" + label + "'");
    }
    if (!seen.insert(label).second) {
      throw Error(ErrorCode::kInvalidMatrix, "duplicate label '" + label + "'");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double& d = entries_[i * n + j];
      if (!std::isfinite(d)) {
        throw Error(ErrorCode::kInvalidMatrix, "non-finite entry", {i, j});
      }
      if (d < -tol_.bound(0.0)) {
        throw Error(ErrorCode::kInvalidMatrix, "negative entry", {i, j});
      }
      d = std::max(d, 0.0);
    }
    double& diag = entries_[i * n + i];
    if (diag > tol_.bound(0.0)) {
      throw Error(ErrorCode::kInvalidMatrix, "nonzero diagonal", {i, i});
    }
    diag = 0.0;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double& a = entries_[i * n + j];
      double& b = entries_[j * n + i];
      if (!tol_.equal(a, b)) {
        throw Error(ErrorCode::kInvalidMatrix,
                    "asymmetric entries for '" + labels_[i] + "' and '" +
                        labels_[j] + "'",
                    {i, j});
      }
      a = b = 0.5 * (a + b);
    }
  }
}

DistanceMatrix distances_between(const MetricTree& tree,
                                 std::span<const NamedPoint> points) {
  const std::size_t n = points.size();
  std::vector<std::string> labels;
  std::vector<double> entries(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(points[i].name);
    for (std::size_t j = 0; j < i; ++j) {
      const double d = tree.distance(points[i].point, points[j].point);
      entries[i * n + j] = d;
      entries[j * n + i] = d;
    }
  }
  return DistanceMatrix(std::move(labels), std::move(entries),
                        tree.tolerance());
}

DistanceMatrix parse_distance_matrix(std::string_view text, Tolerance tol) {
  const std::vector<Line> lines = content_lines(text);
  if (lines.empty()) throw SyntaxError("no matrix rows", 1, 1);
  if (lines[0].text.find(',') != std::string_view::npos) {
    return parse_csv(lines, tol);
  }
  return parse_lower_triangle(lines, tol);
}

std::string format_distance_matrix_csv(const DistanceMatrix& m) {
  std::ostringstream out;
  for (const std::string& label : m.labels()) out << ',' << label;
  out << '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    out << m.labels()[i];
    for (std::size_t j = 0; j < m.size(); ++j) {
      out << ',' << format_number(m(i, j));
    }
    out << '\n';
  }
  return out.str();
}

void check_triangle_inequality(const DistanceMatrix& m) {
  const std::size_t n = m.size();
  const Tolerance& tol = m.tolerance();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || j == k) continue;
        if (!tol.less_equal(m(i, k), m(i, j) + m(j, k))) {
          throw Error(ErrorCode::kNotAMetric,
                      "d(" + m.labels()[i] + "," + m.labels()[k] + ") exceeds d(" +
                          m.labels()[i] + "," + m.labels()[j] + ") + d(" +
                          m.labels()[j] + "," + m.labels()[k] + ")",
                      {i, j, k});
        }
      }
    }
  }
}

FourPointResult check_four_point(const DistanceMatrix& m) {
  check_triangle_inequality(m);
  const std::size_t n = m.size();
  const Tolerance& tol = m.tolerance();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        for (std::size_t l = k + 1; l < n; ++l) {
          const std::array<double, 3> sums = {m(i, j) + m(k, l),
                                              m(i, k) + m(j, l),
                                              m(i, l) + m(j, k)};
          const auto top = static_cast<std::size_t>(
              std::max_element(sums.begin(), sums.end()) - sums.begin());
          const double rest = std::max(sums[(top + 1) % 3], sums[(top + 2) % 3]);
          if (sums[top] > rest + tol.bound(sums[top])) {
            static constexpr std::array<std::array<int, 4>, 3> kOrder = {
                {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
            const std::array<std::size_t, 4> q = {i, j, k, l};
            FourPointResult result;
            result.tree_metric = false;
            result.violation = std::array<std::size_t, 4>{
                q[kOrder[top][0]], q[kOrder[top][1]], q[kOrder[top][2]],
                q[kOrder[top][3]]};
            return result;
          }
        }
      }
    }
  }
  return {};
}

TreeDocument tree_from_distances(const DistanceMatrix& m) {
  const FourPointResult four = check_four_point(m);
  if (!four.tree_metric) {
    const auto& q = *four.violation;
    throw Error(ErrorCode::kNotTreeMetric,
                "four-point condition fails on (" + m.labels()[q[0]] + ", " +
                    m.labels()[q[1]] + ", " + m.labels()[q[2]] + ", " +
                    m.labels()[q[3]] + ")",
                {q[0], q[1], q[2], q[3]});
  }
  const Tolerance& tol = m.tolerance();
  const std::size_t n = m.size();
  RawTree raw{1, {}};
  std::vector<NodeId> label_node(n, 0);

  for (std::size_t k = 1; k < n; ++k) {
    const MetricTree tree = MetricTree::validate(raw, tol);
    const TreePoint base = tree.node(label_node[0]);
    // The branch point of label k on the tree spanned so far lies on
    // [base, p_j] for the j with the largest Gromov product (j|k)_0.
    double split = -1.0;
    std::size_t toward = 0;
    for (std::size_t j = 0; j < k; ++j) {
      const double g = 0.5 * (m(0, k) + m(0, j) - m(j, k));
      if (g > split) {
        split = g;
        toward = j;
      }
    }
    const TreePoint far = tree.node(label_node[toward]);
    split = std::clamp(split, 0.0, std::min(m(0, k), tree.distance(base, far)));
    const TreePoint branch = tree.point_at(base, far, split);

    NodeId attach;
    if (branch.is_node()) {
      attach = branch.node();
    } else {
      const Edge e = tree.edge(branch.edge());
      attach = static_cast<NodeId>(raw.node_count++);
      raw.edges[branch.edge()] = {e.u, attach, branch.offset()};
      raw.edges.push_back({attach, e.v, e.length - branch.offset()});
    }
    const double pendant = m(0, k) - split;
    if (pendant <= tol.bound(m(0, k))) {
      label_node[k] = attach;
    } else {
      label_node[k] = static_cast<NodeId>(raw.node_count++);
      raw.edges.push_back({attach, label_node[k], pendant});
    }
  }

  MetricTree tree = MetricTree::validate(raw, tol);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double got =
          tree.distance(tree.node(label_node[i]), tree.node(label_node[j]));
      if (std::fabs(got - m(i, j)) > 16.0 * tol.bound(m(i, j))) {
        throw Error(ErrorCode::kNotTreeMetric,
                    "reconstruction does not reproduce d(" + m.labels()[i] +
                        "," + m.labels()[j] + ")",
                    {i, j});
      }
    }
  }

  std::vector<std::string> node_names(raw.node_count);
  std::set<std::string> taken(m.labels().begin(), m.labels().end());
  for (std::size_t i = n; i-- > 0;) node_names[label_node[i]] = m.labels()[i];
  for (NodeId v = 0; v < raw.node_count; ++v) {
    if (!node_names[v].empty()) continue;
    std::string name = "v" + std::to_string(v);
    while (taken.count(name)) name = "_" + name;
    taken.insert(name);
    node_names[v] = std::move(name);
  }
  std::vector<NamedPoint> points;
  for (std::size_t i = 0; i < n; ++i) {
    points.push_back({m.labels()[i], tree.node(label_node[i])});
  }
  return make_document(std::move(tree), std::move(node_names), std::move(points));
}

}  // namespace mtree
