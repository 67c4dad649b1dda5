#include "posetlie/poset.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <random>
#include <sstream>

namespace posetlie {

namespace {

constexpr std::int64_t max_family_elements = 4096;

std::int64_t checked_pow(std::int64_t base, std::int64_t exp) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < exp; ++i) {
    if (r > max_family_elements * max_family_elements) {
      throw Error(ErrorCode::invalid_parameter, "family too large");
    }
    r *= base;
  }
  return r;
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string FamilyDescriptor::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case FamilyKind::chain: os << "chain(" << params[0] << ")"; break;
    case FamilyKind::grid: os << "grid(" << params[0] << "," << params[1] << ")"; break;
    case FamilyKind::tree: os << "tree(" << params[0] << "," << params[1] << ")"; break;
    case FamilyKind::double_fan:
      os << "fan(" << params[0] << "," << params[1] << "," << params[2] << ")";
      break;
  }
  return os.str();
}

std::vector<Relation> FinitePoset::non_covering_relations() const {
  std::vector<Relation> out;
  for (const auto& r : strict_) {
    if (!covers(r.lesser, r.greater)) out.push_back(r);
  }
  return out;
}

std::vector<Relation> FinitePoset::non_covering_at(ElementId p) const {
  if (p >= n_) throw Error(ErrorCode::out_of_range, "element " + std::to_string(p));
  std::vector<Relation> out;
  for (const auto& r : strict_) {
    if ((r.lesser == p || r.greater == p) && !covers(r.lesser, r.greater)) out.push_back(r);
  }
  return out;
}

bool FinitePoset::is_minimal(ElementId p) const {
  for (ElementId q = 0; q < p; ++q) {
    if (less(q, p)) return false;
  }
  return true;
}

bool FinitePoset::is_maximal(ElementId p) const {
  for (ElementId q = p + 1; q < n_; ++q) {
    if (less(p, q)) return false;
  }
  return true;
}

std::vector<ElementId> FinitePoset::extremal_elements() const {
  std::vector<ElementId> out;
  for (ElementId p = 0; p < n_; ++p) {
    if (is_minimal(p) || is_maximal(p)) out.push_back(p);
  }
  return out;
}

// A strict relation between two extremal elements necessarily runs from a
// minimal element to a maximal one.
std::vector<Relation> FinitePoset::extremal_relations() const {
  std::vector<Relation> out;
  for (const auto& r : strict_) {
    if (is_minimal(r.lesser) && is_maximal(r.greater)) out.push_back(r);
  }
  return out;
}

std::optional<ElementId> FinitePoset::find_label(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<ElementId>(it - labels_.begin());
}

FinitePoset from_covers(std::size_t n, const std::vector<Relation>& covers,
                        std::vector<std::string> labels) {
  if (labels.empty()) {
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
  } else if (labels.size() != n) {
    throw Error(ErrorCode::invalid_parameter, "expected " + std::to_string(n) + " labels, got " +
                                                  std::to_string(labels.size()));
  }

  std::vector<std::vector<ElementId>> succ(n);
  for (const auto& c : covers) {
    if (c.lesser >= n || c.greater >= n) {
      throw Error(ErrorCode::out_of_range, "relation (" + std::to_string(c.lesser) + "," +
                                               std::to_string(c.greater) + ") with n=" +
                                               std::to_string(n));
    }
    if (c.lesser == c.greater) {
      throw Error(ErrorCode::cycle_detected, "element " + labels[c.lesser] + " related to itself");
    }
    succ[c.lesser].push_back(c.greater);
  }

  // reach[a*n+b]: b is reachable from a by a nonempty path
  std::vector<char> reach(n * n, 0);
  for (ElementId s = 0; s < n; ++s) {
    std::vector<ElementId> stack(succ[s].begin(), succ[s].end());
    while (!stack.empty()) {
      ElementId v = stack.back();
      stack.pop_back();
      if (reach[s * n + v]) continue;
      reach[s * n + v] = 1;
      for (ElementId w : succ[v]) {
        if (!reach[s * n + w]) stack.push_back(w);
      }
    }
    if (reach[s * n + s]) {
      throw Error(ErrorCode::cycle_detected, "element " + labels[s] + " lies on a cycle");
    }
  }

  // Kahn's algorithm, always taking the smallest available input index.
  std::vector<std::size_t> indegree(n, 0);
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b : succ[a]) ++indegree[b];
  }
  std::priority_queue<ElementId, std::vector<ElementId>, std::greater<>> ready;
  for (ElementId a = 0; a < n; ++a) {
    if (indegree[a] == 0) ready.push(a);
  }
  std::vector<ElementId> order;  // new id -> input index
  order.reserve(n);
  while (!ready.empty()) {
    ElementId a = ready.top();
    ready.pop();
    order.push_back(a);
    for (ElementId b : succ[a]) {
      if (--indegree[b] == 0) ready.push(b);
    }
  }

  FinitePoset p;
  p.n_ = n;
  p.less_.assign(n * n, 0);
  p.cover_.assign(n * n, 0);
  p.source_index_ = order;
  p.labels_.reserve(n);
  for (ElementId id = 0; id < n; ++id) p.labels_.push_back(labels[order[id]]);

  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      p.less_[a * n + b] = reach[order[a] * n + order[b]];
    }
  }
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = a + 1; b < n; ++b) {
      if (!p.less(a, b)) continue;
      p.strict_.push_back({a, b});
      bool is_cover = true;
      for (ElementId c = a + 1; c < b && is_cover; ++c) {
        if (p.less(a, c) && p.less(c, b)) is_cover = false;
      }
      if (is_cover) {
        p.cover_[a * n + b] = 1;
        p.covering_.push_back({a, b});
      }
    }
  }
  return p;
}

FinitePoset antichain(std::size_t n) { return from_covers(n, {}); }

FinitePoset build_family(const FamilyDescriptor& d) {
  const auto [a, b, c] = d.params;
  std::vector<Relation> covers;
  std::vector<std::string> labels;

  auto require_positive = [&](std::initializer_list<std::int64_t> values) {
    for (auto v : values) {
      if (v < 1) throw Error(ErrorCode::invalid_parameter, d.to_string() + ": parameters must be positive");
    }
  };

  switch (d.kind) {
    case FamilyKind::chain: {
      require_positive({a});
      if (a > max_family_elements) throw Error(ErrorCode::invalid_parameter, "family too large");
      for (std::int64_t i = 0; i < a; ++i) {
        labels.push_back(std::to_string(i + 1));
        if (i + 1 < a) covers.push_back({static_cast<ElementId>(i), static_cast<ElementId>(i + 1)});
      }
      break;
    }
    case FamilyKind::grid: {
      // rows j = 1..m, columns i = 1..n; element i_j has id (j-1)*n + (i-1)
      require_positive({a, b});
      const std::int64_t m = a, n = b;
      if (m * n > max_family_elements) throw Error(ErrorCode::invalid_parameter, "family too large");
      auto id = [n](std::int64_t i, std::int64_t j) { return static_cast<ElementId>((j - 1) * n + (i - 1)); };
      for (std::int64_t j = 1; j <= m; ++j) {
        for (std::int64_t i = 1; i <= n; ++i) {
          labels.push_back(std::to_string(i) + "_" + std::to_string(j));
          if (j < m) covers.push_back({id(i, j), id(i, j + 1)});
          if (i < n) covers.push_back({id(i, j), id(i + 1, j)});
        }
      }
      break;
    }
    case FamilyKind::tree: {
      // level k = 1..n holds m^(k-1) elements 1_k .. (m^(k-1))_k, and
      // i_k < (m*i - j)_{k+1} for 0 <= j < m
      require_positive({a, b});
      const std::int64_t m = a, n = b;
      if (m < 2) throw Error(ErrorCode::invalid_parameter, d.to_string() + ": tree arity must exceed 1");
      std::vector<std::int64_t> offset{0};
      for (std::int64_t k = 1; k <= n; ++k) {
        offset.push_back(offset.back() + checked_pow(m, k - 1));
        if (offset.back() > max_family_elements) throw Error(ErrorCode::invalid_parameter, "family too large");
      }
      auto id = [&](std::int64_t i, std::int64_t k) { return static_cast<ElementId>(offset[k - 1] + i - 1); };
      for (std::int64_t k = 1; k <= n; ++k) {
        const std::int64_t width = checked_pow(m, k - 1);
        for (std::int64_t i = 1; i <= width; ++i) {
          labels.push_back(std::to_string(i) + "_" + std::to_string(k));
          if (k == n) continue;
          for (std::int64_t j = m - 1; j >= 0; --j) covers.push_back({id(i, k), id(m * i - j, k + 1)});
        }
      }
      break;
    }
    case FamilyKind::double_fan: {
      require_positive({a, b, c});
      if (a + b + c > max_family_elements) throw Error(ErrorCode::invalid_parameter, "family too large");
      for (std::int64_t i = 1; i <= a; ++i) labels.push_back("b_" + std::to_string(i));
      for (std::int64_t i = 1; i <= b; ++i) labels.push_back("m_" + std::to_string(i));
      for (std::int64_t i = 1; i <= c; ++i) labels.push_back("t_" + std::to_string(i));
      for (std::int64_t i = 0; i < a; ++i) {
        for (std::int64_t j = 0; j < b; ++j) covers.push_back({static_cast<ElementId>(i), static_cast<ElementId>(a + j)});
      }
      for (std::int64_t j = 0; j < b; ++j) {
        for (std::int64_t k = 0; k < c; ++k) {
          covers.push_back({static_cast<ElementId>(a + j), static_cast<ElementId>(a + b + k)});
        }
      }
      break;
    }
  }

  const std::size_t count = labels.size();
  FinitePoset p = from_covers(count, covers, std::move(labels));
  p.family_ = d;
  return p;
}

FinitePoset random_poset(std::size_t n, double edge_probability, std::uint64_t seed) {
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) {
    throw Error(ErrorCode::invalid_parameter, "edge probability must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(edge_probability);
  std::vector<Relation> covers;
  for (ElementId i = 0; i < n; ++i) {
    for (ElementId j = i + 1; j < n; ++j) {
      if (coin(rng)) covers.push_back({i, j});
    }
  }
  return from_covers(n, covers);
}

std::int64_t count_non_covering_closed_form(const FamilyDescriptor& d) {
  const auto [a, b, c] = d.params;
  (void)c;
  switch (d.kind) {
    case FamilyKind::chain:
      if (a < 1) throw Error(ErrorCode::invalid_parameter, d.to_string());
      return (a - 1) * (a - 2) / 2;
    case FamilyKind::grid:
      if (a != 2) throw Error(ErrorCode::unsupported_family, d.to_string() + ": closed form known only for 2 x n grids");
      if (b < 1) throw Error(ErrorCode::invalid_parameter, d.to_string());
      return (b - 1) * (3 * b - 4) / 2;
    case FamilyKind::tree: {
      const std::int64_t m = a, n = b;
      if (m < 2 || n < 1) throw Error(ErrorCode::invalid_parameter, d.to_string());
      const std::int64_t numerator = (n - 2) * checked_pow(m, n + 1) + (1 - n) * checked_pow(m, n) + m * m;
      return numerator / ((m - 1) * (m - 1));
    }
    case FamilyKind::double_fan:
      break;
  }
  throw Error(ErrorCode::unsupported_family, d.to_string() + ": count by enumeration instead");
}

std::int64_t count_relations_closed_form(const FamilyDescriptor& d) {
  const auto [a, b, c] = d.params;
  switch (d.kind) {
    case FamilyKind::chain:
      return a * (a - 1) / 2;
    case FamilyKind::grid:
      return (a * (a + 1) / 2) * (b * (b + 1) / 2) - a * b;
    case FamilyKind::tree: {
      // each element of level k has k-1 ancestors
      std::int64_t total = 0;
      for (std::int64_t k = 1; k <= b; ++k) total += checked_pow(a, k - 1) * (k - 1);
      return total;
    }
    case FamilyKind::double_fan:
      return a * b + b * c + a * c;
  }
  return 0;
}

std::optional<DoubleFanShape> detect_double_fan(const FinitePoset& p) {
  DoubleFanShape shape;
  for (ElementId e = 0; e < p.size(); ++e) {
    const bool lo = p.is_minimal(e), hi = p.is_maximal(e);
    if (lo && hi) return std::nullopt;
    if (lo) shape.bottom.push_back(e);
    else if (hi) shape.top.push_back(e);
    else shape.middle.push_back(e);
  }
  if (shape.bottom.empty() || shape.middle.empty() || shape.top.empty()) return std::nullopt;

  const std::size_t r0 = shape.bottom.size(), r1 = shape.middle.size(), r2 = shape.top.size();
  if (p.strict_relations().size() != r0 * r1 + r1 * r2 + r0 * r2) return std::nullopt;
  for (ElementId m : shape.middle) {
    for (ElementId b : shape.bottom) {
      if (!p.less(b, m)) return std::nullopt;
    }
    for (ElementId t : shape.top) {
      if (!p.less(m, t)) return std::nullopt;
    }
  }
  return shape;
}

std::string hasse_dot(const FinitePoset& p) {
  std::ostringstream os;
  os << "digraph hasse {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=circle];\n";
  for (ElementId e = 0; e < p.size(); ++e) os << "  " << dot_quote(p.label(e)) << ";\n";
  for (const auto& r : p.covering_relations()) {
    os << "  " << dot_quote(p.label(r.lesser)) << " -> " << dot_quote(p.label(r.greater)) << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace posetlie
