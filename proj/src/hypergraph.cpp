#include "ramsey3/hypergraph.hpp"

#include <algorithm>
#include <sstream>

namespace ramsey3 {

Triple make_triple(int a, int b, int c) {
  Triple t{a, b, c};
  std::sort(t.begin(), t.end());
  if (t[0] == t[1] || t[1] == t[2]) {
    throw DomainError("triple has a repeated vertex: {" + std::to_string(a) +
                      "," + std::to_string(b) + "," + std::to_string(c) + "}");
  }
  return t;
}

Hypergraph3::Hypergraph3(int n, std::vector<Triple> edges) : n_(n) {
  if (n < 0) throw DomainError("negative vertex count");
  for (Triple& e : edges) {
    e = make_triple(e[0], e[1], e[2]);
    if (e[0] < 0 || e[2] >= n) {
      throw DomainError("edge vertex out of range [0," + std::to_string(n) +
                        ")");
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  if (n_ <= 64) {
    edge_masks_.reserve(edges_.size());
    for (const Triple& e : edges_) {
      edge_masks_.push_back((1ull << e[0]) | (1ull << e[1]) | (1ull << e[2]));
    }
  }
}

bool Hypergraph3::has_edge(int a, int b, int c) const {
  Triple t = make_triple(a, b, c);
  return std::binary_search(edges_.begin(), edges_.end(), t);
}

int Hypergraph3::degree(int v) const {
  int d = 0;
  for (const Triple& e : edges_) {
    if (e[0] == v || e[1] == v || e[2] == v) ++d;
  }
  return d;
}

std::vector<int> Hypergraph3::degrees() const {
  std::vector<int> d(n_, 0);
  for (const Triple& e : edges_) {
    for (int v : e) ++d[v];
  }
  return d;
}

namespace {

// Strips comments/blanks and returns surviving tokens with their line numbers.
struct DataLine {
  std::vector<long long> values;
  int line_no;
};

std::vector<DataLine> tokenize(const std::string& text) {
  std::vector<DataLine> out;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto pos = line.find('#'); pos != std::string::npos) {
      line.resize(pos);
    }
    std::istringstream ls(line);
    DataLine dl{{}, line_no};
    std::string tok;
    while (ls >> tok) {
      size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + tok + "'", line_no);
      }
      if (used != tok.size()) {
        throw ParseError("expected an integer, got '" + tok + "'", line_no);
      }
      dl.values.push_back(v);
    }
    if (!dl.values.empty()) out.push_back(std::move(dl));
  }
  return out;
}

}  // namespace

ParseOutcome parse_hypergraph(const std::string& text) {
  const std::vector<DataLine> lines = tokenize(text);
  if (lines.empty()) throw ParseError("missing 'n m' header");
  const DataLine& header = lines[0];
  if (header.values.size() != 2) {
    throw ParseError("header must be exactly 'n m'", header.line_no);
  }
  const long long n = header.values[0];
  const long long m = header.values[1];
  if (n < 0 || n > 1'000'000) {
    throw ParseError("vertex count out of range", header.line_no);
  }
  if (m < 0) throw ParseError("negative edge count", header.line_no);
  if (static_cast<long long>(lines.size()) - 1 < m) {
    throw ParseError("expected " + std::to_string(m) + " edge lines, found " +
                     std::to_string(lines.size() - 1));
  }
  if (static_cast<long long>(lines.size()) - 1 > m) {
    throw ParseError("trailing content after " + std::to_string(m) +
                     " edge lines",
                     lines[m + 1].line_no);
  }
  std::vector<Triple> edges;
  edges.reserve(m);
  for (long long i = 1; i <= m; ++i) {
    const DataLine& dl = lines[i];
    if (dl.values.size() != 3) {
      throw ParseError("edge line must be exactly 'a b c'", dl.line_no);
    }
    for (long long v : dl.values) {
      if (v < 0 || v >= n) {
        throw ParseError("vertex " + std::to_string(v) + " out of range [0," +
                         std::to_string(n) + ")",
                         dl.line_no);
      }
    }
    try {
      edges.push_back(make_triple(static_cast<int>(dl.values[0]),
                                  static_cast<int>(dl.values[1]),
                                  static_cast<int>(dl.values[2])));
    } catch (const DomainError& err) {
      throw ParseError(err.what(), dl.line_no);
    }
  }
  const size_t raw = edges.size();
  Hypergraph3 g(static_cast<int>(n), std::move(edges));
  return ParseOutcome{g, static_cast<int>(raw - g.edges().size())};
}

std::string format_hypergraph(const Hypergraph3& g,
                              const std::vector<std::string>& comments) {
  std::ostringstream out;
  for (const std::string& c : comments) out << "# " << c << "\n";
  out << g.vertex_count() << " " << g.edge_count() << "\n";
  for (const Triple& e : g.edges()) {
    out << e[0] << " " << e[1] << " " << e[2] << "\n";
  }
  return out.str();
}

Hypergraph3 induced(const Hypergraph3& g, const std::vector<int>& vertices) {
  std::vector<int> s = vertices;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw DomainError("induced: repeated vertex in selection");
  }
  if (!s.empty() && (s.front() < 0 || s.back() >= g.vertex_count())) {
    throw DomainError("induced: vertex out of range");
  }
  std::vector<int> new_label(g.vertex_count(), -1);
  for (size_t i = 0; i < s.size(); ++i) new_label[s[i]] = static_cast<int>(i);
  std::vector<Triple> edges;
  for (const Triple& e : g.edges()) {
    if (new_label[e[0]] >= 0 && new_label[e[1]] >= 0 && new_label[e[2]] >= 0) {
      edges.push_back(
          Triple{new_label[e[0]], new_label[e[1]], new_label[e[2]]});
    }
  }
  return Hypergraph3(static_cast<int>(s.size()), std::move(edges));
}

Hypergraph3 relabel(const Hypergraph3& g, const std::vector<int>& perm) {
  const int n = g.vertex_count();
  if (static_cast<int>(perm.size()) != n) {
    throw DomainError("relabel: permutation size mismatch");
  }
  std::vector<bool> seen(n, false);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[v]) throw DomainError("relabel: not a bijection");
    seen[v] = true;
  }
  std::vector<Triple> edges;
  edges.reserve(g.edge_count());
  for (const Triple& e : g.edges()) {
    edges.push_back(make_triple(perm[e[0]], perm[e[1]], perm[e[2]]));
  }
  return Hypergraph3(n, std::move(edges));
}

}  // namespace ramsey3
