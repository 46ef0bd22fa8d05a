#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ramsey3/analysis.hpp"
#include "ramsey3/canonical.hpp"
#include "ramsey3/errors.hpp"
#include "ramsey3/hypergraph.hpp"

namespace ramsey3 {

// i-th binary digit of x (0 for i >= 64).
int bit_at(uint64_t x, int i);

// Highest bit position where x and y differ; requires x != y.
int delta(uint64_t x, uint64_t y);

// Color labels form a small recursive vocabulary:
//   Pair(t, s)  — the stepping-up coloring's (t, s) with t a bit position and
//                 s an order indicator;
//   Coord(j, s) — the product coloring's per-coordinate colors, j in [1, q];
//   Base(c)     — a product color delegated to the base coloring's label c;
//   Index(i)    — a 1-based serial color (rainbow, random tripartite).
struct ColorLabel {
  enum class Kind { Pair, Coord, Base, Index };

  Kind kind = Kind::Index;
  int64_t a = 0;  // Pair: t; Coord: j; Index: i
  int64_t b = 0;  // Pair, Coord: s
  std::shared_ptr<const ColorLabel> inner;  // Base: the wrapped label

  static ColorLabel pair(int64_t t, int64_t s);
  static ColorLabel coord(int64_t j, int64_t s);
  static ColorLabel base(ColorLabel c);
  static ColorLabel index(int64_t i);

  // Total order: by kind, then fields, then wrapped label.
  int compare(const ColorLabel& o) const;
  friend bool operator==(const ColorLabel& x, const ColorLabel& y) {
    return x.compare(y) == 0;
  }
  friend bool operator<(const ColorLabel& x, const ColorLabel& y) {
    return x.compare(y) < 0;
  }

  std::string to_string() const;
};

// A deterministic edge coloring of the complete 3-graph on [0, domain_size):
// eval is total and pure on ascending triples x < y < z < domain_size.
class ColoringOracle {
 public:
  virtual ~ColoringOracle() = default;
  virtual uint64_t domain_size() const = 0;
  virtual uint64_t color_count() const = 0;
  virtual ColorLabel eval(uint64_t x, uint64_t y, uint64_t z) const = 0;
  // The parameter string that reconstructs this oracle ("phi-q:q=6", ...).
  virtual std::string describe() const = 0;
};

using OraclePtr = std::shared_ptr<const ColoringOracle>;

// Stepping-up coloring for even q on [0, 2^{2^{q/2}}):
//   (delta(d1, d2), 1{d1 > d2}) with d1 = delta(x,y), d2 = delta(y,z).
// Uses q colors: the first component is a bit position below q/2.  For
// q >= 12 the true domain exceeds 64-bit integers; evaluation is then offered
// on the addressable window [0, 2^64 - 1) and domain_size() saturates.
class PhiColoring : public ColoringOracle {
 public:
  explicit PhiColoring(int q);
  uint64_t domain_size() const override;
  uint64_t color_count() const override { return static_cast<uint64_t>(q_); }
  ColorLabel eval(uint64_t x, uint64_t y, uint64_t z) const override;
  std::string describe() const override;
  // True when domain_size() reports a window of a larger true domain.
  bool window_only() const { return q_ >= 12; }

 private:
  int q_;
};

// q independent uniformly random balanced 3-partitions of [0, n); a triple is
// colored Index(i) for the least i (1-based) whose partition splits it one
// vertex per part.  Triples split by no copy make the coloring partial; the
// factory below reports them instead of constructing an oracle.
class RandomTripartiteColoring : public ColoringOracle {
 public:
  RandomTripartiteColoring(int q, uint64_t n, uint64_t seed);
  uint64_t domain_size() const override { return n_; }
  uint64_t color_count() const override { return static_cast<uint64_t>(q_); }
  ColorLabel eval(uint64_t x, uint64_t y, uint64_t z) const override;
  std::string describe() const override;
  // Part (0, 1 or 2) of vertex v in copy i (0-based copy index).
  int part(int copy, uint64_t v) const;
  // Ascending triples split one-per-part by no copy, in lexicographic order.
  std::vector<std::array<uint64_t, 3>> uncolored() const;

 private:
  int q_;
  uint64_t n_;
  uint64_t seed_;
  std::vector<std::vector<uint8_t>> parts_;  // parts_[copy][vertex]
};

struct TripartiteFailure {
  int q = 0;
  uint64_t n = 0;
  uint64_t seed = 0;
  std::vector<std::array<uint64_t, 3>> uncolored;
};

// Builds the random tripartite coloring and checks totality: returns the
// oracle when every triple is colored, otherwise the failure report (the
// caller retries with a new seed).
std::variant<OraclePtr, TripartiteFailure> make_random_tripartite(
    int q, uint64_t n, uint64_t seed, const Limits& limits = {});

// Product coloring on [base.domain_size)^q, encoded as mixed-radix integers
// with coordinate 1 most significant (so integer order = lexicographic order
// on vectors).  For ascending x < y < z, let j be the first coordinate where
// the three vectors are not all equal:
//   all distinct        -> Base(base.eval of the three j-th coordinates)
//   x^j < y^j = z^j     -> Coord(j, 0)
//   x^j = y^j < z^j     -> Coord(j, 1)
// Uses base.color_count + 2q colors.
class ProductColoring : public ColoringOracle {
 public:
  ProductColoring(OraclePtr base, int q);
  uint64_t domain_size() const override { return domain_; }
  uint64_t color_count() const override;
  ColorLabel eval(uint64_t x, uint64_t y, uint64_t z) const override;
  std::string describe() const override;
  // The q coordinates of vertex v, most significant first (1-based j maps to
  // coords(v)[j-1]); values in [0, base.domain_size).
  std::vector<uint64_t> coords(uint64_t v) const;
  const ColoringOracle& base() const { return *base_; }
  int vector_length() const { return q_; }

 private:
  OraclePtr base_;
  int q_;
  uint64_t domain_;
};

// Case dispatch of the product coloring on raw coordinate vectors
// (most significant first).  base may be null when the outcome is a Coord
// label; a Base outcome without a base oracle is an error.
ColorLabel product_case(const std::vector<uint64_t>& xs,
                        const std::vector<uint64_t>& ys,
                        const std::vector<uint64_t>& zs,
                        const ColoringOracle* base);

// Every triple gets a distinct Index label (its 1-based lexicographic rank);
// color_count = C(n, 3).
class RainbowColoring : public ColoringOracle {
 public:
  explicit RainbowColoring(uint64_t n);
  uint64_t domain_size() const override { return n_; }
  uint64_t color_count() const override;
  ColorLabel eval(uint64_t x, uint64_t y, uint64_t z) const override;
  std::string describe() const override;

 private:
  uint64_t n_;
};

// Builds an oracle from a parameter string:
//   phi-q:q=6
//   tripartite:q=54,N=16,seed=1
//   product:q=2,N=4,seed=7[,base-q=54]   (base = tripartite:q=base-q,N,seed)
//   rainbow:N=6
// Malformed strings (unknown name, missing/duplicate/unknown keys,
// non-numeric values) raise ParseError.  Well-formed strings with bad
// values raise DomainError; in particular a partial tripartite coloring
// (unlucky seed) is a domain error naming the uncolored triples.
OraclePtr parse_oracle(const std::string& text, const Limits& limits = {});

// Half-open vertex range [lo, hi) of an oracle's domain.
struct Window {
  uint64_t lo = 0;
  uint64_t hi = 0;
};

// An injective map of pattern vertices onto host vertices with every pattern
// edge mapped to a triple of one common label.
struct MonoCopy {
  std::vector<uint64_t> to_host;  // indexed by pattern vertex
  ColorLabel label;
};

// Exhaustive search for a monochromatic copy of pattern among the given host
// vertices; returns the first copy met in the deterministic search order, or
// absent.  Pattern needs >= 1 edge.  Backtracking assigns pattern vertices in
// descending-degree order and prunes as soon as two mapped edges disagree;
// complete patterns use a direct ascending-combination scan instead.
std::optional<MonoCopy> find_mono_copy(const ColoringOracle& oracle,
                                       const Hypergraph3& pattern,
                                       const std::vector<uint64_t>& hosts,
                                       const Limits& limits = {});
std::optional<MonoCopy> find_mono_copy(const ColoringOracle& oracle,
                                       const Hypergraph3& pattern,
                                       Window window,
                                       const Limits& limits = {});

// Named graph predicates usable from audits and the CLI:
//   in-U              — some finite collapse level exists
//   in-L1             — member of the forward-colorable closure
//   tripartite        — admits a tripartition
//   at-most-one-edge  — edge count <= 1
std::function<bool(const Hypergraph3&, const Limits&)> named_predicate(
    const std::string& name);

// One distinct monochromatic pattern met during an audit: its canonical key,
// the graph on [0, h) as first encountered, the host subset realizing it
// (pattern vertex i sits at subset[i]), the label, and the predicate outcome.
struct AuditPattern {
  CanonicalKey key;
  Hypergraph3 pattern{0, {}};
  std::vector<uint64_t> subset;
  ColorLabel label;
  bool passes = false;
};

struct AuditReport {
  std::string oracle;
  std::string predicate_name;
  uint64_t window_lo = 0;
  uint64_t window_hi = 0;
  int h_max = 0;
  uint64_t subsets_checked = 0;
  std::vector<AuditPattern> patterns;  // sorted by canonical key
  bool all_pass = true;
};

// Enumerates every subset of the window with 3..h_max vertices; for each
// color present among a subset's triples, forms the graph of that color's
// triples and evaluates the predicate on its canonical form (memoized).
// all_pass = every such graph with >= 1 edge satisfies the predicate.
AuditReport audit_coloring(const ColoringOracle& oracle, Window window,
                           int h_max, const std::string& predicate_name,
                           const Limits& limits = {});

// For a monochromatic copy under Coord(j, s): pattern vertices grouped by the
// j-th coordinate of their host vectors, blocks ordered by ascending value
// for s = 0 and descending for s = 1.  The result is a forward-coloring
// witness candidate for the copied pattern.
OrderedPartition coord_partition(const ProductColoring& oracle,
                                 const std::vector<uint64_t>& to_host, int j,
                                 int s);

}  // namespace ramsey3
