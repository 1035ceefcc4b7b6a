// lacunary.hpp -- lacunary index data: validation, well-ordered normal form,
// edge-anchored splits, and the exact determinant-ratio oracle.

#ifndef LACTOEP_LACUNARY_HPP
#define LACTOEP_LACUNARY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "lactoep/matrix.hpp"
#include "lactoep/symbol.hpp"

namespace lactoep {

// One modified line (h, p): row h of the N x N matrix reads c_{p-b}.
// One modified row (t, k): column t reads c_{a-k}.  h,t in [1,N]; p,k outside.
struct IndexPair {
  std::int64_t position = 0;  // h or t
  std::int64_t index = 0;     // p or k
};

// Normalised per the well-ordering: lines[a].position == rows[a].position for
// a < overlap_c, and the remaining position sets are disjoint.
struct LacunarySpec {
  std::int64_t n_size = 0;  // N
  std::vector<IndexPair> lines;  // (h_a, p_a)
  std::vector<IndexPair> rows;   // (t_b, k_b)
  std::size_t overlap_c = 0;

  std::size_t n_lines() const { return lines.size(); }
  std::size_t n_rows() const { return rows.size(); }
  bool empty() const { return lines.empty() && rows.empty(); }

  // Full sequences ell_a / m_b of length N (identity outside the lacunae).
  std::vector<std::int64_t> ell_sequence() const;
  std::vector<std::int64_t> m_sequence() const;
};

// N-independent offsets from the two edges.  A minus line stores (h^-, p^-)
// with h = h^-, p = 1 - p^-; a plus line stores (h^+, p^+) with h = N+1-h^+,
// p = p^+ + N.  Rows are parametrised the same way through (t, k).
struct LacunarySplit {
  std::vector<IndexPair> minus_lines, plus_lines;  // (h^-, p^-), (h^+, p^+)
  std::vector<IndexPair> minus_rows, plus_rows;    // (t^-, k^-), (t^+, k^+)
  std::size_t overlap_minus = 0;
  std::size_t overlap_plus = 0;
};

// Range/distinctness checks plus the joint reordering that realises the
// well-ordering with overlap.  The reordering permutes (h,p) pairs and (t,k)
// pairs only, so every determinant built from the spec is unchanged.
LacunarySpec validate_and_normalize(std::int64_t n_size,
                                    std::vector<IndexPair> lines,
                                    std::vector<IndexPair> rows);

// Decompose a normalised spec into edge offsets.  Each pair must anchor
// consistently: position on the lower half with index <= 0, or position on
// the upper half with index >= N+1; anything else is mixed_anchor.
LacunarySplit split_edge_anchored(const LacunarySpec& spec);

// Inverse of split_edge_anchored (used by tests and by the split evaluators).
LacunarySpec recombine_split(const LacunarySplit& split, std::int64_t n_size);

// Mirror spec of the joint reversal a -> N+1-a, b -> N+1-b; the mirrored
// determinant ratio for f(1/z) equals the original ratio for f.
LacunarySpec mirror_spec(const LacunarySpec& spec);

struct ExactRatio {
  cplx value{0.0, 0.0};
  bool is_zero = false;
};

// det_N[lacunary] / det_N[plain] through two LU log-determinants.
// Throws plain_singular when the unperturbed determinant vanishes.
ExactRatio exact_ratio(const Symbol& symbol, const LacunarySpec& spec);

}  // namespace lactoep

#endif
