#include "lactoep/lacunary.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "lactoep/errors.hpp"

namespace lactoep {

namespace {

void check_pairs(const std::vector<IndexPair>& pairs, std::int64_t n_size,
                 const char* what) {
  std::set<std::int64_t> positions, indices;
  for (const IndexPair& pr : pairs) {
    if (pr.position < 1 || pr.position > n_size)
      throw error(errc::out_of_range, std::string(what) + " position " +
                                          std::to_string(pr.position) +
                                          " outside [1,N]");
    if (pr.index >= 1 && pr.index <= n_size)
      throw error(errc::out_of_range, std::string(what) + " index " +
                                          std::to_string(pr.index) +
                                          " inside [1,N]");
    if (!positions.insert(pr.position).second)
      throw error(errc::duplicate_index, std::string(what) + " position repeated");
    if (!indices.insert(pr.index).second)
      throw error(errc::duplicate_index, std::string(what) + " index repeated");
  }
}

}  // namespace

std::vector<std::int64_t> LacunarySpec::ell_sequence() const {
  std::vector<std::int64_t> ell(static_cast<std::size_t>(n_size));
  for (std::int64_t a = 1; a <= n_size; ++a) ell[a - 1] = a;
  for (const IndexPair& pr : lines) ell[pr.position - 1] = pr.index;
  return ell;
}

std::vector<std::int64_t> LacunarySpec::m_sequence() const {
  std::vector<std::int64_t> m(static_cast<std::size_t>(n_size));
  for (std::int64_t b = 1; b <= n_size; ++b) m[b - 1] = b;
  for (const IndexPair& pr : rows) m[pr.position - 1] = pr.index;
  return m;
}

LacunarySpec validate_and_normalize(std::int64_t n_size,
                                    std::vector<IndexPair> lines,
                                    std::vector<IndexPair> rows) {
  if (n_size < 1) throw error(errc::bad_input, "N must be >= 1");
  check_pairs(lines, n_size, "line");
  check_pairs(rows, n_size, "row");

  // Joint reordering into the well-ordered form: shared positions first (in
  // matching order), disjoint remainders after.  This permutes (h,p) pairs and
  // (t,k) pairs only, so determinants built from the spec are unchanged.
  std::set<std::int64_t> line_pos, row_pos;
  for (const IndexPair& pr : lines) line_pos.insert(pr.position);
  for (const IndexPair& pr : rows) row_pos.insert(pr.position);

  auto shared_first = [&](std::vector<IndexPair>& v,
                          const std::set<std::int64_t>& other) {
    std::stable_sort(v.begin(), v.end(), [&](const IndexPair& x, const IndexPair& y) {
      const bool xs = other.count(x.position) > 0;
      const bool ys = other.count(y.position) > 0;
      if (xs != ys) return xs;
      return x.position < y.position;
    });
  };
  shared_first(lines, row_pos);
  shared_first(rows, line_pos);

  LacunarySpec spec;
  spec.n_size = n_size;
  spec.lines = std::move(lines);
  spec.rows = std::move(rows);
  spec.overlap_c = 0;
  while (spec.overlap_c < spec.lines.size() && spec.overlap_c < spec.rows.size() &&
         spec.lines[spec.overlap_c].position == spec.rows[spec.overlap_c].position)
    ++spec.overlap_c;
  return spec;
}

namespace {

// Lower-edge side: position counted from 1; upper-edge side: counted from N.
bool lower_half(std::int64_t pos, std::int64_t n_size) {
  return 2 * pos <= n_size + 1;
}

void split_pairs(const std::vector<IndexPair>& pairs, std::int64_t n_size,
                 std::vector<IndexPair>& minus_part,
                 std::vector<IndexPair>& plus_part, const char* what) {
  for (const IndexPair& pr : pairs) {
    if (pr.index <= 0 && lower_half(pr.position, n_size)) {
      minus_part.push_back({pr.position, 1 - pr.index});
    } else if (pr.index >= n_size + 1 && !lower_half(pr.position, n_size)) {
      plus_part.push_back({n_size + 1 - pr.position, pr.index - n_size});
    } else {
      throw error(errc::mixed_anchor,
                  std::string(what) + " (" + std::to_string(pr.position) + "," +
                      std::to_string(pr.index) + ") straddles the edges");
    }
  }
}

// Order one edge's lines/rows so its own overlap pairs come first.
std::size_t order_edge(std::vector<IndexPair>& lines, std::vector<IndexPair>& rows) {
  std::set<std::int64_t> line_pos, row_pos;
  for (const IndexPair& pr : lines) line_pos.insert(pr.position);
  for (const IndexPair& pr : rows) row_pos.insert(pr.position);
  auto shared_first = [](std::vector<IndexPair>& v, const std::set<std::int64_t>& other) {
    std::stable_sort(v.begin(), v.end(), [&](const IndexPair& x, const IndexPair& y) {
      const bool xs = other.count(x.position) > 0;
      const bool ys = other.count(y.position) > 0;
      if (xs != ys) return xs;
      return x.position < y.position;
    });
  };
  shared_first(lines, row_pos);
  shared_first(rows, line_pos);
  std::size_t c = 0;
  while (c < lines.size() && c < rows.size() &&
         lines[c].position == rows[c].position)
    ++c;
  return c;
}

}  // namespace

LacunarySplit split_edge_anchored(const LacunarySpec& spec) {
  LacunarySplit split;
  split_pairs(spec.lines, spec.n_size, split.minus_lines, split.plus_lines, "line");
  split_pairs(spec.rows, spec.n_size, split.minus_rows, split.plus_rows, "row");
  split.overlap_minus = order_edge(split.minus_lines, split.minus_rows);
  split.overlap_plus = order_edge(split.plus_lines, split.plus_rows);
  return split;
}

LacunarySpec recombine_split(const LacunarySplit& split, std::int64_t n_size) {
  std::vector<IndexPair> lines, rows;
  for (const IndexPair& pr : split.minus_lines)
    lines.push_back({pr.position, 1 - pr.index});
  for (const IndexPair& pr : split.plus_lines)
    lines.push_back({n_size + 1 - pr.position, pr.index + n_size});
  for (const IndexPair& pr : split.minus_rows)
    rows.push_back({pr.position, 1 - pr.index});
  for (const IndexPair& pr : split.plus_rows)
    rows.push_back({n_size + 1 - pr.position, pr.index + n_size});
  return validate_and_normalize(n_size, std::move(lines), std::move(rows));
}

LacunarySpec mirror_spec(const LacunarySpec& spec) {
  std::vector<IndexPair> lines, rows;
  for (const IndexPair& pr : spec.lines)
    lines.push_back({spec.n_size + 1 - pr.position, spec.n_size + 1 - pr.index});
  for (const IndexPair& pr : spec.rows)
    rows.push_back({spec.n_size + 1 - pr.position, spec.n_size + 1 - pr.index});
  return validate_and_normalize(spec.n_size, std::move(lines), std::move(rows));
}

ExactRatio exact_ratio(const Symbol& symbol, const LacunarySpec& spec) {
  const std::int64_t n = spec.n_size;
  const auto ell = spec.ell_sequence();
  const auto m = spec.m_sequence();

  std::int64_t lo_ell = 1, hi_ell = n, lo_m = 1, hi_m = n;
  for (const IndexPair& pr : spec.lines) {
    lo_ell = std::min(lo_ell, pr.index);
    hi_ell = std::max(hi_ell, pr.index);
  }
  for (const IndexPair& pr : spec.rows) {
    lo_m = std::min(lo_m, pr.index);
    hi_m = std::max(hi_m, pr.index);
  }

  const CoefficientTable coeffs =
      fourier_coefficients(symbol, lo_ell - hi_m, hi_ell - lo_m);

  const std::size_t size = static_cast<std::size_t>(n);
  const LogDet plain = log_determinant(
      build_lacunary_toeplitz(coeffs, size, LacunarySpec{n, {}, {}, 0}.ell_sequence(),
                              LacunarySpec{n, {}, {}, 0}.m_sequence()));
  if (plain.is_zero)
    throw error(errc::plain_singular, "unperturbed Toeplitz determinant vanishes");

  const LogDet lac =
      log_determinant(build_lacunary_toeplitz(coeffs, size, ell, m));

  ExactRatio out;
  if (lac.is_zero) {
    out.is_zero = true;
    return out;
  }
  out.value = std::exp(cplx(lac.log_modulus - plain.log_modulus,
                            lac.phase - plain.phase));
  return out;
}

}  // namespace lactoep
