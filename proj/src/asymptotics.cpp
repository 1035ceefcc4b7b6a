#include "lactoep/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "lactoep/errors.hpp"
#include "lactoep/fft.hpp"

namespace lactoep {

namespace {

constexpr double kSingularCondition = 1e12;

// Ceiling on the log monomial modulus before an entry's contours are
// deformed; at exp(6.9) ~ 1e3 the scaled-entry roundoff stays near 1e-12.
constexpr double kLogScaleCap = 6.9;

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace

void QuadratureReport::absorb(const QuadratureResult& r) {
  max_nodes = std::max(max_nodes, r.nodes);
  worst_change = std::max(worst_change, r.last_change);
  all_converged = all_converged && r.converged;
}

cplx CorrectionMatrix::det() const { return determinant_small(matrix); }

namespace {

// Condition estimate plus the non-singularity flag the theorems condition on.
void attach_condition(CorrectionMatrix& m) {
  if (m.matrix.rows == 0) return;
  try {
    m.condition = condition_estimate(m.matrix);
  } catch (const error&) {
    m.condition = std::numeric_limits<double>::infinity();
  }
  m.singular_flag = !(m.condition < kSingularCondition);
}

}  // namespace

// ---------------------------------------------------------------------------
// Factor coefficient tables
// ---------------------------------------------------------------------------

namespace {

// Adaptive FFT of a circle function analytic near |z|=1; kept indices
// [keep_min, keep_max], grid doubled until the kept range is stable.
CoefficientTable circle_function_table(const std::function<cplx(cplx)>& fn,
                                       std::int64_t keep_min,
                                       std::int64_t keep_max, double target) {
  const std::size_t span =
      static_cast<std::size_t>(std::max(std::abs(keep_min), std::abs(keep_max)));
  std::size_t grid = next_pow2(std::max<std::size_t>(64, 2 * (span + 8)));

  auto compute = [&](std::size_t g) {
    std::vector<cplx> samples(g);
    for (std::size_t j = 0; j < g; ++j) {
      const double th = 2.0 * std::numbers::pi * static_cast<double>(j) /
                        static_cast<double>(g);
      samples[j] = fn(cplx(std::cos(th), std::sin(th)));
    }
    return circle_samples_to_coefficients(samples);
  };

  CoefficientTable prev = compute(grid);
  for (int pass = 0; pass < 8; ++pass) {
    grid *= 2;
    CoefficientTable next = compute(grid);
    double change = 0.0;
    for (std::int64_t m = keep_min; m <= keep_max; ++m)
      change = std::max(change, std::abs(next.get(m) - prev.get(m)));
    prev = std::move(next);
    if (change < target) break;
  }

  CoefficientTable out;
  out.offset = keep_min;
  out.values.resize(static_cast<std::size_t>(keep_max - keep_min + 1));
  for (std::int64_t m = keep_min; m <= keep_max; ++m) out.at(m) = prev.get(m);
  out.tail_certified = true;
  out.tail_bound = target;
  return out;
}

}  // namespace

FactorTables factor_tables(const Symbol& symbol, std::int64_t max_index) {
  const WienerHopfFactorization fact = factorize(symbol);
  const double target = std::min(symbol.tol, 1e-13);

  FactorTables t;
  t.interior = circle_function_table(
      [&](cplx z) { return alpha_interior(fact, z); }, 0, max_index, target);
  t.interior_inv = circle_function_table(
      [&](cplx z) { return 1.0 / alpha_interior(fact, z); }, 0, max_index, target);
  t.exterior = circle_function_table(
      [&](cplx z) { return alpha_exterior(fact, z); }, -max_index, 0, target);
  t.exterior_inv = circle_function_table(
      [&](cplx z) { return 1.0 / alpha_exterior(fact, z); }, -max_index, 0, target);
  t.symbol_f = circle_function_table([&](cplx z) { return symbol.value(z); },
                                     -max_index, max_index, target);
  return t;
}

// ---------------------------------------------------------------------------
// Resolvent kernel
// ---------------------------------------------------------------------------

cplx resolvent_kernel_r00(const WienerHopfFactorization& fact,
                          const Symbol& symbol, std::int64_t n_size, cplx z,
                          cplx s) {
  if (std::abs(z - s) < 1e-12 * (std::abs(z) + std::abs(s)))
    throw error(errc::coincident_points, "kernel evaluated too close to z = s");
  const cplx half_pow =
      std::exp(0.5 * static_cast<double>(n_size) * (std::log(z) - std::log(s)));
  const cplx a_plus_s = alpha_interior(fact, s);
  const cplx a_plus_z = alpha_interior(fact, z);
  const cplx a_minus_s = alpha_exterior(fact, s);
  const cplx a_minus_z = alpha_exterior(fact, z);
  const cplx num =
      half_pow * a_plus_s / a_minus_z - (1.0 / half_pow) * a_plus_z / a_minus_s;
  const cplx pref = (symbol.value(z) - 1.0) / cplx(0.0, 2.0 * std::numbers::pi);
  return pref * num / (z - s);
}

// ---------------------------------------------------------------------------
// Perturbation basis
// ---------------------------------------------------------------------------

std::vector<PerturbationBasis::UPiece> PerturbationBasis::u_pieces(
    int family, std::size_t a) const {
  const std::size_t c = spec->overlap_c;
  std::vector<UPiece> out;
  if (family == 0) {
    const IndexPair& pr = spec->lines[a];
    out.push_back({Factor::f, pr.index, +1.0});
    out.push_back({a < c ? Factor::one : Factor::f, pr.position, -1.0});
  } else {
    const IndexPair& pr = spec->rows[a];
    out.push_back({Factor::f, pr.position, +1.0});
    out.push_back({Factor::one, pr.position, -1.0});
  }
  return out;
}

std::vector<PerturbationBasis::VPiece> PerturbationBasis::v_pieces(
    int family, std::size_t b) const {
  const std::size_t c = spec->overlap_c;
  if (family == 0) {
    const IndexPair& pr = spec->lines[b];
    if (b < c) return {{spec->rows[b].index, +1.0}};
    return {{pr.position, +1.0}};
  }
  const IndexPair& pr = spec->rows[b];
  if (b < c) return {{pr.position, -1.0}};
  return {{pr.index, +1.0}};
}

cplx PerturbationBasis::u_value(int family, std::size_t a, cplx z) const {
  const double half_n = 0.5 * static_cast<double>(spec->n_size);
  cplx acc(0.0, 0.0);
  for (const UPiece& p : u_pieces(family, a)) {
    const cplx g = p.g == Factor::f ? symbol->value(z) : cplx(1.0, 0.0);
    acc += p.sign * g *
           std::exp((half_n - static_cast<double>(p.q)) * std::log(z));
  }
  return acc / cplx(0.0, 2.0 * std::numbers::pi);
}

cplx PerturbationBasis::v_value(int family, std::size_t b, cplx z) const {
  const double half_n = 0.5 * static_cast<double>(spec->n_size);
  cplx acc(0.0, 0.0);
  for (const VPiece& p : v_pieces(family, b))
    acc += p.sign *
           std::exp((static_cast<double>(p.w) - 1.0 - half_n) * std::log(z));
  return acc;
}

// ---------------------------------------------------------------------------
// General block matrix via residue-reduced inner integrals
// ---------------------------------------------------------------------------

namespace {

// Net contribution of a u piece (1/2 i pi) f(z) z^{N/2-q} against the column
// monomial z^{w-1-N/2}, i.e. the direct term minus the resolvent term after
// the inner Cauchy integral has been resolved by contour deformation.  Only
// the pieces that survive the deformations remain; everything reduces to
// convolutions of the factor tables.
cplx net_with_f(const FactorTables& t, std::int64_t n_size, std::int64_t q,
                std::int64_t w) {
  cplx acc = q == w ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
  if (q >= n_size + 1) {
    for (std::int64_t j = 0; j <= q - n_size - 1; ++j)
      acc += t.interior_inv.get(j) *
             (t.exterior.get(q - w - j) - t.interior.get(q - w - j));
  } else if (q <= 0) {
    for (std::int64_t j = q; j <= 0; ++j)
      acc += t.exterior.get(j) *
             (t.interior_inv.get(q - w - j) - t.exterior_inv.get(q - w - j));
  }
  return acc;
}

// Same for a u piece (1/2 i pi) z^{N/2-q}, with q in [1, N].
cplx net_with_one(const FactorTables& t, std::int64_t n_size, std::int64_t q,
                  std::int64_t w) {
  cplx acc = q == w ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
  for (std::int64_t j = 0; j <= q - 1; ++j)
    acc -= t.interior.get(j) *
           (t.interior_inv.get(q - w - j) - t.exterior_inv.get(q - w - j));
  const std::int64_t depth = -t.exterior_inv.n_min();
  for (std::int64_t i = n_size + 1 - q; i <= depth; ++i)
    acc += t.exterior_inv.get(-i) *
           (t.exterior.get(q - w + i) - t.interior.get(q - w + i));
  return acc;
}

cplx net_piece(const FactorTables& t, std::int64_t n_size,
               PerturbationBasis::Factor g, std::int64_t q, std::int64_t w) {
  return g == PerturbationBasis::Factor::f ? net_with_f(t, n_size, q, w)
                                           : net_with_one(t, n_size, q, w);
}

}  // namespace

CorrectionMatrix general_correction_matrix(const WienerHopfFactorization& fact,
                                           const Symbol& symbol,
                                           const LacunarySpec& spec,
                                           const QuadratureConfig& config) {
  (void)config;  // the residue-reduced entries need no contour radii
  const std::size_t n = spec.n_lines();
  const std::size_t r = spec.n_rows();
  const std::size_t size = n + r;

  std::int64_t max_off = 1;
  for (const IndexPair& pr : spec.lines)
    max_off = std::max({max_off, std::abs(pr.index), pr.position});
  for (const IndexPair& pr : spec.rows)
    max_off = std::max({max_off, std::abs(pr.index), pr.position});
  const std::int64_t max_index = spec.n_size + 3 * max_off + 64;
  if (max_index > (std::int64_t{1} << 20))
    throw error(errc::bad_input, "lacunary indices too large for the factor tables");
  const FactorTables tables = factor_tables(symbol, max_index);

  PerturbationBasis basis{&spec, &fact, &symbol};

  CorrectionMatrix out;
  out.kind = CorrectionKind::general_n;
  out.matrix = ComplexMatrix(size, size);

  const std::size_t c = spec.overlap_c;
  for (std::size_t row = 0; row < size; ++row) {
    const int fam_a = row < n ? 0 : 1;
    const std::size_t a = fam_a == 0 ? row : row - n;
    const auto u = basis.u_pieces(fam_a, a);
    for (std::size_t col = 0; col < size; ++col) {
      const int fam_b = col < n ? 0 : 1;
      const std::size_t b = fam_b == 0 ? col : col - n;

      cplx entry(0.0, 0.0);
      if (fam_a == 0 && fam_b == 0 && a == b && b >= c) entry += 1.0;
      if (fam_a == 1 && fam_b == 1 && a == b && b < c) entry += 1.0;

      for (const auto& vp : basis.v_pieces(fam_b, b))
        for (const auto& up : u)
          entry += vp.sign * up.sign *
                   net_piece(tables, spec.n_size, up.g, up.q, vp.w);
      out.matrix(row, col) = entry;
    }
  }
  out.matrix.check_finite();
  out.quadrature_report.max_nodes = tables.symbol_f.values.size();
  attach_condition(out);
  return out;
}

// ---------------------------------------------------------------------------
// Contour radii
// ---------------------------------------------------------------------------

namespace {

struct ContourRadii {
  double int_s = 0.0, int_z = 0.0;  // interior pair, int_s < int_z < 1-side
  double ext_z = 0.0, ext_s = 0.0;  // exterior pair, 1 < ext_z < ext_s
  double safe_lo = 0.0, safe_hi = 0.0;
};

ContourRadii resolve_radii(const WienerHopfFactorization& fact,
                           const QuadratureConfig& config) {
  ContourRadii r;
  r.safe_lo = fact.safe_inner();
  r.safe_hi = fact.safe_outer();

  const bool user_set = config.eta_z > 0.0 || config.eta_s > 0.0;
  const double eta_z =
      config.eta_z > 0.0 ? config.eta_z : std::max(0.5, (1.0 + 2.0 * r.safe_lo) / 3.0);
  const double eta_s = config.eta_s > 0.0 ? config.eta_s : 0.5 * (eta_z + r.safe_lo);
  if (!(0.0 < eta_s && eta_s < eta_z && eta_z < 1.0))
    throw error(errc::bad_input, "need 0 < eta_s < eta_z < 1");
  if (eta_s <= r.safe_lo)
    throw error(errc::radii_outside_annulus, "eta_s inside the inner safety radius");

  r.int_s = eta_s;
  r.int_z = eta_z;
  r.ext_z = 1.0 / eta_z;
  r.ext_s = 1.0 / eta_s;
  if (r.ext_s >= r.safe_hi) {
    if (user_set)
      throw error(errc::radii_outside_annulus,
                  "1/eta_s outside the outer safety radius");
    r.ext_s = 1.0 + 0.75 * (r.safe_hi - 1.0);
    r.ext_z = 1.0 + 0.50 * (r.safe_hi - 1.0);
  }
  return r;
}

// One double-integral entry with contours deformed toward the annulus edge
// when the monomial scale at the nominal radii would cost too many digits.
QuadratureResult entry_integral(const std::function<cplx(cplx)>& a_of_z,
                                const std::function<cplx(cplx)>& b_of_s,
                                std::int64_t q_z, std::int64_t m_s, bool interior,
                                const ContourRadii& radii,
                                const QuadratureConfig& config) {
  double rz = interior ? radii.int_z : radii.ext_z;
  double rs = interior ? radii.int_s : radii.ext_s;
  // Edge targets preserve the contour ordering on each side of the circle.
  const double tz = interior ? 0.95 * radii.safe_hi : 1.10 * radii.safe_lo;
  const double ts = interior ? 0.80 * radii.safe_hi : 1.40 * radii.safe_lo;

  auto log_scale = [&](double az, double as) {
    return static_cast<double>(q_z) * std::log(az) +
           static_cast<double>(m_s) * std::log(as);
  };
  for (double t : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const double az = std::pow(rz, 1.0 - t) * std::pow(tz, t);
    const double as = std::pow(rs, 1.0 - t) * std::pow(ts, t);
    if (log_scale(az, as) <= kLogScaleCap || t == 1.0) {
      rz = az;
      rs = as;
      break;
    }
  }
  return separated_double_integral(a_of_z, b_of_s, q_z, m_s, rz, rs, config);
}

}  // namespace

// ---------------------------------------------------------------------------
// Line matrix and corollary limits
// ---------------------------------------------------------------------------

CorrectionMatrix line_correction_matrix(const WienerHopfFactorization& fact,
                                        const LacunarySpec& spec,
                                        const QuadratureConfig& config) {
  if (!spec.rows.empty())
    throw error(errc::bad_input, "line matrix needs a pure-line spec");
  const ContourRadii radii = resolve_radii(fact, config);
  const std::size_t n = spec.n_lines();
  const std::int64_t big_n = spec.n_size;

  CorrectionMatrix out;
  out.kind = CorrectionKind::line_m;
  out.matrix = ComplexMatrix(n, n);

  auto a_int = [&](cplx z) { return alpha_interior(fact, z); };
  auto a_int_inv = [&](cplx s) { return 1.0 / alpha_interior(fact, s); };
  auto a_ext = [&](cplx s) { return alpha_exterior(fact, s); };
  auto a_ext_inv = [&](cplx z) { return 1.0 / alpha_exterior(fact, z); };

  for (std::size_t a = 0; a < n; ++a) {
    const std::int64_t p = spec.lines[a].index;
    for (std::size_t b = 0; b < n; ++b) {
      const std::int64_t h = spec.lines[b].position;
      QuadratureResult qr;
      if (p >= big_n + 1) {
        qr = entry_integral(a_int, a_int_inv, h - big_n - 1, big_n - p, true,
                            radii, config);
        qr.value = -qr.value;
      } else {
        qr = entry_integral(a_ext_inv, a_ext, h - 1, -p, false, radii, config);
      }
      out.matrix(a, b) = qr.value;
      out.quadrature_report.absorb(qr);
    }
  }
  out.matrix.check_finite();
  attach_condition(out);
  return out;
}

std::pair<CorrectionMatrix, CorrectionMatrix> corollary_matrices(
    const WienerHopfFactorization& fact, const LacunarySplit& split,
    const QuadratureConfig& config) {
  const ContourRadii radii = resolve_radii(fact, config);

  auto a_int = [&](cplx z) { return alpha_interior(fact, z); };
  auto a_int_inv = [&](cplx s) { return 1.0 / alpha_interior(fact, s); };
  auto a_ext = [&](cplx s) { return alpha_exterior(fact, s); };
  auto a_ext_inv = [&](cplx z) { return 1.0 / alpha_exterior(fact, z); };

  CorrectionMatrix plus;
  plus.kind = CorrectionKind::corollary_plus;
  const std::size_t np = split.plus_lines.size();
  plus.matrix = ComplexMatrix(np, np);
  for (std::size_t a = 0; a < np; ++a)
    for (std::size_t b = 0; b < np; ++b) {
      QuadratureResult qr = entry_integral(
          a_int, a_int_inv, -split.plus_lines[b].position,
          -split.plus_lines[a].index, true, radii, config);
      plus.matrix(a, b) = -qr.value;
      plus.quadrature_report.absorb(qr);
    }

  CorrectionMatrix minus;
  minus.kind = CorrectionKind::corollary_minus;
  const std::size_t nm = split.minus_lines.size();
  minus.matrix = ComplexMatrix(nm, nm);
  for (std::size_t a = 0; a < nm; ++a)
    for (std::size_t b = 0; b < nm; ++b) {
      QuadratureResult qr = entry_integral(
          a_ext_inv, a_ext, split.minus_lines[b].position - 1,
          split.minus_lines[a].index - 1, false, radii, config);
      minus.matrix(a, b) = qr.value;
      minus.quadrature_report.absorb(qr);
    }

  for (CorrectionMatrix* m : {&plus, &minus}) {
    m->matrix.check_finite();
    attach_condition(*m);
  }
  return {std::move(plus), std::move(minus)};
}

// ---------------------------------------------------------------------------
// Edge-block matrices
// ---------------------------------------------------------------------------

namespace {

// Upper-edge block matrix for offsets (lines: (H_a, P_a), rows: (T_a, K_a)),
// well-ordered with overlap gamma.  The boundary-value prescriptions become
// contours at radii 1 -+ delta: the "main" pieces put z inside and s outside,
// the "extra" pieces (those carrying the opposite side limit) swap them.
CorrectionMatrix epsilon_plus_matrix(const WienerHopfFactorization& fact,
                                     const std::vector<IndexPair>& lines,
                                     const std::vector<IndexPair>& rows,
                                     std::size_t gamma,
                                     const QuadratureConfig& config,
                                     CorrectionKind kind) {
  const ContourRadii radii = resolve_radii(fact, config);
  double delta = 0.25 * (1.0 - radii.int_z);
  delta = std::min({delta, 0.25 * (1.0 - radii.safe_lo), 0.25 * (radii.safe_hi - 1.0)});
  const double r_in = 1.0 - delta;
  const double r_out = 1.0 + delta;

  auto a_int = [&](cplx z) { return alpha_interior(fact, z); };
  auto a_int_inv = [&](cplx s) { return 1.0 / alpha_interior(fact, s); };
  auto a_ext = [&](cplx s) { return alpha_exterior(fact, s); };
  auto a_ext_inv = [&](cplx s) { return 1.0 / alpha_exterior(fact, s); };

  const std::size_t n = lines.size();
  const std::size_t r = rows.size();
  CorrectionMatrix out;
  out.kind = kind;
  out.matrix = ComplexMatrix(n + r, n + r);

  // main: z on 1-delta, s on 1+delta; extra: z on 1+delta, s on 1-delta.
  auto main_term = [&](const std::function<cplx(cplx)>& az,
                       const std::function<cplx(cplx)>& bs, std::int64_t q,
                       std::int64_t m) {
    return separated_double_integral(az, bs, q, m, r_in, r_out, config);
  };
  auto extra_term = [&](const std::function<cplx(cplx)>& az,
                        const std::function<cplx(cplx)>& bs, std::int64_t q,
                        std::int64_t m) {
    return separated_double_integral(az, bs, q, m, r_out, r_in, config);
  };

  for (std::size_t row = 0; row < n + r; ++row) {
    const bool line_row = row < n;
    const std::size_t a = line_row ? row : row - n;
    const std::int64_t pa = line_row ? lines[a].index : 0;
    const std::int64_t ha = line_row ? lines[a].position : 0;
    const std::int64_t ta = line_row ? 0 : rows[a].position;
    for (std::size_t col = 0; col < n + r; ++col) {
      const bool line_col = col < n;
      const std::size_t b = line_col ? col : col - n;
      cplx entry(0.0, 0.0);
      auto add = [&](QuadratureResult qr, double sign) {
        entry += sign * qr.value;
        out.quadrature_report.absorb(qr);
      };

      if (line_row && line_col) {
        if (b < gamma) {
          const std::int64_t kb = rows[b].index;
          add(extra_term(a_ext, a_int_inv, kb - 1, -pa), +1.0);
          if (a < gamma) add(main_term(a_ext, a_ext_inv, kb - 1, ha - 1), -1.0);
        } else {
          const std::int64_t hb = lines[b].position;
          add(main_term(a_int, a_int_inv, -hb, -pa), -1.0);
          if (a < gamma) add(main_term(a_int, a_ext_inv, -hb, ha - 1), +1.0);
        }
      } else if (line_row && !line_col) {
        if (b < gamma) {
          const std::int64_t tb = rows[b].position;
          add(main_term(a_int, a_int_inv, -tb, -pa), +1.0);
          if (a < gamma) add(main_term(a_int, a_ext_inv, -tb, ha - 1), -1.0);
        } else {
          const std::int64_t kb = rows[b].index;
          add(extra_term(a_ext, a_int_inv, kb - 1, -pa), +1.0);
          if (a < gamma) add(main_term(a_ext, a_ext_inv, kb - 1, ha - 1), -1.0);
        }
      } else if (!line_row && line_col) {
        if (b < gamma) {
          add(main_term(a_ext, a_ext_inv, rows[b].index - 1, ta - 1), -1.0);
        } else {
          add(main_term(a_int, a_ext_inv, -lines[b].position, ta - 1), +1.0);
        }
      } else {
        if (b < gamma) {
          add(main_term(a_int, a_ext_inv, -rows[b].position, ta - 1), -1.0);
        } else {
          add(main_term(a_ext, a_ext_inv, rows[b].index - 1, ta - 1), -1.0);
        }
      }
      out.matrix(row, col) = entry;
    }
  }
  out.matrix.check_finite();
  attach_condition(out);
  return out;
}

}  // namespace

std::pair<CorrectionMatrix, CorrectionMatrix> epsilon_block_matrices(
    const WienerHopfFactorization& fact, const LacunarySplit& split,
    const QuadratureConfig& config) {
  CorrectionMatrix plus =
      epsilon_plus_matrix(fact, split.plus_lines, split.plus_rows,
                          split.overlap_plus, config, CorrectionKind::epsilon_plus);
  // Lower-edge data of f maps to upper-edge data of f(1/z) under z -> 1/z,
  // exactly and offset for offset; evaluate the minus block there.
  const WienerHopfFactorization mirrored = invert_circle(fact);
  CorrectionMatrix minus =
      epsilon_plus_matrix(mirrored, split.minus_lines, split.minus_rows,
                          split.overlap_minus, config, CorrectionKind::epsilon_minus);
  return {std::move(plus), std::move(minus)};
}

// ---------------------------------------------------------------------------
// Szego baseline and dispatch
// ---------------------------------------------------------------------------

cplx szego_log_asymptotics(const Symbol& symbol, std::int64_t n_size) {
  cplx acc = static_cast<double>(n_size) * symbol.log_coeffs.get(0);
  const std::int64_t k_max =
      std::min(symbol.log_coeffs.n_max(), -symbol.log_coeffs.n_min());
  for (std::int64_t k = 1; k <= k_max; ++k)
    acc += static_cast<double>(k) * symbol.log_coeffs.get(k) *
           symbol.log_coeffs.get(-k);
  return acc;
}

AsymptoticRatio asymptotic_ratio(const WienerHopfFactorization& fact,
                                 const Symbol& symbol, const LacunarySpec& spec,
                                 const QuadratureConfig& config, Method method) {
  AsymptoticRatio out;

  if (method == Method::automatic) {
    try {
      split_edge_anchored(spec);
      method = Method::split;
    } catch (const error& e) {
      if (e.code() != errc::mixed_anchor) throw;
      method = Method::general;
    }
  }

  switch (method) {
    case Method::line: {
      CorrectionMatrix m = line_correction_matrix(fact, spec, config);
      out.value = m.det();
      out.condition = m.condition;
      out.singular_flag = m.singular_flag;
      out.quadrature_report = m.quadrature_report;
      out.method_used = Method::line;
      break;
    }
    case Method::general: {
      CorrectionMatrix m = general_correction_matrix(fact, symbol, spec, config);
      out.value = m.det();
      out.condition = m.condition;
      out.singular_flag = m.singular_flag;
      out.quadrature_report = m.quadrature_report;
      out.method_used = Method::general;
      break;
    }
    case Method::split: {
      const LacunarySplit split = split_edge_anchored(spec);
      auto [plus, minus] = epsilon_block_matrices(fact, split, config);
      out.value = plus.det() * minus.det();
      out.condition = std::max(plus.condition, minus.condition);
      out.singular_flag = plus.singular_flag || minus.singular_flag;
      out.quadrature_report = plus.quadrature_report;
      out.quadrature_report.max_nodes = std::max(
          out.quadrature_report.max_nodes, minus.quadrature_report.max_nodes);
      out.quadrature_report.worst_change = std::max(
          out.quadrature_report.worst_change, minus.quadrature_report.worst_change);
      out.quadrature_report.all_converged = out.quadrature_report.all_converged &&
                                            minus.quadrature_report.all_converged;
      out.method_used = Method::split;
      break;
    }
    case Method::automatic:
      break;
  }
  return out;
}

}  // namespace lactoep
