// asymptotics.hpp -- large-N correction determinants for lacunary Toeplitz
// ratios: the line-lacuna matrix, its edge-decoupled limits, the general
// block matrix built on the leading resolvent kernel, and the strong Szego
// baseline.

#ifndef LACTOEP_ASYMPTOTICS_HPP
#define LACTOEP_ASYMPTOTICS_HPP

#include <cstdint>
#include <utility>

#include "lactoep/lacunary.hpp"
#include "lactoep/matrix.hpp"
#include "lactoep/quadrature.hpp"
#include "lactoep/symbol.hpp"
#include "lactoep/wiener_hopf.hpp"

namespace lactoep {

enum class CorrectionKind {
  line_m,
  corollary_plus,
  corollary_minus,
  general_n,
  epsilon_plus,
  epsilon_minus,
};

struct QuadratureReport {
  std::size_t max_nodes = 0;
  double worst_change = 0.0;
  bool all_converged = true;

  void absorb(const QuadratureResult& r);
};

struct CorrectionMatrix {
  CorrectionKind kind = CorrectionKind::line_m;
  ComplexMatrix matrix;
  double condition = 1.0;
  bool singular_flag = false;  // condition above 1e12 (or an exactly zero pivot)
  QuadratureReport quadrature_report;

  cplx det() const;
};

// Laurent coefficient tables of the factor branches around the unit circle:
// interior alpha, its inverse, exterior alpha, its inverse, and f itself.
// These drive the residue-reduced evaluation of the general block matrix.
struct FactorTables {
  CoefficientTable interior;      // alpha_+ (indices >= 0)
  CoefficientTable interior_inv;  // 1/alpha_+
  CoefficientTable exterior;      // alpha_- (indices <= 0)
  CoefficientTable exterior_inv;  // 1/alpha_-
  CoefficientTable symbol_f;      // c_n[f]
};

// Tables long enough to serve indices up to |n| <= max_index.
FactorTables factor_tables(const Symbol& symbol, std::int64_t max_index);

// Leading resolvent kernel of the plain-Toeplitz integrable operator:
//   (f(z)-1)/(2 i pi) * [ (z/s)^{N/2} a_+(s)/a_-(z) - (s/z)^{N/2} a_+(z)/a_-(s) ] / (z-s)
// with half powers evaluated as exp((N/2)(Log z - Log s)) (principal logs).
cplx resolvent_kernel_r00(const WienerHopfFactorization& fact,
                          const Symbol& symbol, std::int64_t n_size, cplx z,
                          cplx s);

// The perturbation families attached to a normalised spec: the u functions
// (one per line and per row, depending on f and monomials z^{N/2-q}) and the
// dual v monomials z^{w-1-N/2} with their overlap selectors.
struct PerturbationBasis {
  const LacunarySpec* spec = nullptr;
  const WienerHopfFactorization* fact = nullptr;
  const Symbol* symbol = nullptr;

  // g in {f, one} tags the analytic factor of a u piece.
  enum class Factor { f, one };
  struct UPiece {
    Factor g;
    std::int64_t q;  // exponent data: the piece is (1/2 i pi) g(z) z^{N/2 - q}
    double sign;
  };
  struct VPiece {
    std::int64_t w;  // the piece is sign * z^{w - 1 - N/2}
    double sign;
  };

  // Row family A in {I=0 (lines), II=1 (rows)}, member a (0-based).
  std::vector<UPiece> u_pieces(int family, std::size_t a) const;
  // Column family B, member b (0-based).
  std::vector<VPiece> v_pieces(int family, std::size_t b) const;

  cplx u_value(int family, std::size_t a, cplx z) const;
  cplx v_value(int family, std::size_t b, cplx z) const;
};

// Line-lacuna correction matrix M (spec.rows must be empty):
//   M_ab = -[p_a >= N+1] (interior double integral of a(z)/a(s) s^{N-p_a} z^{h_b-N-1}/(z-s))
//          +[p_a <= 0]   (exterior double integral of a(s)/a(z) s^{-p_a} z^{h_b-1}/(z-s)).
// Contours sit on circles inside the safe annulus; entries whose monomial
// scale would drown the tensor sum in roundoff are deformed toward the
// annulus edge (value unchanged by analyticity).
CorrectionMatrix line_correction_matrix(const WienerHopfFactorization& fact,
                                        const LacunarySpec& spec,
                                        const QuadratureConfig& config);

// N-independent decoupled limits M^(+), M^(-) of det M for an edge-anchored
// pure-line split.
std::pair<CorrectionMatrix, CorrectionMatrix> corollary_matrices(
    const WienerHopfFactorization& fact, const LacunarySplit& split,
    const QuadratureConfig& config);

// The (n+r) x (n+r) block matrix built from the perturbation basis and the
// leading resolvent.  The inner Cauchy integrals are deformed onto split
// radii and resolved by residues; what survives is assembled from the factor
// tables, so entries stay O(1)-conditioned for any N.
CorrectionMatrix general_correction_matrix(const WienerHopfFactorization& fact,
                                           const Symbol& symbol,
                                           const LacunarySpec& spec,
                                           const QuadratureConfig& config);

// Edge-block matrices for a well-ordered split: the plus matrix from the
// boundary-limit double integrals at radii 1 -+ delta, the minus matrix via
// the exact circle inversion z -> 1/z that maps lower-edge data of f to
// upper-edge data of f(1/z).
std::pair<CorrectionMatrix, CorrectionMatrix> epsilon_block_matrices(
    const WienerHopfFactorization& fact, const LacunarySplit& split,
    const QuadratureConfig& config);

// log of the strong Szego approximation to the plain determinant:
//   N c_0[ln f] + sum_{k>=1} k c_k[ln f] c_{-k}[ln f].
cplx szego_log_asymptotics(const Symbol& symbol, std::int64_t n_size);

enum class Method { automatic, line, general, split };

struct AsymptoticRatio {
  cplx value{0.0, 0.0};
  Method method_used = Method::general;
  double condition = 1.0;
  bool singular_flag = false;
  QuadratureReport quadrature_report;
};

// Dispatch: split when the spec is edge-anchored, otherwise the general
// matrix; `line` only accepts pure-line specs.
AsymptoticRatio asymptotic_ratio(const WienerHopfFactorization& fact,
                                 const Symbol& symbol, const LacunarySpec& spec,
                                 const QuadratureConfig& config,
                                 Method method = Method::automatic);

}  // namespace lactoep

#endif
