#pragma once

#include <span>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "polya/distributions.hpp"
#include "polya/fock.hpp"

namespace polya {

/// Structure function F(0)..F(M+1) of the deformed oscillator.
struct StructureFunctionTable {
  std::vector<double> values;
  PolyaParams params;
};

/// Normalization gamma / sqrt((1-eta)(1+M gamma)(M gamma+eta)) of A^-.
struct LoweringPrefactor {
  double c;
};

/// F(n) = n (M-n+1) (eta_bar + gamma(M-n)) (eta + gamma(n-1))
///        / [(1-eta)(gamma M + 1)(gamma M + eta)],  0 <= n <= M+1.
///
/// At gamma = 0 the reduced form n (M-n+1) is returned. Throws DomainError
/// tagged "bs-degenerate" for gamma = 0, eta = 1 and "singular" for
/// gamma > 0, eta = 1.
double structure_function(const PolyaParams& params, int n);
StructureFunctionTable structure_function_table(const PolyaParams& params);

/// Requires gamma > 0 and eta < 1.
LoweringPrefactor lowering_prefactor(const PolyaParams& params);

/// Matrix element <n-1| A^- |n> from the explicit operator product
///   c [(M-N)(eta_bar/gamma + M-N-1)(eta/gamma + N)]^{1/2} a,
/// with the number factors evaluated after `a` acts. At gamma = 0 this is the
/// su(2) element sqrt((M-n+1) n). Elements with n > M vanish: the
/// representation closes on |0>..|M>.
double lowering_coefficient(const PolyaParams& params, int n);

FockVector lowering_apply(const PolyaParams& params, const FockVector& v);
FockVector raising_apply(const PolyaParams& params, const FockVector& v);

Eigen::MatrixXd lowering_matrix(const PolyaParams& params, int dim);
Eigen::MatrixXd raising_matrix(const PolyaParams& params, int dim);
Eigen::MatrixXd number_matrix(int dim);

/// Max-abs residuals of the generator relations on the block n <= M.
struct AlgebraResiduals {
  double number_lowering;  // [N, A^-] + A^-
  double number_raising;   // [N, A^+] - A^+
  double raising_lowering; // A^+ A^- - F(N)
  double lowering_raising; // A^- A^+ - F(N+1)
  double leakage;          // weight carried out of span{|0>..|M>}

  double max() const noexcept;
};

/// Dense check of the algebra on a truncation of dimension `dim` >= M+2.
AlgebraResiduals verify_algebra(const PolyaParams& params, int dim);

/// Max-abs difference between the two sides of the ladder eigenvalue
/// equation for the Polya state:
///   gamma [(M-N)(eta_bar/gamma + M-N-1)(eta/gamma + N)]^{1/2} a |psi>
///     = gamma (M-N)(eta/gamma + N) |psi>.
/// At gamma = 0 both sides are multiplied through and the binomial-state
/// form sqrt(eta_bar eta (M-N)) a |psi> = eta (M-N) |psi> is used.
double eigen_residual(const PolyaParams& params);

/// Contraction to J^-_M = sqrt(M-N) a.
struct Su2Target {
  int M;
  double eta;
};

/// Contraction to K^-_{lambda rho} = sqrt(lambda rho + N) a.
struct Su11Target {
  double lambda;
  double rho;
};

using ContractionTarget = std::variant<Su2Target, Su11Target>;

struct ContractionReport {
  std::vector<double> deviations;  // one per schedule point
  int window;                      // compared block is n <= window
  bool tail_nonincreasing;         // over the final half of the schedule
  bool tail_strictly_decreasing;
  double final_deviation;
};

/// Compares the matrix of A^- with the contraction target on n <= window
/// along a limit schedule. Throws DomainError when the schedule does not
/// follow the declared limit. A window of -1 selects the full su(2) block
/// (n <= M) or 8 for su(1,1).
ContractionReport contraction_diagnostic(const ContractionTarget& target,
                                         std::span<const PolyaParams> schedule, int window = -1);

}  // namespace polya
