#ifndef ENTPS_VERIFY_HPP
#define ENTPS_VERIFY_HPP

#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "entps/fockspace.hpp"

// Property checks pairing each closed-form identity of the representation
// with an independent numerical path (truncated Fock algebra or complex
// plane quadrature). Every check returns a machine-readable report; the
// tolerances are regression gates calibrated against measured convergence,
// not claims of optimality.
namespace entps::verify {

struct CheckReport {
    std::string name;
    std::string identity;  // one-line statement of the property under test
    double max_abs_error = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::map<std::string, double> details;  // always carries "cutoff"
};

/// The four defining derivative relations of the <Gamma| representation,
/// checked by central differences in the label components against operator
/// action on an interior-supported test state; also the commutator
/// condition <Gamma|[Q+-, P+-]|psi> = i <Gamma|psi>.
CheckReport check_eigen_relations(const RepParams& p, const GammaLabel& L,
                                  const TwoModeState& test_state, double step);

/// a_i |Gamma> rewritten through labels and the opposite-mode creator.
CheckReport check_ladder_relations(const RepParams& p, const GammaLabel& L, int cutoff);

struct CompletenessOptions {
    int cutoff = 12;
    int subspace_max = 4;
    int order = 20;         // Gauss-Hermite points per real dimension
    double stretch = 1.2;   // deliberate rule/integrand scale mismatch; see impl
};
/// Label-space integral of |Gamma><Gamma| reconstructing the identity on a
/// low-occupation subspace.
CheckReport check_completeness(const RepParams& p, const CompletenessOptions& opt);

/// All closed-form overlaps against truncated Fock inner products for
/// random labels in the unit disk.
CheckReport check_overlaps(const RepParams& p, int cutoff, int draws,
                           std::uint64_t seed);

/// Quadrature moments in both conjugate label representations against the
/// closed-form moment set; variance products pinned at 1/4.
CheckReport check_uncertainty(const RepParams& p, const GammaLabel& L, int order);

/// Marginal distributions: label-space LHS vs smoothed-quantal RHS (and a
/// closed form when psi is the vacuum), both directions.
CheckReport check_marginals(const RepParams& p, const GammaLabel& L,
                            const TwoModeState& psi, int order);

/// Wigner function on a uniform phase grid: quadrature transform against
/// the closed form.
CheckReport check_wigner(const RepParams& p, const GammaLabel& L, int grid_axis_points,
                         int cutoff, int order);

/// Wigner kernel matrix: generic series route against the single-mode
/// tensor factorization, plus hermiticity.
CheckReport check_factorization(std::span<const PhasePoint> points, int cutoff);

struct WeylOptions {
    int trace_order = 24;
    bool matrix_test = false;
    int matrix_cutoff = 10;
    int matrix_order = 20;
    int block_max = 8;  // occupation bound of the compared block
};
/// Weyl machinery: coherent-state trace test through three routes and
/// (full tier) the smoothed-kernel reconstruction of |Gamma><Gamma|.
CheckReport check_weyl_smoothing(const RepParams& p, const GammaLabel& L,
                                 const WeylOptions& opt);

/// Scaled ket-bra integral against the matrix-exponential squeezing
/// operator on the interior block.
CheckReport check_squeeze(double mu, int cutoff, int order);

enum class Tier { quick, full };

struct RunOptions {
    Tier tier = Tier::quick;
    std::uint64_t seed = 20110515;
};

/// Every check, cheap first. Deterministic for a fixed seed.
std::vector<CheckReport> run_all(const RunOptions& opt);

std::string reports_to_json(std::span<const CheckReport> reports);
void print_reports(std::ostream& os, std::span<const CheckReport> reports);

}  // namespace entps::verify

#endif
