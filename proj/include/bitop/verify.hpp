#pragma once

#include "bitop/config.hpp"
#include "bitop/report.hpp"

#include <string>
#include <vector>

namespace bitop {

/// One verification check: draws its own deterministic substream from the
/// config seed, measures, and compares against the (overridable) tolerance.
/// Checks that adjudicate formula variants append to `typos` when given.
using TypoList = std::vector<SuspectedTypo>;

CheckResult check_lax_identity(const RunConfig& cfg);
CheckResult check_conservation(const RunConfig& cfg);
CheckResult check_conservation_order(const RunConfig& cfg);
CheckResult check_route_equivalence(const RunConfig& cfg, TypoList* typos = nullptr);
CheckResult check_charpoly_identity(const RunConfig& cfg);
CheckResult check_casimir_polynomials(const RunConfig& cfg);
CheckResult check_involution(const RunConfig& cfg);
CheckResult check_casimir_brackets(const RunConfig& cfg);
CheckResult check_independence_rank(const RunConfig& cfg);
CheckResult check_degenerate_rank(const RunConfig& cfg);
CheckResult check_curve_structure(const RunConfig& cfg);
CheckResult check_eigenvector_formula(const RunConfig& cfg);
CheckResult check_isospectral_drift(const RunConfig& cfg);
CheckResult check_reduction_pushforward(const RunConfig& cfg);
CheckResult check_reduction_r_constants(const RunConfig& cfg);
CheckResult check_reduction_f_conservation(const RunConfig& cfg, TypoList* typos = nullptr);
CheckResult check_reduction_cubic_closure(const RunConfig& cfg, TypoList* typos = nullptr);
CheckResult check_prym_weierstrass(const RunConfig& cfg, TypoList* typos = nullptr);
CheckResult check_hierarchy_base_case(const RunConfig& cfg);
CheckResult check_hierarchy_curves(const RunConfig& cfg);
CheckResult check_hierarchy_isospectral(const RunConfig& cfg);

/// Names in canonical execution order (degenerate-rank excluded; it runs
/// only under the degeneracy flag or by explicit selection).
const std::vector<std::string>& default_check_names();

/// Run the named checks (all defaults when `subset` is empty, plus
/// degenerate-rank when the degeneracy flag is set).  Report metadata
/// records the seed and generator.
VerificationReport run_verification(const RunConfig& cfg,
                                    const std::vector<std::string>& subset = {});

}  // namespace bitop
