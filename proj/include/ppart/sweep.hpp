#pragma once

// Batch verification. Every batch has an OpenMP kernel and a serial reference
// that produce identical, identically ordered results.

#include "ppart/verifier.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace ppart {

enum class Execution { serial, parallel };

/// Optional (p, k) attaches a numeric check to every report.
std::vector<VerificationReport> verify_batch(const std::vector<CharacterRecord>& characters, Execution exec,
                                             std::optional<std::pair<unsigned, unsigned>> numeric = std::nullopt,
                                             const DiagramLibrary& lib = DiagramLibrary::embedded());

/// Every unipotent character of GL_n for n_min <= n <= n_max, n ascending.
std::vector<VerificationReport> sweep_gl(int n_min, int n_max, Execution exec);

/// One summary per group, in input order.
std::vector<IdentitySummary> identity_sweep(const std::vector<GroupSpec>& groups, Execution exec,
                                            const DiagramLibrary& lib = DiagramLibrary::embedded());

/// Grading dimensions for every class of every group, flattened in
/// enumeration order.
std::vector<GradingDims> dims_sweep(const std::vector<GroupSpec>& groups, Execution exec,
                                    const DiagramLibrary& lib = DiagramLibrary::embedded());

} // namespace ppart
