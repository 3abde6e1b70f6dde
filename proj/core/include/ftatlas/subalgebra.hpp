#pragma once

// Extraction of ax+b / Grelaud subalgebras from the adjoint spectrum, and
// verification of claimed subalgebra embeddings against fixed templates.

#include <cstdint>
#include <string_view>
#include <vector>

#include "ftatlas/lie_algebra.hpp"

namespace ftatlas {

enum class WitnessKind { kAxB, kGrelaud, kHeisenberg };

std::string_view witness_kind_name(WitnessKind kind) noexcept;

/// Generators of a small subalgebra with a known bracket table:
///  ax+b:       [g1, g2] = g2
///  Grelaud:    [g1, g2] = g2 + beta g3, [g1, g3] = -beta g2 + g3, [g2, g3] = 0
///  Heisenberg: [g1, g2] = g3 central
struct SubalgebraWitness {
  WitnessKind kind = WitnessKind::kAxB;
  double beta = 0.0;  // Grelaud parameter, nonzero
  std::vector<LieVector> generators;
  double residual = 0.0;
  std::uint64_t seed = 0;
  int trial_index = -1;  // -1 when supplied rather than searched
};

struct SearchOptions {
  std::uint64_t seed = 0;
  /// Random candidates tried after the basis elements.
  int trials = 64;
};

/// Tries basis elements, then seeded random rational combinations X, and
/// reads a witness off the spectrum of ad(X): a nonzero real eigenvalue
/// gives ax+b, otherwise an eigenvalue alpha + i beta with alpha != 0 gives
/// Grelaud(beta / alpha). Real eigenvalues are preferred over the whole
/// candidate list. Throws kNoWitnessFound, or kNoncommutingPair when the
/// only complex candidates found had [Y1, Y2] != 0.
SubalgebraWitness find_ax_b_or_grelaud(const LieAlgebra& g, const SearchOptions& options = {});

struct TemplateReport {
  double closure_residual = 0.0;
  double template_residual = 0.0;
  /// Max deviation of the template relations; closure only gates.
  double residual = 0.0;
};

/// Throws kNotClosed if the span is not bracket-closed and
/// kTemplateMismatch if the bracket table differs from the template.
TemplateReport verify_subalgebra_template(const LieAlgebra& g, const std::vector<LieVector>& generators,
                                          WitnessKind kind, double beta = 0.0);

}  // namespace ftatlas
