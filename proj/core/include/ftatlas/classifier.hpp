#pragma once

// Rule cascade deciding whether a described locally compact group admits
// a frame of left translates (FT), with the chain of results used.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ftatlas/lie_algebra.hpp"
#include "ftatlas/matrix_groups.hpp"
#include "ftatlas/subalgebra.hpp"

namespace ftatlas {

enum class FtStatus { kFT, kNotFT, kOpen, kUnknown };

std::string_view ft_status_name(FtStatus status) noexcept;

struct GroupFlags {
  bool discrete = false;
  bool compact = false;
  bool finite = false;
  bool abelian = false;
  bool simply_connected = false;
  bool connected = false;
  /// Conjugation-invariant compact identity neighborhood; an input, never
  /// computed.
  std::optional<bool> in_group;
};

/// A subalgebra whose subgroup is known from outside the search (explicit
/// matrices), together with whether its subgroup is known to be closed.
struct KnownSubgroup {
  SubalgebraWitness witness;
  bool closed = false;
  std::string justification;
};

struct GroupDescriptor {
  std::string name;
  /// Present exactly when the group is a connected Lie group.
  std::optional<LieAlgebra> algebra;
  GroupFlags flags;
  std::optional<KnownSubgroup> known_subgroup;
};

struct ChainEntry {
  std::string rule;
  std::string citation;
};

struct FtVerdict {
  FtStatus status = FtStatus::kUnknown;
  std::vector<ChainEntry> chain;
  std::optional<SubalgebraWitness> witness;
  /// Hypotheses the verdict depends on that were not verified.
  std::vector<std::string> assumptions;
  std::vector<std::string> notes;
};

struct ClassifyOptions {
  std::uint64_t seed = 0;
  int trials = 64;
  int root_retries = 32;
};

/// First matching rule wins:
///  1 discrete -> FT;  2 compact, nondiscrete -> NOT_FT;
///  3 [IN], nondiscrete -> NOT_FT;  4 abelian, nondiscrete -> NOT_FT;
///  5 exponential solvable, not nilpotent -> FT with an ax+b/Grelaud witness;
///  6 nilpotent, nonabelian, simply connected, connected -> OPEN;
///  7 non-solvable with an ax+b/Grelaud subalgebra -> FT (closedness of the
///    witness subgroup recorded as an assumption unless known);
///  8 otherwise UNKNOWN.
/// Throws kInconsistentFlags.
FtVerdict classify(const GroupDescriptor& descriptor, const ClassifyOptions& options = {});

/// Builds one of the matrix examples (sl2, so_p1, so_pq, shearlet_H, T_n)
/// and classifies it. sl2 and so(p,q) carry their explicit ax+b pair.
/// Throws kBadParams or kUnknownName.
FtVerdict classify_matrix_example(const std::string& name, const BuiltinParams& params = {},
                                  const ClassifyOptions& options = {});

/// Descriptor for the simply connected group of an algebra, with the
/// abelian flag read from the brackets.
GroupDescriptor simply_connected_descriptor(std::string name, LieAlgebra algebra);
/// Descriptor for a finite (hence discrete and compact) group.
GroupDescriptor finite_group_descriptor(std::string name, bool abelian);

}  // namespace ftatlas
