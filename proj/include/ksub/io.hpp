#pragma once

#include <iosfwd>
#include <string>

#include "ksub/cost_table.hpp"
#include "ksub/vcsp.hpp"

namespace ksub {

// KSF format, one table per file:
//   ksub <n> <k> <pos|full>
//   <l1> ... <ln> <value>        one row per finite entry
// '#' starts a comment, blank lines are skipped, omitted rows mean +inf,
// duplicate labelings are rejected. Values are integers, fractions p/q,
// finite decimals, or the token inf (an explicit +inf row).
CostTable parse_ksf(std::istream& in, std::uint64_t max_cells = kDefaultMaxCells);
std::string print_ksf(const CostTable& table);

// VCSP format:
//   vcsp <n_vars> <k> [pos|full]
//   constraint <r> <i1> ... <ir>
//   <rows as in KSF over the constraint's cube>
//   end
// The kind token defaults to pos and is only printed for relaxed (full)
// instances, so crisp files round-trip byte for byte.
VcspInstance parse_vcsp(std::istream& in, std::uint64_t max_cells = kDefaultMaxCells);
std::string print_vcsp(const VcspInstance& instance);

}  // namespace ksub
