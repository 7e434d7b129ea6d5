#pragma once

#include <utility>
#include <vector>

namespace vqr {

enum class EntanglementStrategy { Full, Linear, Circular, Pairwise, Sca };

using QubitPair = std::pair<int, int>;  // (control, target)

// Ordered (control, target) pairs receiving a two-qubit gate in repetition
// `rep_index` of a layered circuit:
//   full      all (i, j) with i < j, lexicographic
//   linear    (i, i+1) for i in [0, n-2]
//   circular  the wrap pair (n-1, 0) followed by the linear chain
//   pairwise  even reps (0,1),(2,3),...; odd reps (1,2),(3,4),...
//   sca       circular with control/target swapped on odd reps, and the wrap
//             pair shifted forward by rep_index positions (mod n)
std::vector<QubitPair> entanglement_pairs(int num_qubits,
                                          EntanglementStrategy strategy,
                                          int rep_index);

}  // namespace vqr
