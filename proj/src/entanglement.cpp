#include "vqr/entanglement.hpp"

#include <stdexcept>
#include <string>

namespace vqr {

std::vector<QubitPair> entanglement_pairs(int num_qubits,
                                          EntanglementStrategy strategy,
                                          int rep_index) {
  if (num_qubits < 2) {
    throw std::invalid_argument("entanglement needs at least 2 qubits, got " +
                                std::to_string(num_qubits));
  }
  if (rep_index < 0) {
    throw std::invalid_argument("repetition index must be non-negative");
  }
  const int n = num_qubits;
  std::vector<QubitPair> pairs;

  switch (strategy) {
    case EntanglementStrategy::Full:
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          pairs.emplace_back(i, j);
        }
      }
      return pairs;

    case EntanglementStrategy::Linear:
      for (int i = 0; i + 1 < n; ++i) {
        pairs.emplace_back(i, i + 1);
      }
      return pairs;

    case EntanglementStrategy::Circular:
      pairs.emplace_back(n - 1, 0);
      for (int i = 0; i + 1 < n; ++i) {
        pairs.emplace_back(i, i + 1);
      }
      return pairs;

    case EntanglementStrategy::Pairwise: {
      const int start = (rep_index % 2 == 0) ? 0 : 1;
      for (int i = start; i + 1 < n; i += 2) {
        pairs.emplace_back(i, i + 1);
      }
      return pairs;
    }

    case EntanglementStrategy::Sca: {
      pairs = entanglement_pairs(n, EntanglementStrategy::Circular, 0);
      if (rep_index % 2 == 1) {
        for (QubitPair& p : pairs) {
          std::swap(p.first, p.second);
        }
      }
      // The wrap pair starts the list; shift it forward by rep positions.
      const int shift = rep_index % static_cast<int>(pairs.size());
      const QubitPair wrap = pairs.front();
      pairs.erase(pairs.begin());
      pairs.insert(pairs.begin() + shift, wrap);
      return pairs;
    }
  }
  throw std::invalid_argument("unknown entanglement strategy");
}

}  // namespace vqr
