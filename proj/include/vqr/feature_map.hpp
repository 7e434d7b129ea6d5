#pragma once

#include <cstdint>
#include <optional>

#include "vqr/circuit.hpp"
#include "vqr/entanglement.hpp"

namespace vqr {

enum class FeatureMapKind { ZFeatureMap, ZZFeatureMap };

// Encoding circuit description.  The Z map takes no entanglement strategy;
// the ZZ map defaults to full when none is given.
struct FeatureMapSpec {
  FeatureMapKind kind = FeatureMapKind::ZFeatureMap;
  int num_qubits = 2;
  int reps = 2;
  std::optional<EntanglementStrategy> entanglement;

  void validate() const;
  EntanglementStrategy entanglement_or_default() const {
    return entanglement.value_or(EntanglementStrategy::Full);
  }
};

// Per repetition: H on every qubit, then P(2 x_i) on qubit i.  Declares the
// n encoding parameters x0..x{n-1} and nothing trainable.
Circuit build_z_feature_map(const FeatureMapSpec& spec);

// Per repetition r: the Z layer, then for each pair (i, j) of the strategy
// at r: CX(i,j), P(2 (pi - x_i)(pi - x_j)) on j, CX(i,j).
Circuit build_zz_feature_map(const FeatureMapSpec& spec);

Circuit build_feature_map(const FeatureMapSpec& spec);

// Computational basis state |binary(value)> on n qubits (value < 2^n).
Statevector basis_encode(std::uint64_t value, int num_qubits);

}  // namespace vqr
