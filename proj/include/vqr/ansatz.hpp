#pragma once

#include <cstdint>
#include <optional>

#include "vqr/circuit.hpp"
#include "vqr/entanglement.hpp"

namespace vqr {

enum class AnsatzKind { EfficientSU2, TwoLocal, RealAmplitudes, PauliTwoDesign };

// Trainable circuit description.  PauliTwoDesign takes no entanglement
// strategy and draws its rotation axes from `seed`; the others default to
// full entanglement.  The TwoLocal rotation/entangling gates are
// configurable and default to RY/CX, which reproduces RealAmplitudes.
struct AnsatzSpec {
  AnsatzKind kind = AnsatzKind::RealAmplitudes;
  int num_qubits = 2;
  int reps = 3;
  std::optional<EntanglementStrategy> entanglement;
  std::uint64_t seed = 0;
  GateKind two_local_rotation = GateKind::RY;
  GateKind two_local_entangler = GateKind::CX;

  void validate() const;
  EntanglementStrategy entanglement_or_default() const {
    return entanglement.value_or(EntanglementStrategy::Full);
  }
};

// Number of trainable parameters the built circuit will declare:
// n*(reps+1) for all kinds except EfficientSU2, which uses 2n*(reps+1).
int ansatz_parameter_count(const AnsatzSpec& spec);

Circuit build_ansatz(const AnsatzSpec& spec);

}  // namespace vqr
