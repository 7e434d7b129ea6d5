#include "vqr/ansatz.hpp"

#include <numbers>
#include <stdexcept>
#include <string>

#include "vqr/rng.hpp"

namespace vqr {

namespace {

int declare_theta(Circuit& circuit) {
  return circuit.declare_parameter(
      "theta" + std::to_string(circuit.parameter_count()), ParamRole::Trainable);
}

void add_rotation_layer(Circuit& circuit, GateKind kind) {
  for (int q = 0; q < circuit.num_qubits(); ++q) {
    circuit.add_rotation(kind, q, AngleExpr::linear(declare_theta(circuit)));
  }
}

void add_entanglement_layer(Circuit& circuit, GateKind entangler,
                            EntanglementStrategy strategy, int rep) {
  if (circuit.num_qubits() < 2) {
    return;  // nothing to entangle on a single qubit
  }
  for (const auto& [c, t] :
       entanglement_pairs(circuit.num_qubits(), strategy, rep)) {
    if (entangler == GateKind::CX) {
      circuit.add_cx(c, t);
    } else {
      circuit.add_cz(c, t);
    }
  }
}

// reps x [one-rotation-per-qubit layer + entanglement] + final rotation layer.
Circuit build_layered(const AnsatzSpec& spec, GateKind rotation,
                      GateKind entangler) {
  Circuit circuit(spec.num_qubits);
  for (int r = 0; r < spec.reps; ++r) {
    add_rotation_layer(circuit, rotation);
    add_entanglement_layer(circuit, entangler, spec.entanglement_or_default(), r);
  }
  add_rotation_layer(circuit, rotation);
  return circuit;
}

Circuit build_efficient_su2(const AnsatzSpec& spec) {
  Circuit circuit(spec.num_qubits);
  for (int r = 0; r < spec.reps; ++r) {
    add_rotation_layer(circuit, GateKind::RY);
    add_rotation_layer(circuit, GateKind::RZ);
    add_entanglement_layer(circuit, GateKind::CX, spec.entanglement_or_default(),
                           r);
  }
  add_rotation_layer(circuit, GateKind::RY);
  add_rotation_layer(circuit, GateKind::RZ);
  return circuit;
}

Circuit build_pauli_two_design(const AnsatzSpec& spec) {
  Circuit circuit(spec.num_qubits);
  Rng rng(spec.seed);
  const GateKind axes[3] = {GateKind::RX, GateKind::RY, GateKind::RZ};

  for (int q = 0; q < spec.num_qubits; ++q) {
    circuit.add_rotation(GateKind::RY, q,
                         AngleExpr::literal(std::numbers::pi / 4));
  }
  auto add_seeded_layer = [&] {
    for (int q = 0; q < spec.num_qubits; ++q) {
      const GateKind axis = axes[rng.bounded(3)];
      circuit.add_rotation(axis, q, AngleExpr::linear(declare_theta(circuit)));
    }
  };
  for (int r = 0; r < spec.reps; ++r) {
    add_seeded_layer();
    if (spec.num_qubits >= 2) {
      // CZ ladder alternating between the even and odd pairings.
      const int start = (r % 2 == 0) ? 0 : 1;
      for (int q = start; q + 1 < spec.num_qubits; q += 2) {
        circuit.add_cz(q, q + 1);
      }
    }
  }
  add_seeded_layer();
  return circuit;
}

}  // namespace

void AnsatzSpec::validate() const {
  if (num_qubits < 1) {
    throw std::invalid_argument("ansatz needs at least one qubit");
  }
  if (reps < 1) {
    throw std::invalid_argument("ansatz reps must be >= 1");
  }
  if (kind == AnsatzKind::PauliTwoDesign && entanglement.has_value()) {
    throw std::invalid_argument(
        "PauliTwoDesign takes no entanglement strategy");
  }
  if (kind == AnsatzKind::TwoLocal) {
    if (two_local_rotation != GateKind::RX &&
        two_local_rotation != GateKind::RY &&
        two_local_rotation != GateKind::RZ) {
      throw std::invalid_argument("TwoLocal rotation must be rx, ry or rz");
    }
    if (two_local_entangler != GateKind::CX &&
        two_local_entangler != GateKind::CZ) {
      throw std::invalid_argument("TwoLocal entangler must be cx or cz");
    }
  }
}

int ansatz_parameter_count(const AnsatzSpec& spec) {
  spec.validate();
  const int per_layer =
      (spec.kind == AnsatzKind::EfficientSU2) ? 2 * spec.num_qubits
                                              : spec.num_qubits;
  return per_layer * (spec.reps + 1);
}

Circuit build_ansatz(const AnsatzSpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case AnsatzKind::RealAmplitudes:
      return build_layered(spec, GateKind::RY, GateKind::CX);
    case AnsatzKind::TwoLocal:
      return build_layered(spec, spec.two_local_rotation,
                           spec.two_local_entangler);
    case AnsatzKind::EfficientSU2:
      return build_efficient_su2(spec);
    case AnsatzKind::PauliTwoDesign:
      return build_pauli_two_design(spec);
  }
  throw std::invalid_argument("unknown ansatz kind");
}

}  // namespace vqr
