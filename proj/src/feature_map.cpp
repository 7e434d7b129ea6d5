#include "vqr/feature_map.hpp"

#include <numbers>
#include <stdexcept>
#include <string>

namespace vqr {

namespace {

constexpr double kPi = std::numbers::pi;

// Declares x0..x{n-1} and emits one H + P(2 x_i) layer.
void add_z_layer(Circuit& circuit, const std::vector<int>& params) {
  const int n = circuit.num_qubits();
  for (int q = 0; q < n; ++q) {
    circuit.add_h(q);
  }
  for (int q = 0; q < n; ++q) {
    circuit.add_rotation(GateKind::P, q,
                         AngleExpr::linear(params[static_cast<std::size_t>(q)], 2.0));
  }
}

std::vector<int> declare_encoding_params(Circuit& circuit) {
  std::vector<int> params;
  params.reserve(static_cast<std::size_t>(circuit.num_qubits()));
  for (int q = 0; q < circuit.num_qubits(); ++q) {
    params.push_back(
        circuit.declare_parameter("x" + std::to_string(q), ParamRole::Encoding));
  }
  return params;
}

}  // namespace

void FeatureMapSpec::validate() const {
  if (num_qubits < 1) {
    throw std::invalid_argument("feature map needs at least one qubit");
  }
  if (reps < 1) {
    throw std::invalid_argument("feature map reps must be >= 1");
  }
  if (kind == FeatureMapKind::ZFeatureMap && entanglement.has_value()) {
    throw std::invalid_argument(
        "the Z feature map carries no entanglement strategy");
  }
  if (kind == FeatureMapKind::ZZFeatureMap && num_qubits < 2) {
    throw std::invalid_argument("the ZZ feature map needs at least 2 qubits");
  }
}

Circuit build_z_feature_map(const FeatureMapSpec& spec) {
  spec.validate();
  if (spec.kind != FeatureMapKind::ZFeatureMap) {
    throw std::invalid_argument("spec is not a Z feature map");
  }
  Circuit circuit(spec.num_qubits);
  const std::vector<int> params = declare_encoding_params(circuit);
  for (int r = 0; r < spec.reps; ++r) {
    add_z_layer(circuit, params);
  }
  return circuit;
}

Circuit build_zz_feature_map(const FeatureMapSpec& spec) {
  spec.validate();
  if (spec.kind != FeatureMapKind::ZZFeatureMap) {
    throw std::invalid_argument("spec is not a ZZ feature map");
  }
  Circuit circuit(spec.num_qubits);
  const std::vector<int> params = declare_encoding_params(circuit);
  const EntanglementStrategy strategy = spec.entanglement_or_default();
  for (int r = 0; r < spec.reps; ++r) {
    add_z_layer(circuit, params);
    for (const auto& [i, j] : entanglement_pairs(spec.num_qubits, strategy, r)) {
      circuit.add_cx(i, j);
      circuit.add_rotation(
          GateKind::P, j,
          AngleExpr::affine_product(2.0,
                                    {params[static_cast<std::size_t>(i)], kPi, -1.0},
                                    {params[static_cast<std::size_t>(j)], kPi, -1.0}));
      circuit.add_cx(i, j);
    }
  }
  return circuit;
}

Circuit build_feature_map(const FeatureMapSpec& spec) {
  return spec.kind == FeatureMapKind::ZFeatureMap ? build_z_feature_map(spec)
                                                  : build_zz_feature_map(spec);
}

Statevector basis_encode(std::uint64_t value, int num_qubits) {
  return Statevector(num_qubits, value);
}

}  // namespace vqr
