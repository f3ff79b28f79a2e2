// Copyright 2026 The Anticart Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "anticart/protocols.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "anticart/error.hpp"
#include "anticart/random.hpp"

namespace anticart {

namespace {

const TypeTable kQudit{"q"};
const WireType kWire{"q", 0};

std::string pauli_ref(int branch) { return "pauli/" + std::to_string(branch); }
std::string pauli_inv_ref(int branch) { return "pauli_inv/" + std::to_string(branch); }

std::vector<Complex> adjoint(const std::vector<Complex>& m, int dim) {
  std::vector<Complex> out(m.size());
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      out[static_cast<size_t>(j) * dim + i] = std::conj(m[static_cast<size_t>(i) * dim + j]);
    }
  }
  return out;
}

// out[c] = sum_a in[a] * t[a][c] for a [dim, dim] box tensor.
std::vector<Complex> apply(const Tensor& t, const std::vector<Complex>& in) {
  const size_t dim = in.size();
  auto values = t.values();
  std::vector<Complex> out(dim, Complex(0.0));
  for (size_t a = 0; a < dim; ++a) {
    for (size_t c = 0; c < dim; ++c) out[c] += in[a] * values[a * dim + c];
  }
  return out;
}

double norm2(const std::vector<Complex>& v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return s;
}

std::vector<Complex> random_unit_vector(int dim, Rng& rng) {
  auto v = random_tensor({dim}, rng).data();
  const double n = std::sqrt(norm2(v));
  for (auto& x : v) x /= n;
  return v;
}

}  // namespace

void TeleportationSpec::check() const {
  if (dim < 2) throw FormatError("teleportation needs dim >= 2");
  const int branches = dim * dim;
  if (branch < 0 || branch >= branches) throw FormatError("branch out of range");
  if (correction_branch && (*correction_branch < 0 || *correction_branch >= branches)) {
    throw FormatError("correction branch out of range");
  }
}

std::vector<Complex> generalized_pauli(int dim, int p, int q) {
  const double angle = 2.0 * std::numbers::pi / dim;
  std::vector<Complex> m(static_cast<size_t>(dim) * dim, Complex(0.0));
  for (int j = 0; j < dim; ++j) {
    const int i = (j + p) % dim;
    m[static_cast<size_t>(i) * dim + j] = std::polar(1.0, angle * ((q * j) % dim));
  }
  return m;
}

Diagram teleportation_diagram(const TeleportationSpec& spec) {
  spec.check();
  DiagramBuilder b(kQudit, {kWire}, {kWire});
  const int undo = b.add(Generator::box("pauli_inv[" + std::to_string(spec.branch) + "]", {kWire},
                                        {kWire}, pauli_inv_ref(spec.branch)));
  const int cup = b.add(Generator::cup("q", 0));
  const int cap = b.add(Generator::cap("q", 0));
  b.add(Generator::box("bell_norm", {}, {}, "bell_norm"));
  b.add(Generator::box("bell_norm", {}, {}, "bell_norm"));
  b.connect({kBoundary, 0}, {undo, 0});
  b.connect({undo, 0}, {cap, 0});
  b.connect({cup, 0}, {cap, 1});
  if (spec.corrected) {
    const int fix = spec.correction_branch.value_or(spec.branch);
    const int correction = b.add(Generator::box("pauli[" + std::to_string(fix) + "]", {kWire},
                                                {kWire}, pauli_ref(fix)));
    b.connect({cup, 1}, {correction, 0});
    b.connect({correction, 0}, {kBoundary, 0});
  } else {
    b.connect({cup, 1}, {kBoundary, 0});
  }
  return b.build();
}

Diagram teleportation_skeleton(int dim) {
  if (dim < 1) throw FormatError("dimension must be positive");
  Diagram wire = Diagram::identity(kQudit, {kWire});
  Diagram bottom = compose_par(wire, bend(kQudit, "q", 0, Bend::Cup));
  Diagram top = compose_par(bend(kQudit, "q", 0, Bend::Cap), wire);
  return compose_seq(bottom, top);
}

Model teleportation_model(int dim) {
  Model m;
  m.dims["q"] = dim;
  m.payloads.emplace("bell_norm", Tensor::scalar_value(1.0 / std::sqrt(static_cast<double>(dim))));
  for (int p = 0; p < dim; ++p) {
    for (int q = 0; q < dim; ++q) {
      const int branch = p * dim + q;
      auto pauli = generalized_pauli(dim, p, q);
      m.payloads.emplace(pauli_ref(branch), Tensor::from_matrix(dim, pauli));
      m.payloads.emplace(pauli_inv_ref(branch), Tensor::from_matrix(dim, adjoint(pauli, dim)));
    }
  }
  return m;
}

Diagram simplify_identity_payloads(const Diagram& d, const Model& model, double tolerance) {
  std::vector<Generator> nodes = d.nodes();
  for (auto& g : nodes) {
    if (g.kind != GeneratorKind::Box || !g.payload || g.dom.size() != 1 || g.cod != g.dom) continue;
    auto it = model.payloads.find(*g.payload);
    if (it == model.payloads.end()) continue;
    const int dim = model.dim(g.dom[0].base);
    if (it->second.shape() != std::vector<int>{dim, dim}) continue;
    Tensor value = g.conjugate ? it->second.conj() : it->second;
    if (max_abs_diff(value, Tensor::identity(dim)) <= tolerance) g = Generator::identity(g.dom[0]);
  }
  return canonicalize(Diagram::from_raw(d.types(), std::move(nodes), d.edges(), d.inputs(), d.outputs()));
}

std::vector<BranchReport> teleportation_reports(int dim, int trials, const TeleportOptions& options) {
  if (dim < 2) throw FormatError("teleportation needs dim >= 2");
  if (trials < 1) throw FormatError("at least one trial is required");
  const int branches = dim * dim;
  if (!options.correction.empty() && static_cast<int>(options.correction.size()) != branches) {
    throw FormatError("correction map needs one entry per branch");
  }
  const Model model = teleportation_model(dim);
  Rng rng(options.seed);
  std::vector<std::vector<Complex>> inputs;
  for (int t = 0; t < trials; ++t) inputs.push_back(random_unit_vector(dim, rng));

  const double expected = 1.0 / branches;
  std::vector<BranchReport> reports;
  for (int b = 0; b < branches; ++b) {
    TeleportationSpec raw{dim, b, false, std::nullopt};
    TeleportationSpec fixed{dim, b, true, std::nullopt};
    if (!options.correction.empty()) fixed.correction_branch = options.correction[b];
    const Tensor uncorrected = evaluate(teleportation_diagram(raw), model);
    const Tensor corrected = evaluate(teleportation_diagram(fixed), model);

    BranchReport report{b, 1.0, 0.0, 0.0};
    for (const auto& psi : inputs) {
      const double p = norm2(apply(uncorrected, psi)) / norm2(psi);
      report.probability += p / trials;
      report.max_probability_deviation =
          std::max(report.max_probability_deviation, std::abs(p - expected));
      const auto out = apply(corrected, psi);
      Complex overlap = 0.0;
      for (int c = 0; c < dim; ++c) overlap += std::conj(psi[c]) * out[c];
      const double out_norm = norm2(out);
      const double fidelity = out_norm > 0.0 ? std::norm(overlap) / (norm2(psi) * out_norm) : 0.0;
      report.fidelity = std::min(report.fidelity, fidelity);
    }
    reports.push_back(report);
  }
  return reports;
}

std::vector<BranchReport> verify_teleportation(int dim, int trials, double tolerance,
                                               const TeleportOptions& options) {
  auto reports = teleportation_reports(dim, trials, options);
  double total = 0.0;
  for (const auto& r : reports) {
    total += r.probability;
    if (1.0 - r.fidelity > tolerance) {
      throw VerificationFailure("branch " + std::to_string(r.branch) + ": fidelity deviates by " +
                                std::to_string(1.0 - r.fidelity));
    }
    if (r.max_probability_deviation > tolerance) {
      throw VerificationFailure("branch " + std::to_string(r.branch) +
                                ": probability deviates by " +
                                std::to_string(r.max_probability_deviation));
    }
  }
  if (std::abs(total - 1.0) > tolerance) {
    throw VerificationFailure("branch probabilities sum to " + std::to_string(total));
  }
  return reports;
}

CompositionDemo sophisticated_composition_demo(int dim, std::uint64_t seed, bool product_instead_of_cup) {
  if (dim < 1) throw FormatError("dimension must be positive");
  const WireType dual = kWire.left();
  auto state = [](const std::string& ref, const WireType& w) {
    return make_generator(kQudit, ref, {}, {w}, ref);
  };
  auto wires = [](const TypeList& t) { return Diagram::identity(kQudit, t); };
  const Diagram cup = bend(kQudit, "q", 0, Bend::Cup);
  const Diagram cap = bend(kQudit, "q", 0, Bend::Cap);
  const Diagram pi = make_generator(kQudit, "pi", {kWire, kWire}, {kWire, kWire}, "pi");
  const Diagram rho = state("rho", kWire);
  const Diagram rho1 = state("rho'", kWire);
  const Diagram rho2 = state("rho''", kWire);
  const Diagram second_cup =
      product_instead_of_cup ? compose_par(state("stray_a", dual), state("stray_b", kWire)) : cup;

  // bottom wires: rho, q.L, q, rho', q.L, q, rho''
  Diagram bottom = compose_par(compose_par(compose_par(compose_par(rho, cup), rho1), second_cup), rho2);
  Diagram top = compose_par(compose_par(cap, pi), wires({dual, kWire, kWire}));
  top = compose_seq(top, compose_par(compose_par(wires({kWire}), cap), wires({kWire, kWire})));

  CompositionDemo demo;
  demo.before = compose_seq(bottom, top);
  demo.after = compose_par(compose_seq(compose_par(rho, rho1), pi), rho2);

  Rng rng(seed);
  demo.model.dims["q"] = dim;
  for (const char* ref : {"rho", "rho'", "rho''", "stray_a", "stray_b"}) {
    demo.model.payloads.emplace(ref, Tensor({dim}, random_unit_vector(dim, rng)));
  }
  const int joint = dim * dim;
  demo.model.payloads.emplace(
      "pi", Tensor::from_matrix(joint, random_unitary(joint, rng)).reshaped({dim, dim, dim, dim}));
  return demo;
}

}  // namespace anticart
