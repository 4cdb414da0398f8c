// Copyright 2026 The desq authors
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

#ifndef DESQ_REUPLOAD_HPP
#define DESQ_REUPLOAD_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "desq/circuit.hpp"

namespace desq::reupload {

enum class Family { FOURIER, UAT, CLASSIFIER_U3, ANSATZ_A };
enum class Entangling { NONE, CZ_ALTERNATING };

Family family_from_name(const std::string& name);
const char* family_name(Family family);

/// A data re-uploading circuit: `layers` repetitions of the family's
/// fundamental gate on every qubit, the data point injected linearly into
/// the rotation angles each time.
struct ReuploadModel {
  Family family = Family::UAT;
  int n_qubits = 1;
  int layers = 1;
  Entangling entangling = Entangling::NONE;
  int data_dim = 1;
  std::vector<double> params;  // layer-major, then qubit, then gate layout

  /// CLASSIFIER_U3 splits points with more than three features over
  /// ceil(d/3) sub-gates per layer.
  int split_factor() const;
  int params_per_site() const;  // one qubit, one layer
  int param_count() const;
  void randomize(uint64_t seed, double scale = M_PI);

  std::string to_json() const;
  static ReuploadModel from_json(const std::string& text);
};

/// Where one model parameter lands in the built circuit: gate angle =
/// ... + coeff * param + ...; a parameter may own several sites only in the
/// FOURIER family (alpha and beta enter two z-rotations).
struct ParamSite {
  int op_index = 0;
  int param_pos = 0;
  double coeff = 1.0;
};

struct BuiltModel {
  Circuit circuit;
  std::vector<std::vector<ParamSite>> sites;  // indexed by model parameter
};

/// Builds the circuit for one data point. Consecutive z-rotations on the
/// same wire are fused (the parameters keep their identity through `sites`).
BuiltModel build_model_circuit(const ReuploadModel& model,
                               const std::vector<double>& x);

/// Output state from |0..0> (or |+> on every qubit when plus_start is set,
/// used by the X-Y regression benchmark).
StateVector model_state(const ReuploadModel& model, const std::vector<double>& x,
                        bool plus_start = false);

// ---------------------------------------------------------------------------
// Regression benchmarks

/// Named 1D targets on [-1,1]: relu, tanh5, step, poly; 2D targets on
/// [-5,5]^2: himmelblau, brent, threehump, adjiman (affinely rescaled into
/// [-1,1] over a fixed 201x201 grid).
double target_function_raw(const std::string& name, const std::vector<double>& x);
double target_function(const std::string& name, const std::vector<double>& x);
bool target_is_2d(const std::string& name);

/// chi^2 = (1/M) sum (<Z(x_j)> - f_j)^2, exact expectations on qubit 0.
double z_benchmark_loss(const ReuploadModel& model,
                        const std::vector<std::vector<double>>& xs,
                        const std::vector<double>& targets);

/// chi^2 = (1/M) sum |<X> + i<Y> - z_j|^2 from the |+> start.
double xy_benchmark_loss(const ReuploadModel& model,
                         const std::vector<std::vector<double>>& xs,
                         const std::vector<cx>& targets);

// ---------------------------------------------------------------------------
// Classification

struct LabelSet {
  int classes = 2;
  std::vector<std::array<cx, 2>> states;      // single-qubit label states
  std::vector<std::vector<double>> overlap;   // Y[y][j] = |<phi_y|phi_j>|^2
};

/// Maximally separated single-qubit labels: antipodal pair, equatorial
/// triangle, tetrahedron or octahedron vertices (classes in {2, 3, 4, 6}).
LabelSet make_label_set(int classes);

struct LabeledDataset {
  std::string problem;
  int dim = 2;
  int classes = 2;
  std::vector<std::vector<double>> train_x;
  std::vector<int> train_y;
  std::vector<std::vector<double>> test_x;
  std::vector<int> test_y;

  std::string to_csv() const;
};

/// Problems: circle, 3circles, tricrown, crown, nonconvex, sphere,
/// hypersphere, squares, wavylines. Points uniform in [-1,1]^d with exact
/// geometric labels.
LabeledDataset make_dataset(const std::string& problem, int n_train, int n_test,
                            uint64_t seed);
int label_point(const std::string& problem, const std::vector<double>& x);
int problem_classes(const std::string& problem);
int problem_dim(const std::string& problem);

/// Per-class fidelities of the model output for one point: |<phi_j|psi>|^2
/// for a single qubit, <phi_j| rho_0 |phi_j> for multi-qubit models.
std::vector<double> label_fidelities(const ReuploadModel& model,
                                     const LabelSet& labels,
                                     const std::vector<double>& x);

/// sum over points of (1 - F_y^2).
double fidelity_cost(const ReuploadModel& model,
                     const std::vector<std::vector<double>>& xs,
                     const std::vector<int>& ys, const LabelSet& labels);

/// (1/2) sum_points sum_classes (alpha_j F_j - Y_yj)^2; multi-qubit models
/// take one alpha per (class, qubit) and sum the square over qubits.
double weighted_fidelity_cost(const ReuploadModel& model,
                              const std::vector<std::vector<double>>& xs,
                              const std::vector<int>& ys, const LabelSet& labels,
                              const std::vector<double>& alphas);

struct Classification {
  int label = 0;
  std::vector<double> fidelities;
  bool tie_broken = false;
};
Classification classify(const ReuploadModel& model, const LabelSet& labels,
                        const std::vector<double>& x);

/// Fraction of correct guesses; `lambda` activates the binary P(0) > lambda
/// rule (lambda = 1/2 recovers the plain comparison).
double accuracy(const ReuploadModel& model, const LabelSet& labels,
                const std::vector<std::vector<double>>& xs,
                const std::vector<int>& ys, double lambda = -1.0);

/// Best threshold over a grid, chosen on the given (validation) split.
double sweep_lambda(const ReuploadModel& model, const LabelSet& labels,
                    const std::vector<std::vector<double>>& xs,
                    const std::vector<int>& ys, int grid_points = 199);

// ---------------------------------------------------------------------------
// Gradients

struct LossSpec {
  enum class Kind { Z_BENCH, XY_BENCH, FIDELITY, WEIGHTED_FIDELITY } kind;
  const std::vector<std::vector<double>>* xs = nullptr;
  const std::vector<double>* z_targets = nullptr;
  const std::vector<cx>* xy_targets = nullptr;
  const std::vector<int>* ys = nullptr;
  const LabelSet* labels = nullptr;
  const std::vector<double>* alphas = nullptr;
};

double loss_value(const ReuploadModel& model, const LossSpec& loss);

/// d loss / d params[param_index] by the shift rule (two shifted circuit
/// evaluations per site, exact for these rotation generators). Throws for
/// parameters entering more than one gate; use gradient() for those.
double parameter_shift_grad(const ReuploadModel& model, const LossSpec& loss,
                            int param_index);

/// Full circuit-parameter gradient via the shift rule (handles multi-site
/// parameters by summing their sites).
std::vector<double> gradient(const ReuploadModel& model, const LossSpec& loss);

/// d loss / d alpha_j for the weighted fidelity cost (closed form).
std::vector<double> alpha_gradient(const ReuploadModel& model,
                                   const LossSpec& loss);

}  // namespace desq::reupload

#endif
