// Copyright 2026 The qss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact simulation of quantum secret sharing built from span programs.
//
// A basis state |s> is encoded as |K|^{-(e-1)/2} sum_a |M (s, a)^T>, one
// qudit per row of M. Encoding and reconstruction are linear bijections on
// basis labels, so states are kept as sparse label -> amplitude maps and no
// gate-level unitaries are ever formed. Reduced states are dense Eigen
// matrices.

#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qss/classical.hpp"
#include "qss/msp.hpp"
#include "qss/report.hpp"
#include "qss/structures.hpp"

namespace qss {

using Amplitude = std::complex<double>;

inline constexpr double kAcceptTolerance = 1e-9;
inline constexpr double kInternalTolerance = 1e-12;
// Upper bound on the stored amplitudes |K|^e of an encoded state. The full
// space |K|^d only has to fit a 64-bit label.
inline constexpr std::uint64_t kMaxStateDimension = 2'000'000;
// Upper bound on the side of a dense reduced state.
inline constexpr std::uint64_t kMaxReducedDimension = 4096;

// Pure state over qudits of the given dimensions. Labels pack the digits in
// mixed radix with coordinate 0 most significant.
class QuantumState {
 public:
  using Label = std::uint64_t;

  // Throws qss::Error on labels out of range or a squared norm that differs
  // from 1 by more than kInternalTolerance.
  QuantumState(std::vector<std::uint32_t> dims, std::map<Label, Amplitude> amplitudes);
  // Rescales to unit norm first; throws on the zero vector.
  static QuantumState normalized(std::vector<std::uint32_t> dims,
                                 std::map<Label, Amplitude> amplitudes);
  static QuantumState basis(std::vector<std::uint32_t> dims, std::span<const std::uint32_t> digits);
  // One qudit of dimension amplitudes.size(); normalized on construction.
  static QuantumState qudit(std::span<const Amplitude> amplitudes);

  const std::vector<std::uint32_t>& dims() const noexcept { return dims_; }
  std::size_t coordinates() const noexcept { return dims_.size(); }
  std::uint64_t dimension() const noexcept { return dimension_; }
  const std::map<Label, Amplitude>& amplitudes() const noexcept { return amplitudes_; }
  Amplitude amplitude(std::span<const std::uint32_t> digits) const;

  Label pack(std::span<const std::uint32_t> digits) const;
  std::vector<std::uint32_t> unpack(Label label) const;
  double norm_squared() const;

 private:
  std::vector<std::uint32_t> dims_;
  std::uint64_t dimension_;
  std::map<Label, Amplitude> amplitudes_;
};

class DensityMatrix {
 public:
  // Throws qss::Error unless the matrix is square with side prod(dims),
  // Hermitian and of unit trace within kInternalTolerance.
  DensityMatrix(std::vector<std::uint32_t> dims, Eigen::MatrixXcd matrix);
  static DensityMatrix projector(const QuantumState& psi);

  const std::vector<std::uint32_t>& dims() const noexcept { return dims_; }
  std::size_t dimension() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }
  const Eigen::MatrixXcd& matrix() const noexcept { return matrix_; }

  Eigen::VectorXd eigenvalues() const;
  bool is_positive_semidefinite(double tolerance = kInternalTolerance) const;
  // Number of eigenvalues above the tolerance.
  std::size_t rank(double tolerance = kAcceptTolerance) const;

 private:
  std::vector<std::uint32_t> dims_;
  Eigen::MatrixXcd matrix_;
};

// Reduced state on the coordinates in `keep`, in the given order.
// Throws qss::Error if the kept side exceeds kMaxReducedDimension.
DensityMatrix partial_trace(const QuantumState& state, std::span<const std::size_t> keep);

// <psi| rho |psi>. Throws qss::Error on mismatched dimensions.
double fidelity(const DensityMatrix& rho, const QuantumState& psi);
// Half the sum of absolute eigenvalues of r1 - r2.
double trace_distance(const DensityMatrix& r1, const DensityMatrix& r2);

// Largest pairwise trace distance, or a certified upper bound on it. Pairs
// whose bound sqrt(dim) * ||r_i - r_j||_F / 2 is already below
// kInternalTolerance are not diagonalized; all others are computed exactly.
double max_pairwise_trace_distance(std::span<const DensityMatrix> states);

struct EncodedState {
  QuantumState state;  // one qudit per row of the program
  SpanProgram program;
};

// Throws qss::Error if the input is not a single qudit of dimension p or if
// p^e exceeds kMaxStateDimension.
EncodedState qencode(const SpanProgram& msp, const QuantumState& secret);

// Applies b -> U b to the qudits of the rows in plan.kept_rows. Afterwards the
// secret sits on qudit plan.kept_rows[0].
// Throws qss::Error if the plan does not fit the encoded program.
QuantumState apply_plan(const EncodedState& enc, const ReconstructionPlan& plan);

// Inputs probed by the verifiers: every basis state, the uniform
// superposition, and `random_count` Gaussian random states.
struct TestFamily {
  std::vector<QuantumState> states;
  std::vector<std::string> names;
  std::uint64_t seed;
};
TestFamily make_test_family(std::uint32_t dimension, std::uint64_t seed, std::size_t random_count = 20);

struct ErasureReport {
  bool applicable = false;
  std::string reason;  // why the set is not applicable
  Report report{"erasure"};
  double min_fidelity = 0.0;
  double max_trace_distance = 0.0;
  std::size_t max_schmidt_rank = 0;

  bool pass() const { return applicable && report.passed(); }
};

// Encodes every family member, erases b, recovers with the plan for b and
// compares; also compares the reduced states of b across all inputs.
ErasureReport verify_erasure(const SpanProgram& msp, PlayerSet b, const TestFamily& family);

// Pure-state scheme for a self-dual structure.
class PureScheme {
 public:
  // Throws qss::Error if the structure of msp is not self-dual.
  explicit PureScheme(SpanProgram msp);

  const SpanProgram& program() const noexcept { return msp_; }
  const AdversaryStructure& structure() const noexcept { return structure_; }

  EncodedState encode(const QuantumState& secret) const;
  // Reduced state of the recovered secret qudit, using only the shares of q.
  // Throws qss::Error if q is not qualified.
  DensityMatrix recover(const EncodedState& enc, PlayerSet qualified) const;
  Report verify_all(const TestFamily& family) const;

 private:
  SpanProgram msp_;
  AdversaryStructure structure_;
  std::map<PlayerSet, ReconstructionPlan> plans_;
};

PureScheme qss_pure(const SpanProgram& msp);

// A mixed-state encoding: the purification over all rows of the extended
// program, of which the rows of the extra player are discarded.
struct MixedEncoding {
  EncodedState purified;
  std::vector<std::size_t> discarded_rows;
};

// Mixed-state scheme for a Q2* structure: extend to a self-dual structure
// with one extra player (n+1), share with a pure scheme for the extension and
// discard the extra player's shares.
class MixedScheme {
 public:
  // Throws qss::Error if the structure of msp is not Q2*.
  explicit MixedScheme(SpanProgram msp);

  const SpanProgram& program() const noexcept { return msp_; }
  const SpanProgram& extended_program() const noexcept { return extended_; }
  const AdversaryStructure& structure() const noexcept { return structure_; }

  MixedEncoding encode(const QuantumState& secret) const;
  // Throws qss::Error if q is not a qualified subset of the original players.
  DensityMatrix recover(const MixedEncoding& enc, PlayerSet qualified) const;
  // Reduced state held by b, a subset of the original players.
  DensityMatrix view(const MixedEncoding& enc, PlayerSet b) const;
  Report verify_all(const TestFamily& family) const;

 private:
  SpanProgram msp_;
  SpanProgram extended_;
  AdversaryStructure structure_;
};

MixedScheme qss_mixed(const SpanProgram& msp);

}  // namespace qss
