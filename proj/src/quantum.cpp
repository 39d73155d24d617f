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

#include "qss/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "qss/error.hpp"
#include "qss/rng.hpp"

namespace qss {

namespace {

constexpr std::uint64_t kLabelLimit = std::uint64_t{1} << 62;

std::uint64_t product_of(const std::vector<std::uint32_t>& dims) {
  std::uint64_t total = 1;
  for (std::uint32_t d : dims) {
    if (d == 0) throw Error("qudit dimension must be positive");
    if (total > kLabelLimit / d) throw Error("state space too large to label");
    total *= d;
  }
  return total;
}

std::vector<std::uint32_t> pick(const std::vector<std::uint32_t>& v, std::span<const std::size_t> idx) {
  std::vector<std::uint32_t> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(v[i]);
  return out;
}

// Mixed-radix index of the selected digits.
std::uint64_t index_of(const std::vector<std::uint32_t>& digits, const std::vector<std::uint32_t>& dims,
                       std::span<const std::size_t> coords) {
  std::uint64_t idx = 0;
  for (std::size_t c : coords) idx = idx * dims[c] + digits[c];
  return idx;
}

}  // namespace

QuantumState::QuantumState(std::vector<std::uint32_t> dims, std::map<Label, Amplitude> amplitudes)
    : dims_(std::move(dims)), dimension_(product_of(dims_)), amplitudes_(std::move(amplitudes)) {
  for (const auto& [label, amp] : amplitudes_) {
    if (label >= dimension_) throw Error("basis label out of range");
  }
  const double norm = norm_squared();
  if (std::abs(norm - 1.0) > kInternalTolerance) {
    throw Error("state is not normalized: squared norm " + format_number(norm));
  }
}

QuantumState QuantumState::normalized(std::vector<std::uint32_t> dims,
                                      std::map<Label, Amplitude> amplitudes) {
  double norm = 0.0;
  for (const auto& [label, amp] : amplitudes) norm += std::norm(amp);
  if (norm == 0.0) throw Error("cannot normalize the zero vector");
  const double scale = 1.0 / std::sqrt(norm);
  for (auto& [label, amp] : amplitudes) amp *= scale;
  return QuantumState(std::move(dims), std::move(amplitudes));
}

QuantumState QuantumState::basis(std::vector<std::uint32_t> dims, std::span<const std::uint32_t> digits) {
  if (digits.size() != dims.size()) throw Error("basis label has the wrong arity");
  Label label = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (digits[i] >= dims[i]) throw Error("basis digit out of range");
    label = label * dims[i] + digits[i];
  }
  return QuantumState(std::move(dims), {{label, Amplitude(1.0)}});
}

QuantumState QuantumState::qudit(std::span<const Amplitude> amplitudes) {
  std::map<Label, Amplitude> amps;
  for (std::size_t i = 0; i < amplitudes.size(); ++i) {
    if (amplitudes[i] != Amplitude(0.0)) amps[i] = amplitudes[i];
  }
  return normalized({static_cast<std::uint32_t>(amplitudes.size())}, std::move(amps));
}

Amplitude QuantumState::amplitude(std::span<const std::uint32_t> digits) const {
  const auto it = amplitudes_.find(pack(digits));
  return it == amplitudes_.end() ? Amplitude(0.0) : it->second;
}

QuantumState::Label QuantumState::pack(std::span<const std::uint32_t> digits) const {
  if (digits.size() != dims_.size()) throw Error("basis label has the wrong arity");
  Label label = 0;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (digits[i] >= dims_[i]) throw Error("basis digit out of range");
    label = label * dims_[i] + digits[i];
  }
  return label;
}

std::vector<std::uint32_t> QuantumState::unpack(Label label) const {
  std::vector<std::uint32_t> digits(dims_.size());
  for (std::size_t i = dims_.size(); i-- > 0;) {
    digits[i] = static_cast<std::uint32_t>(label % dims_[i]);
    label /= dims_[i];
  }
  return digits;
}

double QuantumState::norm_squared() const {
  double norm = 0.0;
  for (const auto& [label, amp] : amplitudes_) norm += std::norm(amp);
  return norm;
}

DensityMatrix::DensityMatrix(std::vector<std::uint32_t> dims, Eigen::MatrixXcd matrix)
    : dims_(std::move(dims)), matrix_(std::move(matrix)) {
  const std::uint64_t side = product_of(dims_);
  if (matrix_.rows() != matrix_.cols() || static_cast<std::uint64_t>(matrix_.rows()) != side) {
    throw Error("density matrix shape does not match its qudit dimensions");
  }
  if ((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() > kInternalTolerance) {
    throw Error("density matrix is not Hermitian");
  }
  if (std::abs(matrix_.trace() - Amplitude(1.0)) > kInternalTolerance) {
    throw Error("density matrix trace differs from 1");
  }
}

DensityMatrix DensityMatrix::projector(const QuantumState& psi) {
  const auto n = static_cast<Eigen::Index>(psi.dimension());
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n);
  for (const auto& [label, amp] : psi.amplitudes()) v(static_cast<Eigen::Index>(label)) = amp;
  return DensityMatrix(psi.dims(), v * v.adjoint());
}

Eigen::VectorXd DensityMatrix::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(matrix_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

bool DensityMatrix::is_positive_semidefinite(double tolerance) const {
  return eigenvalues().minCoeff() >= -tolerance;
}

std::size_t DensityMatrix::rank(double tolerance) const {
  const Eigen::VectorXd ev = eigenvalues();
  return static_cast<std::size_t>((ev.array() > tolerance).count());
}

DensityMatrix partial_trace(const QuantumState& state, std::span<const std::size_t> keep) {
  const auto& dims = state.dims();
  std::vector<bool> kept(dims.size(), false);
  for (std::size_t c : keep) {
    if (c >= dims.size() || kept[c]) throw Error("invalid coordinate selection for partial trace");
    kept[c] = true;
  }
  std::vector<std::size_t> rest;
  for (std::size_t c = 0; c < dims.size(); ++c) {
    if (!kept[c]) rest.push_back(c);
  }
  const std::vector<std::uint32_t> kept_dims = pick(dims, keep);
  const std::uint64_t side_size = product_of(kept_dims);
  if (side_size > kMaxReducedDimension) {
    throw Error("reduced state of dimension " + std::to_string(side_size) + " exceeds the simulation limit");
  }
  const auto side = static_cast<Eigen::Index>(side_size);

  // Amplitudes grouped by the traced-out label.
  std::map<std::uint64_t, std::vector<std::pair<Eigen::Index, Amplitude>>> groups;
  for (const auto& [label, amp] : state.amplitudes()) {
    const auto digits = state.unpack(label);
    groups[index_of(digits, dims, rest)].emplace_back(
        static_cast<Eigen::Index>(index_of(digits, dims, keep)), amp);
  }
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(side, side);
  for (const auto& [key, entries] : groups) {
    for (const auto& [i, ai] : entries) {
      for (const auto& [j, aj] : entries) rho(i, j) += ai * std::conj(aj);
    }
  }
  return DensityMatrix(kept_dims, std::move(rho));
}

double fidelity(const DensityMatrix& rho, const QuantumState& psi) {
  if (rho.dims() != psi.dims()) throw Error("fidelity: dimension mismatch");
  Amplitude acc = 0.0;
  for (const auto& [li, ai] : psi.amplitudes()) {
    for (const auto& [lj, aj] : psi.amplitudes()) {
      acc += std::conj(ai) * rho.matrix()(static_cast<Eigen::Index>(li), static_cast<Eigen::Index>(lj)) * aj;
    }
  }
  return acc.real();
}

double trace_distance(const DensityMatrix& r1, const DensityMatrix& r2) {
  if (r1.dims() != r2.dims()) throw Error("trace distance: dimension mismatch");
  const Eigen::MatrixXcd diff = r1.matrix() - r2.matrix();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(diff, Eigen::EigenvaluesOnly);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

double max_pairwise_trace_distance(std::span<const DensityMatrix> states) {
  double worst = 0.0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = i + 1; j < states.size(); ++j) {
      if (states[i].dims() != states[j].dims()) throw Error("trace distance: dimension mismatch");
      const double frob = (states[i].matrix() - states[j].matrix()).norm();
      const double bound = 0.5 * std::sqrt(static_cast<double>(states[i].dimension())) * frob;
      worst = std::max(worst, bound <= kInternalTolerance ? bound : trace_distance(states[i], states[j]));
    }
  }
  return worst;
}

EncodedState qencode(const SpanProgram& msp, const QuantumState& secret) {
  const std::uint32_t p = msp.field().modulus();
  if (secret.dims() != std::vector<std::uint32_t>{p}) {
    throw Error("secret must be a single qudit of dimension " + std::to_string(p));
  }
  const std::size_t d = msp.rows();
  const std::size_t e = msp.cols();
  std::vector<std::uint32_t> dims(d, p);
  product_of(dims);
  std::uint64_t stored = 1;
  for (std::size_t i = 0; i < e; ++i) {
    stored *= p;
    if (stored > kMaxStateDimension) {
      throw Error("encoding needs up to " + std::to_string(p) + "^" + std::to_string(e) +
                  " amplitudes, over the simulation limit");
    }
  }
  // x -> M' x permutes K^d; the padded input is |s>|a>|0...0>.
  const Matrix extended = extend_to_invertible(msp.matrix());
  std::uint64_t branches = 1;
  for (std::size_t i = 1; i < e; ++i) branches *= p;
  const double scale = 1.0 / std::sqrt(static_cast<double>(branches));

  std::map<QuantumState::Label, Amplitude> amps;
  Vec x(d, 0);
  for (const auto& [s, alpha] : secret.amplitudes()) {
    std::fill(x.begin(), x.end(), 0);
    x[0] = static_cast<std::uint32_t>(s);
    for (std::uint64_t branch = 0; branch < branches; ++branch) {
      std::uint64_t rest = branch;
      for (std::size_t i = e; i-- > 1;) {
        x[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      const Vec y = extended.apply(x);
      QuantumState::Label label = 0;
      for (std::uint32_t digit : y) label = label * p + digit;
      amps[label] += alpha * scale;
    }
  }
  return EncodedState{QuantumState(std::move(dims), std::move(amps)), msp};
}

QuantumState apply_plan(const EncodedState& enc, const ReconstructionPlan& plan) {
  const SpanProgram& msp = enc.program;
  const std::size_t m = plan.kept_rows.size();
  if (!(plan.u.field() == msp.field()) || plan.u.rows() != m || plan.u.cols() != m ||
      m + plan.erased_rows.size() != msp.rows() || plan.kept_rows != msp.rows_for(plan.erased.complement(msp.players()))) {
    throw Error("reconstruction plan does not belong to this program");
  }
  const QuantumState& in = enc.state;
  std::map<QuantumState::Label, Amplitude> out;
  Vec kept(m);
  for (const auto& [label, amp] : in.amplitudes()) {
    auto digits = in.unpack(label);
    for (std::size_t i = 0; i < m; ++i) kept[i] = digits[plan.kept_rows[i]];
    const Vec mapped = plan.u.apply(kept);
    for (std::size_t i = 0; i < m; ++i) digits[plan.kept_rows[i]] = mapped[i];
    out[in.pack(digits)] = amp;
  }
  return QuantumState(in.dims(), std::move(out));
}

TestFamily make_test_family(std::uint32_t dimension, std::uint64_t seed, std::size_t random_count) {
  TestFamily family{{}, {}, seed};
  std::vector<Amplitude> amps(dimension);
  for (std::uint32_t s = 0; s < dimension; ++s) {
    std::fill(amps.begin(), amps.end(), Amplitude(0.0));
    amps[s] = 1.0;
    family.states.push_back(QuantumState::qudit(amps));
    family.names.push_back("basis" + std::to_string(s));
  }
  std::fill(amps.begin(), amps.end(), Amplitude(1.0));
  family.states.push_back(QuantumState::qudit(amps));
  family.names.push_back("uniform");
  SeededRng rng(seed);
  for (std::size_t i = 0; i < random_count; ++i) {
    for (auto& a : amps) {
      const double re = rng.gaussian();
      const double im = rng.gaussian();
      a = Amplitude(re, im);
    }
    family.states.push_back(QuantumState::qudit(amps));
    family.names.push_back("random" + std::to_string(i));
  }
  return family;
}

namespace {

struct Recovery {
  double fidelity;
  std::size_t schmidt_rank;
};

Recovery recover_and_compare(const EncodedState& enc, const ReconstructionPlan& plan,
                             const QuantumState& input) {
  const QuantumState out = apply_plan(enc, plan);
  const std::size_t secret_qudit = plan.kept_rows.front();
  const DensityMatrix rho = partial_trace(out, std::span<const std::size_t>(&secret_qudit, 1));
  return {fidelity(rho, input), rho.rank(kAcceptTolerance)};
}

void add_recovery_checks(Report& report, const std::string& set, double min_fid, std::size_t max_rank) {
  report.add({"recover", set, "fidelity", min_fid, min_fid >= 1.0 - kAcceptTolerance, ""});
  report.add({"factorization", set, "schmidt_rank", static_cast<double>(max_rank), max_rank == 1, ""});
}

void add_secrecy_check(Report& report, const std::string& set, double td) {
  report.add({"secrecy", set, "trace_distance", td, td <= kAcceptTolerance, ""});
}

}  // namespace

ErasureReport verify_erasure(const SpanProgram& msp, PlayerSet b, const TestFamily& family) {
  ErasureReport result;
  result.report = Report("erasure of " + b.to_string(), family.seed);
  const int n = msp.players();
  if (!b.subset_of(PlayerSet::all(n))) {
    result.reason = "set mentions unknown players";
    return result;
  }
  if (msp_eval(msp, b)) {
    result.reason = b.to_string() + " is not in the adversary structure";
    return result;
  }
  if (!msp_eval(msp, b.complement(n))) {
    result.reason = b.to_string() + " is not in the dual structure";
    return result;
  }
  result.applicable = true;
  const ReconstructionPlan plan = build_reconstruction_plan(msp, b);
  result.min_fidelity = 1.0;
  std::vector<DensityMatrix> views;
  for (const auto& input : family.states) {
    const EncodedState enc = qencode(msp, input);
    const Recovery r = recover_and_compare(enc, plan, input);
    result.min_fidelity = std::min(result.min_fidelity, r.fidelity);
    result.max_schmidt_rank = std::max(result.max_schmidt_rank, r.schmidt_rank);
    views.push_back(partial_trace(enc.state, plan.erased_rows));
  }
  result.max_trace_distance = max_pairwise_trace_distance(views);
  add_recovery_checks(result.report, b.to_string(), result.min_fidelity, result.max_schmidt_rank);
  add_secrecy_check(result.report, b.to_string(), result.max_trace_distance);
  return result;
}

PureScheme::PureScheme(SpanProgram msp) : msp_(std::move(msp)), structure_(msp_structure(msp_)) {
  if (!is_selfdual(structure_)) {
    throw Error("structure " + structure_.to_string() +
                " is not self-dual; use the mixed-state scheme (verify-mixed)");
  }
  for (PlayerSet b : structure_.members()) plans_.emplace(b, build_reconstruction_plan(msp_, b));
}

EncodedState PureScheme::encode(const QuantumState& secret) const { return qencode(msp_, secret); }

DensityMatrix PureScheme::recover(const EncodedState& enc, PlayerSet qualified) const {
  const int n = msp_.players();
  if (!qualified.subset_of(PlayerSet::all(n)) || structure_.contains(qualified)) {
    throw Error("set " + qualified.to_string() + " cannot reconstruct");
  }
  const ReconstructionPlan& plan = plans_.at(qualified.complement(n));
  const QuantumState out = apply_plan(enc, plan);
  const std::size_t secret_qudit = plan.kept_rows.front();
  return partial_trace(out, std::span<const std::size_t>(&secret_qudit, 1));
}

Report PureScheme::verify_all(const TestFamily& family) const {
  Report report("pure-state scheme, " + structure_.to_string(), family.seed);
  for (PlayerSet b : structure_.members()) {
    const ErasureReport r = verify_erasure(msp_, b, family);
    if (!r.applicable) throw std::logic_error("self-dual member outside A ∩ A*: " + r.reason);
    report.append(r.report);
  }
  return report;
}

PureScheme qss_pure(const SpanProgram& msp) { return PureScheme(msp); }

MixedScheme::MixedScheme(SpanProgram msp)
    : msp_(std::move(msp)), extended_(extend_msp(msp_)), structure_(msp_structure(msp_)) {}

MixedEncoding MixedScheme::encode(const QuantumState& secret) const {
  const PlayerSet tau{extended_.players()};
  return MixedEncoding{qencode(extended_, secret), extended_.rows_for(tau)};
}

DensityMatrix MixedScheme::recover(const MixedEncoding& enc, PlayerSet qualified) const {
  const int n = msp_.players();
  if (!qualified.subset_of(PlayerSet::all(n)) || structure_.contains(qualified)) {
    throw Error("set " + qualified.to_string() + " cannot reconstruct");
  }
  // The erased set includes the discarded player, so the plan never touches
  // the discarded rows.
  const ReconstructionPlan plan =
      build_reconstruction_plan(extended_, qualified.complement(extended_.players()));
  const QuantumState out = apply_plan(enc.purified, plan);
  const std::size_t secret_qudit = plan.kept_rows.front();
  return partial_trace(out, std::span<const std::size_t>(&secret_qudit, 1));
}

DensityMatrix MixedScheme::view(const MixedEncoding& enc, PlayerSet b) const {
  if (!b.subset_of(PlayerSet::all(msp_.players()))) {
    throw Error("set " + b.to_string() + " mentions players outside the scheme");
  }
  return partial_trace(enc.purified.state, extended_.rows_for(b));
}

Report MixedScheme::verify_all(const TestFamily& family) const {
  Report report("mixed-state scheme, " + structure_.to_string(), family.seed);
  report.set_note("extended to " + std::to_string(extended_.players()) + " players; player " +
                  std::to_string(extended_.players()) + " is discarded");
  std::vector<MixedEncoding> encodings;
  for (const auto& input : family.states) encodings.push_back(encode(input));

  const int n = msp_.players();
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    const PlayerSet q(bits);
    if (structure_.contains(q)) continue;
    double min_fid = 1.0;
    std::size_t max_rank = 0;
    for (std::size_t i = 0; i < encodings.size(); ++i) {
      const DensityMatrix rho = recover(encodings[i], q);
      min_fid = std::min(min_fid, fidelity(rho, family.states[i]));
      max_rank = std::max(max_rank, rho.rank(kAcceptTolerance));
    }
    add_recovery_checks(report, q.to_string(), min_fid, max_rank);
  }
  for (PlayerSet b : structure_.members()) {
    std::vector<DensityMatrix> views;
    for (const auto& enc : encodings) views.push_back(view(enc, b));
    add_secrecy_check(report, b.to_string(), max_pairwise_trace_distance(views));
  }
  return report;
}

MixedScheme qss_mixed(const SpanProgram& msp) { return MixedScheme(msp); }

}  // namespace qss
