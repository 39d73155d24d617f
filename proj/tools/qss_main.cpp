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

// qss: command-line front end.
//
// Exit status: 0 when every check passes, 1 when a check fails, 2 on usage
// errors and malformed or invalid input.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qss/classical.hpp"
#include "qss/condition.hpp"
#include "qss/error.hpp"
#include "qss/formula.hpp"
#include "qss/io.hpp"
#include "qss/msp.hpp"
#include "qss/quantum.hpp"
#include "qss/rng.hpp"
#include "qss/structures.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Options {
  std::string file;
  std::string second_file;
  std::string formula;
  std::string out;
  std::string set;
  std::string require;
  std::string format = "text";
  std::string family = "general";
  std::uint32_t field = 0;
  int players = 0;
  std::uint64_t secret = 0;
  std::uint64_t seed = 1;
  std::size_t random = 20;
  std::uint32_t secrets = 2;
  std::uint32_t share_size = 3;
  std::uint32_t den = 8;
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
  } else {
    qss::write_file(o.out, text);
  }
}

const char* verdict(bool b) { return b ? "true" : "false"; }

int structure_check(const Options& o) {
  const auto a = qss::parse_structure(qss::read_file(o.file));
  const bool q2 = qss::is_q2(a);
  const bool q2star = qss::is_q2star(a);
  const bool selfdual = qss::is_selfdual(a);
  std::cout << "q2=" << verdict(q2) << " q2star=" << verdict(q2star) << " selfdual=" << verdict(selfdual) << "\n";
  if (o.require.empty()) return kPass;
  if (o.require == "q2") return q2 ? kPass : kFail;
  if (o.require == "q2star") return q2star ? kPass : kFail;
  return selfdual ? kPass : kFail;
}

int structure_dual(const Options& o) {
  emit(o, qss::format_structure(qss::dual(qss::parse_structure(qss::read_file(o.file)))));
  return kPass;
}

int structure_extend(const Options& o) {
  const auto a = qss::parse_structure(qss::read_file(o.file));
  if (!qss::is_q2star(a)) {
    std::cerr << "error: structure is not Q2*; no-cloning forbids QSS\n";
    return kFail;
  }
  emit(o, qss::format_structure(qss::extend_selfdual(a)));
  return kPass;
}

qss::SpanProgram load_msp(const std::string& path) { return qss::parse_msp(qss::read_file(path)); }

int msp_from_formula(const Options& o) {
  const qss::Formula f = qss::parse_formula(o.formula);
  emit(o, qss::format_msp(qss::compile_formula(f, qss::Field(o.field), o.players)));
  return kPass;
}

int msp_dual(const Options& o) {
  emit(o, qss::format_msp(qss::dual_msp(load_msp(o.file))));
  return kPass;
}

int msp_extend(const Options& o) {
  const auto msp = load_msp(o.file);
  if (!qss::is_q2star(qss::msp_structure(msp))) {
    std::cerr << "error: structure is not Q2*; no-cloning forbids QSS\n";
    return kFail;
  }
  emit(o, qss::format_msp(qss::extend_msp(msp)));
  return kPass;
}

int msp_eval(const Options& o) {
  const auto msp = load_msp(o.file);
  const qss::PlayerSet b = qss::parse_player_list(o.set);
  if (!b.subset_of(qss::PlayerSet::all(msp.players()))) throw qss::Error("set mentions unknown players");
  std::cout << (qss::msp_eval(msp, b) ? "1" : "0") << "\n";
  return kPass;
}

int share(const Options& o) {
  const auto msp = load_msp(o.file);
  qss::SeededRng rng(o.seed);
  qss::Vec randomness(msp.cols() - 1);
  for (auto& a : randomness) a = static_cast<std::uint32_t>(rng.below(msp.field().modulus()));
  if (o.secret >= msp.field().modulus()) throw qss::Error("secret must be reduced mod p");
  const qss::FieldElement s(msp.field(), static_cast<std::int64_t>(o.secret));
  emit(o, qss::format_shares(qss::share(msp, s, randomness), o.seed));
  return kPass;
}

int reconstruct(const Options& o) {
  const auto msp = load_msp(o.file);
  const auto shares = qss::parse_shares(qss::read_file(o.second_file));
  if (shares.field != msp.field().modulus()) throw qss::Error("share file and program use different fields");
  const qss::PlayerSet q = qss::parse_player_list(o.set);
  if (!q.subset_of(qss::PlayerSet::all(msp.players()))) throw qss::Error("set mentions unknown players");
  if (!qss::msp_eval(msp, q)) {
    std::cerr << "error: set " << q.to_string() << " cannot reconstruct\n";
    return kFail;
  }
  std::cout << qss::reconstruct(msp, q, shares.entries).value() << "\n";
  return kPass;
}

int render(const Options& o, const qss::Report& report) {
  emit(o, o.format == "machine" ? report.machine() : report.text());
  return report.passed() ? kPass : kFail;
}

int verify_pure(const Options& o) {
  const auto msp = load_msp(o.file);
  const auto a = qss::msp_structure(msp);
  if (!qss::is_selfdual(a)) {
    std::cerr << "error: structure " << a.to_string() << " is not self-dual; use verify-mixed\n";
    return kFail;
  }
  const auto family = qss::make_test_family(msp.field().modulus(), o.seed, o.random);
  return render(o, qss::qss_pure(msp).verify_all(family));
}

int verify_mixed(const Options& o) {
  const auto msp = load_msp(o.file);
  const auto a = qss::msp_structure(msp);
  if (!qss::is_q2star(a)) {
    std::cerr << "error: structure " << a.to_string() << " is not Q2*; no-cloning forbids QSS\n";
    return kFail;
  }
  const auto family = qss::make_test_family(msp.field().modulus(), o.seed, o.random);
  return render(o, qss::qss_mixed(msp).verify_all(family));
}

// One verdict line; returns whether eq1 and the oracle agree.
bool check_split(const qss::ClassicalScheme& sch, qss::PlayerSet u, std::uint64_t seed, bool prefix) {
  const auto eq1 = qss::eq1_check(sch, u);
  const auto lift = qss::lift_and_test(sch, u, seed);
  const bool agree = eq1.independent == lift.agree;
  if (prefix) std::cout << "set=" << u.to_string() << " ";
  std::cout << "eq1=" << verdict(eq1.independent) << " oracle=" << verdict(lift.agree) << " agree=" << verdict(agree)
            << "\n";
  return agree;
}

int condition_check(const Options& o) {
  const auto sch = qss::parse_scheme(qss::read_file(o.file));
  try {
    if (!o.set.empty()) {
      const qss::PlayerSet u = qss::parse_player_list(o.set);
      if (!u.subset_of(qss::PlayerSet::all(sch.players()))) throw qss::Error("set mentions unknown players");
      return check_split(sch, u, o.seed, false) ? kPass : kFail;
    }
    bool all_agree = true;
    bool any = false;
    for (std::uint32_t bits = 0; bits < (1u << sch.players()); ++bits) {
      const qss::PlayerSet u(bits);
      if (!qss::check_secrecy(sch, u) || !qss::check_correctness(sch, u.complement(sch.players()))) continue;
      any = true;
      all_agree = check_split(sch, u, o.seed, true) && all_agree;
    }
    if (!any) throw qss::Error("no set has secret shares and a correct complement");
    return all_agree ? kPass : kFail;
  } catch (const qss::Error& e) {
    throw qss::Error(std::string("not a valid secret-sharing table: ") + e.what());
  }
}

int condition_from_msp(const Options& o) {
  emit(o, qss::format_scheme(qss::scheme_from_msp(load_msp(o.file))));
  return kPass;
}

std::string certificate(const qss::SearchBounds& b, const qss::SearchResult& r) {
  std::string out = "# lifted-scheme counterexample certificate\n";
  out += "family=" + qss::to_string(b.family) + "\n";
  out += "bounds secrets=" + std::to_string(b.secrets) + " share_size=" + std::to_string(b.max_share_size) +
         " den=" + std::to_string(b.max_denominator) + "\n";
  out += "candidates=" + std::to_string(r.candidates) + "\n";
  out += "set={1}\n";
  auto word = [](const qss::Word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s;
  };
  out += std::string("eq1=") + verdict(r.eq1.independent) + " exact=" + verdict(r.eq1.exact) + "\n";
  out += "eq1_pair y1=" + word(r.eq1.y1) + " y2=" + word(r.eq1.y2) + " s1=" + std::to_string(r.eq1.s1) +
         " s2=" + std::to_string(r.eq1.s2) + " value1=" + qss::format_number(r.eq1.value1) +
         " value2=" + qss::format_number(r.eq1.value2) + "\n";
  out += std::string("oracle=") + verdict(r.lift.agree) + " max_trace_distance=" +
         qss::format_number(r.lift.max_trace_distance) + " witness=" + r.lift.witness1 + "," + r.lift.witness2 +
         " inputs=" + std::to_string(r.lift.inputs) + "\n";
  return out;
}

int condition_search(const Options& o) {
  const qss::SearchBounds bounds{o.secrets, o.share_size, o.den, qss::parse_family(o.family)};
  const auto result = qss::search_counterexample(bounds);
  if (!result.scheme) {
    std::cout << "none family=" << o.family << " candidates=" << result.candidates << "\n";
    return kPass;
  }
  const std::string cert = certificate(bounds, result);
  if (o.out.empty()) {
    std::cout << qss::format_scheme(*result.scheme) << cert;
  } else {
    qss::write_file(o.out, qss::format_scheme(*result.scheme));
    qss::write_file(o.out + ".cert", cert);
    std::cout << "found candidates=" << result.candidates << " eq1=false oracle=false wrote " << o.out << "\n";
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum secret sharing from monotone span programs"};
  app.require_subcommand(1);
  Options o;
  int (*action)(const Options&) = nullptr;
  auto bind = [&](CLI::App* cmd, int (*fn)(const Options&)) { cmd->callback([&action, fn] { action = fn; }); };
  auto out_opt = [&](CLI::App* cmd) { cmd->add_option("--out", o.out, "Write output to this path"); };

  auto* structure = app.add_subcommand("structure", "Adversary structures")->require_subcommand(1);
  auto* s_check = structure->add_subcommand("check", "Print Q2, Q2* and self-duality");
  s_check->add_option("file", o.file)->required();
  s_check->add_option("--require", o.require, "Fail unless the predicate holds")
      ->check(CLI::IsMember({"q2", "q2star", "selfdual"}));
  bind(s_check, structure_check);
  auto* s_dual = structure->add_subcommand("dual", "Print the dual structure");
  s_dual->add_option("file", o.file)->required();
  out_opt(s_dual);
  bind(s_dual, structure_dual);
  auto* s_ext = structure->add_subcommand("extend", "Self-dual extension with one extra player");
  s_ext->add_option("file", o.file)->required();
  out_opt(s_ext);
  bind(s_ext, structure_extend);

  auto* msp = app.add_subcommand("msp", "Monotone span programs")->require_subcommand(1);
  auto* m_formula = msp->add_subcommand("from-formula", "Compile a monotone formula");
  m_formula->add_option("formula", o.formula)->required();
  m_formula->add_option("--field", o.field, "Prime field size")->required();
  m_formula->add_option("--players", o.players, "Player count (default: largest id in the formula)");
  out_opt(m_formula);
  bind(m_formula, msp_from_formula);
  auto* m_dual = msp->add_subcommand("dual", "Program for the dual structure");
  m_dual->add_option("file", o.file)->required();
  out_opt(m_dual);
  bind(m_dual, msp_dual);
  auto* m_ext = msp->add_subcommand("extend", "Program for the self-dual extension");
  m_ext->add_option("file", o.file)->required();
  out_opt(m_ext);
  bind(m_ext, msp_extend);
  auto* m_eval = msp->add_subcommand("eval", "Print 1 if the set is qualified, else 0");
  m_eval->add_option("file", o.file)->required();
  m_eval->add_option("--set", o.set, "Players, e.g. 2,3")->required();
  bind(m_eval, msp_eval);

  auto* sh = app.add_subcommand("share", "Deal shares of a classical secret");
  sh->add_option("file", o.file)->required();
  sh->add_option("--secret", o.secret)->required();
  sh->add_option("--seed", o.seed, "Randomness seed");
  out_opt(sh);
  bind(sh, share);

  auto* rec = app.add_subcommand("reconstruct", "Recover the secret from a qualified set");
  rec->add_option("file", o.file)->required();
  rec->add_option("shares", o.second_file)->required();
  rec->add_option("--set", o.set, "Players, e.g. 2,3")->required();
  bind(rec, reconstruct);

  auto* q = app.add_subcommand("qss", "Quantum secret sharing verification")->require_subcommand(1);
  for (auto [name, fn] : {std::pair{"verify-pure", verify_pure}, std::pair{"verify-mixed", verify_mixed}}) {
    auto* cmd = q->add_subcommand(name, std::string("Simulate and verify the ") +
                                            (fn == verify_pure ? "pure" : "mixed") + "-state scheme");
    cmd->add_option("file", o.file)->required();
    cmd->add_option("--seed", o.seed, "Seed for the random test states");
    cmd->add_option("--random", o.random, "Number of random test states");
    cmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "machine"}));
    out_opt(cmd);
    bind(cmd, fn);
  }

  auto* cond = app.add_subcommand("condition", "Classical-to-quantum lifting condition")->require_subcommand(1);
  auto* c_check = cond->add_subcommand("check", "Compare the condition with the lifted-state oracle");
  c_check->add_option("file", o.file)->required();
  c_check->add_option("--set", o.set, "The erased set U (default: every valid split)");
  c_check->add_option("--seed", o.seed, "Seed for the random test states");
  bind(c_check, condition_check);
  auto* c_table = cond->add_subcommand("from-msp", "Probability table of a span-program scheme");
  c_table->add_option("file", o.file)->required();
  out_opt(c_table);
  bind(c_table, condition_from_msp);
  auto* c_search = cond->add_subcommand("search", "Search for a table that fails the condition");
  c_search->add_option("--secrets", o.secrets);
  c_search->add_option("--share-size", o.share_size);
  c_search->add_option("--den", o.den, "Largest common denominator");
  c_search->add_option("--family", o.family)->check(CLI::IsMember({"general", "function-of-yq", "homomorphic"}));
  out_opt(c_search);
  bind(c_search, condition_search);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }
  try {
    return action(o);
  } catch (const qss::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFail;
  }
}
