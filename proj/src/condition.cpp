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

#include "qss/condition.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qss/classical.hpp"
#include "qss/error.hpp"
#include "qss/quantum.hpp"

namespace qss {

namespace {

Word restrict_word(const Word& y, PlayerSet b) {
  Word out;
  for (int p : b.players()) out.push_back(y[static_cast<std::size_t>(p - 1)]);
  return out;
}

std::uint64_t checked_pow(std::uint64_t base, std::size_t exp, std::uint64_t limit, const char* what) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > limit / base) throw Error(std::string(what) + " exceeds the enumeration limit");
    out *= base;
  }
  return out;
}

void require_split(const ClassicalScheme& sch, PlayerSet u) {
  const int n = sch.players();
  if (!u.subset_of(PlayerSet::all(n))) throw Error("set " + u.to_string() + " mentions unknown players");
  const PlayerSet q = u.complement(n);
  if (!check_correctness(sch, q)) {
    throw Error("not correct: " + q.to_string() + " does not determine the secret");
  }
  if (!check_secrecy(sch, u)) throw Error("not secret: " + u.to_string() + " learns about the secret");
  if (const auto& a = sch.claimed_structure()) {
    if (!a->contains(u) || a->contains(q)) {
      throw Error("u not in A ∩ A*: " + u.to_string() + " for structure " + a->to_string());
    }
  }
}

// sqrt(x) = coef * sqrt(radicand) with a square-free radicand.
struct Surd {
  Rational coef;
  std::uint64_t radicand;
};

constexpr std::int64_t kExactLimit = 1'000'000'000;

// x = k^2 m with m square-free.
std::pair<std::uint64_t, std::uint64_t> split_square(std::uint64_t x) {
  std::uint64_t k = 1;
  std::uint64_t m = 1;
  for (std::uint64_t d = 2; d * d <= x; ++d) {
    int count = 0;
    while (x % d == 0) {
      x /= d;
      ++count;
    }
    for (int i = 0; i < count / 2; ++i) k *= d;
    if (count % 2) m *= d;
  }
  return {k, m * x};
}

std::optional<Surd> exact_sqrt(const Rational& x) {
  const std::int64_t a = x.numerator();
  const std::int64_t b = x.denominator();
  if (a < 0 || a > kExactLimit || b > kExactLimit) return std::nullopt;
  if (a == 0) return Surd{Rational(0), 1};
  const auto [ka, ma] = split_square(static_cast<std::uint64_t>(a));
  const auto [kb, mb] = split_square(static_cast<std::uint64_t>(b));
  // gcd(a, b) = 1, so ma * mb is square-free.
  return Surd{Rational(static_cast<std::int64_t>(ka), static_cast<std::int64_t>(kb * mb)), ma * mb};
}

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

struct SurdSum {
  std::map<std::uint64_t, Rational> exact;
  double approx = 0.0;

  void add(const Surd& s) {
    if (s.coef == Rational(0)) return;
    auto& c = exact[s.radicand];
    c += s.coef;
    if (c == Rational(0)) exact.erase(s.radicand);
  }
};

using WordPair = std::pair<Word, Word>;

}  // namespace

ClassicalScheme::ClassicalScheme(std::vector<std::uint32_t> share_sizes, std::vector<std::map<Word, Rational>> tables,
                                 std::optional<AdversaryStructure> structure)
    : sizes_(std::move(share_sizes)), tables_(std::move(tables)), structure_(std::move(structure)) {
  const std::size_t n = sizes_.size();
  if (n < 1 || n > static_cast<std::size_t>(PlayerSet::kMaxPlayers)) {
    throw Error("player count must be in [1, 16]");
  }
  for (std::uint32_t size : sizes_) {
    if (size == 0) throw Error("share spaces must be nonempty");
  }
  if (tables_.empty()) throw Error("secret space must be nonempty");
  if (structure_ && structure_->players() != static_cast<int>(n)) {
    throw Error("claimed structure has a different player count");
  }
  for (std::size_t s = 0; s < tables_.size(); ++s) {
    Rational total = 0;
    for (auto it = tables_[s].begin(); it != tables_[s].end();) {
      const auto& [y, prob] = *it;
      if (y.size() != n) throw Error("share word of the wrong length for secret " + std::to_string(s));
      for (std::size_t i = 0; i < n; ++i) {
        if (y[i] >= sizes_[i]) {
          throw Error("share symbol " + std::to_string(y[i]) + " outside the space of player " +
                      std::to_string(i + 1));
        }
      }
      if (prob < Rational(0)) throw Error("negative probability for secret " + std::to_string(s));
      total += prob;
      it = prob == Rational(0) ? tables_[s].erase(it) : std::next(it);
    }
    if (total != Rational(1)) {
      throw Error("probabilities for secret " + std::to_string(s) + " sum to " +
                  std::to_string(total.numerator()) + "/" + std::to_string(total.denominator()));
    }
  }
}

AdversaryStructure ClassicalScheme::structure() const {
  if (structure_) return *structure_;
  return AdversaryStructure::from_predicate(players(), [&](PlayerSet b) { return check_secrecy(*this, b); });
}

std::map<Word, Rational> ClassicalScheme::marginal(std::uint32_t s, PlayerSet b) const {
  std::map<Word, Rational> out;
  for (const auto& [y, prob] : tables_.at(s)) out[restrict_word(y, b)] += prob;
  return out;
}

ClassicalScheme scheme_from_msp(const SpanProgram& msp) {
  const std::uint32_t p = msp.field().modulus();
  const std::size_t e = msp.cols();
  checked_pow(p, e, kMaxDeals, "p^e");
  const int n = msp.players();
  std::vector<std::vector<std::size_t>> rows(static_cast<std::size_t>(n));
  std::vector<std::uint32_t> sizes;
  for (int i = 1; i <= n; ++i) {
    rows[static_cast<std::size_t>(i - 1)] = msp.rows_for(PlayerSet{i});
    sizes.push_back(static_cast<std::uint32_t>(
        checked_pow(p, rows[static_cast<std::size_t>(i - 1)].size(), 0xffffffffu, "share space")));
  }
  const auto branches = static_cast<std::int64_t>(checked_pow(p, e - 1, kMaxDeals, "p^(e-1)"));
  std::vector<std::map<Word, Rational>> tables(p);
  Vec x(e, 0);
  for (std::uint32_t s = 0; s < p; ++s) {
    for (std::int64_t branch = 0; branch < branches; ++branch) {
      x[0] = s;
      std::int64_t rest = branch;
      for (std::size_t i = e; i-- > 1;) {
        x[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      const Vec y = msp.matrix().apply(x);
      Word w(static_cast<std::size_t>(n), 0);
      for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t r : rows[i]) w[i] = w[i] * p + y[r];
      }
      tables[s][w] += Rational(1, branches);
    }
  }
  return ClassicalScheme(std::move(sizes), std::move(tables), msp_structure(msp));
}

std::optional<std::map<Word, std::uint32_t>> reconstruction_map(const ClassicalScheme& sch, PlayerSet q) {
  std::map<Word, std::uint32_t> g;
  for (std::uint32_t s = 0; s < sch.secrets(); ++s) {
    for (const auto& [y, prob] : sch.table(s)) {
      const auto [it, inserted] = g.emplace(restrict_word(y, q), s);
      if (!inserted && it->second != s) return std::nullopt;
    }
  }
  return g;
}

bool check_correctness(const ClassicalScheme& sch, PlayerSet q) { return reconstruction_map(sch, q).has_value(); }

bool check_secrecy(const ClassicalScheme& sch, PlayerSet u) {
  const auto reference = sch.marginal(0, u);
  for (std::uint32_t s = 1; s < sch.secrets(); ++s) {
    if (sch.marginal(s, u) != reference) return false;
  }
  return true;
}

Eq1Result eq1_check(const ClassicalScheme& sch, PlayerSet u) {
  require_split(sch, u);
  const PlayerSet q = u.complement(sch.players());
  Eq1Result result;
  std::vector<std::map<WordPair, SurdSum>> coeffs(sch.secrets());
  for (std::uint32_t s = 0; s < sch.secrets(); ++s) {
    std::map<Word, std::vector<std::pair<Word, Rational>>> groups;
    for (const auto& [y, prob] : sch.table(s)) groups[restrict_word(y, q)].emplace_back(restrict_word(y, u), prob);
    for (const auto& [yq, entries] : groups) {
      for (std::size_t i = 0; i < entries.size(); ++i) {
        for (std::size_t j = i; j < entries.size(); ++j) {
          const auto& [w1, p1] = entries[i];
          const auto& [w2, p2] = entries[j];
          auto& c = coeffs[s][w1 <= w2 ? WordPair{w1, w2} : WordPair{w2, w1}];
          c.approx += std::sqrt(to_double(p1) * to_double(p2));
          const auto surd = exact_sqrt(p1 * p2);
          if (surd) {
            c.add(*surd);
          } else {
            result.exact = false;
          }
        }
      }
    }
  }

  std::map<WordPair, bool> keys;
  for (const auto& per_secret : coeffs) {
    for (const auto& [key, c] : per_secret) keys[key] = true;
  }
  const SurdSum zero;
  auto lookup = [&](std::uint32_t s, const WordPair& key) -> const SurdSum& {
    const auto it = coeffs[s].find(key);
    return it == coeffs[s].end() ? zero : it->second;
  };
  for (const auto& [key, unused] : keys) {
    const SurdSum& base = lookup(0, key);
    for (std::uint32_t s = 1; s < sch.secrets(); ++s) {
      const SurdSum& other = lookup(s, key);
      const bool same = result.exact ? other.exact == base.exact
                                     : std::abs(other.approx - base.approx) <= kInternalTolerance;
      if (!same) {
        result.independent = false;
        result.y1 = key.first;
        result.y2 = key.second;
        result.s1 = 0;
        result.s2 = s;
        result.value1 = base.approx;
        result.value2 = other.approx;
        return result;
      }
    }
  }
  return result;
}

LiftResult lift_and_test(const ClassicalScheme& sch, PlayerSet u, std::uint64_t seed, std::size_t random_count) {
  require_split(sch, u);
  const auto& dims = sch.share_sizes();
  std::uint64_t total = 1;
  std::uint64_t side = 1;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    total *= dims[i];
    if (u.contains(static_cast<int>(i + 1))) side *= dims[i];
    if (total > kMaxStateDimension) throw Error("lifted state exceeds the simulation limit");
  }
  if (side > 1024) throw Error("reduced state of U exceeds the simulation limit");
  std::vector<std::size_t> keep;
  for (int p : u.players()) keep.push_back(static_cast<std::size_t>(p - 1));

  const TestFamily family = make_test_family(sch.secrets(), seed, random_count);
  std::vector<DensityMatrix> views;
  for (const auto& input : family.states) {
    std::map<QuantumState::Label, Amplitude> amps;
    for (const auto& [s, alpha] : input.amplitudes()) {
      for (const auto& [y, prob] : sch.table(static_cast<std::uint32_t>(s))) {
        QuantumState::Label label = 0;
        for (std::size_t i = 0; i < y.size(); ++i) label = label * dims[i] + y[i];
        amps[label] += alpha * std::sqrt(to_double(prob));
      }
    }
    views.push_back(partial_trace(QuantumState(dims, std::move(amps)), keep));
  }

  LiftResult result;
  result.inputs = views.size();
  result.witness1 = family.names.front();
  result.witness2 = family.names.front();
  for (std::size_t i = 0; i < views.size(); ++i) {
    for (std::size_t j = i + 1; j < views.size(); ++j) {
      const double td = trace_distance(views[i], views[j]);
      if (td > result.max_trace_distance) {
        result.max_trace_distance = td;
        result.witness1 = family.names[i];
        result.witness2 = family.names[j];
      }
    }
  }
  result.agree = result.max_trace_distance <= kAcceptTolerance;
  return result;
}

ClassicalScheme homomorphic_scheme(const HomomorphicSpec& spec, std::optional<AdversaryStructure> structure) {
  if (spec.moduli.empty()) throw Error("group needs at least one cyclic factor");
  if (spec.matrix.empty()) throw Error("homomorphism needs at least one output share");
  const std::size_t width = spec.matrix.front().size();
  if (width == 0) throw Error("homomorphism needs the secret column");
  for (const auto& row : spec.matrix) {
    if (row.size() != width) throw Error("homomorphism matrix rows differ in length");
  }
  std::uint64_t order = 1;
  for (std::uint32_t m : spec.moduli) {
    if (m < 2) throw Error("cyclic factors must have order at least 2");
    if (order > kMaxDeals / m) throw Error("group order exceeds the enumeration limit");
    order *= m;
  }
  const std::size_t n = spec.matrix.size();
  const std::size_t k = spec.moduli.size();
  const auto branches = static_cast<std::int64_t>(checked_pow(order, width - 1, kMaxDeals, "|G|^m"));
  checked_pow(order, width, kMaxDeals, "|G|^(m+1)");

  // Component digits of every group element, component 0 most significant.
  std::vector<std::vector<std::int64_t>> digits(order, std::vector<std::int64_t>(k));
  for (std::uint64_t g = 0; g < order; ++g) {
    std::uint64_t rest = g;
    for (std::size_t c = k; c-- > 0;) {
      digits[g][c] = static_cast<std::int64_t>(rest % spec.moduli[c]);
      rest /= spec.moduli[c];
    }
  }

  std::vector<std::map<Word, Rational>> tables(order);
  std::uint64_t kernel = 0;
  std::vector<std::uint64_t> x(width, 0);
  for (std::uint64_t s = 0; s < order; ++s) {
    for (std::int64_t branch = 0; branch < branches; ++branch) {
      x[0] = s;
      std::uint64_t rest = static_cast<std::uint64_t>(branch);
      for (std::size_t j = width; j-- > 1;) {
        x[j] = rest % order;
        rest /= order;
      }
      Word y(n, 0);
      bool zero = true;
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t packed = 0;
        for (std::size_t c = 0; c < k; ++c) {
          const auto m = static_cast<std::int64_t>(spec.moduli[c]);
          std::int64_t v = 0;
          for (std::size_t j = 0; j < width; ++j) v = (v + (spec.matrix[i][j] % m) * digits[x[j]][c]) % m;
          v = (v + m) % m;
          packed = packed * static_cast<std::uint64_t>(m) + static_cast<std::uint64_t>(v);
        }
        y[i] = static_cast<std::uint32_t>(packed);
        zero = zero && packed == 0;
      }
      if (zero) ++kernel;
      tables[s][y] += Rational(1, branches);
    }
  }
  if (kernel > 1) {
    throw Error("homomorphism is not injective: its kernel has " + std::to_string(kernel) + " elements");
  }
  return ClassicalScheme(std::vector<std::uint32_t>(n, static_cast<std::uint32_t>(order)), std::move(tables),
                         std::move(structure));
}

bool homomorphic_dichotomy_check(const ClassicalScheme& sch, PlayerSet u) {
  const int n = sch.players();
  if (!u.subset_of(PlayerSet::all(n))) throw Error("set " + u.to_string() + " mentions unknown players");
  const PlayerSet q = u.complement(n);
  // Joint law of (Y_u, Y_q) under a uniform secret; the common factor 1/|S| cancels.
  std::map<Word, std::map<Word, Rational>> joint;
  std::map<Word, Rational> pq;
  for (std::uint32_t s = 0; s < sch.secrets(); ++s) {
    for (const auto& [y, prob] : sch.table(s)) {
      const Word yq = restrict_word(y, q);
      joint[yq][restrict_word(y, u)] += prob;
      pq[yq] += prob;
    }
  }
  for (const auto& [yq, level] : joint) {
    const Rational first = level.begin()->second / pq.at(yq);
    for (const auto& [yu, prob] : level) {
      if (prob / pq.at(yq) != first) return false;
    }
  }
  return true;
}

std::string to_string(SchemeFamily f) {
  switch (f) {
    case SchemeFamily::kGeneral:
      return "general";
    case SchemeFamily::kFunctionOfYq:
      return "function-of-yq";
    case SchemeFamily::kHomomorphic:
      return "homomorphic";
  }
  throw std::logic_error("unknown scheme family");
}

SchemeFamily parse_family(const std::string& name) {
  for (auto f : {SchemeFamily::kGeneral, SchemeFamily::kFunctionOfYq, SchemeFamily::kHomomorphic}) {
    if (to_string(f) == name) return f;
  }
  throw Error("unknown scheme family '" + name + "' (general, function-of-yq, homomorphic)");
}

namespace {

const PlayerSet kSearchU{1};

AdversaryStructure search_structure() { return AdversaryStructure(2, {kSearchU}); }

// All ways to write `total` as `parts` nonnegative integers, in lex order.
std::vector<std::vector<std::uint32_t>> compositions(std::uint32_t total, std::size_t parts) {
  std::vector<std::vector<std::uint32_t>> out;
  if (parts == 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  std::vector<std::uint32_t> cur(parts, 0);
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (i + 1 == parts) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (std::uint32_t v = 0; v <= left; ++v) {
      cur[i] = v;
      self(self, i + 1, left - v);
    }
  };
  rec(rec, 0, total);
  return out;
}

bool next_map(std::vector<std::uint32_t>& g, std::uint32_t range) {
  for (std::size_t i = g.size(); i-- > 0;) {
    if (++g[i] < range) return true;
    g[i] = 0;
  }
  return false;
}

bool surjective(const std::vector<std::uint32_t>& g, std::uint32_t range) {
  std::vector<bool> hit(range, false);
  for (std::uint32_t v : g) hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

// counts[s][a][c] units of 1/den on (y1 = a, y2 = fibers[s][c]).
ClassicalScheme assemble(std::uint32_t y1_size, std::uint32_t y2_size, std::uint32_t den,
                         const std::vector<std::vector<std::uint32_t>>& fibers,
                         const std::vector<std::vector<std::vector<std::uint32_t>>>& counts) {
  std::vector<std::map<Word, Rational>> tables(fibers.size());
  for (std::size_t s = 0; s < fibers.size(); ++s) {
    for (std::uint32_t a = 0; a < y1_size; ++a) {
      for (std::size_t c = 0; c < fibers[s].size(); ++c) {
        const std::uint32_t units = counts[s][a][c];
        if (units > 0) tables[s][Word{a, fibers[s][c]}] = Rational(units, den);
      }
    }
  }
  return ClassicalScheme({y1_size, y2_size}, std::move(tables), search_structure());
}

bool y1_is_function_of_y2(const ClassicalScheme& sch) {
  for (std::uint32_t s = 0; s < sch.secrets(); ++s) {
    std::map<std::uint32_t, std::uint32_t> seen;
    for (const auto& [y, prob] : sch.table(s)) {
      const auto [it, inserted] = seen.emplace(y[1], y[0]);
      if (!inserted && it->second != y[0]) return false;
    }
  }
  return true;
}

// Returns true and fills `result` when `sch` fails eq1.
bool probe(const ClassicalScheme& sch, SearchResult& result) {
  ++result.candidates;
  const Eq1Result eq1 = eq1_check(sch, kSearchU);
  if (eq1.independent) return false;
  const LiftResult lift = lift_and_test(sch, kSearchU);
  if (lift.agree) throw std::logic_error("eq1 and the lifted oracle disagree on a search candidate");
  result.scheme = sch;
  result.eq1 = eq1;
  result.lift = lift;
  return true;
}

void validate_bounds(const SearchBounds& b) {
  if (b.secrets < 1 || b.secrets > 8) throw Error("secret count must be in [1, 8]");
  if (b.max_share_size < 1 || b.max_share_size > 6) throw Error("share size bound must be in [1, 6]");
  if (b.max_denominator < 1 || b.max_denominator > 16) throw Error("denominator bound must be in [1, 16]");
}

SearchResult search_tables(const SearchBounds& bounds) {
  SearchResult result;
  const std::uint32_t secrets = bounds.secrets;
  for (std::uint32_t den = 1; den <= bounds.max_denominator; ++den) {
    for (std::uint32_t y1 = 1; y1 <= std::min(den, bounds.max_share_size); ++y1) {
      for (std::uint32_t y2 = secrets; y2 <= bounds.max_share_size; ++y2) {
        std::vector<std::uint32_t> g(y2, 0);
        do {
          if (!surjective(g, secrets)) continue;
          std::vector<std::vector<std::uint32_t>> fibers(secrets);
          for (std::uint32_t c = 0; c < y2; ++c) fibers[g[c]].push_back(c);
          for (auto pi : compositions(den - y1, y1)) {
            for (auto& v : pi) ++v;
            // One slot per (s, a), each choosing how pi[a] splits over the fiber of s.
            std::vector<std::vector<std::vector<std::uint32_t>>> options;
            for (std::uint32_t s = 0; s < secrets; ++s) {
              for (std::uint32_t a = 0; a < y1; ++a) options.push_back(compositions(pi[a], fibers[s].size()));
            }
            std::vector<std::size_t> pick(options.size(), 0);
            while (true) {
              std::vector<std::vector<std::vector<std::uint32_t>>> counts(secrets);
              for (std::uint32_t s = 0; s < secrets; ++s) {
                for (std::uint32_t a = 0; a < y1; ++a) {
                  const std::size_t slot = s * y1 + a;
                  counts[s].push_back(options[slot][pick[slot]]);
                }
              }
              const ClassicalScheme sch = assemble(y1, y2, den, fibers, counts);
              if ((bounds.family == SchemeFamily::kGeneral || y1_is_function_of_y2(sch)) && probe(sch, result)) {
                return result;
              }
              std::size_t i = pick.size();
              while (i-- > 0) {
                if (++pick[i] < options[i].size()) break;
                pick[i] = 0;
              }
              if (i == static_cast<std::size_t>(-1)) break;
            }
          }
        } while (next_map(g, secrets));
      }
    }
  }
  return result;
}

void factorizations(std::uint32_t rest, std::uint32_t min_factor, std::vector<std::uint32_t>& cur,
                    std::vector<std::vector<std::uint32_t>>& out) {
  if (rest == 1) {
    if (!cur.empty()) out.push_back(cur);
    return;
  }
  for (std::uint32_t f = min_factor; f <= rest; ++f) {
    if (rest % f != 0) continue;
    cur.push_back(f);
    factorizations(rest / f, f, cur, out);
    cur.pop_back();
  }
}

// h : G x G^m -> G^2 can only be injective for m <= 1.
SearchResult search_homomorphic(const SearchBounds& bounds) {
  SearchResult result;
  if (bounds.secrets > bounds.max_share_size) return result;
  std::vector<std::vector<std::uint32_t>> groups;
  std::vector<std::uint32_t> cur;
  factorizations(bounds.secrets, 2, cur, groups);
  for (const auto& moduli : groups) {
    const std::uint32_t range = *std::max_element(moduli.begin(), moduli.end());
    for (std::size_t width = 1; width <= 2; ++width) {
      if (width == 2 && bounds.secrets > bounds.max_denominator) continue;
      std::vector<std::uint32_t> entries(2 * width, 0);
      do {
        HomomorphicSpec spec{moduli, {}};
        for (std::size_t i = 0; i < 2; ++i) {
          spec.matrix.emplace_back(entries.begin() + static_cast<std::ptrdiff_t>(i * width),
                                   entries.begin() + static_cast<std::ptrdiff_t>((i + 1) * width));
        }
        std::optional<ClassicalScheme> sch;
        try {
          sch = homomorphic_scheme(spec, search_structure());
        } catch (const Error&) {
          continue;
        }
        if (!check_correctness(*sch, PlayerSet{2}) || !check_secrecy(*sch, kSearchU)) continue;
        if (probe(*sch, result)) return result;
      } while (next_map(entries, range));
    }
  }
  return result;
}

}  // namespace

SearchResult search_counterexample(const SearchBounds& bounds) {
  validate_bounds(bounds);
  if (bounds.family == SchemeFamily::kHomomorphic) return search_homomorphic(bounds);
  return search_tables(bounds);
}

ClassicalScheme random_valid_scheme(SeededRng& rng, const SearchBounds& bounds) {
  validate_bounds(bounds);
  if (bounds.secrets > bounds.max_share_size) throw Error("Y_2 is too small to determine the secret");
  const auto secrets = static_cast<std::uint32_t>(1 + rng.below(bounds.secrets));
  const auto y1 = static_cast<std::uint32_t>(1 + rng.below(bounds.max_share_size));
  const auto y2 = static_cast<std::uint32_t>(secrets + rng.below(bounds.max_share_size - secrets + 1));
  const auto den = static_cast<std::uint32_t>(1 + rng.below(bounds.max_denominator));

  std::vector<std::uint32_t> g(y2);
  do {
    for (auto& v : g) v = static_cast<std::uint32_t>(rng.below(secrets));
  } while (!surjective(g, secrets));
  std::vector<std::vector<std::uint32_t>> fibers(secrets);
  for (std::uint32_t c = 0; c < y2; ++c) fibers[g[c]].push_back(c);

  std::vector<std::uint32_t> pi(y1, 0);
  for (std::uint32_t unit = 0; unit < den; ++unit) ++pi[rng.below(y1)];
  std::vector<std::vector<std::vector<std::uint32_t>>> counts(secrets);
  for (std::uint32_t s = 0; s < secrets; ++s) {
    for (std::uint32_t a = 0; a < y1; ++a) {
      std::vector<std::uint32_t> split(fibers[s].size(), 0);
      for (std::uint32_t unit = 0; unit < pi[a]; ++unit) ++split[rng.below(split.size())];
      counts[s].push_back(std::move(split));
    }
  }
  return assemble(y1, y2, den, fibers, counts);
}

}  // namespace qss
