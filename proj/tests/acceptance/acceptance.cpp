// Acceptance run: one PASS/FAIL line per criterion. Every numeric comparison
// is exact (rational equality, zero tolerance); each criterion also has a
// wall-clock limit, pinned below.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "boolfrac/lang.hpp"
#include "boolfrac/lawcheck.hpp"
#include "boolfrac/probability.hpp"
#include "boolfrac/truth.hpp"

using namespace boolfrac;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

SpaceDoc load_die() {
  std::ifstream in(BOOLFRAC_DIE_FILE);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_space(text.str());
}

const SpaceDoc& die() {
  static const SpaceDoc doc = load_die();
  return doc;
}

const Measure& uniform() { return *die().find_measure("uniform"); }

Event atoms(std::initializer_list<std::string> names) {
  const std::vector<std::string> v(names);
  return die().space().event(v);
}

Conditional lowered(const char* text) { return lower(parse_expr(text), die()); }

std::string show(const Rational& r) { return format_rational(r); }

Outcome die_bet() {
  Outcome o;
  const Conditional bet = lowered("(two|even) or (lt4|lt5)");
  o.expect(bet == Conditional::make(atoms({"1", "2", "3"}), atoms({"1", "2", "3", "4", "6"})),
           "normal form " + format_conditional(bet, die().space()));
  const Rational p = p_cond(uniform(), bet).value();
  o.expect(p == Rational(3, 5), "probability " + show(p));
  return o;
}

Outcome expanded_context() {
  Outcome o;
  const Rational p = p_cond(uniform(), lowered("(even|even) or (five|odd)")).value();
  o.expect(p == Rational(2, 3), "probability " + show(p));
  return o;
}

Outcome formula_terms() {
  Outcome o;
  const OrFormula f = p_or_formula(uniform(), lowered("two|even"), lowered("lt4|lt5"));
  o.expect(f.first == Rational(1, 3), "P(a|b)");
  o.expect(f.first_weight == Rational(3, 5), "P(b|b or d) = " + show(f.first_weight));
  o.expect(f.second == Rational(3, 4), "P(c|d)");
  o.expect(f.second_weight == Rational(4, 5), "P(d|b or d) = " + show(f.second_weight));
  o.expect(f.overlap == Rational(1, 2), "P(abcd|bd)");
  o.expect(f.overlap_weight == Rational(2, 5), "P(bd|b or d) = " + show(f.overlap_weight));
  const Rational sum = Rational(1, 3) * Rational(3, 5) + Rational(3, 4) * Rational(4, 5) - Rational(1, 2) * Rational(2, 5);
  o.expect(sum == Rational(3, 5), "term-by-term sum " + show(sum));
  o.expect(f.value.value() == Rational(3, 5), "formula value " + f.value.str());
  return o;
}

Outcome additive_counterexample() {
  Outcome o;
  const AdditiveReport r = additive_law_check(uniform(), atoms({"1"}), *die().find_event("odd"), atoms({"2"}),
                                              *die().find_event("even"));
  o.expect(r.lhs.value() == Rational(1, 3), "lhs " + r.lhs.str());
  o.expect(r.rhs == Rational(1, 3) + Rational(1, 3), "rhs " + show(r.rhs));
  o.expect(r.lhs.value() != r.rhs, "lhs equals rhs");
  o.expect(!r.holds, "reported as holding");
  o.expect(!r.any_case(), "a null-set case was reported");
  return o;
}

Outcome truth_tables() {
  Outcome o;
  // Reference tables; rows are the first operand, columns the second, in T F U order.
  constexpr std::array<const char*, 3> kAnd = {"TFT", "FFF", "TFU"};
  constexpr std::array<const char*, 3> kOr = {"TTT", "TFF", "TFU"};
  constexpr std::array<const char*, 3> kGiven = {"TUT", "FUF", "UUU"};
  constexpr const char* kNot = "FTU";
  int entries = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const TruthValue p = kTruthValues[i];
    o.expect(to_char(tt_not(p)) == kNot[i], "not entry");
    ++entries;
    for (std::size_t j = 0; j < 3; ++j) {
      const TruthValue q = kTruthValues[j];
      o.expect(to_char(tt_and(p, q)) == kAnd[i][j], "and entry");
      o.expect(to_char(tt_or(p, q)) == kOr[i][j], "or entry");
      o.expect(to_char(tt_given(p, q)) == kGiven[i][j], "given entry");
      entries += 3;
    }
  }
  o.expect(entries == 30, "entry count");
  const LawReport r = check(LawId::kTruthTables, 4);
  o.expect(r.passed, "pointwise sweep failed");
  o.expect(r.instances_checked == 81 * 81, "sweep covered " + std::to_string(r.instances_checked) + " pairs");
  return o;
}

Outcome law_suite() {
  Outcome o;
  const auto reports = check_all(3);
  o.expect(reports.size() == 27, "report count");
  for (const auto& r : reports) {
    o.expect(r.passed, std::string(to_string(r.law)) + " failed");
    o.expect(r.atom_count == 3, std::string(to_string(r.law)) + " ran at the wrong size");
  }
  return o;
}

Outcome triple_laws() {
  Outcome o;
  for (LawId law : {LawId::kConjunctionDistributivity, LawId::kDisjunctionDistributivity,
                    LawId::kDisjunctionModularity, LawId::kConjunctionModularity, LawId::kSasakiProjection,
                    LawId::kCompatibility}) {
    const LawReport r = check(law, 4);
    o.expect(r.passed, std::string(to_string(law)) + " failed");
    o.expect(r.instances_checked >= 81u * 81u * 81u, std::string(to_string(law)) + " covered too few triples");
  }
  return o;
}

Outcome probabilistic_laws() {
  Outcome o;
  CheckOptions grid;
  grid.max_weight = 3;
  for (LawId law : {LawId::kAdditiveLaw, LawId::kSuperposition}) {
    const LawReport r = check(law, 3, grid);
    o.expect(r.passed, std::string(to_string(law)) + " failed");
  }
  o.expect(enumerate_measures(SampleSpace({"1", "2", "3"}), 3).size() == 63, "grid size");
  return o;
}

Outcome decomposition_oracle() {
  Outcome o;
  const LawReport r = check(LawId::kSimultaneousVerifiability, 3);
  o.expect(r.passed, "inequalities and decomposition search disagree");
  o.expect(r.instances_checked == 729, "pair count " + std::to_string(r.instances_checked));
  return o;
}

Outcome mutation_sensitivity() {
  Outcome o;
  const std::string command = std::string(BOOLFRAC_MUTANT_CLI) + " check --law all --atoms 3";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) {
    o.expect(false, "cannot run the mutated command line");
    return o;
  }
  std::string output;
  std::array<char, 4096> buffer{};
  while (std::size_t n = std::fread(buffer.data(), 1, buffer.size(), pipe)) output.append(buffer.data(), n);
  const int status = pclose(pipe);
  o.expect(WIFEXITED(status) && WEXITSTATUS(status) == 1, "mutant exit status");
  o.expect(output.find("\nFAIL ") != std::string::npos || output.rfind("FAIL ", 0) == 0, "no law failed");
  o.expect(output.find("  lhs: ") != std::string::npos && output.find("  rhs: ") != std::string::npos,
           "no counterexample printed");
  return o;
}

struct Criterion {
  int number;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "die bet lowers to ({1,2,3}|{1,2,3,4,6}) with probability 3/5", 1, die_bet},
      {2, "expanded context (even|even) or (five|odd) has probability 2/3", 1, expanded_context},
      {3, "disjunction formula terms (1/3)(3/5) + (3/4)(4/5) - (1/2)(2/5) = 3/5", 1, formula_terms},
      {4, "additive law fails for 1 given odd or 2 given even: 1/3 vs 2/3, no case", 1, additive_counterexample},
      {5, "truth tables match, pointwise sweep at 4 atoms passes", 30, truth_tables},
      {6, "check --law all --atoms 3 passes every catalog law", 120, law_suite},
      {7, "triple-quantified laws pass over all 81^3 triples at 4 atoms", 120, triple_laws},
      {8, "additive law and superposition pass over the {0..3}^3 weight grid", 300, probabilistic_laws},
      {9, "decomposition search agrees with ab <= d and cd <= b on all pairs at 3 atoms", 300, decomposition_oracle},
      {10, "dropping the abd' term of the conjunction makes a law fail with a counterexample", 120,
       mutation_sensitivity},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.limit_seconds) o.expect(false, "over the time limit");
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (o.ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.name << " [" << seconds << " s, limit "
         << c.limit_seconds << " s]";
    if (!o.ok) line << " -- " << o.detail;
    std::cout << line.str() << std::endl;
    if (!o.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
