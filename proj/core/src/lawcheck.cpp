#include "boolfrac/lawcheck.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <initializer_list>
#include <set>
#include <variant>

#include "boolfrac/error.hpp"
#include "boolfrac/lang.hpp"
#include "boolfrac/relations.hpp"
#include "boolfrac/schay.hpp"
#include "boolfrac/truth.hpp"

namespace boolfrac {

namespace {

struct LawInfo {
  LawId law;
  std::string_view id;
  std::size_t max_atoms;
  std::string_view statement;
};

constexpr std::array<LawInfo, 27> kCatalog = {{
    {LawId::kConjunctionDistributivity, "t2.4", 4,
     "x and (y or z) = (x and y) or (x and z)  iff  (ab)(e'f) <= d and (ab)(c'd) <= f"},
    {LawId::kDisjunctionDistributivity, "c2.5", 4,
     "x or (y and z) = (x or y) and (x or z)  iff  (a'b)(ef) <= d and (a'b)(cd) <= f"},
    {LawId::kDisjunctionModularity, "t2.6", 4,
     "x or (y and z) = (x or y) and z  iff  (ab)(e'f) = 0 and (a'b)(ef) <= d"},
    {LawId::kConjunctionModularity, "c2.7", 4,
     "x and (y or z) = (x and y) or z  iff  (a'b)(ef) = 0 and (ab)(e'f) <= d"},
    {LawId::kWeakModularity, "c2.8", 4, "x and (x' or z) = z  iff  b <= f and a'b <= e'f"},
    {LawId::kWeakDualModularity, "c2.9", 4, "x or (x' and z) = z  iff  b <= f and ab <= ef"},
    {LawId::kBasicProperties, "props2.3", 4,
     "or/and associative, commutative, idempotent; de Morgan; (0|1), (1|1), U and relative complement "
     "laws; double negation; x and y = y and (x | y); conditioning distributes over and"},
    {LawId::kAdditiveLaw, "t2.13", 3,
     "P((A|C1) or (B|C2)) = P(A|C1) + P(B|C2)  iff  one of the four null-set cases holds"},
    {LawId::kOrthogonalFamily, "t2.18", 4,
     "{z : z orthogonal to (a|b)} = {(a'bx | ab or y)}; orthogonality = (0|b or d) conjunction = pm to negation"},
    {LawId::kOrthogonalClosure, "t2.19", 4, "the conditionals orthogonal to c are closed under or and and"},
    {LawId::kRelativeComplement, "p2.20", 4,
     "negation is a bijection, reverses pm, is involutive, and is a relative complement within (B|b)"},
    {LawId::kTruthTables, "truth-tables", 4,
     "pointwise 3-valued evaluation of not/and/or/given agrees with the truth tables; tables are "
     "commutative/associative/idempotent with de Morgan"},
    {LawId::kSuperposition, "superposition", 3,
     "superposition identities on conditionals; disjunction and superposition formulas equal the direct "
     "probabilities; or = and iff (ab)(c'd) = 0 = (a'b)(cd); partition expansion"},
    {LawId::kSimultaneousVerifiability, "t3.2", 3,
     "an orthogonal decomposition x = x1 or e, y = e or y1 exists  iff  ab <= d and cd <= b"},
    {LawId::kVerifiabilityByConjunction, "c3.3", 4, "x <-> y  iff  x and y = (abcd | b or d)"},
    {LawId::kSimultaneousFalsifiability, "c3.5", 4, "x' <-> y'  iff  a'b <= d and c'd <= b"},
    {LawId::kVerifiableAndFalsifiable, "c3.6", 4, "x <-> y and x' <-> y'  iff  b = d"},
    {LawId::kBooleanSubalgebra, "t3.7", 3, "x, y generate a Boolean subalgebra  iff  b = d != 0"},
    {LawId::kSubalgebraByVerifiability, "c3.8", 3,
     "x <-> y and x' <-> y'  iff  x, y generate a Boolean subalgebra (excluding U, U)"},
    {LawId::kNegationUniqueness, "t3.9", 4,
     "x and y = (0|b or d) and x or y = (1|b or d)  iff  b = d and y = x'"},
    {LawId::kOrthoSum, "t3.11", 4, "x + (0|b) = x; x + x' = (1|b) with x' the unique such summand; x + x = (0|b)"},
    {LawId::kSasakiProjection, "t3.15", 4,
     "closed-form projection = b and (b' or a); fixed-point and zero criteria; idempotence; composition laws"},
    {LawId::kSasakiRelations, "c3.16", 4,
     "b o a = a iff a <=wedge b; b o a = (0|a2 or b2) iff a <=tr b'; b o b = b"},
    {LawId::kCompatibility, "t3.17", 4,
     "b or a = b or (b' o a); projection distributes over or; commutation, conjunction and bo criteria; "
     "negation criterion; closure of compatibility under or/and of families"},
    {LawId::kSchayLattices, "schay-lattice", 4,
     "(cap_s, cup_s) and (and_s, or_s) each form a distributive lattice; ~ is involutive"},
    {LawId::kSchayCoincidence, "schay-coincide", 4,
     "cup_s = or, and_s = and, ~ = negation; the long form of cup_s equals the simplified form"},
    {LawId::kSchayIteration, "schay-2.12", 4, "((B | A or B) | B') = (B | AB') = (0|A) for disjoint A, B"},
}};

const LawInfo& info(LawId law) {
  return *std::find_if(kCatalog.begin(), kCatalog.end(), [&](const LawInfo& i) { return i.law == law; });
}

std::vector<std::string> numbered_atoms(std::size_t n) {
  std::vector<std::string> atoms;
  for (std::size_t i = 1; i <= n; ++i) atoms.push_back(std::to_string(i));
  return atoms;
}

using Value = std::variant<Conditional, Event, std::string>;

struct Named {
  const char* name;
  Value value;
};

class Sweep {
 public:
  Sweep(LawId law, std::size_t atoms, const CheckOptions& options)
      : space_(numbered_atoms(atoms)),
        conds_(enumerate_conditionals(space_)),
        events_(enumerate_events(space_)),
        options_(options) {
    report_.law = law;
    report_.atom_count = atoms;
  }

  const SampleSpace& space() const { return space_; }
  const std::vector<Conditional>& conds() const { return conds_; }
  const std::vector<Event>& events() const { return events_; }
  const CheckOptions& options() const { return options_; }
  Event omega() const { return space_.universe(); }
  Event none() const { return space_.none(); }

  bool ok() const { return report_.passed; }
  void tick(std::uint64_t k = 1) { report_.instances_checked += k; }
  void note(std::string text) { report_.notes.push_back(std::move(text)); }
  LawReport take() { return std::move(report_); }

  std::string show(const Value& v) const {
    if (const auto* c = std::get_if<Conditional>(&v)) return format_conditional(*c, space_);
    if (const auto* e = std::get_if<Event>(&v)) return format_event(*e, space_);
    return std::get<std::string>(v);
  }

  void fail(std::string_view claim, std::initializer_list<Named> inputs, const Value& lhs, const Value& rhs,
            std::string detail = {}) {
    if (!report_.passed) return;
    Counterexample cx;
    cx.claim = std::string(claim);
    for (const auto& in : inputs) cx.inputs.emplace_back(in.name, show(in.value));
    cx.lhs = show(lhs);
    cx.rhs = show(rhs);
    cx.detail = std::move(detail);
    report_.passed = false;
    report_.counterexample = std::move(cx);
  }

  bool equal(std::string_view claim, std::initializer_list<Named> inputs, const Conditional& lhs,
             const Conditional& rhs) {
    if (lhs == rhs) return true;
    fail(claim, inputs, lhs, rhs);
    return false;
  }

  /// Both directions of `lhs = rhs  iff  side`.
  bool iff(std::string_view claim, std::initializer_list<Named> inputs, const Conditional& lhs,
           const Conditional& rhs, bool side) {
    const bool equation = lhs == rhs;
    if (equation == side) return true;
    fail(claim, inputs, lhs, rhs,
         std::string("equation ") + (equation ? "holds" : "fails") + " but side condition " +
             (side ? "holds" : "fails"));
    return false;
  }

  bool same(std::string_view claim, std::initializer_list<Named> inputs, bool left, bool right) {
    if (left == right) return true;
    fail(claim, inputs, std::string(left ? "true" : "false"), std::string(right ? "true" : "false"));
    return false;
  }

  bool holds(std::string_view claim, std::initializer_list<Named> inputs, bool value) {
    if (value) return true;
    fail(claim, inputs, std::string("false"), std::string("true"));
    return false;
  }

 private:
  SampleSpace space_;
  std::vector<Conditional> conds_;
  std::vector<Event> events_;
  CheckOptions options_;
  LawReport report_;
};

template <class F>
void each(Sweep& s, F&& f) {
  for (const auto& x : s.conds()) {
    s.tick();
    f(x);
    if (!s.ok()) return;
  }
}

template <class F>
void each_pair(Sweep& s, F&& f) {
  for (const auto& x : s.conds()) {
    for (const auto& y : s.conds()) {
      s.tick();
      f(x, y);
      if (!s.ok()) return;
    }
  }
}

template <class F>
void each_triple(Sweep& s, F&& f) {
  for (const auto& x : s.conds()) {
    for (const auto& y : s.conds()) {
      for (const auto& z : s.conds()) {
        s.tick();
        f(x, y, z);
        if (!s.ok()) return;
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Distributivity and modularity

void conjunction_distributivity(Sweep& s) {
  each_triple(s, [&](const Conditional& x, const Conditional& y, const Conditional& z) {
    const Event& ab = x.consequent();
    const bool side = leq(ab & z.falsity(), y.condition()) && leq(ab & y.falsity(), z.condition());
    s.iff(info(LawId::kConjunctionDistributivity).statement, {{"x", x}, {"y", y}, {"z", z}},
          conjunction(x, disjunction(y, z)), disjunction(conjunction(x, y), conjunction(x, z)), side);
  });
}

void disjunction_distributivity(Sweep& s) {
  each_triple(s, [&](const Conditional& x, const Conditional& y, const Conditional& z) {
    const Event a_false = x.falsity();
    const bool side = leq(a_false & z.consequent(), y.condition()) && leq(a_false & y.consequent(), z.condition());
    s.iff(info(LawId::kDisjunctionDistributivity).statement, {{"x", x}, {"y", y}, {"z", z}},
          disjunction(x, conjunction(y, z)), conjunction(disjunction(x, y), disjunction(x, z)), side);
  });
}

void disjunction_modularity(Sweep& s) {
  each_triple(s, [&](const Conditional& x, const Conditional& y, const Conditional& z) {
    const bool side = (x.consequent() & z.falsity()).empty() && leq(x.falsity() & z.consequent(), y.condition());
    s.iff(info(LawId::kDisjunctionModularity).statement, {{"x", x}, {"y", y}, {"z", z}},
          disjunction(x, conjunction(y, z)), conjunction(disjunction(x, y), z), side);
  });
}

void conjunction_modularity(Sweep& s) {
  each_triple(s, [&](const Conditional& x, const Conditional& y, const Conditional& z) {
    const bool side = (x.falsity() & z.consequent()).empty() && leq(x.consequent() & z.falsity(), y.condition());
    s.iff(info(LawId::kConjunctionModularity).statement, {{"x", x}, {"y", y}, {"z", z}},
          conjunction(x, disjunction(y, z)), disjunction(conjunction(x, y), z), side);
  });
}

void weak_modularity(Sweep& s) {
  each_pair(s, [&](const Conditional& x, const Conditional& z) {
    const bool side = leq(x.condition(), z.condition()) && leq(x.falsity(), z.falsity());
    s.iff(info(LawId::kWeakModularity).statement, {{"x", x}, {"z", z}},
          conjunction(x, disjunction(negation(x), z)), z, side);
  });
}

void weak_dual_modularity(Sweep& s) {
  each_pair(s, [&](const Conditional& x, const Conditional& z) {
    const bool side = leq(x.condition(), z.condition()) && leq(x.consequent(), z.consequent());
    s.iff(info(LawId::kWeakDualModularity).statement, {{"x", x}, {"z", z}},
          disjunction(x, conjunction(negation(x), z)), z, side);
  });
}

// ---------------------------------------------------------------------------
// Basic algebraic properties

void basic_properties(Sweep& s) {
  const Event omega = s.omega();
  const Conditional absolute_zero = zero(omega);
  const Conditional absolute_one = unit(omega);
  const Conditional u = undefined(s.space());

  each(s, [&](const Conditional& c) {
    const Event& b = c.condition();
    const Event ab = c.consequent();
    s.equal("x or x = x", {{"x", c}}, disjunction(c, c), c) &&
        s.equal("x and x = x", {{"x", c}}, conjunction(c, c), c) &&
        s.equal("x and (0|1) = (0|1)", {{"x", c}}, conjunction(c, absolute_zero), absolute_zero) &&
        s.equal("x or (0|1) = (ab|1)", {{"x", c}}, disjunction(c, absolute_zero), plain(ab)) &&
        s.equal("x or (1|1) = (1|1)", {{"x", c}}, disjunction(c, absolute_one), absolute_one) &&
        s.equal("x and (1|1) = (a or b'|1)", {{"x", c}}, conjunction(c, absolute_one), plain(ab | ~b)) &&
        s.equal("x or x' = (1|b)", {{"x", c}}, disjunction(c, negation(c)), unit(b)) &&
        s.equal("x and x' = (0|b)", {{"x", c}}, conjunction(c, negation(c)), zero(b)) &&
        s.equal("x'' = x", {{"x", c}}, negation(negation(c)), c) &&
        s.equal("x or U = x", {{"x", c}}, disjunction(c, u), c) &&
        s.equal("x and U = x", {{"x", c}}, conjunction(c, u), c);
  });
  if (!s.ok()) return;

  each_pair(s, [&](const Conditional& x, const Conditional& y) {
    s.equal("x or y = y or x", {{"x", x}, {"y", y}}, disjunction(x, y), disjunction(y, x)) &&
        s.equal("x and y = y and x", {{"x", x}, {"y", y}}, conjunction(x, y), conjunction(y, x)) &&
        s.equal("(x or y)' = x' and y'", {{"x", x}, {"y", y}}, negation(disjunction(x, y)),
                conjunction(negation(x), negation(y))) &&
        s.equal("(x and y)' = x' or y'", {{"x", x}, {"y", y}}, negation(conjunction(x, y)),
                disjunction(negation(x), negation(y))) &&
        s.equal("x and y = y and (x | y)", {{"x", x}, {"y", y}}, conjunction(x, y),
                conjunction(y, given(x, y)));
  });
  if (!s.ok()) return;

  each_triple(s, [&](const Conditional& x, const Conditional& y, const Conditional& z) {
    s.equal("(x or y) or z = x or (y or z)", {{"x", x}, {"y", y}, {"z", z}}, disjunction(disjunction(x, y), z),
            disjunction(x, disjunction(y, z))) &&
        s.equal("(x and y) and z = x and (y and z)", {{"x", x}, {"y", y}, {"z", z}},
                conjunction(conjunction(x, y), z), conjunction(x, conjunction(y, z)));
  });
  if (!s.ok()) return;

  // Conditioning a conjunction on a plain state conditions each conjunct.
  for (const auto& x : s.conds()) {
    for (const auto& y : s.conds()) {
      for (const auto& state : s.events()) {
        s.tick();
        const Conditional st = plain(state);
        if (!s.equal("(x and y | s) = (x | s) and (y | s)", {{"x", x}, {"y", y}, {"s", state}},
                     given(conjunction(x, y), st), conjunction(given(x, st), given(y, st)))) {
          return;
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Additive law

void additive_law(Sweep& s) {
  const auto measures = enumerate_measures(s.space(), s.options().max_weight);
  const auto& events = s.events();
  for (std::size_t mi = 0; mi < measures.size(); ++mi) {
    const Measure& m = measures[mi];
    std::string weights;
    for (const auto& w : m.weights()) weights += (weights.empty() ? "" : " ") + format_rational(w);
    for (const auto& c1 : events) {
      if (m.weight(c1) == 0) continue;
      for (const auto& c2 : events) {
        if (m.weight(c2) == 0) continue;
        for (const auto& a : events) {
          for (const auto& b : events) {
            s.tick();
            const AdditiveReport r = additive_law_check(m, a, c1, b, c2);
            if (r.holds != r.any_case()) {
              s.fail(info(LawId::kAdditiveLaw).statement,
                     {{"weights", weights}, {"A", a}, {"C1", c1}, {"B", b}, {"C2", c2}},
                     std::string("P(or) = ") + r.lhs.str(), std::string("sum = ") + format_rational(r.rhs),
                     std::string("additive law ") + (r.holds ? "holds" : "fails") + " but cases " +
                         (r.any_case() ? "hold" : "fail"));
              return;
            }
          }
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Orthogonality

std::set<Conditional> orthogonal_set(const Sweep& s, const Conditional& c) {
  std::set<Conditional> out;
  for (const auto& z : s.conds()) {
    if (orthogonal(c, z)) out.insert(z);
  }
  return out;
}

void orthogonal_family(Sweep& s) {
  each_pair(s, [&](const Conditional& x, const Conditional& y) {
    const bool by_sets = orthogonal(x, y);
    const bool by_conjunction = conjunction(x, y) == zero(x.condition() | y.condition());
    const bool by_pm = holds(Relation::kPm, x, negation(y));
    s.same("orthogonal(x, y) iff x and y = (0|b or d)", {{"x", x}, {"y", y}}, by_sets, by_conjunction) &&
        s.same("orthogonal(x, y) iff x <=pm y'", {{"x", x}, {"y", y}}, by_sets, by_pm);
  });
  if (!s.ok()) return;

  for (const auto& c : s.conds()) {
    const std::set<Conditional> direct = orthogonal_set(s, c);
    std::set<Conditional> family;
    for (const auto& ex : s.events()) {
      for (const auto& ey : s.events()) {
        s.tick();
        family.insert(ortho_family_member(c, ex, ey));
      }
    }
    for (const auto& z : family) {
      if (!direct.contains(z)) {
        s.fail("every (a'bx | ab or y) is orthogonal to (a|b)", {{"c", c}}, z, std::string("not orthogonal"));
        return;
      }
    }
    for (const auto& z : direct) {
      if (!family.contains(z)) {
        s.fail("every conditional orthogonal to (a|b) has the form (a'bx | ab or y)", {{"c", c}}, z,
               std::string("not in family"));
        return;
      }
    }
  }
}

void orthogonal_closure(Sweep& s) {
  for (const auto& c : s.conds()) {
    const std::set<Conditional> ortho = orthogonal_set(s, c);
    for (const auto& p : ortho) {
      for (const auto& q : ortho) {
        s.tick();
        const Conditional either = disjunction(p, q);
        const Conditional both = conjunction(p, q);
        if (!ortho.contains(either)) {
          s.fail("orthogonal set closed under or", {{"c", c}, {"p", p}, {"q", q}}, either,
                 std::string("not orthogonal to c"));
          return;
        }
        if (!ortho.contains(both)) {
          s.fail("orthogonal set closed under and", {{"c", c}, {"p", p}, {"q", q}}, both,
                 std::string("not orthogonal to c"));
          return;
        }
      }
    }
  }
}

void relative_complement(Sweep& s) {
  std::set<Conditional> image;
  each(s, [&](const Conditional& c) {
    image.insert(negation(c));
    s.equal("x'' = x", {{"x", c}}, negation(negation(c)), c) &&
        s.equal("x and x' = (0|b)", {{"x", c}}, conjunction(c, negation(c)), zero(c.condition())) &&
        s.equal("x or x' = (1|b)", {{"x", c}}, disjunction(c, negation(c)), unit(c.condition()));
  });
  if (!s.ok()) return;
  if (image.size() != s.conds().size()) {
    s.fail("negation is one-to-one and onto", {}, std::to_string(image.size()) + " images",
           std::to_string(s.conds().size()) + " conditionals");
    return;
  }
  each_pair(s, [&](const Conditional& x, const Conditional& y) {
    if (holds(Relation::kPm, x, y)) {
      s.holds("x <=pm y implies y' <=pm x'", {{"x", x}, {"y", y}}, holds(Relation::kPm, negation(y), negation(x)));
    }
  });
}

// ---------------------------------------------------------------------------
// Three-valued semantics

void truth_tables(Sweep& s) {
  for (TruthValue p : kTruthValues) {
    if (tt_not(tt_not(p)) != p) {
      s.fail("not is involutive", {}, std::string(1, to_char(tt_not(tt_not(p)))), std::string(1, to_char(p)));
      return;
    }
    for (TruthValue q : kTruthValues) {
      const auto show = [](TruthValue v) { return std::string(1, to_char(v)); };
      if (tt_and(p, q) != tt_and(q, p) || tt_or(p, q) != tt_or(q, p)) {
        s.fail("and/or tables are commutative", {{"p", show(p)}, {"q", show(q)}}, show(tt_and(p, q)),
               show(tt_and(q, p)));
        return;
      }
      if (tt_not(tt_and(p, q)) != tt_or(tt_not(p), tt_not(q)) || tt_not(tt_or(p, q)) != tt_and(tt_not(p), tt_not(q))) {
        s.fail("de Morgan through the not table", {{"p", show(p)}, {"q", show(q)}}, show(tt_not(tt_and(p, q))),
               show(tt_or(tt_not(p), tt_not(q))));
        return;
      }
      for (TruthValue r : kTruthValues) {
        if (tt_and(tt_and(p, q), r) != tt_and(p, tt_and(q, r)) || tt_or(tt_or(p, q), r) != tt_or(p, tt_or(q, r))) {
          s.fail("and/or tables are associative", {{"p", show(p)}, {"q", show(q)}, {"r", show(r)}},
                 show(tt_and(tt_and(p, q), r)), show(tt_and(p, tt_and(q, r))));
          return;
        }
      }
    }
    if (tt_and(p, p) != p || tt_or(p, p) != p) {
      s.fail("and/or tables are idempotent", {}, std::string(1, to_char(tt_and(p, p))), std::string(1, to_char(p)));
      return;
    }
  }

  const std::size_t n = s.space().size();
  each_pair(s, [&](const Conditional& x, const Conditional& y) {
    const Conditional both = conjunction(x, y);
    const Conditional either = disjunction(x, y);
    const Conditional cond = given(x, y);
    const Conditional neg = negation(x);
    for (std::size_t w = 0; w < n; ++w) {
      const TruthValue p = eval_at(x, w);
      const TruthValue q = eval_at(y, w);
      const std::string state = s.space().atom(w);
      const auto show = [](TruthValue v) { return std::string(1, to_char(v)); };
      const std::pair<const char*, std::pair<TruthValue, TruthValue>> checks[] = {
          {"and agrees with its table at every state", {eval_at(both, w), tt_and(p, q)}},
          {"or agrees with its table at every state", {eval_at(either, w), tt_or(p, q)}},
          {"given agrees with its table at every state", {eval_at(cond, w), tt_given(p, q)}},
          {"not agrees with its table at every state", {eval_at(neg, w), tt_not(p)}},
      };
      for (const auto& [claim, values] : checks) {
        if (values.first != values.second) {
          s.fail(claim, {{"x", x}, {"y", y}, {"state", state}}, show(values.first), show(values.second));
          return;
        }
      }
    }
  });
}

// ---------------------------------------------------------------------------
// Superposition

void superposition(Sweep& s) {
  each_pair(s, [&](const Conditional& x, const Conditional& y) {
    const Event& ab = x.consequent();
    const Event& b = x.condition();
    const Event& cd = y.consequent();
    const Event& d = y.condition();
    const Event either = b | d;
    const Conditional x_or_y = disjunction(x, y);
    const Conditional x_and_y = conjunction(x, y);
    const Conditional two_term = disjunction(conjunction(x, Conditional::make(b, either)),
                                             conjunction(y, Conditional::make(d, either)));
    const Conditional regions = disjunction(conjunction(x, Conditional::make(b & ~d, either)),
                                            conjunction(y, Conditional::make(~b & d, either)));
    const Conditional or_three = disjunction(regions, Conditional::make((ab | cd) & b & d, either));
    const Conditional and_three = disjunction(regions, Conditional::make(ab & cd, either));
    const bool non_conflicting = (ab & y.falsity()).empty() && (x.falsity() & cd).empty();
    s.equal("x or y = x(b|b or d) or y(d|b or d)", {{"x", x}, {"y", y}}, x_or_y, two_term) &&
        s.equal("x or y = x(bd'|b or d) or y(b'd|b or d) or ((a or c)bd|b or d)", {{"x", x}, {"y", y}}, x_or_y,
                or_three) &&
        s.equal("x and y = x(bd'|b or d) or y(b'd|b or d) or ((a and c)bd|b or d)", {{"x", x}, {"y", y}}, x_and_y,
                and_three) &&
        s.iff("x or y = x and y  iff  (ab)(c'd) = 0 = (a'b)(cd)", {{"x", x}, {"y", y}}, x_or_y, x_and_y,
              non_conflicting);
  });
  if (!s.ok()) return;

  const auto measures = enumerate_measures(s.space(), s.options().max_weight);
  for (const auto& m : measures) {
    std::string weights;
    for (const auto& w : m.weights()) weights += (weights.empty() ? "" : " ") + format_rational(w);
    for (const auto& x : s.conds()) {
      for (const auto& y : s.conds()) {
        if (m.weight(x.condition() | y.condition()) == 0) continue;
        s.tick();
        const Rational direct_or = p_cond(m, disjunction(x, y)).value();
        const Rational direct_and = p_cond(m, conjunction(x, y)).value();
        const Rational formula = p_or_formula(m, x, y).value.value();
        const Rational sup_or = p_superposition(m, x, y, SuperpositionMode::kOr).value.value();
        const Rational sup_and = p_superposition(m, x, y, SuperpositionMode::kAnd).value.value();
        const std::pair<const char*, std::pair<Rational, Rational>> checks[] = {
            {"disjunction formula = P(x or y)", {formula, direct_or}},
            {"or-superposition = P(x or y)", {sup_or, direct_or}},
            {"and-superposition = P(x and y)", {sup_and, direct_and}},
        };
        for (const auto& [claim, values] : checks) {
          if (values.first != values.second) {
            s.fail(claim, {{"weights", weights}, {"x", x}, {"y", y}}, format_rational(values.first),
                   format_rational(values.second));
            return;
          }
        }
      }
    }
    // P(a|u) = sum_i P(a|u_i) P(u_i|u) over two-block partitions.
    for (const auto& a : s.events()) {
      for (const auto& u1 : s.events()) {
        for (const auto& u2 : s.events()) {
          if (!(u1 & u2).empty() || m.weight(u1 | u2) == 0) continue;
          s.tick();
          const Event parts[] = {u1, u2};
          const Rational expanded = partition_expansion(m, a, parts).value();
          const Rational direct = p_cond(m, Conditional::make(a, u1 | u2)).value();
          if (expanded != direct) {
            s.fail("P(a|u) = sum P(a|u_i)P(u_i|u)", {{"weights", weights}, {"a", a}, {"u1", u1}, {"u2", u2}},
                   format_rational(expanded), format_rational(direct));
            return;
          }
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Simultaneous verifiability

bool decomposition_exists(const Sweep& s, const Conditional& x, const Conditional& y) {
  std::vector<const Conditional*> lefts;
  std::vector<const Conditional*> rights;
  for (const auto& shared : s.conds()) {
    lefts.clear();
    rights.clear();
    for (const auto& candidate : s.conds()) {
      if (orthogonal(candidate, shared) && disjunction(candidate, shared) == x) lefts.push_back(&candidate);
      if (orthogonal(shared, candidate) && disjunction(shared, candidate) == y) rights.push_back(&candidate);
    }
    for (const auto* l : lefts) {
      for (const auto* r : rights) {
        if (orthogonal(*l, *r)) return true;
      }
    }
  }
  return false;
}

void simultaneous_verifiability(Sweep& s) {
  each_pair(s, [&](const Conditional& x, const Conditional& y) {
    const bool by_inequalities = leq(x.consequent(), y.condition()) && leq(y.consequent(), x.condition());
    s.same("sim_verifiable matches ab <= d and cd <= b", {{"x", x}, {"y", y}}, sim_verifiable(x, y),
           by_inequalities) &&
        s.same(info(LawId::kSimultaneousVerifiability).statement, {{"x", x}, {"y", y}},
               decomposition_exists(s, x, y), by_inequalities);
  });
}

void verifiability_by_conjunction(Sweep& s) {
  each_pair(s, [&](const Conditional& x, const Conditional& y) {
    const Conditional both_true = Conditional::make(x.consequent() & y.consequent(), x.condition() | y.condition());
    s.iff(info(LawId::kVerifiabilityByConjunction).statement, {{"x", x}, {"y", y}}, conjunction(x, y), both_true,
          sim_verifiable(x, y));
  });
}

void simultaneous_falsifiability(Sweep& s) {
  each_pair(s, [&](const Conditional& x, const Conditional& y) {
    const bool by_inequalities = leq(x.falsity(), y.condition()) && leq(y.falsity(), x.condition());
    const bool by_definition = sim_verifiable(negation(x), negation(y));
    s.same(info(LawId::kSimultaneousFalsifiability).statement, {{"x", x}, {"y", y}}, by_definition,
           by_inequalities) &&
        s.same("sim_falsifiable matches its definition", {{"x", x}, {"y", y}}, sim_falsifiable(x, y),
               by_definition);
  });
}

void verifiable_and_falsifiable(Sweep& s) {
  each_pair(s, [&](const Conditional& x, const Conditional& y) {
    s.same(info(LawId::kVerifiableAndFalsifiable).statement, {{"x", x}, {"y", y}},
           sim_verifiable(x, y) && sim_falsifiable(x, y), x.condition() == y.condition()) &&
        s.same("compatible iff b = d", {{"x", x}, {"y", y}}, compatible(x, y), x.condition() == y.condition());
  });
}

void boolean_subalgebra(Sweep& s) {
  each_pair(s, [&](const Conditional& x, const Conditional& y) {
    const bool equal_nonzero = x.condition() == y.condition() && !x.condition().empty();
    const Subalgebra sub = generated_subalgebra(x, y);
    if (!s.same(info(LawId::kBooleanSubalgebra).statement, {{"x", x}, {"y", y}}, sub.is_boolean, equal_nonzero) ||
        !s.same("in_common_subalgebra iff b = d != 0", {{"x", x}, {"y", y}}, in_common_subalgebra(x, y),
                equal_nonzero)) {
      return;
    }
    if (equal_nonzero) {
      for (const auto& m : sub.members) {
        if (m.condition() != x.condition()) {
          s.fail("equal conditions generate only conditionals with that condition", {{"x", x}, {"y", y}}, m,
                 x.condition());
          return;
        }
      }
    }
  });
}

void subalgebra_by_verifiability(Sweep& s) {
  each_pair(s, [&](const Conditional& x, const Conditional& y) {
    if (x.is_undefined() && y.is_undefined()) return;
    s.same(info(LawId::kSubalgebraByVerifiability).statement, {{"x", x}, {"y", y}},
           sim_verifiable(x, y) && sim_falsifiable(x, y), generated_subalgebra(x, y).is_boolean);
  });
}

void negation_uniqueness(Sweep& s) {
  each_pair(s, [&](const Conditional& x, const Conditional& y) {
    const Event either = x.condition() | y.condition();
    const bool complementary = conjunction(x, y) == zero(either) && disjunction(x, y) == unit(either);
    const bool is_negation = x.condition() == y.condition() && y == negation(x);
    s.same(info(LawId::kNegationUniqueness).statement, {{"x", x}, {"y", y}}, complementary, is_negation);
  });
}

// ---------------------------------------------------------------------------
// Orthoalgebra sum

void ortho_sum(Sweep& s) {
  each(s, [&](const Conditional& c) {
    const Event& b = c.condition();
    s.equal("x + (0|b) = x", {{"x", c}}, osum(c, zero(b)), c) &&
        s.equal("x + x' = (1|b)", {{"x", c}}, osum(c, negation(c)), unit(b)) &&
        s.equal("x + x = (0|b)", {{"x", c}}, osum(c, c), zero(b));
  });
  if (!s.ok()) return;
  each_pair(s, [&](const Conditional& x, const Conditional& z) {
    if (osum(x, z) == unit(x.condition())) {
      s.equal("x + z = (1|b) only for z = x'", {{"x", x}, {"z", z}}, z, negation(x));
    }
  });
  if (!s.ok()) return;

  // Associativity of the total sum is reported, not asserted.
  for (const auto& x : s.conds()) {
    for (const auto& y : s.conds()) {
      for (const auto& z : s.conds()) {
        const Conditional left = osum(osum(x, y), z);
        const Conditional right = osum(x, osum(y, z));
        if (left != right) {
          s.note("total sum is not associative: x=" + s.show(x) + " y=" + s.show(y) + " z=" + s.show(z) +
                 " gives " + s.show(left) + " vs " + s.show(right));
          return;
        }
      }
    }
  }
  s.note("total sum is associative on this space");
}

// ---------------------------------------------------------------------------
// Sasaki projection

void sasaki_projection(Sweep& s) {
  each_pair(s, [&](const Conditional& a, const Conditional& b) {
    const Conditional proj = sasaki(b, a);
    const Event& a1a2 = a.consequent();
    const Event& a2 = a.condition();
    const Event& b2 = b.condition();
    const bool fixed_side = leq(b2, a2) && leq(b.falsity(), a.falsity());
    const bool zero_side = leq(a1a2, b.falsity());
    s.equal("b o a = b and (b' or a)", {{"a", a}, {"b", b}}, proj, conjunction(b, disjunction(negation(b), a))) &&
        s.iff("b o a = a  iff  b2 <= a2 and b1'b2 <= a1'a2", {{"a", a}, {"b", b}}, proj, a, fixed_side) &&
        s.iff("b o a = (0|a2 or b2)  iff  a1a2 <= b1'b2", {{"a", a}, {"b", b}}, proj, zero(a2 | b2), zero_side) &&
        s.equal("b o (b o a) = b o a", {{"a", a}, {"b", b}}, sasaki(b, proj), proj);
  });
  if (!s.ok()) return;
  each_triple(s, [&](const Conditional& a, const Conditional& b, const Conditional& c) {
    const Conditional c_after_b = sasaki(c, sasaki(b, a));
    s.equal("c o (b o a) = (b and c) o a", {{"a", a}, {"b", b}, {"c", c}}, c_after_b,
            sasaki(conjunction(b, c), a)) &&
        s.equal("c o (b o a) = b o (c o a)", {{"a", a}, {"b", b}, {"c", c}}, c_after_b, sasaki(b, sasaki(c, a)));
  });
}

void sasaki_relations(Sweep& s) {
  each_pair(s, [&](const Conditional& a, const Conditional& b) {
    const Conditional proj = sasaki(b, a);
    const bool wedge = holds(Relation::kWedge, a, b);
    s.same("a <=wedge b iff a and b = a", {{"a", a}, {"b", b}}, wedge, conjunction(a, b) == a) &&
        s.iff("b o a = a  iff  a <=wedge b", {{"a", a}, {"b", b}}, proj, a, wedge) &&
        s.iff("b o a = (0|a2 or b2)  iff  a <=tr b'", {{"a", a}, {"b", b}}, proj,
              zero(a.condition() | b.condition()), holds(Relation::kTr, a, negation(b)));
  });
  if (!s.ok()) return;
  each(s, [&](const Conditional& b) { s.equal("b o b = b", {{"b", b}}, sasaki(b, b), b); });
}

// ---------------------------------------------------------------------------
// Compatibility

template <class Related>
void check_family_closure(Sweep& s, std::string_view reading, Related related) {
  for (const auto& c : s.conds()) {
    std::vector<Conditional> members;
    for (const auto& z : s.conds()) {
      if (related(c, z)) members.push_back(z);
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i; j < members.size(); ++j) {
        for (std::size_t k = j; k <= members.size(); ++k) {
          // k == size() encodes the two-member family {i, j}; i == j covers singletons.
          s.tick();
          Conditional any = disjunction(members[i], members[j]);
          Conditional all = conjunction(members[i], members[j]);
          if (k < members.size()) {
            any = disjunction(any, members[k]);
            all = conjunction(all, members[k]);
          }
          const std::string family = s.show(members[i]) + " " + s.show(members[j]) +
                                     (k < members.size() ? " " + s.show(members[k]) : "");
          if (!related(c, any)) {
            s.fail(std::string(reading) + " is preserved by disjunction of a family", {{"c", c}, {"family", family}},
                   any, std::string("unrelated to c"));
            return;
          }
          if (!related(c, all)) {
            s.fail(std::string(reading) + " is preserved by conjunction of a family", {{"c", c}, {"family", family}},
                   all, std::string("unrelated to c"));
            return;
          }
        }
      }
    }
  }
}

void compatibility(Sweep& s) {
  each_pair(s, [&](const Conditional& a, const Conditional& b) {
    const Conditional proj = sasaki(b, a);
    const Event& a2 = a.condition();
    const Event& b2 = b.condition();
    s.equal("b or a = b or (b' o a)", {{"a", a}, {"b", b}}, disjunction(b, a),
            disjunction(b, sasaki(negation(b), a))) &&
        s.iff("b o a = a o b  iff  b <-> a", {{"a", a}, {"b", b}}, proj, sasaki(a, b), sim_verifiable(b, a)) &&
        s.iff("b o a = b and a  iff  b1b2 <= a2", {{"a", a}, {"b", b}}, proj, conjunction(b, a),
              leq(b.consequent(), a2)) &&
        s.same("b o a <=bo a  iff  b2 <= a2", {{"a", a}, {"b", b}}, holds(Relation::kBo, proj, a), leq(b2, a2));
    if (!s.ok()) return;
    if (sim_verifiable(b, a)) {
      s.same("given b <-> a: b' <-> a  iff  b2 <= a2", {{"a", a}, {"b", b}}, sim_verifiable(negation(b), a),
             leq(b2, a2));
    }
    if (!s.ok()) return;
    if (leq(b2, a2) && leq(a.consequent(), b2)) {
      s.holds("b2 <= a2 and a1a2 <= b2 imply b <-> a and b' <-> a", {{"a", a}, {"b", b}},
              sim_verifiable(b, a) && sim_verifiable(negation(b), a));
    }
  });
  if (!s.ok()) return;

  each_triple(s, [&](const Conditional& a, const Conditional& b, const Conditional& c) {
    s.equal("c o (b or a) = (c o b) or (c o a)", {{"a", a}, {"b", b}, {"c", c}}, sasaki(c, disjunction(b, a)),
            disjunction(sasaki(c, b), sasaki(c, a)));
  });
  if (!s.ok()) return;

  check_family_closure(s, "simultaneous verifiability", [](const Conditional& c, const Conditional& z) {
    return sim_verifiable(c, z);
  });
  if (!s.ok()) return;
  check_family_closure(s, "compatibility", [](const Conditional& c, const Conditional& z) {
    return compatible(c, z);
  });
}

// ---------------------------------------------------------------------------
// Schay's systems

template <class Meet, class Join>
void check_distributive_lattice(Sweep& s, std::string_view name, Meet meet_op, Join join_op) {
  const std::string prefix = std::string(name) + ": ";
  each_pair(s, [&](const Conditional& x, const Conditional& y) {
    s.equal(prefix + "meet idempotent", {{"x", x}}, meet_op(x, x), x) &&
        s.equal(prefix + "join idempotent", {{"x", x}}, join_op(x, x), x) &&
        s.equal(prefix + "meet commutative", {{"x", x}, {"y", y}}, meet_op(x, y), meet_op(y, x)) &&
        s.equal(prefix + "join commutative", {{"x", x}, {"y", y}}, join_op(x, y), join_op(y, x)) &&
        s.equal(prefix + "x meet (x join y) = x", {{"x", x}, {"y", y}}, meet_op(x, join_op(x, y)), x) &&
        s.equal(prefix + "x join (x meet y) = x", {{"x", x}, {"y", y}}, join_op(x, meet_op(x, y)), x);
  });
  if (!s.ok()) return;
  each_triple(s, [&](const Conditional& x, const Conditional& y, const Conditional& z) {
    const std::initializer_list<Named> in = {{"x", x}, {"y", y}, {"z", z}};
    s.equal(prefix + "meet associative", in, meet_op(meet_op(x, y), z), meet_op(x, meet_op(y, z))) &&
        s.equal(prefix + "join associative", in, join_op(join_op(x, y), z), join_op(x, join_op(y, z))) &&
        s.equal(prefix + "meet distributes over join", in, meet_op(x, join_op(y, z)),
                join_op(meet_op(x, y), meet_op(x, z))) &&
        s.equal(prefix + "join distributes over meet", in, join_op(x, meet_op(y, z)),
                meet_op(join_op(x, y), join_op(x, z)));
  });
}

void schay_lattices(Sweep& s) {
  each(s, [&](const Conditional& x) { s.equal("~~x = x", {{"x", x}}, schay::tilde(schay::tilde(x)), x); });
  if (!s.ok()) return;
  check_distributive_lattice(s, "(cap_s, cup_s)", schay::cap, schay::cup);
  if (!s.ok()) return;
  check_distributive_lattice(s, "(and_s, or_s)", schay::wedge, schay::vee);
}

void schay_coincidence(Sweep& s) {
  each_pair(s, [&](const Conditional& x, const Conditional& y) {
    s.equal("cup_s = or", {{"x", x}, {"y", y}}, schay::cup(x, y), disjunction(x, y)) &&
        s.equal("and_s = and", {{"x", x}, {"y", y}}, schay::wedge(x, y), conjunction(x, y)) &&
        s.equal("~ = negation", {{"x", x}}, schay::tilde(x), negation(x));
  });
  if (!s.ok()) return;
  // Raw, unnormalized pairs: the long form of cup_s against its simplification.
  const auto& ev = s.events();
  for (const auto& a : ev) {
    for (const auto& b : ev) {
      for (const auto& c : ev) {
        for (const auto& d : ev) {
          s.tick();
          const Conditional long_form =
              Conditional::make(((a | c) & b & d) | (a & b & ~d) | (~b & c & d), b | d);
          const Conditional simplified = Conditional::make((a & b) | (c & d), b | d);
          const Conditional via_op = schay::cup(Conditional::make(a, b), Conditional::make(c, d));
          if (!s.equal("long-form cup_s = simplified cup_s", {{"A", a}, {"B", b}, {"C", c}, {"D", d}}, long_form,
                       simplified) ||
              !s.equal("cup_s of normal forms = simplified cup_s of raw pairs", {{"A", a}, {"B", b}, {"C", c}, {"D", d}},
                       via_op, simplified)) {
            return;
          }
        }
      }
    }
  }
}

void schay_iteration(Sweep& s) {
  for (const auto& a : s.events()) {
    for (const auto& b : s.events()) {
      s.tick();
      if (!(a & b).empty()) {
        bool rejected = false;
        try {
          (void)schay::iteration_example(a, b);
        } catch (const Error& e) {
          rejected = e.kind() == ErrorKind::kNotDisjoint;
        }
        if (!s.holds("overlapping A, B are rejected", {{"A", a}, {"B", b}}, rejected)) return;
        continue;
      }
      const Conditional inner = Conditional::make(b, a | b);
      const Conditional iterated = given(inner, plain(~b));
      if (!s.equal("((B | A or B) | B') = (B | AB')", {{"A", a}, {"B", b}}, iterated,
                   Conditional::make(b, a & ~b)) ||
          !s.equal("((B | A or B) | B') = (0|A)", {{"A", a}, {"B", b}}, iterated, zero(a)) ||
          !s.equal("iteration_example returns (0|A)", {{"A", a}, {"B", b}}, schay::iteration_example(a, b),
                   zero(a))) {
        return;
      }
    }
  }
}

void run(LawId law, Sweep& s) {
  switch (law) {
    case LawId::kConjunctionDistributivity: return conjunction_distributivity(s);
    case LawId::kDisjunctionDistributivity: return disjunction_distributivity(s);
    case LawId::kDisjunctionModularity: return disjunction_modularity(s);
    case LawId::kConjunctionModularity: return conjunction_modularity(s);
    case LawId::kWeakModularity: return weak_modularity(s);
    case LawId::kWeakDualModularity: return weak_dual_modularity(s);
    case LawId::kBasicProperties: return basic_properties(s);
    case LawId::kAdditiveLaw: return additive_law(s);
    case LawId::kOrthogonalFamily: return orthogonal_family(s);
    case LawId::kOrthogonalClosure: return orthogonal_closure(s);
    case LawId::kRelativeComplement: return relative_complement(s);
    case LawId::kTruthTables: return truth_tables(s);
    case LawId::kSuperposition: return superposition(s);
    case LawId::kSimultaneousVerifiability: return simultaneous_verifiability(s);
    case LawId::kVerifiabilityByConjunction: return verifiability_by_conjunction(s);
    case LawId::kSimultaneousFalsifiability: return simultaneous_falsifiability(s);
    case LawId::kVerifiableAndFalsifiable: return verifiable_and_falsifiable(s);
    case LawId::kBooleanSubalgebra: return boolean_subalgebra(s);
    case LawId::kSubalgebraByVerifiability: return subalgebra_by_verifiability(s);
    case LawId::kNegationUniqueness: return negation_uniqueness(s);
    case LawId::kOrthoSum: return ortho_sum(s);
    case LawId::kSasakiProjection: return sasaki_projection(s);
    case LawId::kSasakiRelations: return sasaki_relations(s);
    case LawId::kCompatibility: return compatibility(s);
    case LawId::kSchayLattices: return schay_lattices(s);
    case LawId::kSchayCoincidence: return schay_coincidence(s);
    case LawId::kSchayIteration: return schay_iteration(s);
  }
}

constexpr std::size_t kMaxConditionalAtoms = 5;

}  // namespace

std::string_view to_string(LawId law) { return info(law).id; }

std::optional<LawId> parse_law(std::string_view id) {
  for (const auto& i : kCatalog) {
    if (i.id == id) return i.law;
  }
  return std::nullopt;
}

std::span<const LawId> all_laws() {
  static const std::vector<LawId> laws = [] {
    std::vector<LawId> out;
    for (const auto& i : kCatalog) out.push_back(i.law);
    return out;
  }();
  return laws;
}

std::vector<LawId> parse_law_selector(std::string_view id) {
  if (id == "all") return {all_laws().begin(), all_laws().end()};
  if (auto law = parse_law(id)) return {*law};
  throw Error(ErrorKind::kUnknownLaw, "unknown law '" + std::string(id) + "'");
}

std::size_t max_atoms(LawId law) { return info(law).max_atoms; }

std::string_view describe(LawId law) { return info(law).statement; }

std::vector<Conditional> enumerate_conditionals(const SampleSpace& space) {
  if (space.size() > kMaxConditionalAtoms) {
    throw Error(ErrorKind::kTooLarge, "conditional enumeration is limited to 5 atoms");
  }
  std::vector<Conditional> out;
  const std::uint64_t count = std::uint64_t{1} << space.size();
  for (std::uint64_t cond = 0; cond < count; ++cond) {
    // Submasks of `cond` in ascending order.
    std::uint64_t sub = 0;
    for (;;) {
      out.push_back(Conditional::make(space.event(sub), space.event(cond)));
      if (sub == cond) break;
      sub = (sub - cond) & cond;
    }
  }
  return out;
}

std::vector<Measure> enumerate_measures(const SampleSpace& space, int max_weight) {
  if (max_weight < 0) throw Error(ErrorKind::kBadWeight, "grid maximum must be nonnegative");
  const std::size_t n = space.size();
  std::vector<Measure> out;
  std::vector<int> digits(n, 0);
  for (;;) {
    int total = 0;
    for (int d : digits) total += d;
    if (total > 0) {
      std::vector<Rational> weights;
      for (int d : digits) weights.emplace_back(d);
      out.emplace_back(space, std::move(weights));
    }
    // Increment with the last atom as the least significant digit.
    std::size_t i = n;
    while (i > 0 && digits[i - 1] == max_weight) digits[--i] = 0;
    if (i == 0) break;
    ++digits[i - 1];
  }
  return out;
}

LawReport check(LawId law, std::size_t atoms, const CheckOptions& options) {
  if (atoms > max_atoms(law)) {
    throw Error(ErrorKind::kTooLarge, std::string(to_string(law)) + " is limited to " +
                                          std::to_string(max_atoms(law)) + " atoms");
  }
  if (atoms == 0) throw Error(ErrorKind::kInvalidSpace, "a sample space needs at least one atom");
  Sweep sweep(law, atoms, options);
  run(law, sweep);
  return sweep.take();
}

std::vector<LawReport> check_all(std::size_t atoms, const CheckOptions& options) {
  std::vector<LawReport> reports;
  for (LawId law : all_laws()) reports.push_back(check(law, std::min(atoms, max_atoms(law)), options));
  return reports;
}

}  // namespace boolfrac
