#include "boolfrac/relations.hpp"

#include <algorithm>
#include <set>

#include "boolfrac/error.hpp"

namespace boolfrac {

namespace {

// Conditions in the closure are b, d or b∨d, so it has at most 3·2^n members.
constexpr std::size_t kMaxSubalgebraAtoms = 6;

struct Parts {
  Event ab, b, cd, d;
};

Parts parts(const Conditional& x, const Conditional& y) {
  require_same_space(x.condition(), y.condition());
  return {x.consequent(), x.condition(), y.consequent(), y.condition()};
}

bool tr(const Parts& p) { return leq(p.ab, p.cd); }
bool nf(const Parts& p) { return leq(~p.cd & p.d, ~p.ab & p.b); }
bool ap(const Parts& p) { return leq(p.b, p.d); }

}  // namespace

std::string_view to_string(Relation rel) {
  switch (rel) {
    case Relation::kTr: return "tr";
    case Relation::kNf: return "nf";
    case Relation::kAp: return "ap";
    case Relation::kPm: return "pm";
    case Relation::kVee: return "vee";
    case Relation::kWedge: return "wedge";
    case Relation::kBo: return "bo";
  }
  return "?";
}

std::optional<Relation> parse_relation(std::string_view tag) {
  for (Relation rel : {Relation::kTr, Relation::kNf, Relation::kAp, Relation::kPm, Relation::kVee,
                       Relation::kWedge, Relation::kBo}) {
    if (to_string(rel) == tag) return rel;
  }
  return std::nullopt;
}

bool holds(Relation rel, const Conditional& x, const Conditional& y) {
  const Parts p = parts(x, y);
  switch (rel) {
    case Relation::kTr: return tr(p);
    case Relation::kNf: return nf(p);
    case Relation::kAp: return ap(p);
    case Relation::kPm: return tr(p) && nf(p);
    case Relation::kVee: return ap(p) && tr(p);
    case Relation::kWedge: return leq(p.d, p.b) && nf(p);
    case Relation::kBo: return p.b == p.d && tr(p);
  }
  return false;
}

bool orthogonal(const Conditional& x, const Conditional& y) {
  const Parts p = parts(x, y);
  return leq(p.ab, ~p.cd & p.d) && leq(p.cd, ~p.ab & p.b);
}

Conditional ortho_family_member(const Conditional& c, const Event& x, const Event& y) {
  const Event& ab = c.consequent();
  const Event a_false_b = c.falsity();
  return Conditional::make(a_false_b & x, ab | y);
}

bool sim_verifiable(const Conditional& x, const Conditional& y) {
  const Parts p = parts(x, y);
  return leq(p.ab, p.d) && leq(p.cd, p.b);
}

bool sim_falsifiable(const Conditional& x, const Conditional& y) {
  const Parts p = parts(x, y);
  return leq(~p.ab & p.b, p.d) && leq(~p.cd & p.d, p.b);
}

bool compatible(const Conditional& x, const Conditional& y) {
  const Parts p = parts(x, y);
  return p.b == p.d;
}

bool in_common_subalgebra(const Conditional& x, const Conditional& y) {
  return compatible(x, y) && !x.condition().empty();
}

VerifiabilityProfile profile(const Conditional& x, const Conditional& y) {
  const Parts p = parts(x, y);
  const Event a_false = ~p.ab & p.b;
  const Event b_false = ~p.cd & p.d;
  VerifiabilityProfile out;
  out.flags[0] = leq(p.ab, p.d);
  out.flags[1] = leq(a_false, p.d);
  out.flags[2] = leq(p.ab, p.d) && leq(p.cd, p.b);
  out.flags[3] = leq(b_false, p.b) && leq(a_false, p.d);
  out.flags[4] = leq(a_false, p.d) && leq(p.cd, p.b);
  out.flags[5] = leq(p.b, p.d);
  out.flags[6] = p.b == p.d;
  return out;
}

Subalgebra generated_subalgebra(const Conditional& x, const Conditional& y) {
  require_same_space(x.condition(), y.condition());
  const std::size_t n = x.condition().space_size();
  if (n > kMaxSubalgebraAtoms) {
    throw Error(ErrorKind::kTooLarge, "subalgebra closure is limited to 6 atoms");
  }
  std::size_t cap = 1;
  for (std::size_t i = 0; i < n; ++i) cap *= 3;

  std::set<Conditional> closure{x, y};
  std::vector<Conditional> pending{x, y};
  std::vector<Conditional> seen;
  auto add = [&](const Conditional& c) {
    if (closure.insert(c).second) pending.push_back(c);
  };
  while (!pending.empty() && closure.size() <= cap) {
    const Conditional next = pending.back();
    pending.pop_back();
    seen.push_back(next);
    add(negation(next));
    for (const auto& other : seen) {
      add(conjunction(next, other));
      add(disjunction(next, other));
    }
  }

  Subalgebra out;
  out.members.assign(closure.begin(), closure.end());

  const Conditional one = disjunction(x, negation(x));
  const Conditional nil = conjunction(x, negation(x));
  if (one == nil || !closure.contains(one) || !closure.contains(nil)) return out;
  for (const auto& m : out.members) {
    const Conditional m_neg = negation(m);
    if (disjunction(m, m_neg) != one || conjunction(m, m_neg) != nil) return out;
    if (conjunction(m, one) != m || disjunction(m, nil) != m) return out;
  }
  for (const auto& p : out.members) {
    for (const auto& q : out.members) {
      for (const auto& r : out.members) {
        if (conjunction(p, disjunction(q, r)) != disjunction(conjunction(p, q), conjunction(p, r))) return out;
        if (disjunction(p, conjunction(q, r)) != conjunction(disjunction(p, q), disjunction(p, r))) return out;
      }
    }
  }
  out.is_boolean = true;
  return out;
}

}  // namespace boolfrac
