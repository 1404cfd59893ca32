#include "boolfrac/error.hpp"
#include "boolfrac/lang.hpp"
#include "boolfrac/schay.hpp"

namespace boolfrac {

namespace {

Event resolve_set(const Expr& e, const SpaceDoc& doc) { return doc.space().event(e.atoms); }

Event resolve_ref(const Expr& e, const SpaceDoc& doc) {
  if (const Event* found = doc.find_event(e.name)) return *found;
  throw Error(ErrorKind::kUnknownName, "unknown event '" + e.name + "'");
}

Conditional apply(Func f, const Conditional& lhs, const Conditional& rhs) {
  switch (f) {
    case Func::kOsum: return osum(lhs, rhs);
    case Func::kProj: return sasaki(lhs, rhs);
    case Func::kSchayAnd: return schay::wedge(lhs, rhs);
    case Func::kSchayOr: return schay::vee(lhs, rhs);
    case Func::kSchayCap: return schay::cap(lhs, rhs);
    case Func::kSchayCup: return schay::cup(lhs, rhs);
  }
  throw std::logic_error("unhandled function");
}

}  // namespace

Conditional lower(const Expr& e, const SpaceDoc& doc) {
  switch (e.kind) {
    case Expr::Kind::kRef: return plain(resolve_ref(e, doc));
    case Expr::Kind::kSet: return plain(resolve_set(e, doc));
    case Expr::Kind::kNot: return negation(lower(e.operands[0], doc));
    case Expr::Kind::kAnd: return conjunction(lower(e.operands[0], doc), lower(e.operands[1], doc));
    case Expr::Kind::kOr: return disjunction(lower(e.operands[0], doc), lower(e.operands[1], doc));
    case Expr::Kind::kGiven: return given(lower(e.operands[0], doc), lower(e.operands[1], doc));
    case Expr::Kind::kFunc: return apply(e.func, lower(e.operands[0], doc), lower(e.operands[1], doc));
  }
  throw std::logic_error("unhandled expression kind");
}

Event lower_event(const Expr& e, const SpaceDoc& doc) {
  switch (e.kind) {
    case Expr::Kind::kRef: return resolve_ref(e, doc);
    case Expr::Kind::kSet: return resolve_set(e, doc);
    case Expr::Kind::kNot: return ~lower_event(e.operands[0], doc);
    case Expr::Kind::kAnd: return lower_event(e.operands[0], doc) & lower_event(e.operands[1], doc);
    case Expr::Kind::kOr: return lower_event(e.operands[0], doc) | lower_event(e.operands[1], doc);
    case Expr::Kind::kGiven:
    case Expr::Kind::kFunc:
      break;
  }
  throw Error(ErrorKind::kParse, "an event definition may only use '~', 'and' and 'or'");
}

std::string format_conditional(const Conditional& c, const SampleSpace& space) {
  if (c.is_undefined()) return "UNDEFINED";
  return to_literal_expr(c, space);
}

std::string to_literal_expr(const Conditional& c, const SampleSpace& space) {
  return "(" + format_event(c.consequent(), space) + "|" + format_event(c.condition(), space) + ")";
}

}  // namespace boolfrac
