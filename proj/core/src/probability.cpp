#include "boolfrac/probability.hpp"

#include "boolfrac/error.hpp"

namespace boolfrac {

namespace {

using boost::multiprecision::cpp_int;

void require_space(const Measure& m, const Event& e) {
  if (m.space_id() != e.space_id()) {
    throw Error(ErrorKind::kSpaceMismatch, "event and measure belong to different sample spaces");
  }
}

Rational ratio_or_throw(const Rational& num, const Rational& den) {
  if (den == 0) throw Error(ErrorKind::kZeroCondition, "undefined: condition has probability 0");
  return num / den;
}

std::optional<Rational> ratio(const Rational& num, const Rational& den) {
  if (den == 0) return std::nullopt;
  return num / den;
}

Rational product(const std::optional<Rational>& factor, const Rational& weight) {
  return factor ? *factor * weight : Rational(0);
}

}  // namespace

std::string format_rational(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string format_decimal(const Rational& r, int digits) {
  cpp_int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const bool negative = r < 0;
  const cpp_int num = abs(numerator(r));
  const cpp_int den = denominator(r);
  cpp_int scaled = (num * scale * 2 + den) / (den * 2);
  const cpp_int whole = scaled / scale;
  std::string frac = cpp_int(scaled % scale).str();
  if (static_cast<int>(frac.size()) < digits) frac.insert(0, digits - frac.size(), '0');
  std::string out = negative && scaled != 0 ? "-" : "";
  out += whole.str();
  if (digits > 0) out += "." + frac;
  return out;
}

Measure::Measure(const SampleSpace& space, std::vector<Rational> weights)
    : space_id_(space.id()), weights_(std::move(weights)) {
  if (weights_.size() != space.size()) {
    throw Error(ErrorKind::kBadWeight, "expected " + std::to_string(space.size()) + " weights, got " +
                                           std::to_string(weights_.size()));
  }
  for (const auto& w : weights_) {
    if (w < 0) throw Error(ErrorKind::kBadWeight, "negative weight " + format_rational(w));
    total_ += w;
  }
  if (total_ == 0) throw Error(ErrorKind::kZeroTotalWeight, "measure has zero total weight");
}

Measure Measure::uniform(const SampleSpace& space) {
  return Measure(space, std::vector<Rational>(space.size(), Rational(1)));
}

Rational Measure::weight(const Event& e) const {
  require_space(*this, e);
  Rational sum = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (e.contains(i)) sum += weights_[i];
  }
  return sum;
}

Probability::Probability(Rational value) : value_(std::move(value)) {
  if (value_ < 0 || value_ > 1) {
    throw std::out_of_range("probability " + format_rational(value_) + " outside [0,1]");
  }
}

Probability p_event(const Measure& m, const Event& a) { return Probability(m.weight(a) / m.total()); }

Probability p_cond(const Measure& m, const Conditional& c) {
  return Probability(ratio_or_throw(m.weight(c.consequent()), m.weight(c.condition())));
}

OrFormula p_or_formula(const Measure& m, const Conditional& x, const Conditional& y) {
  const Event& ab = x.consequent();
  const Event& b = x.condition();
  const Event& cd = y.consequent();
  const Event& d = y.condition();
  const Rational w_either = m.weight(b | d);
  if (w_either == 0) throw Error(ErrorKind::kZeroCondition, "undefined: condition has probability 0");

  const Rational w_b = m.weight(b);
  const Rational w_d = m.weight(d);
  const Rational w_bd = m.weight(b & d);

  OrFormula f;
  f.first = ratio(m.weight(ab), w_b);
  f.first_weight = w_b / w_either;
  f.second = ratio(m.weight(cd), w_d);
  f.second_weight = w_d / w_either;
  f.overlap = ratio(m.weight(ab & cd), w_bd);
  f.overlap_weight = w_bd / w_either;
  f.value = Probability(product(f.first, f.first_weight) + product(f.second, f.second_weight) -
                        product(f.overlap, f.overlap_weight));
  return f;
}

Superposition p_superposition(const Measure& m, const Conditional& x, const Conditional& y,
                              SuperpositionMode mode) {
  const Event& ab = x.consequent();
  const Event& b = x.condition();
  const Event& cd = y.consequent();
  const Event& d = y.condition();
  const Rational w_either = m.weight(b | d);
  if (w_either == 0) throw Error(ErrorKind::kZeroCondition, "undefined: condition has probability 0");

  const Event only_b = b & ~d;
  const Event only_d = ~b & d;
  const Event both = b & d;
  const Event overlap = mode == SuperpositionMode::kOr ? (ab | cd) & both : ab & cd;

  const Rational w_only_b = m.weight(only_b);
  const Rational w_only_d = m.weight(only_d);

  Superposition s;
  s.first = ratio(m.weight(ab & only_b), w_only_b);
  s.first_weight = w_only_b / w_either;
  s.second = ratio(m.weight(cd & only_d), w_only_d);
  s.second_weight = w_only_d / w_either;
  s.overlap = m.weight(overlap) / w_either;
  s.value = Probability(product(s.first, s.first_weight) + product(s.second, s.second_weight) + s.overlap);
  return s;
}

Probability partition_expansion(const Measure& m, const Event& a, std::span<const Event> parts) {
  if (parts.empty()) throw Error(ErrorKind::kNotAPartition, "a partition needs at least one part");
  Event u = empty_of(a);
  for (const auto& part : parts) {
    if (!(u & part).empty()) throw Error(ErrorKind::kNotAPartition, "partition parts overlap");
    u = u | part;
  }
  const Rational w_u = m.weight(u);
  if (w_u == 0) throw Error(ErrorKind::kZeroCondition, "undefined: condition has probability 0");
  Rational sum = 0;
  for (const auto& part : parts) {
    const Rational w_part = m.weight(part);
    sum += product(ratio(m.weight(a & part), w_part), w_part / w_u);
  }
  return Probability(sum);
}

AdditiveReport additive_law_check(const Measure& m, const Event& a, const Event& c1, const Event& b,
                                  const Event& c2) {
  const Rational w_c1 = m.weight(c1);
  const Rational w_c2 = m.weight(c2);
  if (w_c1 == 0 || w_c2 == 0) {
    throw Error(ErrorKind::kZeroCondition, "undefined: condition has probability 0");
  }
  const Conditional x = Conditional::make(a, c1);
  const Conditional y = Conditional::make(b, c2);
  const Rational p_x = m.weight(x.consequent()) / w_c1;
  const Rational p_y = m.weight(y.consequent()) / w_c2;

  AdditiveReport report;
  report.lhs = p_cond(m, disjunction(x, y));
  report.rhs = p_x + p_y;
  report.holds = report.lhs.value() == report.rhs;

  const bool c1_below_c2 = m.weight(c1 & ~c2) == 0;
  const bool c2_below_c1 = m.weight(c2 & ~c1) == 0;
  report.cases[0] = p_x == 0 && p_y == 0;
  report.cases[1] = p_x == 0 && c1_below_c2;
  report.cases[2] = p_y == 0 && c2_below_c1;
  report.cases[3] = c1_below_c2 && c2_below_c1 && m.weight(a & b & c1) == 0;
  return report;
}

}  // namespace boolfrac
