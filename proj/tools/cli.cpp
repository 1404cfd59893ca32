#include "cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "boolfrac/error.hpp"
#include "boolfrac/lang.hpp"
#include "boolfrac/lawcheck.hpp"
#include "boolfrac/probability.hpp"
#include "boolfrac/relations.hpp"
#include "boolfrac/truth.hpp"

namespace boolfrac::cli {

namespace {

constexpr int kOk = 0;
constexpr int kDomain = 1;
constexpr int kUsage = 2;

// A failure that already knows its exit status.
struct Failure {
  int status;
  std::string message;
};

bool is_usage_error(ErrorKind kind) {
  return kind == ErrorKind::kParse || kind == ErrorKind::kUnknownLaw || kind == ErrorKind::kTooLarge;
}

SpaceDoc load_space(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kUsage, path + ": cannot open space file"};
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_space(text.str());
  } catch (const Error& e) {
    throw Failure{is_usage_error(e.kind()) ? kUsage : kDomain, path + ": " + e.what()};
  }
}

Expr parse_option(const std::string& flag, const std::string& text) {
  try {
    return parse_expr(text);
  } catch (const ParseError& e) {
    throw Failure{kUsage, flag + ": " + e.what()};
  }
}

Conditional lower_option(const std::string& flag, const std::string& text, const SpaceDoc& doc) {
  return lower(parse_option(flag, text), doc);
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

void print_probability(std::ostream& out, const Probability& p) {
  out << p.str() << " (" << format_decimal(p.value()) << ")\n";
}

struct Options {
  std::string space;
  std::string expr;
  std::string state;
  std::string measure;
  std::string formula = "direct";
  std::string rel;
  std::string lhs;
  std::string rhs;
  std::string law;
  std::size_t atoms = 3;
  int grid = 3;
};

int cmd_eval(const Options& o, std::ostream& out) {
  const SpaceDoc doc = load_space(o.space);
  const Conditional c = lower_option("--expr", o.expr, doc);
  if (o.state.empty()) {
    out << format_conditional(c, doc.space()) << '\n';
    return kOk;
  }
  const auto index = doc.space().index_of(o.state);
  if (!index) throw Error(ErrorKind::kUnknownAtom, "unknown atom '" + o.state + "'");
  out << to_char(eval_at(c, *index)) << '\n';
  return kOk;
}

int cmd_prob(const Options& o, std::ostream& out) {
  const SpaceDoc doc = load_space(o.space);
  const Measure* m = doc.find_measure(o.measure);
  if (m == nullptr) throw Error(ErrorKind::kUnknownName, "unknown measure '" + o.measure + "'");
  const Expr e = parse_option("--expr", o.expr);
  if (o.formula == "direct") {
    print_probability(out, p_cond(*m, lower(e, doc)));
    return kOk;
  }
  const Expr::Kind wanted = o.formula == "or" ? Expr::Kind::kOr : Expr::Kind::kAnd;
  if (e.kind != wanted) {
    throw Failure{kUsage, "--formula " + o.formula + " needs a top-level '" + o.formula + "' expression"};
  }
  const Conditional x = lower(e.operands[0], doc);
  const Conditional y = lower(e.operands[1], doc);
  if (wanted == Expr::Kind::kOr) {
    print_probability(out, p_or_formula(*m, x, y).value);
  } else {
    print_probability(out, p_superposition(*m, x, y, SuperpositionMode::kAnd).value);
  }
  return kOk;
}

std::optional<bool> extra_relation(const std::string& tag, const Conditional& x, const Conditional& y) {
  if (tag == "orth") return orthogonal(x, y);
  if (tag == "simver") return sim_verifiable(x, y);
  if (tag == "simfals") return sim_falsifiable(x, y);
  if (tag == "compat") return compatible(x, y);
  if (tag == "subalg") return in_common_subalgebra(x, y);
  return std::nullopt;
}

bool known_relation_tag(const std::string& tag) {
  if (parse_relation(tag)) return true;
  for (const char* t : {"orth", "simver", "simfals", "compat", "subalg"}) {
    if (tag == t) return true;
  }
  return false;
}

int cmd_relate(const Options& o, std::ostream& out) {
  if (!known_relation_tag(o.rel)) throw Failure{kUsage, "unknown relation '" + o.rel + "'"};
  const SpaceDoc doc = load_space(o.space);
  const Conditional x = lower_option("--lhs", o.lhs, doc);
  const Conditional y = lower_option("--rhs", o.rhs, doc);
  bool result = false;
  if (const auto rel = parse_relation(o.rel)) {
    result = holds(*rel, x, y);
  } else {
    result = *extra_relation(o.rel, x, y);
  }
  out << yes_no(result) << '\n';
  return kOk;
}

int cmd_profile(const Options& o, std::ostream& out) {
  const SpaceDoc doc = load_space(o.space);
  const VerifiabilityProfile p =
      profile(lower_option("--lhs", o.lhs, doc), lower_option("--rhs", o.rhs, doc));
  for (int i = 1; i <= 7; ++i) out << i << '=' << yes_no(p.flag(i)) << '\n';
  return kOk;
}

void print_report(std::ostream& out, const LawReport& r) {
  out << (r.passed ? "PASS " : "FAIL ") << to_string(r.law) << " atoms=" << r.atom_count
      << " instances=" << r.instances_checked << '\n';
  if (r.counterexample) {
    const Counterexample& cx = *r.counterexample;
    out << "  claim: " << cx.claim << '\n';
    for (const auto& [name, value] : cx.inputs) out << "  " << name << " = " << value << '\n';
    out << "  lhs: " << cx.lhs << '\n';
    out << "  rhs: " << cx.rhs << '\n';
    if (!cx.detail.empty()) out << "  " << cx.detail << '\n';
  }
  for (const auto& note : r.notes) out << "  note: " << note << '\n';
}

int cmd_check(const Options& o, std::ostream& out) {
  const std::vector<LawId> laws = parse_law_selector(o.law);
  CheckOptions options;
  options.max_weight = o.grid;
  bool all_passed = true;
  for (LawId law : laws) {
    // `all` runs each law at the largest size its budget allows.
    const std::size_t atoms = laws.size() > 1 ? std::min(o.atoms, max_atoms(law)) : o.atoms;
    const LawReport r = check(law, atoms, options);
    print_report(out, r);
    all_passed = all_passed && r.passed;
  }
  return all_passed ? kOk : kDomain;
}

int cmd_parse(const Options& o, std::ostream& out) {
  out << dump(parse_option("--expr", o.expr)) << '\n';
  return kOk;
}

// Keeps diagnostics on one line whatever the message contains.
std::string one_line(std::string s) {
  for (char& c : s) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  return s;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact algebra and probability of conditional events", "boolfrac"};
  app.require_subcommand(1);
  Options o;

  auto* eval = app.add_subcommand("eval", "Print the normal form of an expression, or its truth value at a state");
  eval->add_option("--space", o.space, "Space file")->required();
  eval->add_option("--expr", o.expr, "Expression")->required();
  eval->add_option("--state", o.state, "Atom to evaluate at");

  auto* prob = app.add_subcommand("prob", "Exact conditional probability of an expression");
  prob->add_option("--space", o.space, "Space file")->required();
  prob->add_option("--measure", o.measure, "Measure name")->required();
  prob->add_option("--expr", o.expr, "Expression")->required();
  prob->add_option("--formula", o.formula, "or, and or direct")
      ->check(CLI::IsMember({"or", "and", "direct"}));

  auto* relate = app.add_subcommand("relate", "Test a relation between two conditionals");
  relate->add_option("--space", o.space, "Space file")->required();
  relate->add_option("--rel", o.rel, "tr nf ap pm vee wedge bo orth simver simfals compat subalg")->required();
  relate->add_option("--lhs", o.lhs, "Left expression")->required();
  relate->add_option("--rhs", o.rhs, "Right expression")->required();

  auto* prof = app.add_subcommand("profile", "Print the seven verifiability flags of a pair");
  prof->add_option("--space", o.space, "Space file")->required();
  prof->add_option("--lhs", o.lhs, "Left expression")->required();
  prof->add_option("--rhs", o.rhs, "Right expression")->required();

  auto* chk = app.add_subcommand("check", "Exhaustively check catalog laws");
  chk->add_option("--law", o.law, "Law id or 'all'")->required();
  chk->add_option("--atoms", o.atoms, "Number of atoms")->check(CLI::Range(1, 5));
  chk->add_option("--grid", o.grid, "Largest atom weight for probabilistic laws")->check(CLI::Range(0, 16));

  auto* parse = app.add_subcommand("parse", "Dump the syntax tree of an expression");
  parse->add_option("--expr", o.expr, "Expression")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "boolfrac: " << one_line(e.what()) << '\n';
    return kUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(o, out);
    if (prob->parsed()) return cmd_prob(o, out);
    if (relate->parsed()) return cmd_relate(o, out);
    if (prof->parsed()) return cmd_profile(o, out);
    if (chk->parsed()) return cmd_check(o, out);
    return cmd_parse(o, out);
  } catch (const Failure& f) {
    err << "boolfrac: " << one_line(f.message) << '\n';
    return f.status;
  } catch (const Error& e) {
    err << "boolfrac: " << one_line(e.what()) << '\n';
    return is_usage_error(e.kind()) ? kUsage : kDomain;
  }
}

}  // namespace boolfrac::cli
