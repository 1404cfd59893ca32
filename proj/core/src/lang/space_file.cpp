#include <algorithm>
#include <cctype>
#include <optional>

#include "boolfrac/error.hpp"
#include "boolfrac/lang.hpp"
#include "parser.hpp"

namespace boolfrac {

const Event* SpaceDoc::find_event(std::string_view name) const {
  auto it = std::find_if(events_.begin(), events_.end(), [&](const auto& entry) { return entry.first == name; });
  return it == events_.end() ? nullptr : &it->second;
}

const Measure* SpaceDoc::find_measure(std::string_view name) const {
  auto it = std::find_if(measures_.begin(), measures_.end(), [&](const auto& entry) { return entry.first == name; });
  return it == measures_.end() ? nullptr : &it->second;
}

void SpaceDoc::add_event(std::string name, Event e) {
  if (find_event(name)) throw Error(ErrorKind::kDuplicateName, "event '" + name + "' is already defined");
  if (e.space_id() != space_.id()) throw Error(ErrorKind::kSpaceMismatch, "event belongs to another space");
  events_.emplace_back(std::move(name), e);
}

void SpaceDoc::add_measure(std::string name, Measure m) {
  if (find_measure(name)) throw Error(ErrorKind::kDuplicateName, "measure '" + name + "' is already defined");
  if (m.space_id() != space_.id()) throw Error(ErrorKind::kSpaceMismatch, "measure belongs to another space");
  measures_.emplace_back(std::move(name), std::move(m));
}

namespace {

struct Word {
  std::string_view text;
  std::size_t column;
};

bool blank(char ch) { return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\v' || ch == '\f'; }

std::vector<Word> split(std::string_view line) {
  std::vector<Word> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && blank(line[i])) ++i;
    if (i == line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !blank(line[i])) ++i;
    words.push_back({line.substr(start, i - start), start + 1});
  }
  return words;
}

bool digits_only(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch) != 0; });
}

Rational parse_weight(const Word& w, std::size_t line) {
  const auto slash = w.text.find('/');
  const std::string_view num = w.text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : w.text.substr(slash + 1);
  if (!digits_only(num) || !digits_only(den)) {
    throw LocatedError(ErrorKind::kBadWeight, line, "malformed weight '" + std::string(w.text) + "'");
  }
  const boost::multiprecision::cpp_int q(std::string{den});
  if (q == 0) throw LocatedError(ErrorKind::kBadWeight, line, "zero denominator in '" + std::string(w.text) + "'");
  return Rational(boost::multiprecision::cpp_int(std::string{num}), q);
}

bool valid_name(std::string_view name) {
  return SampleSpace::valid_atom_name(name) && name != "and" && name != "or" && !parse_func(name);
}

void check_event_only(const Expr& e, std::size_t line, std::size_t column) {
  if (e.kind == Expr::Kind::kGiven || e.kind == Expr::Kind::kFunc) {
    throw ParseError(line, column, {}, "an event definition may only use '~', 'and' and 'or'");
  }
  for (const auto& op : e.operands) check_event_only(op, line, column);
}

// Reads `NAME =` after a keyword; returns the column just past '='.
std::size_t definition_head(std::string_view raw, const std::vector<Word>& words, std::size_t line,
                            std::string& name) {
  if (words.size() < 2) {
    throw ParseError(line, raw.size() + 1, {"name"}, "unexpected end of line");
  }
  std::string_view head = words[1].text;
  const auto eq = head.find('=');
  std::size_t eq_column = 0;
  if (eq != std::string_view::npos) {
    eq_column = words[1].column + eq;
    head = head.substr(0, eq);
  } else if (words.size() >= 3 && words[2].text.starts_with('=')) {
    eq_column = words[2].column;
  } else {
    const std::size_t col = words.size() >= 3 ? words[2].column : raw.size() + 1;
    throw ParseError(line, col, {"'='"}, "missing '=' in definition");
  }
  if (!valid_name(head)) {
    throw ParseError(line, words[1].column, {"name"}, "invalid name '" + std::string(head) + "'");
  }
  name = std::string(head);
  return eq_column + 1;
}

}  // namespace

SpaceDoc parse_space(std::string_view text) {
  std::optional<SpaceDoc> doc;
  std::string space_name;
  bool saw_space = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const auto words = split(raw);
    if (words.empty()) {
      if (end == text.size()) break;
      continue;
    }

    const std::string_view keyword = words[0].text;
    if (keyword == "space") {
      if (saw_space || doc) throw ParseError(line_no, words[0].column, {}, "'space' must come first and only once");
      if (words.size() != 2) {
        throw ParseError(line_no, words.size() < 2 ? raw.size() + 1 : words[2].column, {"space name"},
                         "'space' takes exactly one name");
      }
      space_name = std::string(words[1].text);
      saw_space = true;
    } else if (keyword == "atoms") {
      if (doc) throw ParseError(line_no, words[0].column, {}, "'atoms' may appear only once");
      std::vector<std::string> atoms;
      for (std::size_t i = 1; i < words.size(); ++i) {
        if (!SampleSpace::valid_atom_name(words[i].text)) {
          throw ParseError(line_no, words[i].column, {"atom name"}, "invalid atom name '" + std::string(words[i].text) + "'");
        }
        atoms.emplace_back(words[i].text);
      }
      if (atoms.empty()) throw ParseError(line_no, raw.size() + 1, {"atom name"}, "'atoms' needs at least one atom");
      try {
        doc.emplace(SampleSpace(std::move(atoms), space_name));
      } catch (const Error& e) {
        throw LocatedError(e.kind(), line_no, e.what());
      }
    } else if (keyword == "event" || keyword == "measure") {
      if (!doc) throw ParseError(line_no, words[0].column, {"'atoms'"}, "'atoms' must be declared first");
      std::string name;
      const std::size_t body_column = definition_head(raw, words, line_no, name);
      const std::string_view body = raw.substr(body_column - 1);
      try {
        if (keyword == "event") {
          const Expr e = detail::parse_expr_at(body, line_no, body_column);
          const std::size_t lead = body.find_first_not_of(" \t");
          check_event_only(e, line_no, body_column + (lead == std::string_view::npos ? 0 : lead));
          doc->add_event(std::move(name), lower_event(e, *doc));
        } else {
          std::vector<Rational> weights;
          for (const auto& w : split(body)) weights.push_back(parse_weight({w.text, w.column + body_column - 1}, line_no));
          doc->add_measure(std::move(name), Measure(doc->space(), std::move(weights)));
        }
      } catch (const ParseError&) {
        throw;
      } catch (const LocatedError&) {
        throw;
      } catch (const Error& e) {
        throw LocatedError(e.kind(), line_no, e.what());
      }
    } else {
      throw ParseError(line_no, words[0].column, {"'space'", "'atoms'", "'event'", "'measure'"},
                       "unknown directive '" + std::string(keyword) + "'");
    }
    if (end == text.size()) break;
  }
  if (!doc) throw ParseError(line_no, 1, {"'atoms'"}, "no 'atoms' declaration");
  return std::move(*doc);
}

}  // namespace boolfrac
