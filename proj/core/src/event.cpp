#include "boolfrac/event.hpp"

#include <atomic>
#include <bit>
#include <unordered_set>

#include "boolfrac/error.hpp"

namespace boolfrac {

namespace {

std::uint32_t next_space_id() {
  static std::atomic<std::uint32_t> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

constexpr std::size_t kMaxEnumeratedAtoms = 16;

}  // namespace

bool SampleSpace::valid_atom_name(std::string_view name) {
  if (name.empty()) return false;
  for (char ch : name) {
    switch (ch) {
      case '{': case '}': case ',': case '|': case '(': case ')':
      case '~': case '#': case '=': case ' ': case '\t': case '\n':
      case '\r': case '\v': case '\f':
        return false;
      default:
        break;
    }
  }
  return true;
}

SampleSpace::SampleSpace(std::vector<std::string> atoms, std::string name)
    : name_(std::move(name)), atoms_(std::move(atoms)), id_(next_space_id()) {
  if (atoms_.empty()) throw Error(ErrorKind::kInvalidSpace, "a sample space needs at least one atom");
  if (atoms_.size() > kMaxAtoms) {
    throw Error(ErrorKind::kTooLarge, "a sample space holds at most 64 atoms, got " +
                                          std::to_string(atoms_.size()));
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& atom : atoms_) {
    if (!valid_atom_name(atom)) throw Error(ErrorKind::kInvalidSpace, "invalid atom name '" + atom + "'");
    if (!seen.insert(atom).second) throw Error(ErrorKind::kDuplicateName, "duplicate atom '" + atom + "'");
  }
}

std::optional<std::size_t> SampleSpace::index_of(std::string_view atom) const {
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (atoms_[i] == atom) return i;
  }
  return std::nullopt;
}

Event SampleSpace::universe() const {
  const auto n = atoms_.size();
  return Event(id_, static_cast<std::uint8_t>(n),
               n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

Event SampleSpace::none() const { return Event(id_, static_cast<std::uint8_t>(atoms_.size()), 0); }

Event SampleSpace::event(std::uint64_t bits) const {
  const Event omega = universe();
  if ((bits & ~omega.bits()) != 0) {
    throw Error(ErrorKind::kInvalidEvent, "event has members outside the " +
                                              std::to_string(atoms_.size()) + "-atom space");
  }
  return Event(id_, omega.size_, bits);
}

Event SampleSpace::event(std::span<const std::string> names) const {
  std::uint64_t bits = 0;
  for (const auto& name : names) {
    auto index = index_of(name);
    if (!index) throw Error(ErrorKind::kUnknownAtom, "unknown atom '" + name + "'");
    bits |= std::uint64_t{1} << *index;
  }
  return event(bits);
}

Event SampleSpace::singleton(std::size_t index) const {
  if (index >= atoms_.size()) throw Error(ErrorKind::kUnknownAtom, "atom index out of range");
  return event(std::uint64_t{1} << index);
}

std::size_t Event::count() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }

void require_same_space(const Event& x, const Event& y) {
  if (x.space_id() != y.space_id()) {
    throw Error(ErrorKind::kSpaceMismatch, "events belong to different sample spaces");
  }
}

Event meet(const Event& x, const Event& y) {
  require_same_space(x, y);
  return Event(x.space_id_, x.size_, x.bits_ & y.bits_);
}

Event join(const Event& x, const Event& y) {
  require_same_space(x, y);
  return Event(x.space_id_, x.size_, x.bits_ | y.bits_);
}

Event complement(const Event& x) { return Event(x.space_id_, x.size_, ~x.bits_ & x.universe_bits()); }

bool leq(const Event& x, const Event& y) {
  require_same_space(x, y);
  return (x.bits() & ~y.bits()) == 0;
}

std::vector<Event> enumerate_events(const SampleSpace& space) {
  if (space.size() > kMaxEnumeratedAtoms) {
    throw Error(ErrorKind::kTooLarge, "event enumeration is limited to 16 atoms");
  }
  const std::uint64_t count = std::uint64_t{1} << space.size();
  std::vector<Event> events;
  events.reserve(count);
  for (std::uint64_t bits = 0; bits < count; ++bits) events.push_back(space.event(bits));
  return events;
}

std::string format_event(const Event& e, const SampleSpace& space) {
  if (e.space_id() != space.id()) {
    throw Error(ErrorKind::kSpaceMismatch, "event does not belong to this sample space");
  }
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (!e.contains(i)) continue;
    if (!first) out += ',';
    out += space.atom(i);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace boolfrac
