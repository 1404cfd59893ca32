#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace boolfrac {

class Event;

/// A finite sample space: an ordered list of 1..64 uniquely named atoms.
///
/// Copies share the identity of the original, so events built from a copy
/// combine freely with events built from the original. Two independently
/// constructed spaces never compare identical, even with the same atoms.
class SampleSpace {
 public:
  static constexpr std::size_t kMaxAtoms = 64;

  explicit SampleSpace(std::vector<std::string> atoms, std::string name = {});

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return atoms_.size(); }
  std::span<const std::string> atoms() const noexcept { return atoms_; }
  const std::string& atom(std::size_t index) const { return atoms_.at(index); }
  std::optional<std::size_t> index_of(std::string_view atom) const;
  std::uint32_t id() const noexcept { return id_; }

  Event universe() const;
  Event none() const;
  /// Event with exactly the given member bits; throws InvalidEvent when a bit
  /// at index >= size() is set.
  Event event(std::uint64_t bits) const;
  /// Event from atom names; throws UnknownAtom.
  Event event(std::span<const std::string> names) const;
  Event singleton(std::size_t index) const;

  static bool valid_atom_name(std::string_view name);

 private:
  std::string name_;
  std::vector<std::string> atoms_;
  std::uint32_t id_;
};

/// A subset of a sample space's atoms. Equality is extensional within one
/// space; events of different spaces never compare equal.
class Event {
 public:
  std::uint64_t bits() const noexcept { return bits_; }
  std::uint32_t space_id() const noexcept { return space_id_; }
  std::size_t space_size() const noexcept { return size_; }
  std::uint64_t universe_bits() const noexcept {
    return size_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size_) - 1;
  }

  bool empty() const noexcept { return bits_ == 0; }
  bool is_universe() const noexcept { return bits_ == universe_bits(); }
  bool contains(std::size_t index) const noexcept {
    return index < size_ && ((bits_ >> index) & 1U) != 0;
  }
  std::size_t count() const noexcept;

  friend bool operator==(const Event&, const Event&) = default;
  friend auto operator<=>(const Event&, const Event&) = default;

 private:
  friend class SampleSpace;
  friend Event meet(const Event&, const Event&);
  friend Event join(const Event&, const Event&);
  friend Event complement(const Event&);

  Event(std::uint32_t space_id, std::uint8_t size, std::uint64_t bits)
      : space_id_(space_id), size_(size), bits_(bits) {}

  std::uint32_t space_id_;
  std::uint8_t size_;
  std::uint64_t bits_;
};

/// Throws SpaceMismatch unless both events come from the same space.
void require_same_space(const Event& x, const Event& y);

Event meet(const Event& x, const Event& y);
Event join(const Event& x, const Event& y);
Event complement(const Event& x);
bool leq(const Event& x, const Event& y);

/// Ω and ∅ of the space `e` belongs to.
inline Event universe_of(const Event& e) { return join(e, complement(e)); }
inline Event empty_of(const Event& e) { return meet(e, complement(e)); }

inline Event operator&(const Event& x, const Event& y) { return meet(x, y); }
inline Event operator|(const Event& x, const Event& y) { return join(x, y); }
inline Event operator~(const Event& x) { return complement(x); }

/// All 2^n events in ascending bit-vector order. Throws TooLarge for n > 16.
std::vector<Event> enumerate_events(const SampleSpace& space);

/// `{a,b,...}` with atoms in declaration order.
std::string format_event(const Event& e, const SampleSpace& space);

}  // namespace boolfrac
