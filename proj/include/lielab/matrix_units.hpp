#pragma once

// Finitely supported matrices over a signed index set, the ambient arena in
// which the classical families live.

#include "lielab/rational.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lielab {

/// Index label: a positive identifier i together with a sign. -i is the
/// partner of i in the doubled index set.
class Idx {
 public:
  /// `label` is the signed identifier; 0 is rejected.
  explicit Idx(int label);

  int id() const { return id_; }
  bool negative() const { return negative_; }
  int label() const { return negative_ ? -id_ : id_; }
  Idx operator-() const { return Idx(-label()); }

  // Positives ascending, then negatives ascending by identifier.
  friend std::strong_ordering operator<=>(const Idx& a, const Idx& b) {
    if (a.negative_ != b.negative_) return a.negative_ ? std::strong_ordering::greater : std::strong_ordering::less;
    return a.id_ <=> b.id_;
  }
  friend bool operator==(const Idx&, const Idx&) = default;

 private:
  int id_ = 1;
  bool negative_ = false;
};

std::string to_string(const Idx& i);

/// Finite set of index labels in canonical order.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<int> labels);
  explicit IndexSet(std::vector<Idx> labels);

  /// {1, ..., n}
  static IndexSet first(int n);

  /// J together with its negative copy; J must hold positive labels only.
  IndexSet doubled() const;

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const Idx& operator[](std::size_t k) const { return items_[k]; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  bool contains(const Idx& i) const;
  std::optional<std::size_t> position(const Idx& i) const;
  bool is_subset_of(const IndexSet& other) const;
  bool all_positive() const;
  std::vector<int> labels() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<Idx> items_;
};

/// A matrix with finitely many nonzero entries. Zero entries are never stored.
class FinMatrix {
 public:
  using Key = std::pair<Idx, Idx>;
  using Entries = std::map<Key, Rational>;

  FinMatrix() = default;

  Rational at(const Idx& i, const Idx& j) const;
  void set(const Idx& i, const Idx& j, const Rational& v);
  void add(const Idx& i, const Idx& j, const Rational& v);

  const Entries& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }

  /// Labels appearing as a row or column index.
  IndexSet support() const;

  FinMatrix& operator+=(const FinMatrix& other);
  FinMatrix& operator-=(const FinMatrix& other);
  FinMatrix& operator*=(const Rational& s);

  friend FinMatrix operator+(FinMatrix a, const FinMatrix& b) { return a += b; }
  friend FinMatrix operator-(FinMatrix a, const FinMatrix& b) { return a -= b; }
  friend FinMatrix operator-(FinMatrix a) { return a *= Rational(-1); }
  friend FinMatrix operator*(const Rational& s, FinMatrix a) { return a *= s; }
  friend bool operator==(const FinMatrix&, const FinMatrix&) = default;

 private:
  Entries entries_;
};

FinMatrix unit(const Idx& i, const Idx& j);
inline FinMatrix unit(int i, int j) { return unit(Idx(i), Idx(j)); }

FinMatrix identity(const IndexSet& set);

FinMatrix mul(const FinMatrix& x, const FinMatrix& y);
FinMatrix bracket(const FinMatrix& x, const FinMatrix& y);
FinMatrix transpose(const FinMatrix& x);
Rational trace(const FinMatrix& x);

enum class FormKind { symmetric, alternating };

/// q1 = sum e(i,-i) + e(-i,i) (symmetric) or q2 = sum e(i,-i) - e(-i,i)
/// (alternating) over i in J. J must hold positive labels only.
FinMatrix q_form(const IndexSet& set, FormKind kind);

/// Keeps the entries with both indices in `set`.
FinMatrix project(const FinMatrix& x, const IndexSet& set);

std::string to_string(const FinMatrix& x);

}  // namespace lielab
