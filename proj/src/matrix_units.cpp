#include "lielab/matrix_units.hpp"

#include "lielab/error.hpp"

#include <algorithm>

namespace lielab {

Idx::Idx(int label) : id_(label < 0 ? -label : label), negative_(label < 0) {
  if (label == 0) throw UsageError("index label 0 is not allowed");
}

std::string to_string(const Idx& i) { return std::to_string(i.label()); }

IndexSet::IndexSet(std::initializer_list<int> labels) {
  for (int l : labels) items_.emplace_back(l);
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

IndexSet::IndexSet(std::vector<Idx> labels) : items_(std::move(labels)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

IndexSet IndexSet::first(int n) {
  std::vector<Idx> items;
  for (int i = 1; i <= n; ++i) items.emplace_back(i);
  return IndexSet(std::move(items));
}

IndexSet IndexSet::doubled() const {
  if (!all_positive()) throw UsageError("doubled: index set must contain positive labels only");
  std::vector<Idx> items = items_;
  for (const auto& i : items_) items.push_back(-i);
  return IndexSet(std::move(items));
}

bool IndexSet::contains(const Idx& i) const { return std::binary_search(items_.begin(), items_.end(), i); }

std::optional<std::size_t> IndexSet::position(const Idx& i) const {
  auto it = std::lower_bound(items_.begin(), items_.end(), i);
  if (it == items_.end() || *it != i) return std::nullopt;
  return static_cast<std::size_t>(it - items_.begin());
}

bool IndexSet::is_subset_of(const IndexSet& other) const {
  return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
}

bool IndexSet::all_positive() const {
  return std::none_of(items_.begin(), items_.end(), [](const Idx& i) { return i.negative(); });
}

std::vector<int> IndexSet::labels() const {
  std::vector<int> out;
  for (const auto& i : items_) out.push_back(i.label());
  return out;
}

Rational FinMatrix::at(const Idx& i, const Idx& j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? Rational(0) : it->second;
}

void FinMatrix::set(const Idx& i, const Idx& j, const Rational& v) {
  if (v.is_zero()) {
    entries_.erase({i, j});
  } else {
    entries_[{i, j}] = v;
  }
}

void FinMatrix::add(const Idx& i, const Idx& j, const Rational& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace({i, j}, v);
  if (inserted) return;
  it->second += v;
  if (it->second.is_zero()) entries_.erase(it);
}

IndexSet FinMatrix::support() const {
  std::vector<Idx> labels;
  for (const auto& [key, v] : entries_) {
    labels.push_back(key.first);
    labels.push_back(key.second);
  }
  return IndexSet(std::move(labels));
}

FinMatrix& FinMatrix::operator+=(const FinMatrix& other) {
  for (const auto& [key, v] : other.entries_) add(key.first, key.second, v);
  return *this;
}

FinMatrix& FinMatrix::operator-=(const FinMatrix& other) {
  for (const auto& [key, v] : other.entries_) add(key.first, key.second, -v);
  return *this;
}

FinMatrix& FinMatrix::operator*=(const Rational& s) {
  if (s.is_zero()) {
    entries_.clear();
    return *this;
  }
  for (auto& [key, v] : entries_) v *= s;
  return *this;
}

FinMatrix unit(const Idx& i, const Idx& j) {
  FinMatrix m;
  m.set(i, j, Rational(1));
  return m;
}

FinMatrix identity(const IndexSet& set) {
  FinMatrix m;
  for (const auto& i : set) m.set(i, i, Rational(1));
  return m;
}

FinMatrix mul(const FinMatrix& x, const FinMatrix& y) {
  // Rows of y keyed by their row label; entries() is sorted by (row, col) so
  // each row is a contiguous range.
  std::map<Idx, std::vector<std::pair<Idx, const Rational*>>> y_rows;
  for (const auto& [key, v] : y.entries()) y_rows[key.first].emplace_back(key.second, &v);
  FinMatrix out;
  for (const auto& [key, xv] : x.entries()) {
    auto it = y_rows.find(key.second);
    if (it == y_rows.end()) continue;
    for (const auto& [col, yv] : it->second) out.add(key.first, col, xv * *yv);
  }
  return out;
}

FinMatrix bracket(const FinMatrix& x, const FinMatrix& y) { return mul(x, y) - mul(y, x); }

FinMatrix transpose(const FinMatrix& x) {
  FinMatrix out;
  for (const auto& [key, v] : x.entries()) out.set(key.second, key.first, v);
  return out;
}

Rational trace(const FinMatrix& x) {
  Rational t = 0;
  for (const auto& [key, v] : x.entries()) {
    if (key.first == key.second) t += v;
  }
  return t;
}

FinMatrix q_form(const IndexSet& set, FormKind kind) {
  if (!set.all_positive()) throw UsageError("q_form: index set must contain positive labels only");
  const Rational lower = kind == FormKind::symmetric ? Rational(1) : Rational(-1);
  FinMatrix q;
  for (const auto& i : set) {
    q.set(i, -i, Rational(1));
    q.set(-i, i, lower);
  }
  return q;
}

FinMatrix project(const FinMatrix& x, const IndexSet& set) {
  FinMatrix out;
  for (const auto& [key, v] : x.entries()) {
    if (set.contains(key.first) && set.contains(key.second)) out.set(key.first, key.second, v);
  }
  return out;
}

std::string to_string(const FinMatrix& x) {
  if (x.is_zero()) return "0";
  std::string s;
  for (const auto& [key, v] : x.entries()) {
    if (!s.empty()) s += " + ";
    s += to_string(v) + "*e(" + to_string(key.first) + "," + to_string(key.second) + ")";
  }
  return s;
}

}  // namespace lielab
