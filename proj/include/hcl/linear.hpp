#pragma once

// Finitely supported maps Key -> Scalar, the common carrier of every
// algebra element in the library.

#include <map>
#include <utility>

#include "hcl/scalar.hpp"

namespace hcl {

template <class Key>
class LinComb {
 public:
  using Map = std::map<Key, Scalar>;

  void add(const Key& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  void sub(const Key& k, const Scalar& c) { add(k, -c); }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  LinComb operator-() const {
    LinComb r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
  }

  /// Adds c * o.
  void add_scaled(const LinComb& o, const Scalar& c) {
    if (c.is_zero()) return;
    for (const auto& [k, d] : o.terms_) add(k, c * d);
  }
  void scale(const Scalar& c) {
    if (c.is_zero()) {
      terms_.clear();
      return;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second = c * it->second;
      it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
  }

  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  Scalar coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar() : it->second;
  }

  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

 private:
  Map terms_;
};

}  // namespace hcl
