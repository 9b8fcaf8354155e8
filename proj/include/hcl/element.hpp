#pragma once

// Shared vector-space structure of the algebra elements. Each algebra picks
// a key type and a tag; multiplication is supplied by the algebra's module.

#include <optional>
#include <stdexcept>

#include "hcl/linear.hpp"
#include "hcl/weyl.hpp"

namespace hcl {

template <class Key, class Tag>
class Element {
 public:
  using key_type = Key;

  Element() = default;
  explicit Element(const WeylGroup& g) : group_(&g) {}
  Element(const WeylGroup& g, const Key& k, const Scalar& c = Scalar(1)) : group_(&g) {
    terms_.add(k, c);
  }

  const WeylGroup& group() const {
    if (!group_) throw std::logic_error("element is not attached to a Weyl group");
    return *group_;
  }
  const WeylGroup* group_ptr() const { return group_; }
  const WeylType& type() const { return group().type(); }
  int rank() const { return group().rank(); }

  const LinComb<Key>& terms() const { return terms_; }
  LinComb<Key>& terms() { return terms_; }
  bool is_zero() const { return terms_.is_zero(); }
  size_t size() const { return terms_.size(); }
  Scalar coeff(const Key& k) const { return terms_.coeff(k); }
  void add(const Key& k, const Scalar& c) { terms_.add(k, c); }

  Element& operator+=(const Element& o) {
    adopt(o);
    terms_ += o.terms_;
    return *this;
  }
  Element& operator-=(const Element& o) {
    adopt(o);
    terms_ -= o.terms_;
    return *this;
  }
  void add_scaled(const Element& o, const Scalar& c) {
    adopt(o);
    terms_.add_scaled(o.terms_, c);
  }
  Element operator-() const {
    Element r = *this;
    r.terms_.scale(Scalar(-1));
    return r;
  }
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Scalar& s, Element a) {
    a.terms_.scale(s);
    return a;
  }
  friend bool operator==(const Element& a, const Element& b) {
    if (a.is_zero() && b.is_zero()) return true;
    return a.group_ == b.group_ && a.terms_ == b.terms_;
  }

 protected:
  void adopt(const Element& o) {
    if (!group_) group_ = o.group_;
    else if (o.group_ && o.group_ != group_)
      throw std::invalid_argument("elements of algebras over different Weyl groups");
  }

  const WeylGroup* group_ = nullptr;
  LinComb<Key> terms_;
};

/// Demands a common group for a binary operation.
template <class A, class B>
const WeylGroup& common_group(const A& a, const B& b) {
  const WeylGroup* ga = a.group_ptr();
  const WeylGroup* gb = b.group_ptr();
  if (ga && gb && ga != gb) throw std::invalid_argument("type/rank mismatch between operands");
  if (!ga && !gb) throw std::logic_error("operands not attached to a Weyl group");
  return ga ? *ga : *gb;
}

/// Substitutes the given parameter values in every coefficient.
template <class E>
E specialize_parameters(const E& a, const std::optional<Cyc8>& u0, const std::optional<Cyc8>& v0) {
  E r(a.group());
  for (const auto& [k, c] : a.terms()) r.add(k, specialize_partial(c, u0, v0));
  return r;
}

}  // namespace hcl
