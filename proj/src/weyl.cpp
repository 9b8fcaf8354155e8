#include "hcl/weyl.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>

namespace hcl {

namespace {

constexpr size_t kMaxGroupOrder = 50000;

const char* family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::D: return "D";
    case Family::F: return "F";
    case Family::G: return "G";
  }
  return "?";
}

}  // namespace

int WeylType::generators() const {
  switch (family) {
    case Family::A: return n - 1;
    case Family::B:
    case Family::D: return n;
    case Family::F: return 4;
    case Family::G: return 2;
  }
  return 0;
}

WeylType type_A(int n) { return {Family::A, n, false}; }
WeylType type_B(int n) { return {Family::B, n, false}; }
WeylType type_D(int n) { return {Family::D, n, false}; }
WeylType type_F4() { return {Family::F, 4, false}; }
WeylType type_G2() { return {Family::G, 2, false}; }

void validate(const WeylType& t) {
  const auto fail = [&](const std::string& why) {
    throw std::invalid_argument("invalid Weyl type " + to_string(t) + ": " + why);
  };
  switch (t.family) {
    case Family::F:
      if (t.n != 4) fail("F exists only in rank 4");
      return;
    case Family::G:
      if (t.n != 2) fail("G exists only in rank 2");
      return;
    default: break;
  }
  if (t.n > kMaxRank) fail("rank exceeds " + std::to_string(kMaxRank));
  const int minimum = t.family == Family::D ? 4 : 2;
  const int absolute = t.family == Family::D ? 2 : 1;
  if (t.n < absolute) fail("rank too small");
  if (t.n < minimum && !t.degenerate) fail("rank below diagram bound (needs degenerate flag)");
}

std::string to_string(const WeylType& t) {
  return std::string(family_name(t.family)) + std::to_string(t.n);
}

WeylType parse_type(const std::string& family, int n, bool degenerate) {
  WeylType t;
  if (family == "A") t = {Family::A, n, degenerate};
  else if (family == "B") t = {Family::B, n, degenerate};
  else if (family == "D") t = {Family::D, n, degenerate};
  else if (family == "F4" || family == "F") t = type_F4();
  else if (family == "G2" || family == "G") t = type_G2();
  else throw std::invalid_argument("unknown Weyl family: " + family);
  validate(t);
  return t;
}

int coxeter_order(const WeylType& t, int i, int j) {
  const int r = t.generators();
  if (i < 1 || j < 1 || i > r || j > r)
    throw std::out_of_range("coxeter_order: generator index out of range");
  if (i == j) return 1;
  if (i > j) std::swap(i, j);
  const int n = t.n;
  switch (t.family) {
    case Family::A: return j - i == 1 ? 3 : 2;
    case Family::B:
      if (i == n - 1 && j == n) return 4;
      return j - i == 1 ? 3 : 2;
    case Family::D:
      if (j == n) return i == n - 2 ? 3 : 2;
      return j - i == 1 ? 3 : 2;
    case Family::F:
      if (i == 2 && j == 3) return 4;
      return j - i == 1 ? 3 : 2;
    case Family::G: return 6;
  }
  return 2;
}

// ---------------------------------------------------------------------------

WeylElt WeylElt::identity(const WeylType& t) {
  if (!t.has_permutation_model())
    throw std::invalid_argument("no signed permutation model for " + to_string(t));
  WeylElt w;
  w.type_ = t;
  for (int j = 0; j < t.n; ++j) w.img_[j] = static_cast<int8_t>(j + 1);
  return w;
}

WeylElt WeylElt::generator(const WeylType& t, int i) {
  if (i < 1 || i > t.generators())
    throw std::out_of_range("generator index out of range for " + to_string(t));
  WeylElt w = identity(t);
  const int n = t.n;
  if (i < n) {
    std::swap(w.img_[i - 1], w.img_[i]);
  } else if (t.family == Family::B) {
    w.img_[n - 1] = static_cast<int8_t>(-n);
  } else {
    w.img_[n - 2] = static_cast<int8_t>(-n);
    w.img_[n - 1] = static_cast<int8_t>(-(n - 1));
  }
  return w;
}

WeylElt WeylElt::from_images(const WeylType& t, const std::vector<int>& images) {
  WeylElt w = identity(t);
  if (static_cast<int>(images.size()) != t.n)
    throw std::invalid_argument("from_images: wrong number of images");
  std::vector<bool> seen(t.n + 1, false);
  int negatives = 0;
  for (int j = 0; j < t.n; ++j) {
    const int a = std::abs(images[j]);
    if (a < 1 || a > t.n || seen[a]) throw std::invalid_argument("from_images: not a permutation");
    seen[a] = true;
    if (images[j] < 0) ++negatives;
    w.img_[j] = static_cast<int8_t>(images[j]);
  }
  if (t.family == Family::A && negatives != 0)
    throw std::invalid_argument("from_images: type A admits no sign changes");
  if (t.family == Family::D && negatives % 2 != 0)
    throw std::invalid_argument("from_images: type D needs an even number of sign changes");
  return w;
}

bool WeylElt::is_identity() const {
  for (int j = 0; j < type_.n; ++j)
    if (img_[j] != j + 1) return false;
  return true;
}

uint64_t WeylElt::code() const {
  uint64_t c = 0;
  for (int j = 0; j < type_.n; ++j) c = (c << 5) | static_cast<uint64_t>(img_[j] + 16);
  return c;
}

WeylElt weyl_mul(const WeylElt& a, const WeylElt& b) {
  if (!(a.type() == b.type())) throw std::invalid_argument("weyl_mul: mismatched types");
  std::vector<int> images(a.rank());
  for (int j = 1; j <= a.rank(); ++j) {
    const int bj = b.image(j);
    images[j - 1] = bj > 0 ? a.image(bj) : -a.image(-bj);
  }
  return WeylElt::from_images(a.type(), images);
}

WeylElt inverse(const WeylElt& w) {
  std::vector<int> images(w.rank());
  for (int j = 1; j <= w.rank(); ++j) {
    const int wj = w.image(j);
    images[std::abs(wj) - 1] = wj > 0 ? j : -j;
  }
  return WeylElt::from_images(w.type(), images);
}

std::pair<Exponents, int> act_on_exponents(const WeylElt& w, const Exponents& alpha) {
  Exponents out{};
  int sign = 1;
  for (int j = 1; j <= w.rank(); ++j) {
    const int wj = w.image(j);
    out[std::abs(wj) - 1] = alpha[j - 1];
    if (wj < 0 && alpha[j - 1] % 2 == 1) sign = -sign;
  }
  return {out, sign};
}

// ---------------------------------------------------------------------------

WeylGroup::WeylGroup(const WeylType& t) : type_(t) {
  validate(t);
  if (!t.has_permutation_model())
    throw std::invalid_argument("no signed permutation model for " + to_string(t));
  const int r = t.generators();
  std::vector<WeylElt> gens;
  for (int i = 1; i <= r; ++i) gens.push_back(WeylElt::generator(t, i));

  elements_.push_back(WeylElt::identity(t));
  index_.emplace(elements_[0].code(), 0);
  length_.push_back(0);
  for (size_t head = 0; head < elements_.size(); ++head) {
    for (int i = 0; i < r; ++i) {
      WeylElt next = gens[i] * elements_[head];
      if (index_.emplace(next.code(), static_cast<uint32_t>(elements_.size())).second) {
        elements_.push_back(next);
        length_.push_back(length_[head] + 1);
        if (elements_.size() > kMaxGroupOrder)
          throw std::length_error("Weyl group too large to enumerate: " + to_string(t));
      }
    }
  }

  const size_t order = elements_.size();
  gen_left_.resize(static_cast<size_t>(r) * order);
  for (int i = 0; i < r; ++i)
    for (size_t w = 0; w < order; ++w)
      gen_left_[i * order + w] = index(gens[i] * elements_[w]);

  inverse_.resize(order);
  for (size_t w = 0; w < order; ++w) inverse_[w] = index(hcl::inverse(elements_[w]));

  words_.resize(order);
  for (size_t w = 1; w < order; ++w) {
    for (int i = 1; i <= r; ++i) {
      const uint32_t shorter = gen_left(i, static_cast<uint32_t>(w));
      if (length_[shorter] + 1 == length_[w]) {
        words_[w].push_back(i);
        const auto& tail = words_[shorter];
        words_[w].insert(words_[w].end(), tail.begin(), tail.end());
        break;
      }
    }
  }
}

const WeylGroup& WeylGroup::get(const WeylType& t) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<WeylGroup>> registry;
  validate(t);
  const std::lock_guard lock(mutex);
  auto& slot = registry[{static_cast<int>(t.family), t.n}];
  if (!slot) slot = std::make_unique<WeylGroup>(t);
  return *slot;
}

uint32_t WeylGroup::index(const WeylElt& w) const {
  if (!(w.type() == type_)) throw std::out_of_range("element of a different Weyl group");
  auto it = index_.find(w.code());
  if (it == index_.end()) throw std::out_of_range("element not in group");
  return it->second;
}

uint32_t WeylGroup::mul(uint32_t a, uint32_t b) const {
  uint32_t r = b;
  const auto& wa = words_[a];
  for (auto it = wa.rbegin(); it != wa.rend(); ++it) r = gen_left(*it, r);
  return r;
}

std::vector<int> canonical_word(const WeylElt& w) {
  const WeylGroup& g = WeylGroup::get(w.type());
  return g.word(g.index(w));
}

size_t weyl_order(const WeylType& t) {
  size_t f = 1;
  for (int k = 2; k <= t.n; ++k) f *= static_cast<size_t>(k);
  switch (t.family) {
    case Family::A: return f;
    case Family::B: return f << t.n;
    case Family::D: return f << (t.n - 1);
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

}  // namespace hcl
