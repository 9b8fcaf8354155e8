#pragma once

// Classical Weyl groups as signed permutation groups.

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hcl {

constexpr int kMaxRank = 8;

/// F and G only carry Coxeter data and root tables; the permutation model
/// exists for A, B, D.
enum class Family : uint8_t { A, B, D, F, G };

struct WeylType {
  Family family = Family::A;
  /// Number of coordinates. Type A with n coordinates is S_n (n-1 generators).
  int n = 2;
  /// Admits B1, D2, D3 and A1, which the Coxeter diagrams exclude.
  bool degenerate = false;

  int generators() const;
  bool has_permutation_model() const { return family <= Family::D; }
  friend bool operator==(const WeylType& a, const WeylType& b) {
    return a.family == b.family && a.n == b.n;
  }
};

WeylType type_A(int n);
WeylType type_B(int n);
WeylType type_D(int n);
WeylType type_F4();
WeylType type_G2();

/// Throws std::invalid_argument for ranks outside the diagrams
/// (unless `degenerate` is set) or beyond kMaxRank.
void validate(const WeylType& t);
std::string to_string(const WeylType& t);
/// "A", "B", "D", "F4", "G2" followed by the rank for A/B/D (e.g. "B3").
WeylType parse_type(const std::string& family, int n, bool degenerate = false);

/// m_ij read off the Coxeter-Dynkin diagram; generators are 1-based.
int coxeter_order(const WeylType& t, int i, int j);

using Exponents = std::array<uint8_t, kMaxRank>;

/// Signed permutation j -> images[j-1] in {+-1..+-n}.
class WeylElt {
 public:
  WeylElt() = default;
  static WeylElt identity(const WeylType& t);
  static WeylElt generator(const WeylType& t, int i);
  /// Throws std::invalid_argument unless `images` is a signed permutation
  /// allowed by the type (no signs in A, an even number in D).
  static WeylElt from_images(const WeylType& t, const std::vector<int>& images);

  const WeylType& type() const { return type_; }
  int rank() const { return type_.n; }
  /// Signed image of coordinate j (1-based).
  int image(int j) const { return img_[j - 1]; }
  bool is_identity() const;
  uint64_t code() const;

  friend bool operator==(const WeylElt& a, const WeylElt& b) {
    return a.type_ == b.type_ && a.img_ == b.img_;
  }
  friend bool operator<(const WeylElt& a, const WeylElt& b) { return a.code() < b.code(); }

 private:
  WeylType type_;
  std::array<int8_t, kMaxRank> img_{};
};

/// Composition: (a*b)(j) = a(b(j)). Throws on mismatched type/rank.
WeylElt weyl_mul(const WeylElt& a, const WeylElt& b);
inline WeylElt operator*(const WeylElt& a, const WeylElt& b) { return weyl_mul(a, b); }
WeylElt inverse(const WeylElt& w);

/// x^alpha composed with w: each x_j becomes sign(w(j)) x_|w(j)|.
/// Returns the permuted exponent vector and the accumulated sign.
std::pair<Exponents, int> act_on_exponents(const WeylElt& w, const Exponents& alpha);

/// Finite group with elements indexed 0..size()-1 (0 is the identity),
/// enumerated breadth-first so indices are ordered by length.
class WeylGroup {
 public:
  /// Shared instance per (family, n); construction is synchronized.
  static const WeylGroup& get(const WeylType& t);

  explicit WeylGroup(const WeylType& t);

  const WeylType& type() const { return type_; }
  int rank() const { return type_.n; }
  int generators() const { return type_.generators(); }
  size_t size() const { return elements_.size(); }

  const WeylElt& element(uint32_t idx) const { return elements_[idx]; }
  /// Throws std::out_of_range for an element of another group.
  uint32_t index(const WeylElt& w) const;
  uint32_t mul(uint32_t a, uint32_t b) const;
  /// s_i * w.
  uint32_t gen_left(int i, uint32_t w) const { return gen_left_[(i - 1) * size() + w]; }
  uint32_t generator(int i) const { return gen_left(i, 0); }
  uint32_t inverse(uint32_t w) const { return inverse_[w]; }
  int length(uint32_t w) const { return length_[w]; }
  /// Lexicographically smallest reduced word.
  const std::vector<int>& word(uint32_t w) const { return words_[w]; }
  uint32_t longest() const { return static_cast<uint32_t>(size() - 1); }

 private:
  WeylType type_;
  std::vector<WeylElt> elements_;
  std::unordered_map<uint64_t, uint32_t> index_;
  std::vector<uint32_t> gen_left_;
  std::vector<uint32_t> inverse_;
  std::vector<int> length_;
  std::vector<std::vector<int>> words_;
};

std::vector<int> canonical_word(const WeylElt& w);
/// Group order from the closed formulas n!, 2^n n!, 2^(n-1) n!.
size_t weyl_order(const WeylType& t);

}  // namespace hcl
