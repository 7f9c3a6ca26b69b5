#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace cmtype {

struct SemigroupInvariants {
  int multiplicity = 0;
  int embedding_dimension = 0;
  int frobenius = 0;
  int conductor = 0;
  int type = 0;
  bool is_symmetric = false;
  bool is_med = false;
  bool is_dvr = false;
};

// A numerical semigroup H = <a_1, ..., a_l> ⊆ Z>=0, the exponent monoid of
// the ring k[[t^a_1, ..., t^a_l]].  Immutable once built.
class NumericalSemigroup {
 public:
  // Throws ArgumentError for empty or non-positive input and when the
  // generators are not coprime.  Redundant generators are dropped.
  explicit NumericalSemigroup(std::span<const int> generators);
  NumericalSemigroup(std::initializer_list<int> generators)
      : NumericalSemigroup(std::span<const int>(generators.begin(), generators.size())) {}

  // Minimal generating set, increasing.
  const std::vector<int>& generators() const { return gens_; }
  int multiplicity() const { return gens_.front(); }
  int embedding_dimension() const { return static_cast<int>(gens_.size()); }
  int frobenius() const { return frobenius_; }
  int conductor() const { return frobenius_ + 1; }
  bool is_dvr() const { return gens_.front() == 1; }

  bool contains(long z) const {
    if (z < 0) return false;
    if (z >= conductor()) return true;
    return member_[static_cast<std::size_t>(z)] != 0;
  }

  // Least element of H in each residue class mod n, indexed by residue.
  // Requires n ∈ H, n > 0.
  std::vector<int> apery(int n) const;
  std::vector<int> gaps() const;
  std::vector<int> pseudo_frobenius() const;
  int type() const { return static_cast<int>(pseudo_frobenius().size()); }
  bool is_symmetric() const;
  SemigroupInvariants invariants() const;

  std::string to_string() const;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.gens_ == b.gens_;
  }

 private:
  std::vector<int> gens_;
  int frobenius_ = -1;
  std::vector<unsigned char> member_;  // over [0, conductor)
};

using SemigroupPtr = std::shared_ptr<const NumericalSemigroup>;

SemigroupPtr make_semigroup(std::span<const int> generators);
SemigroupPtr make_semigroup(std::initializer_list<int> generators);

// Largest conductor accepted; bigger inputs throw ResourceError.
inline constexpr int kMaxConductor = 1 << 22;

}  // namespace cmtype
