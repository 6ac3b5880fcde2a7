#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace isurf {

using Int = std::int64_t;
using Matrix = std::vector<std::vector<Int>>;

class LatticeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t null = 0;

  std::size_t rank() const { return positive + negative + null; }
  bool operator==(const Signature&) const = default;
};

std::string to_string(const Signature& s);

// Labeled basis plus symmetric integer Gram matrix. Rank 0 is allowed.
class IntersectionLattice {
 public:
  IntersectionLattice() = default;
  IntersectionLattice(std::vector<std::string> labels, Matrix gram);

  std::size_t rank() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Matrix& gram() const { return gram_; }
  Int at(std::size_t i, std::size_t j) const { return gram_[i][j]; }
  std::optional<std::size_t> index_of(const std::string& label) const;

  IntersectionLattice scaled(Int factor) const;
  // Sub-lattice spanned by the listed basis vectors, in the given order.
  IntersectionLattice restricted(const std::vector<std::size_t>& idx) const;
  // Orthogonal extension by one new basis vector with the given square.
  IntersectionLattice extended(const std::string& label, Int square) const;

  bool operator==(const IntersectionLattice&) const = default;

 private:
  std::vector<std::string> labels_;
  Matrix gram_;
};

// Inertia of the form. Rows are visited in `order`; identity order if empty.
Signature signature(const Matrix& gram, const std::vector<std::size_t>& order = {});
Signature signature(const IntersectionLattice& lat);
bool is_negative_definite(const IntersectionLattice& lat);

enum class LatticeFamily { Lambda0, Lambda1, Lambda2 };

// Adjacencies of a cycle are summed, so a 2-cycle carries pairing 2.
IntersectionLattice make_named_lattice(LatticeFamily family, Int n,
                                       std::optional<Int> m = std::nullopt,
                                       Int scale = 1);

std::optional<LatticeFamily> parse_family(const std::string& s);

}  // namespace isurf
