#pragma once

// Exact integer linear algebra and finitely generated abelian groups.
//
// Groups are presented as subquotients L_K / L_R of a free ambient lattice,
// with L_K given by a canonical Hermite basis and the relations stored in
// kernel-basis coordinates.  All answers (invariant factors, surjectivity,
// subgroup comparisons) are exact; entries are arbitrary-precision since
// Smith-form intermediates blow up even on small inputs.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dgh/error.hpp"

namespace dgh {

using Int = boost::multiprecision::cpp_int;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) fail(Errc::internal, "matrix data size mismatch");
  }
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& other) const;
  IntMatrix operator-(const IntMatrix& other) const;
  bool operator==(const IntMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }
  bool is_zero() const;

  IntMatrix column(std::size_t j) const;
  IntMatrix top_rows(std::size_t n) const;
  static IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
  static IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
  static IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b);

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& factor);
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

struct SmithResult {
  IntMatrix u, s, v;  // u * input * v == s, u and v unimodular, s diagonal
  std::vector<Int> invariant_factors;  // positive, each divides the next
  std::size_t rank = 0;
};

// Pivot: smallest nonzero magnitude, ties broken by lowest row then column.
SmithResult smith_normal_form(const IntMatrix& m);

// Canonical basis of the column lattice (column-style Hermite form, zero
// columns dropped): positive pivots in increasing rows, entries left of a
// pivot reduced into [0, pivot).
IntMatrix hermite_column_basis(const IntMatrix& generators);

// Basis of {x : m x = 0} over the integers; the lattice is saturated by
// construction.  Returned Hermite-reduced.
IntMatrix integer_kernel(const IntMatrix& m);

// Solves a * X = b column-wise over the integers.
std::optional<IntMatrix> solve_columns(const IntMatrix& a, const IntMatrix& b);

// Every column of `vectors` lies in the column lattice of `generators`.
bool lattice_contains(const IntMatrix& generators, const IntMatrix& vectors);

// Lattice equality of column spans.
bool lattice_equal(const IntMatrix& a, const IntMatrix& b);

// Bareiss fraction-free elimination; independent of the Smith-form path.
std::size_t fraction_free_rank(IntMatrix m);
Int determinant(IntMatrix m);

class FgAbGroup {
 public:
  FgAbGroup() = default;

  // kernel_gens and image_gens live in the same ambient space (rows); errors
  // with not_a_subgroup when the image is not inside the kernel lattice.
  static FgAbGroup subquotient(const IntMatrix& kernel_gens, const IntMatrix& image_gens);
  static FgAbGroup free_abelian(std::size_t k);
  static FgAbGroup trivial() { return free_abelian(0); }

  std::size_t ambient() const { return ambient_; }
  const IntMatrix& kernel_basis() const { return kernel_basis_; }        // ambient x k
  const IntMatrix& relation_coords() const { return relation_coords_; }  // k x m
  std::size_t coord_dim() const { return kernel_basis_.cols(); }

  std::size_t rank() const { return rank_; }
  const std::vector<Int>& torsion() const { return torsion_; }  // factors > 1
  bool is_trivial() const { return rank_ == 0 && torsion_.empty(); }
  bool same_type(const FgAbGroup& other) const {
    return rank_ == other.rank_ && torsion_ == other.torsion_;
  }
  bool same_presentation(const FgAbGroup& other) const {
    return ambient_ == other.ambient_ && kernel_basis_ == other.kernel_basis_ &&
           relation_coords_ == other.relation_coords_;
  }
  std::string describe() const;  // "0", "Z^2", "Z x Z/2", ...

  // Kernel-basis coordinates of ambient columns; nullopt outside the lattice.
  std::optional<IntMatrix> coords(const IntMatrix& ambient_cols) const;
  // Coordinate columns lying in the relation lattice, i.e. zero in the group.
  bool coords_vanish(const IntMatrix& coord_cols) const;

 private:
  std::size_t ambient_ = 0;
  IntMatrix kernel_basis_;
  IntMatrix relation_coords_;
  std::vector<Int> torsion_;
  std::size_t rank_ = 0;
};

// Subgroups of a common subquotient, each represented as a lattice between
// the relations and the kernel; equality is lattice equality.
bool subgroup_equal(const FgAbGroup& a, const FgAbGroup& b);

class GroupHom {
 public:
  GroupHom() = default;

  // The spec'd constructor: an ambient lift that must carry kernel into
  // kernel and relations into relations (errors with ill_defined).
  static GroupHom from_lift(const IntMatrix& lift, const FgAbGroup& source,
                            const FgAbGroup& target);
  // Internal constructor on kernel coordinates (used for projections and
  // pairings whose ambient lift need not exist as an integer matrix).
  static GroupHom from_coords(IntMatrix coord_map, FgAbGroup source, FgAbGroup target);
  static GroupHom zero(const FgAbGroup& source, const FgAbGroup& target);
  static GroupHom identity(const FgAbGroup& g);

  const FgAbGroup& source() const { return source_; }
  const FgAbGroup& target() const { return target_; }
  const IntMatrix& coord_map() const { return coord_map_; }

  bool equals(const GroupHom& other) const;
  bool is_zero() const;
  bool is_surjective() const;
  bool is_injective() const;
  FgAbGroup kernel() const;  // subgroup of the source (ambient = coord space)
  FgAbGroup image() const;   // subgroup of the target

 private:
  FgAbGroup source_, target_;
  IntMatrix coord_map_;  // target coord_dim x source coord_dim
};

GroupHom compose(const GroupHom& outer, const GroupHom& inner);

struct FiberProduct {
  FgAbGroup group;  // pairs (b,c) with phi(b) = psi(c)
  GroupHom project_left, project_right;
};

// phi : B -> A and psi : C -> A must share their target presentation.
FiberProduct fiber_product(const GroupHom& phi, const GroupHom& psi);

// The map X -> B x_A C induced by u : X -> B and v : X -> C; requires
// phi∘u = psi∘v (errors with ill_defined otherwise).
GroupHom pair_into_fiber(const GroupHom& u, const GroupHom& v, const FiberProduct& fp);

}  // namespace dgh
