#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "whitforge/matrix.hpp"

namespace whitforge {

struct RrefResult {
  QMatrix echelon;                   // reduced row echelon form of A (zero rows kept)
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
  std::size_t rank = 0;
  std::optional<Vector> solution;    // particular solution (free variables 0); nullopt = NoSolution
  std::vector<Vector> kernel;        // basis of {x : A x = 0}, one vector per free column
};

// Exact Gauss-Jordan elimination. When `rhs` is given, also solves A x = rhs.
RrefResult rref_solve(const QMatrix& a, const std::optional<Vector>& rhs = std::nullopt);

// A subspace of Q^d stored by its reduced row-echelon basis, so two
// subspaces are equal iff their stored bases are identical.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim);  // zero subspace
  Subspace(std::size_t ambient_dim, const std::vector<Vector>& spanning);

  static Subspace full(std::size_t ambient_dim);
  static Subspace span_of(const std::vector<QMatrix>& matrices);  // inside gl_n, flattened

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  bool is_zero() const noexcept { return basis_.empty(); }
  const std::vector<Vector>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  // Basis vectors reshaped to n x n matrices (ambient must be n^2).
  std::vector<QMatrix> matrices() const;

  bool contains(const Vector& v) const;
  bool contains(const QMatrix& m) const { return contains(m.flatten()); }
  bool contains(const Subspace& other) const;
  // Reduce v modulo the subspace (zero iff v is a member).
  Vector reduce(Vector v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);
Subspace sum(const std::vector<Subspace>& parts, std::size_t ambient_dim);
// {x : <x, u> = 0 for all u in U} under the standard dot product.
Subspace annihilator(const Subspace& u);
// Image of a linear map given by its matrix (columns = images of e_j).
Subspace column_space(const QMatrix& a);
Subspace kernel(const QMatrix& a);

enum class SubspaceOp { Intersect, Sum, Contains, Equals };

struct SubspaceAlgebraResult {
  std::optional<Subspace> space;
  std::optional<bool> verdict;
};

// Single entry point mirroring the operation table; throws DimensionMismatch.
SubspaceAlgebraResult subspace_algebra(const Subspace& u, const Subspace& v, SubspaceOp op);
bool subspace_member(const Subspace& u, const Vector& v);

Rational dot(const Vector& a, const Vector& b);

}  // namespace whitforge
