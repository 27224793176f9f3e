#pragma once

#include <mutex>
#include <optional>

#include "eprod/core.hpp"

namespace eprod {

// Structural facts known at construction time (e.g. a density built from a
// ket is Hermitian and semipositive by construction). Hinted flags are
// cached as exact (tolerance 0).
struct FlagHints {
  std::optional<bool> hermitian;
  std::optional<bool> semipositive;
  std::optional<bool> diagonal;
};

// Dense operator on a tensor-product space, row-major entries, immutable
// after construction. Structural predicates are evaluated lazily and cached
// together with the tolerance they were decided at.
class MultipartiteOperator {
 public:
  static constexpr double kFlagTol = 1e-10;
  // Dense n x n storage: 8192^2 complex entries is ~1 GiB, the largest this
  // library ever needs (operators past that stay in ket form).
  static constexpr long kMaxOperatorDim = 8192;

  MultipartiteOperator(SpaceShape shape, std::vector<cx> entries, FlagHints hints = {});
  static MultipartiteOperator identity(const SpaceShape& shape);

  MultipartiteOperator(const MultipartiteOperator& o);
  MultipartiteOperator(MultipartiteOperator&& o) noexcept;
  MultipartiteOperator& operator=(const MultipartiteOperator& o);
  MultipartiteOperator& operator=(MultipartiteOperator&& o) noexcept;

  const SpaceShape& shape() const { return shape_; }
  long dim() const { return shape_.total_dim(); }
  const std::vector<cx>& entries() const { return entries_; }
  const cx* data() const { return entries_.data(); }
  cx entry(long r, long c) const { return entries_[static_cast<size_t>(r * dim() + c)]; }

  cx trace() const;
  double frobenius() const;

  bool is_hermitian(double tol = kFlagTol) const;
  bool is_semipositive(double tol = kFlagTol) const;
  bool is_diagonal(double tol = kFlagTol) const;

 private:
  struct Flag {
    bool known = false;
    bool value = false;
    double tol = 0.0;
  };

  bool cached(const Flag& f, double tol, bool& out) const;
  bool compute_hermitian(double tol) const;
  bool compute_semipositive(double tol) const;
  bool compute_diagonal(double tol) const;

  SpaceShape shape_;
  std::vector<cx> entries_;
  mutable std::mutex mu_;
  mutable Flag hermitian_;
  mutable Flag semipositive_;
  mutable Flag diagonal_;
};

// Projector |psi><psi| scaled by `weight`.
MultipartiteOperator density_from_ket(const Ket& psi, double weight = 1.0);

}  // namespace eprod
