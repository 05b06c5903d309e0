#ifndef NORMAN_ORACLE_HPP
#define NORMAN_ORACLE_HPP

// Brute-force Jordan partitions: build J_r (x) J_s (or N_r (x) N_s) over
// GF(p) as an explicit matrix and read the block sizes off the ranks of
// powers of M - eI. Nothing here depends on the delta profile.

#include <cstdint>
#include <span>
#include <vector>

#include "norman/jordan.hpp"
#include "norman/parith.hpp"

namespace norman {

/// Default bound on the matrix dimension r*s.
inline constexpr std::int64_t kDefaultMatrixCap = 4096;

/// Dense square matrix over GF(p), row-major, entries in [0, p-1].
class MatrixGFp {
public:
  MatrixGFp(int dim, Prime p);

  static MatrixGFp identity(int dim, Prime p);
  /// Rows given as integers; reduced mod p.
  static MatrixGFp from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                             Prime p);

  int dim() const noexcept { return dim_; }
  Prime p() const noexcept { return p_; }

  std::uint32_t operator()(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) +
                    static_cast<std::size_t>(j)];
  }
  /// Stores value mod p.
  void set(int i, int j, std::int64_t value);

  std::span<const std::uint32_t> row(int i) const {
    return {entries_.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_),
            static_cast<std::size_t>(dim_)};
  }

  bool is_zero() const noexcept;

  friend bool operator==(const MatrixGFp&, const MatrixGFp&) = default;

private:
  int dim_;
  Prime p_;
  std::vector<std::uint32_t> entries_;
};

MatrixGFp multiply(const MatrixGFp& a, const MatrixGFp& b);
/// a - c * I.
MatrixGFp shift(const MatrixGFp& a, std::int64_t c);
/// Kronecker product: entry ((i,j),(k,l)) = a(i,k) * b(j,l), index i*dim(b)+j.
MatrixGFp kronecker(const MatrixGFp& a, const MatrixGFp& b);

enum class BlockKind { Unipotent, Nilpotent };

/// The d x d Jordan block with 1 on the superdiagonal and `eigenvalue` on
/// the diagonal.
MatrixGFp jordan_block(int d, std::int64_t eigenvalue, Prime p);

/// J_r (x) J_s or N_r (x) N_s. Throws ResourceError when r*s > cap.
MatrixGFp build_tensor(int r, int s, Prime p, BlockKind kind,
                       std::int64_t cap = kDefaultMatrixCap);

/// Rank over GF(p) by Gaussian elimination.
int rank_gfp(const MatrixGFp& m);

/// rank((M - eI)^k) for k = 0, 1, ... up to the first zero, computed by
/// Krylov spans of M - eI without forming powers. Throws DomainError when
/// M - eI is not nilpotent.
std::vector<int> nilpotent_rank_sequence(const MatrixGFp& m, std::int64_t eigenvalue);

/// Same sequence from explicit powers and rank_gfp. Cubic per power; meant
/// for cross-checking small cases.
std::vector<int> rank_sequence_by_powers(const MatrixGFp& m, std::int64_t eigenvalue);

/// Block sizes from a rank sequence r_0 > r_1 > ... > r_K = 0: the number of
/// blocks of size >= k is r_{k-1} - r_k.
Partition partition_from_ranks(std::span<const int> ranks);

/// Jordan block sizes of M for its single eigenvalue.
Partition jcf_partition_single_eigenvalue(const MatrixGFp& m, std::int64_t eigenvalue);

/// Jordan partition of J_r (x) J_s over GF(p), 1 <= r <= s.
Partition oracle_lambda(int r, int s, Prime p, std::int64_t cap = kDefaultMatrixCap);

/// Jordan partition of N_r (x) N_s over GF(p), 1 <= r <= s.
Partition oracle_nilpotent(int r, int s, Prime p, std::int64_t cap = kDefaultMatrixCap);

/// The nilpotent partition split as (s-r+1) copies of r plus every part of
/// mu twice.
struct NilpotentSplit {
  int r_multiplicity; // total copies of part r
  Partition mu;
};

/// Throws VerificationError if the partition does not have that shape or
/// mu does not sum to r(r-1)/2.
NilpotentSplit split_nilpotent(const Partition& nil, int r, int s);

} // namespace norman

#endif
