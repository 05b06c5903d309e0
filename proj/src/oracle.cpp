#include "norman/oracle.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "norman/error.hpp"

namespace norman {

MatrixGFp::MatrixGFp(int dim, Prime p) : dim_(dim), p_(p) {
  if (dim < 0)
    throw InvalidArgument("matrix dimension must be non-negative");
  entries_.assign(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), 0);
}

MatrixGFp MatrixGFp::identity(int dim, Prime p) {
  MatrixGFp m(dim, p);
  for (int i = 0; i < dim; ++i)
    m.set(i, i, 1);
  return m;
}

MatrixGFp MatrixGFp::from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                               Prime p) {
  const int n = static_cast<int>(rows.size());
  MatrixGFp m(n, p);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n)
      throw InvalidArgument("from_rows: matrix is not square");
    for (int j = 0; j < n; ++j)
      m.set(i, j, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  }
  return m;
}

void MatrixGFp::set(int i, int j, std::int64_t value) {
  entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) +
           static_cast<std::size_t>(j)] =
      static_cast<std::uint32_t>(mod_interval(value, p_.value()));
}

bool MatrixGFp::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](std::uint32_t x) { return x == 0; });
}

MatrixGFp multiply(const MatrixGFp& a, const MatrixGFp& b) {
  if (a.dim() != b.dim() || a.p() != b.p())
    throw InvalidArgument("multiply: shape or field mismatch");
  const int n = a.dim();
  const std::uint64_t p = static_cast<std::uint64_t>(a.p().value());
  MatrixGFp c(n, a.p());
  std::vector<std::uint64_t> acc(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (int k = 0; k < n; ++k) {
      const std::uint64_t aik = a(i, k);
      if (aik == 0)
        continue;
      const auto brow = b.row(k);
      for (int j = 0; j < n; ++j)
        acc[static_cast<std::size_t>(j)] =
            (acc[static_cast<std::size_t>(j)] + aik * brow[static_cast<std::size_t>(j)]) % p;
    }
    for (int j = 0; j < n; ++j)
      c.set(i, j, static_cast<std::int64_t>(acc[static_cast<std::size_t>(j)]));
  }
  return c;
}

MatrixGFp shift(const MatrixGFp& a, std::int64_t c) {
  MatrixGFp out = a;
  for (int i = 0; i < a.dim(); ++i)
    out.set(i, i, static_cast<std::int64_t>(a(i, i)) - c);
  return out;
}

MatrixGFp kronecker(const MatrixGFp& a, const MatrixGFp& b) {
  if (a.p() != b.p())
    throw InvalidArgument("kronecker: field mismatch");
  const int na = a.dim();
  const int nb = b.dim();
  MatrixGFp out(na * nb, a.p());
  for (int i = 0; i < na; ++i)
    for (int k = 0; k < na; ++k) {
      const std::int64_t aik = a(i, k);
      if (aik == 0)
        continue;
      for (int j = 0; j < nb; ++j)
        for (int l = 0; l < nb; ++l)
          if (b(j, l) != 0)
            out.set(i * nb + j, k * nb + l, aik * b(j, l));
    }
  return out;
}

MatrixGFp jordan_block(int d, std::int64_t eigenvalue, Prime p) {
  if (d < 1)
    throw InvalidArgument("Jordan block size must be positive");
  MatrixGFp m(d, p);
  for (int i = 0; i < d; ++i) {
    m.set(i, i, eigenvalue);
    if (i + 1 < d)
      m.set(i, i + 1, 1);
  }
  return m;
}

MatrixGFp build_tensor(int r, int s, Prime p, BlockKind kind, std::int64_t cap) {
  if (r < 1 || s < 1)
    throw InvalidArgument("build_tensor: block sizes must be positive");
  if (static_cast<std::int64_t>(r) * s > cap)
    throw ResourceError("matrix dimension " + std::to_string(r * s) +
                        " exceeds cap " + std::to_string(cap));
  const std::int64_t diag = kind == BlockKind::Unipotent ? 1 : 0;
  return kronecker(jordan_block(r, diag, p), jordan_block(s, diag, p));
}

namespace {

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // Fermat: a^(p-2).
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  std::uint32_t e = p - 2;
  while (e > 0) {
    if (e & 1)
      result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

// dst[k] = (dst[k] + f * src[k]) mod p for k in [from, n). Specialised for
// small primes so the compiler can turn the division into multiplications.
template <std::uint32_t P>
void axpy_fixed(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f,
                std::size_t from, std::size_t n) {
  for (std::size_t k = from; k < n; ++k)
    dst[k] = (dst[k] + f * src[k]) % P;
}

void axpy(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f,
          std::size_t from, std::size_t n, std::uint32_t p) {
  switch (p) {
  case 2:
    return axpy_fixed<2>(dst, src, f, from, n);
  case 3:
    return axpy_fixed<3>(dst, src, f, from, n);
  case 5:
    return axpy_fixed<5>(dst, src, f, from, n);
  case 7:
    return axpy_fixed<7>(dst, src, f, from, n);
  default:
    for (std::size_t k = from; k < n; ++k)
      dst[k] = static_cast<std::uint32_t>(
          (dst[k] + static_cast<std::uint64_t>(f) * src[k]) % p);
  }
}

// Row space in echelon form: each stored row has a leading 1 at its pivot
// and zeros before it.
class EchelonBasis {
public:
  EchelonBasis(int n, std::uint32_t p)
      : n_(static_cast<std::size_t>(n)), p_(p), pivot_of_(n_, -1),
        inverses_(p) {
    for (std::uint32_t a = 1; a < p && p < 1u << 16; ++a)
      inverses_[a] = inverse_mod(a, p);
  }

  std::size_t rank() const noexcept { return rows_.size(); }
  bool full() const noexcept { return rows_.size() == n_; }

  /// Adds v to the span; returns false (and leaves the basis unchanged) if v
  /// was already in it. v is clobbered.
  bool insert(std::vector<std::uint32_t>& v) {
    const std::size_t pivot = reduce(v);
    if (pivot == n_)
      return false;
    const std::uint32_t inv =
        p_ < 1u << 16 ? inverses_[v[pivot]] : inverse_mod(v[pivot], p_);
    for (std::size_t k = pivot; k < n_; ++k)
      v[k] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v[k]) * inv % p_);
    pivot_of_[pivot] = static_cast<int>(rows_.size());
    rows_.push_back(v);
    return true;
  }

  bool contains(std::vector<std::uint32_t> v) const { return reduce(v) == n_; }

private:
  // Eliminates v against the basis; returns the first column where v is
  // non-zero without a pivot, or n if v reduces to zero.
  std::size_t reduce(std::vector<std::uint32_t>& v) const {
    for (std::size_t c = 0; c < n_; ++c) {
      if (v[c] == 0)
        continue;
      const int row = pivot_of_[c];
      if (row < 0)
        return c;
      axpy(v.data(), rows_[static_cast<std::size_t>(row)].data(), p_ - v[c], c,
           n_, p_);
    }
    return n_;
  }

  std::size_t n_;
  std::uint32_t p_;
  std::vector<int> pivot_of_;
  std::vector<std::uint32_t> inverses_;
  std::vector<std::vector<std::uint32_t>> rows_;
};

// Compressed rows of a matrix for repeated matrix-vector products.
class SparseMatrix {
public:
  explicit SparseMatrix(const MatrixGFp& m)
      : n_(m.dim()), p_(static_cast<std::uint64_t>(m.p().value())) {
    offsets_.push_back(0);
    for (int i = 0; i < n_; ++i) {
      const auto row = m.row(i);
      for (int j = 0; j < n_; ++j)
        if (row[static_cast<std::size_t>(j)] != 0) {
          cols_.push_back(j);
          vals_.push_back(row[static_cast<std::size_t>(j)]);
        }
      offsets_.push_back(cols_.size());
    }
  }

  std::vector<std::uint32_t> apply(const std::vector<std::uint32_t>& v) const {
    std::vector<std::uint32_t> out(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
      std::uint64_t acc = 0;
      for (std::size_t k = offsets_[static_cast<std::size_t>(i)];
           k < offsets_[static_cast<std::size_t>(i) + 1]; ++k)
        acc = (acc + static_cast<std::uint64_t>(vals_[k]) *
                         v[static_cast<std::size_t>(cols_[k])]) % p_;
      out[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(acc);
    }
    return out;
  }

private:
  int n_;
  std::uint64_t p_;
  std::vector<std::size_t> offsets_;
  std::vector<int> cols_;
  std::vector<std::uint32_t> vals_;
};

bool is_zero(const std::vector<std::uint32_t>& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
}

} // namespace

int rank_gfp(const MatrixGFp& m) {
  EchelonBasis basis(m.dim(), static_cast<std::uint32_t>(m.p().value()));
  for (int i = 0; i < m.dim(); ++i) {
    std::vector<std::uint32_t> v(m.row(i).begin(), m.row(i).end());
    basis.insert(v);
  }
  return static_cast<int>(basis.rank());
}

std::vector<int> nilpotent_rank_sequence(const MatrixGFp& m, std::int64_t eigenvalue) {
  const int n = m.dim();
  if (n == 0)
    return {0};
  const auto p = static_cast<std::uint32_t>(m.p().value());
  const SparseMatrix a(shift(m, eigenvalue));

  // Choose generators g_1, g_2, ... among the unit vectors until the
  // a-invariant span of their Krylov sequences is everything. The span stays
  // a-invariant after each full chain, so a chain can stop at its first
  // dependent vector.
  std::vector<int> generators;
  {
    EchelonBasis span(n, p);
    for (int b = n - 1; b >= 0 && !span.full(); --b) {
      std::vector<std::uint32_t> unit(static_cast<std::size_t>(n), 0);
      unit[static_cast<std::size_t>(b)] = 1;
      if (span.contains(unit))
        continue;
      generators.push_back(b);
      std::vector<std::uint32_t> v = unit;
      for (int steps = 0;; ++steps) {
        if (steps > n)
          throw DomainError("matrix minus eigenvalue is not nilpotent");
        std::vector<std::uint32_t> next = a.apply(v);
        if (!span.insert(v))
          break;
        v = std::move(next);
      }
    }
  }

  // a^k V is spanned by a^j g for j >= k.
  std::vector<std::vector<std::vector<std::uint32_t>>> chains;
  std::size_t longest = 0;
  for (int b : generators) {
    std::vector<std::vector<std::uint32_t>> chain;
    std::vector<std::uint32_t> v(static_cast<std::size_t>(n), 0);
    v[static_cast<std::size_t>(b)] = 1;
    while (!is_zero(v)) {
      if (chain.size() > static_cast<std::size_t>(n))
        throw DomainError("matrix minus eigenvalue is not nilpotent");
      std::vector<std::uint32_t> next = a.apply(v);
      chain.push_back(std::move(v));
      v = std::move(next);
    }
    longest = std::max(longest, chain.size());
    chains.push_back(std::move(chain));
  }

  std::vector<int> ranks(longest + 1, 0);
  EchelonBasis image(n, p);
  for (std::size_t k = longest; k-- > 0;) {
    for (auto& chain : chains)
      if (k < chain.size())
        image.insert(chain[k]);
    ranks[k] = static_cast<int>(image.rank());
  }
  if (ranks[0] != n)
    throw InternalError("Krylov generators do not span the space");
  return ranks;
}

std::vector<int> rank_sequence_by_powers(const MatrixGFp& m, std::int64_t eigenvalue) {
  const MatrixGFp a = shift(m, eigenvalue);
  std::vector<int> ranks{m.dim()};
  MatrixGFp power = MatrixGFp::identity(m.dim(), m.p());
  while (ranks.back() > 0) {
    if (static_cast<int>(ranks.size()) > m.dim())
      throw DomainError("matrix minus eigenvalue is not nilpotent");
    power = multiply(power, a);
    ranks.push_back(rank_gfp(power));
  }
  return ranks;
}

Partition partition_from_ranks(std::span<const int> ranks) {
  if (ranks.empty() || ranks.back() != 0)
    throw InvalidArgument("rank sequence must end in zero");
  // at_least[k-1] = number of blocks of size >= k.
  std::vector<int> at_least;
  for (std::size_t k = 1; k < ranks.size(); ++k) {
    const int count = ranks[k - 1] - ranks[k];
    if (count < 0 || (!at_least.empty() && count > at_least.back()))
      throw DomainError("rank sequence is not that of a nilpotent matrix");
    at_least.push_back(count);
  }
  std::vector<int> parts;
  const int blocks = at_least.empty() ? 0 : at_least.front();
  for (int j = 1; j <= blocks; ++j) {
    int size = 0;
    while (size < static_cast<int>(at_least.size()) &&
           at_least[static_cast<std::size_t>(size)] >= j)
      ++size;
    parts.push_back(size);
  }
  return Partition(std::move(parts));
}

Partition jcf_partition_single_eigenvalue(const MatrixGFp& m, std::int64_t eigenvalue) {
  const std::vector<int> ranks = nilpotent_rank_sequence(m, eigenvalue);
  return partition_from_ranks(ranks);
}

namespace {

void check_order(int r, int s) {
  if (r < 1 || r > s)
    throw InvalidArgument("need 1 <= r <= s, got r=" + std::to_string(r) +
                          " s=" + std::to_string(s));
}

} // namespace

Partition oracle_lambda(int r, int s, Prime p, std::int64_t cap) {
  check_order(r, s);
  return jcf_partition_single_eigenvalue(
      build_tensor(r, s, p, BlockKind::Unipotent, cap), 1);
}

Partition oracle_nilpotent(int r, int s, Prime p, std::int64_t cap) {
  check_order(r, s);
  return jcf_partition_single_eigenvalue(
      build_tensor(r, s, p, BlockKind::Nilpotent, cap), 0);
}

NilpotentSplit split_nilpotent(const Partition& nil, int r, int s) {
  check_order(r, s);
  std::map<int, int, std::greater<>> mult;
  for (int part : nil.parts())
    ++mult[part];
  const int forced = s - r + 1;
  NilpotentSplit out{mult[r], Partition{}};
  if (mult[r] < forced)
    throw VerificationError("part " + std::to_string(r) + " occurs " +
                            std::to_string(mult[r]) + " times, expected at least " +
                            std::to_string(forced));
  mult[r] -= forced;
  std::vector<int> mu;
  long long mu_sum = 0;
  for (auto [part, count] : mult) {
    if (count % 2 != 0)
      throw VerificationError("part " + std::to_string(part) +
                              " has odd leftover multiplicity " +
                              std::to_string(count));
    for (int k = 0; k < count / 2; ++k) {
      mu.push_back(part);
      mu_sum += part;
    }
  }
  if (mu_sum != static_cast<long long>(r) * (r - 1) / 2)
    throw VerificationError("mu sums to " + std::to_string(mu_sum) +
                            ", expected r(r-1)/2 = " +
                            std::to_string(r * (r - 1) / 2));
  out.mu = Partition(std::move(mu));
  return out;
}

} // namespace norman
