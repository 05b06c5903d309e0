#include "norman/delta.hpp"

#include <string>

#include "norman/error.hpp"

namespace norman {

namespace {

void check_range(int r, int s) {
  if (r < 1 || r > s)
    throw InvalidArgument("need 1 <= r <= s, got r=" + std::to_string(r) +
                          " s=" + std::to_string(s));
}

BigInt big_binomial(int n, int k) {
  if (k < 0 || k > n)
    return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

} // namespace

int dn_valuation(int r, int s, Prime p, int n) {
  check_range(r, s);
  if (n < 1 || n > r)
    throw InvalidArgument("dn_valuation: need 1 <= n <= r, got n=" +
                          std::to_string(n));
  int v = 0;
  for (int i = 0; i < n; ++i) {
    v += binom_valuation(s + r - 2 * n + i, s - n, p);
    v -= binom_valuation(s - n + i, s - n, p);
  }
  if (v < 0)
    throw InternalError("negative valuation for D_" + std::to_string(n) + "(" +
                        std::to_string(r) + "," + std::to_string(s) + ")");
  return v;
}

BigInt exact_dn(int r, int s, int n) {
  check_range(r, s);
  if (n < 0 || n > r)
    throw InvalidArgument("exact_dn: need 0 <= n <= r");
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 0; i < n; ++i) {
    num *= big_binomial(s + r - 2 * n + i, s - n);
    den *= big_binomial(s - n + i, s - n);
  }
  if (num % den != 0)
    throw InternalError("D_n product form is not an integer");
  return num / den;
}

SubsetProfile DeltaProfile::descent_set() const {
  std::vector<int> members;
  for (int k = 1; k < r_; ++k)
    if (delta(k))
      members.push_back(k);
  return SubsetProfile(r_, std::move(members));
}

bool DeltaProfile::all_ones() const noexcept {
  for (unsigned char d : delta_)
    if (d == 0)
      return false;
  return true;
}

DeltaProfile delta_profile(int r, int s, Prime p, bool verify) {
  check_range(r, s);
  DeltaProfile prof(r, s, p);
  prof.delta_.assign(static_cast<std::size_t>(r + 1), 1);
  for (int n = 1; n < r; ++n)
    prof.delta_[static_cast<std::size_t>(n)] = dn_valuation(r, s, p, n) == 0;

  if (verify) {
    for (int n = 0; n <= r; ++n) {
      const bool exact = exact_dn(r, s, n) % p.value() != 0;
      if (exact != prof.delta(n))
        throw VerificationError("delta_" + std::to_string(n) +
                                " disagrees with exact D_n for (r,s,p)=(" +
                                std::to_string(r) + "," + std::to_string(s) +
                                "," + std::to_string(p.value()) + ")");
    }
  }

  prof.left_.resize(static_cast<std::size_t>(r));
  prof.right_.resize(static_cast<std::size_t>(r));
  int last_set = 0;
  for (int n = 1; n <= r; ++n) {
    prof.left_[static_cast<std::size_t>(n - 1)] = n - last_set;
    if (prof.delta(n))
      last_set = n;
  }
  int next_set = r;
  for (int n = r; n >= 1; --n) {
    if (prof.delta(n))
      next_set = n;
    prof.right_[static_cast<std::size_t>(n - 1)] = next_set - n;
  }
  return prof;
}

} // namespace norman
