#include "rankcrank/residue_series.hpp"

#include <array>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "rankcrank/cyclotomic.hpp"
#include "rankcrank/kernels.hpp"

namespace rankcrank {
namespace {

constexpr std::size_t kMaxChannels = 64;

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

// Garner constants for the fixed prime list.
struct CrtBasis {
  std::array<std::uint32_t, kMaxChannels> primes{};
  // inverse[i][j] = primes[j]^-1 mod primes[i], j < i
  std::vector<std::array<std::uint32_t, kMaxChannels>> inverse;
  // product[c] = primes[0] * ... * primes[c-1]
  std::vector<Integer> product;
  std::vector<Integer> half;

  CrtBasis() : inverse(kMaxChannels), product(kMaxChannels + 1), half(kMaxChannels + 1) {
    std::size_t found = 0;
    for (std::uint32_t candidate = kernels::kMaxModulus - 1; found < kMaxChannels; candidate -= 2) {
      if (is_prime(candidate)) primes[found++] = candidate;
    }
    for (std::size_t i = 0; i < kMaxChannels; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        inverse[i][j] = static_cast<std::uint32_t>(pow_mod(primes[j] % primes[i], primes[i] - 2, primes[i]));
      }
    }
    product[0] = 1;
    for (std::size_t c = 0; c < kMaxChannels; ++c) product[c + 1] = product[c] * primes[c];
    for (std::size_t c = 0; c <= kMaxChannels; ++c) half[c] = product[c] / 2;
  }
};

const CrtBasis& basis() {
  static const CrtBasis b;
  return b;
}

}  // namespace

std::span<const std::uint32_t> rns_primes(std::size_t count) {
  if (count > kMaxChannels) throw std::out_of_range("too many RNS channels requested");
  return {basis().primes.data(), count};
}

std::size_t rns_channels_for(const Integer& bound) {
  const Integer need = 2 * abs(bound);
  const auto& b = basis();
  for (std::size_t c = 0; c <= kMaxChannels; ++c) {
    if (b.product[c] > need) return c;
  }
  throw std::out_of_range("coefficient bound exceeds RNS capacity");
}

ResidueSeries::ResidueSeries(int order, int width, std::size_t channels)
    : order_(order), width_(width), channels_(channels) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  if (width < 0) throw std::invalid_argument("series width must be non-negative");
  if (channels > kMaxChannels) throw std::out_of_range("too many RNS channels requested");
  stride_ = row_offset(order + 1);
  data_.assign(channels_ * stride_, 0);
  bound_.assign(static_cast<std::size_t>(order) + 1, Integer(0));
}

std::size_t ResidueSeries::row_offset(int n) const {
  const auto nn = static_cast<std::size_t>(n);
  // sum_{m < n} (2 * width * m + 1)
  return nn + static_cast<std::size_t>(width_) * nn * (nn == 0 ? 0 : nn - 1);
}

std::uint32_t* ResidueSeries::row_ptr(std::size_t channel, int n) {
  return data_.data() + channels_ * row_offset(n) + channel * row_length(n);
}

const std::uint32_t* ResidueSeries::row_ptr(std::size_t channel, int n) const {
  return data_.data() + channels_ * row_offset(n) + channel * row_length(n);
}

std::span<const std::uint32_t> ResidueSeries::residues(std::size_t channel, int n) const {
  return {row_ptr(channel, n), row_length(n)};
}

void ResidueSeries::set_one() {
  std::fill(data_.begin(), data_.end(), 0);
  for (auto& b : bound_) b = 0;
  for (std::size_t c = 0; c < channels_; ++c) row_ptr(c, 0)[0] = 1;
  bound_[0] = 1;
}

void ResidueSeries::divide_by_binomial(int a, int j) {
  if (j < 1) throw std::invalid_argument("binomial q-power must be positive");
  if (std::abs(a) > width_ * j) throw std::invalid_argument("binomial z-power exceeds series width");
  const auto& k = kernels::active();
  const auto primes = rns_primes(channels_);
  const std::size_t offset = static_cast<std::size_t>(a + width_ * j);
  for (int n = j; n <= order_; ++n) {
    const std::size_t len = row_length(n - j);
    for (std::size_t c = 0; c < channels_; ++c) {
      k.add_mod(row_ptr(c, n) + offset, row_ptr(c, n - j), len, primes[c]);
    }
    bound_[static_cast<std::size_t>(n)] += bound_[static_cast<std::size_t>(n - j)];
  }
}

void ResidueSeries::multiply_by_binomial(int a, int j) {
  if (j < 1) throw std::invalid_argument("binomial q-power must be positive");
  if (std::abs(a) > width_ * j) throw std::invalid_argument("binomial z-power exceeds series width");
  const auto& k = kernels::active();
  const auto primes = rns_primes(channels_);
  const std::size_t offset = static_cast<std::size_t>(a + width_ * j);
  for (int n = order_; n >= j; --n) {
    const std::size_t len = row_length(n - j);
    for (std::size_t c = 0; c < channels_; ++c) {
      k.sub_mod(row_ptr(c, n) + offset, row_ptr(c, n - j), len, primes[c]);
    }
    bound_[static_cast<std::size_t>(n)] += bound_[static_cast<std::size_t>(n - j)];
  }
}

void ResidueSeries::add_shifted(const ResidueSeries& other, int shift) {
  if (other.channels_ != channels_) throw std::invalid_argument("channel count mismatch");
  if (other.width_ > width_) throw std::invalid_argument("added series is wider than the target");
  if (shift < 0) throw std::invalid_argument("negative q shift");
  const auto& k = kernels::active();
  const auto primes = rns_primes(channels_);
  for (int n = shift; n <= order_ && n - shift <= other.order_; ++n) {
    const int m = n - shift;
    const std::size_t offset = static_cast<std::size_t>(width_ * n - other.width_ * m);
    for (std::size_t c = 0; c < channels_; ++c) {
      k.add_mod(row_ptr(c, n) + offset, other.row_ptr(c, m), other.row_length(m), primes[c]);
    }
    bound_[static_cast<std::size_t>(n)] += other.bound_[static_cast<std::size_t>(m)];
  }
}

void ResidueSeries::truncate(int new_order) {
  if (new_order >= order_) return;
  if (new_order < 0) throw std::invalid_argument("series order must be non-negative");
  order_ = new_order;
  stride_ = row_offset(order_ + 1);
  data_.resize(channels_ * stride_);
  bound_.resize(static_cast<std::size_t>(order_) + 1);
}

Integer ResidueSeries::max_bound() const {
  Integer m = 0;
  for (const auto& b : bound_) {
    if (b > m) m = b;
  }
  return m;
}

LaurentPoly ResidueSeries::row(int n) const {
  if (n < 0 || n > order_) throw std::out_of_range("series row out of range");
  const Integer& bnd = bound_[static_cast<std::size_t>(n)];
  if (sgn(bnd) == 0) return {};
  const auto& b = basis();
  if (b.product[channels_] <= 2 * bnd) {
    throw std::logic_error("residue series has " + std::to_string(channels_) +
                           " channels, too few for the coefficient bound at q^" + std::to_string(n));
  }
  const std::size_t len = row_length(n);
  std::vector<Integer> out(len);
  std::array<std::uint64_t, kMaxChannels> digits{};
  const Integer& modulus = b.product[channels_];
  const Integer& half = b.half[channels_];
  std::array<const std::uint32_t*, kMaxChannels> rows{};
  for (std::size_t c = 0; c < channels_; ++c) rows[c] = row_ptr(c, n);

  for (std::size_t idx = 0; idx < len; ++idx) {
    // Garner mixed-radix digits.
    for (std::size_t i = 0; i < channels_; ++i) {
      const std::uint64_t p = b.primes[i];
      std::uint64_t t = rows[i][idx];
      for (std::size_t j = 0; j < i; ++j) {
        const std::uint64_t vj = digits[j] % p;
        t = (t + p - vj) % p * b.inverse[i][j] % p;
      }
      digits[i] = t;
    }
    Integer& x = out[idx];
    if (channels_ <= 2) {
      const std::uint64_t p0 = b.primes[0];
      std::uint64_t v = digits[0];
      std::uint64_t m = p0;
      if (channels_ == 2) {
        v += digits[1] * p0;
        m *= b.primes[1];
      }
      if (v > m / 2) {
        x = -static_cast<long>(m - v);
      } else {
        x = static_cast<unsigned long>(v);
      }
      continue;
    }
    x = static_cast<unsigned long>(digits[channels_ - 1]);
    for (std::size_t i = channels_ - 1; i-- > 0;) {
      mpz_mul_ui(x.get_mpz_t(), x.get_mpz_t(), b.primes[i]);
      mpz_add_ui(x.get_mpz_t(), x.get_mpz_t(), digits[i]);
    }
    if (x > half) x -= modulus;
  }
  return LaurentPoly(-width_ * n, std::move(out));
}

}  // namespace rankcrank
