#pragma once

// Truncated power series in q whose coefficients are Laurent polynomials in z,
// held as residues modulo several word-size primes.
//
// Row n (the coefficient of q^n) is stored densely over exponents
// [-width*n, width*n]. Every operation also updates an l1 majorant per row
// (an upper bound on the sum of absolute coefficient values), so the number
// of primes needed for exact CRT reconstruction is known before any residue
// arithmetic is done: build once with zero channels to get the bounds, then
// again with enough channels. build_residue_series does exactly that.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rankcrank/laurent.hpp"

namespace rankcrank {

// The first `count` primes below 2^31, in descending order.
std::span<const std::uint32_t> rns_primes(std::size_t count);

// Smallest number of primes whose product exceeds 2 * bound.
std::size_t rns_channels_for(const Integer& bound);

class ResidueSeries {
 public:
  ResidueSeries(int order, int width, std::size_t channels);

  int order() const { return order_; }
  int width() const { return width_; }
  std::size_t channels() const { return channels_; }

  // Empty series with the same shape and channels.
  ResidueSeries like(int order) const { return ResidueSeries(order, width_, channels_); }

  void set_one();
  // *= 1 / (1 - z^a q^j), requires |a| <= width * j and j >= 1.
  void divide_by_binomial(int a, int j);
  // *= (1 - z^a q^j)
  void multiply_by_binomial(int a, int j);
  // += q^shift * other
  void add_shifted(const ResidueSeries& other, int shift);
  // Drop rows above new_order.
  void truncate(int new_order);

  const Integer& bound(int n) const { return bound_[static_cast<std::size_t>(n)]; }
  Integer max_bound() const;

  // Exact coefficient of q^n. Throws std::logic_error if the channel count is
  // too small for bound(n).
  LaurentPoly row(int n) const;

  std::span<const std::uint32_t> residues(std::size_t channel, int n) const;

 private:
  std::size_t row_offset(int n) const;
  std::size_t row_length(int n) const { return 2 * static_cast<std::size_t>(width_) * n + 1; }
  std::uint32_t* row_ptr(std::size_t channel, int n);
  const std::uint32_t* row_ptr(std::size_t channel, int n) const;

  int order_;
  int width_;
  std::size_t channels_;
  std::size_t stride_;
  std::vector<std::uint32_t> data_;
  std::vector<Integer> bound_;
};

// Runs `build` once on a zero-channel series to learn the coefficient bounds,
// then again on a series carrying enough primes for exact reconstruction.
// `build` must be deterministic and take a ResidueSeries& it initialises.
template <class Build>
ResidueSeries build_residue_series(int order, int width, Build&& build) {
  ResidueSeries probe(order, width, 0);
  build(probe);
  ResidueSeries series(order, width, rns_channels_for(probe.max_bound()));
  build(series);
  return series;
}

}  // namespace rankcrank
