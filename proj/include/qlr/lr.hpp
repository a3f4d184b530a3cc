#pragma once

#include <cstdint>
#include <map>
#include <span>

#include "qlr/partition.hpp"

namespace qlr {

// Number of mu-lattice column-strict tableaux of shape outer/inner with the
// given content.
std::int64_t count_lattice_fillings(const Partition& outer, const Partition& inner, std::span<const int> content,
                                    const Partition& mu = {});

// <s_{lambda/mu}, s_{sigma/tau}>.
std::int64_t lr_coefficient(const Partition& sigma, const Partition& tau, const Partition& lambda,
                            const Partition& mu);
// c^lambda_{mu,nu}.
std::int64_t lr(const Partition& lambda, const Partition& mu, const Partition& nu);

// s_{outer/inner} = sum_nu c nu.
std::map<Partition, std::int64_t> skew_schur_expansion(const Partition& outer, const Partition& inner);
// s_a s_b restricted to partitions with at most max_parts parts.
std::map<Partition, std::int64_t> schur_product(const Partition& a, const Partition& b, int max_parts);

// Coefficient of s_sigma in s_{alpha/inner} s_beta, as sum_nu c^alpha_{inner,nu} c^sigma_{beta,nu}.
std::int64_t lr_skew_straight(const Partition& sigma, const Partition& alpha, const Partition& inner,
                              const Partition& beta);
// Same coefficient read off a single lattice count on sigma/beta.
std::int64_t lr_skew_straight_direct(const Partition& sigma, const Partition& alpha, const Partition& inner,
                                     const Partition& beta);

std::int64_t kostka_number(const Partition& lambda, std::span<const int> content);

// Partitions sigma containing inner with |sigma| = |inner| + extra.
std::vector<Partition> partitions_containing(const Partition& inner, int extra, int max_parts);

}  // namespace qlr
