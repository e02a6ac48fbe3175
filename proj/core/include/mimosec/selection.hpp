// SPDX-License-Identifier: Apache-2.0
//
// mimosec -- Monte Carlo link-level simulator for secrecy rates in multiuser
// massive MIMO wiretap channels under linear precoding and antenna selection.

#ifndef MIMOSEC_SELECTION_HPP
#define MIMOSEC_SELECTION_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "mimosec/channel.hpp"
#include "mimosec/linalg.hpp"
#include "mimosec/rng.hpp"

namespace mimosec {

// Active antenna set and the channels reduced to it. The same index set
// reduces both the legitimate matrix and the eavesdropper's vector: the
// transmitter chooses the antennas, the eavesdropper just sees them.
struct SelectionResult {
    std::vector<std::size_t> active_indices; // 0-based rows of H, size L
    ComplexMatrix H_eff;                     // L x K, row j = row active_indices[j] of H
    ComplexVector h_eve_eff;                 // length L
};

// Picks the L antennas with the largest channel magnitude, sorted by
// decreasing magnitude, ties broken by lower antenna index. The sort key is
// |h_{k_ref,i}|^2 when a reference user is given; otherwise the row norm
// sum_k |h_{k,i}|^2, which coincides with the single-user rule at K = 1.
SelectionResult select_strongest(const ChannelRealization& r, std::size_t L,
                                 std::optional<std::size_t> reference_user = std::nullopt);

// Picks a uniformly random L-subset, independent of the channel values.
SelectionResult select_random(const ChannelRealization& r, std::size_t L, RngStream& rng);

// All antennas active, in natural order.
SelectionResult select_full(const ChannelRealization& r);

// Strategy tag used by configs and the per-realization pipeline.
enum class SelectionStrategy { Strongest, Random, Full };

struct SelectionSpec {
    SelectionStrategy strategy = SelectionStrategy::Full;
    std::size_t L = 0;                           // ignored for Full
    std::optional<std::size_t> reference_user{}; // Strongest only
};

// Dispatches on the strategy tag; rng is consumed only by the random strategy.
SelectionResult apply_selection(const ChannelRealization& r, const SelectionSpec& spec,
                                RngStream& rng);

} // namespace mimosec

#endif
