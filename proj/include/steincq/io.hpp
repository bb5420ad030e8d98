#pragma once

#include <string>

#include "steincq/free_sets.hpp"
#include "steincq/resource_ops.hpp"

namespace steincq {

// Channel-spec file: JSON with fields alphabet_size, out_dim and one row-major
// matrix of [re, im] pairs per letter. Doubles serialize with shortest
// round-trip precision (17 significant digits suffice), so files reload
// bit-exactly.
CqChannel read_channel(const std::string& path);
void write_channel(const std::string& path, const CqChannel& channel);

std::string channel_to_json(const CqChannel& channel);
CqChannel channel_from_json(const std::string& text);

// Free-set spec: {"kind": ..., "n": ..., "params": {...}}; singleton params
// embed a channel spec under "channel".
FreeSetDescriptor read_free_set(const std::string& text_or_path);

// Smoothed-channel report: the channel plus the per-letter projector list in
// the same matrix encoding.
void write_smoothed_channel(const std::string& path, const SmoothedChannel& sc);

// Superchannel recipe: test operator, probe letter, and both target channels.
void write_recipe(const std::string& path, const SuperchannelRecipe& recipe);
SuperchannelRecipe read_recipe(const std::string& path);

}  // namespace steincq
