#ifndef COXSHUFFLE_SAMPLER_HPP
#define COXSHUFFLE_SAMPLER_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "coxshuffle/measures.hpp"

namespace coxshuffle {

enum class ShuffleModel { GsrA, TypeBFlip };

ShuffleModel parse_model(const std::string& name);
std::string model_name(ShuffleModel m);

/// Group type acted on by n cards: A_{n-1} for riffles, B_n for flips.
CoxeterType shuffle_group_type(ShuffleModel model, int n);

/// Inverse shuffle driven by one pile label per card (labels in 1..param).
/// Cards are gathered pile by pile; under TypeBFlip the even-numbered
/// piles are turned over, which reverses them and flips every card's sign.
/// Returns the resulting deck as a signed one-line permutation (entry k is
/// the card now at position k). Read this way the sampler's law is H_{W,param};
/// the inverse reading differs from it already for A3 and B3.
std::vector<int> shuffle_from_labels(ShuffleModel model, const std::vector<int>& labels);

/// Throws std::invalid_argument on bad parameters (param < 1, n < 1, or
/// an even param for TypeBFlip).
void validate_shuffle(ShuffleModel model, int n, int param);

/// One sampled element (index into g) with uniform labels from rng.
int sample_shuffle(const GroupData& g, ShuffleModel model, int n, int param, std::mt19937_64& rng);

/// Exact law of the sampler, by enumerating all param^n label sequences.
WMeasure sampler_law(std::shared_ptr<const GroupData> g, ShuffleModel model, int n, int param);

struct TvResult {
  std::uint64_t samples = 0;
  double distance = 0.0;
};

/// Total-variation distance between `count` seeded samples and `exact`.
TvResult sample_tv_distance(const WMeasure& exact, ShuffleModel model, int n, int param, std::uint64_t count,
                            std::uint64_t seed);

}  // namespace coxshuffle

#endif  // COXSHUFFLE_SAMPLER_HPP
