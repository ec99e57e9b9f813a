#include "coxshuffle/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace coxshuffle {

ShuffleModel parse_model(const std::string& name) {
  if (name == "gsr_a") return ShuffleModel::GsrA;
  if (name == "typeB_flip") return ShuffleModel::TypeBFlip;
  throw std::invalid_argument("unknown shuffle model: " + name);
}

std::string model_name(ShuffleModel m) { return m == ShuffleModel::GsrA ? "gsr_a" : "typeB_flip"; }

CoxeterType shuffle_group_type(ShuffleModel model, int n) {
  if (model == ShuffleModel::GsrA) return CoxeterType{Family::A, n - 1, 0};
  return CoxeterType{Family::B, n, 0};
}

void validate_shuffle(ShuffleModel model, int n, int param) {
  if (n < 1) throw std::invalid_argument("shuffle: need at least one card");
  if (param < 1) throw std::invalid_argument("shuffle: parameter must be >= 1");
  if (model == ShuffleModel::GsrA && n < 2) throw std::invalid_argument("gsr_a: need at least two cards");
  if (model == ShuffleModel::TypeBFlip && param % 2 == 0) {
    throw std::invalid_argument("typeB_flip: the number of piles must be odd");
  }
}

std::vector<int> shuffle_from_labels(ShuffleModel model, const std::vector<int>& labels) {
  const int n = static_cast<int>(labels.size());
  int piles = 0;
  for (int l : labels) piles = std::max(piles, l);
  std::vector<int> deck;  // deck[k] = signed card at position k + 1
  for (int pile = 1; pile <= piles; ++pile) {
    std::vector<int> cards;
    for (int c = 1; c <= n; ++c) {
      if (labels[static_cast<std::size_t>(c - 1)] == pile) cards.push_back(c);
    }
    const bool flip = model == ShuffleModel::TypeBFlip && pile % 2 == 0;
    if (flip) {
      for (auto it = cards.rbegin(); it != cards.rend(); ++it) deck.push_back(-*it);
    } else {
      deck.insert(deck.end(), cards.begin(), cards.end());
    }
  }
  return deck;
}

namespace {

int element_of(const GroupData& g, const std::vector<int>& form) {
  const int w = g.table().find_one_line(form);
  if (w < 0) throw std::logic_error("sampler: shuffle not found in " + g.type.name());
  return w;
}

void check_group(const GroupData& g, ShuffleModel model, int n) {
  if (g.type != shuffle_group_type(model, n)) {
    throw std::invalid_argument("sampler: group " + g.type.name() + " does not match the model");
  }
}

}  // namespace

int sample_shuffle(const GroupData& g, ShuffleModel model, int n, int param, std::mt19937_64& rng) {
  validate_shuffle(model, n, param);
  check_group(g, model, n);
  std::uniform_int_distribution<int> pile(1, param);
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (auto& l : labels) l = pile(rng);
  return element_of(g, shuffle_from_labels(model, labels));
}

WMeasure sampler_law(std::shared_ptr<const GroupData> g, ShuffleModel model, int n, int param) {
  validate_shuffle(model, n, param);
  check_group(*g, model, n);
  WMeasure m;
  m.values.assign(static_cast<std::size_t>(g->order()), Rational(0));
  const Rational unit = pow(Rational(param), -n);
  std::vector<int> labels(static_cast<std::size_t>(n), 1);
  while (true) {
    m.values[static_cast<std::size_t>(element_of(*g, shuffle_from_labels(model, labels)))] += unit;
    int k = 0;
    while (k < n && labels[static_cast<std::size_t>(k)] == param) labels[static_cast<std::size_t>(k++)] = 1;
    if (k == n) break;
    ++labels[static_cast<std::size_t>(k)];
  }
  m.x = Rational(param);
  m.group = std::move(g);
  return m;
}

TvResult sample_tv_distance(const WMeasure& exact, ShuffleModel model, int n, int param, std::uint64_t count,
                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> hits(exact.values.size(), 0);
  for (std::uint64_t s = 0; s < count; ++s) ++hits[static_cast<std::size_t>(sample_shuffle(*exact.group, model, n, param, rng))];
  double tv = 0.0;
  for (std::size_t w = 0; w < hits.size(); ++w) {
    tv += std::fabs(static_cast<double>(hits[w]) / static_cast<double>(count) - exact.values[w].to_double());
  }
  return {count, tv / 2.0};
}

}  // namespace coxshuffle
