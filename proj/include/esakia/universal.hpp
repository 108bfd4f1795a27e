#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "esakia/vietoris.hpp"

namespace esakia {

// Elements of an HA complex computed from their up-cones only. Layers of the
// seed complex are used as they are; deeper elements are created on demand,
// so questions about small cones can be answered far past the depth at which
// whole layers become too large to build.
class ConeEngine {
 public:
  using Id = std::size_t;

  explicit ConeEngine(Complex seed, const Limits& lim = Limits::defaults());
  ~ConeEngine();
  ConeEngine(ConeEngine&&) noexcept;
  ConeEngine& operator=(ConeEngine&&) noexcept;

  const Complex& seed() const;
  // Layers 0..seed depth are complete; deeper ones hold what has been touched.
  bool complete(std::size_t k) const;

  Id root(std::size_t k, Id x) const;
  const std::vector<Id>& provenance(std::size_t k, Id x) const;
  std::string name(std::size_t k, Id x) const;
  // Layer-k elements above x, ascending.
  const std::vector<Id>& cone(std::size_t k, Id x);
  bool leq(std::size_t k, Id a, Id b);
  // Layer-(k+1) elements whose root is x.
  const std::vector<Id>& fiber(std::size_t k, Id x);
  // up(x) as a layer-(k+1) element.
  Id principal(std::size_t k, Id x);
  // Finds the layer-k element with the given provenance (ids in layer k-1).
  std::optional<Id> find(std::size_t k, const std::vector<Id>& prov);
  // As find, but creates a deeper element after checking that prov is a
  // rooted open subset. Throws MissingElement.
  Id element(std::size_t k, const std::vector<Id>& prov);

  bool prestable(std::size_t k, Id x);
  bool stable(std::size_t k, Id x);

  // All stable elements of layer k, ascending. Needs layer k-1 complete.
  std::vector<Id> stable_layer(std::size_t k);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

enum class Flag { no, yes, unknown };

struct StabilityTable {
  // prestable[i][x], stable[i][x]; the last layer of the complex is unknown.
  std::vector<std::vector<Flag>> prestable;
  std::vector<std::vector<Flag>> stable;
};

// Flags from the complex's own layers: a layer is decided when the next one
// exists. Throws InsufficientDepth for an empty complex and
// ConsistencyFailure if a stable point has an unstable fiber.
StabilityTable stability_table(const Complex& c);

// x* = { up y : y >= x } as an element of layer i+2 (needs layer i+2 in the
// complex or an HA complex). Throws MissingElement, InsufficientDepth.
ConeEngine::Id bullet_embed(ConeEngine& e, std::size_t i, ConeEngine::Id x);

struct UniversalModel {
  std::size_t depth = 0;
  Poset poset;
  // Engine ids of the stable layer-`depth` elements, parallel to poset.
  std::vector<ConeEngine::Id> ids;
};

// Stable points of layer d of the HA complex over `base` with the terminal
// witness.
UniversalModel universal_model(ConeEngine& e, std::size_t d);
UniversalModel universal_model(const Poset& base, std::size_t d, const Limits& lim = Limits::defaults());
UniversalModel n_universal_model(std::size_t n, std::size_t d, const Limits& lim = Limits::defaults());
// Engine over `base` with the terminal witness and complete layers up to
// `complete_depth`.
ConeEngine terminal_engine(const Poset& base, std::size_t complete_depth, const Limits& lim = Limits::defaults());

// Embedding of the depth-d model into the depth-(d+1) model, x -> up x.
// Throws ConsistencyFailure if the image is not a stable point.
MonotoneMap universal_embedding(ConeEngine& e, const UniversalModel& lower, const UniversalModel& upper);

}  // namespace esakia
