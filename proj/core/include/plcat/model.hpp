// Copyright 2026 The plcat Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// Finite models: categories whose objects are finite carriers and whose
// morphisms are functions given by tables, equipped with a sum structure
// (+, 0), a product structure (*, 1) and a family i : A+B -> A*B.
//
// Objects are interned on demand: base objects come from the model
// definition, composite objects are created the first time a sum or product
// is requested.  A Model is safe to query from several threads.

#ifndef PLCAT_MODEL_HPP_
#define PLCAT_MODEL_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace plcat {

using ObjId = std::uint32_t;

// A morphism: `map[x]` is the image of carrier element x of `dom`.
struct Mor {
  ObjId            dom = 0;
  ObjId            cod = 0;
  std::vector<int> map;

  friend bool                 operator==(const Mor&, const Mor&) = default;
  friend std::strong_ordering operator<=>(const Mor&, const Mor&) = default;
};

struct MorHash {
  std::size_t operator()(const Mor& f) const noexcept;
};

enum class StructureMap {
  AssocSum,   // A+(B+C) -> (A+B)+C
  LunitSum,   // 0+A -> A
  RunitSum,   // A+0 -> A
  AssocProd,  // A*(B*C) -> (A*B)*C
  LunitProd,  // 1*A -> A
  RunitProd,  // A*1 -> A
  I,          // A+B -> A*B
};

std::size_t                 structure_arity(StructureMap map);
std::string                 structure_name(StructureMap map);
std::optional<StructureMap> parse_structure_name(std::string_view name);

// Malformed model definitions and ill-typed requests.
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a model contradicts a property the algorithms rely on, e.g. two
// distinct morphisms with the same matrix presentation.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Model {
 public:
  virtual ~Model() = default;
  Model(const Model&)            = delete;
  Model& operator=(const Model&) = delete;

  virtual std::string kind() const = 0;

  // Base objects in declaration order.
  const std::vector<ObjId>& objects() const noexcept { return base_; }
  std::optional<ObjId>      find(std::string_view name) const;
  // Base objects carry their declared name; composites render as words,
  // e.g. "(P2+(P3*P2))".
  std::string name(ObjId x) const;
  std::size_t carrier_size(ObjId x) const;
  std::size_t object_count() const;

  ObjId zero() const noexcept { return unit_; }
  ObjId one() const noexcept { return unit_; }
  ObjId sum(ObjId a, ObjId b) const;
  ObjId prod(ObjId a, ObjId b) const;

  Mor  identity(ObjId x) const;
  // g after f.  Throws ModelError when cod(f) != dom(g).
  Mor  compose(const Mor& g, const Mor& f) const;
  Mor  sum(const Mor& f, const Mor& g) const;
  Mor  prod(const Mor& f, const Mor& g) const;
  bool is_morphism(ObjId dom, ObjId cod, std::span<const int> map) const;
  // Sorted; memoized per pair.  Throws ModelError when the search space is
  // too large to enumerate.
  const std::vector<Mor>& hom(ObjId dom, ObjId cod) const;

  // Structure components, with overrides applied.
  Mor structure(StructureMap map, std::span<const ObjId> args) const;
  Mor structure(StructureMap map, std::initializer_list<ObjId> args) const {
    return structure(map, std::span<const ObjId>(args.begin(), args.size()));
  }
  // Inverse of an associator or unitor component; IntegrityError when the
  // component is not invertible.
  Mor structure_inverse(StructureMap map, std::span<const ObjId> args) const;
  Mor structure_inverse(StructureMap map, std::initializer_list<ObjId> args) const {
    return structure_inverse(map, std::span<const ObjId>(args.begin(), args.size()));
  }
  Mor i(ObjId a, ObjId b) const { return structure(StructureMap::I, {a, b}); }

  Mor bang_from_zero(ObjId x) const;
  Mor bang_to_one(ObjId x) const;
  // The map 0 -> 1.
  Mor j() const { return bang_from_zero(one()); }

  std::optional<Mor> inverse(const Mor& f) const;

  // Replaces one structure component at base objects.  The table must be a
  // morphism of the right type; associators and unitors must be invertible.
  void set_override(StructureMap map, std::vector<ObjId> args, std::vector<int> table);
  bool has_overrides() const;

  // Renders a morphism as "name->name [table]".
  std::string describe(const Mor& f) const;

 protected:
  Model() = default;

  enum class Shape : std::uint8_t { Base, Sum, Prod };

  struct ObjectRecord {
    std::string      name;
    std::size_t      size = 0;
    Shape            shape = Shape::Base;
    ObjId            a = 0, b = 0;
    std::vector<int> table;  // binary operation, row-major; optional
  };

  // Registers a base object; the first registered object is the unit.
  ObjId add_base(ObjectRecord record);
  // Keeps the unit out of objects(); it still exists as 0 and 1.
  void  hide_unit();
  // Interns a composite object; `make` builds the record on first use.
  template <typename Make>
  ObjId intern(Shape shape, ObjId a, ObjId b, Make&& make) const;
  // Records never change once created.
  const ObjectRecord& record(ObjId x) const;

  virtual ObjId             make_sum(ObjId a, ObjId b) const  = 0;
  virtual ObjId             make_prod(ObjId a, ObjId b) const = 0;
  virtual std::vector<int>  sum_table(const Mor& f, const Mor& g) const  = 0;
  virtual std::vector<int>  prod_table(const Mor& f, const Mor& g) const = 0;
  virtual bool              preserves_structure(ObjId dom, ObjId cod,
                                                std::span<const int> map) const = 0;
  virtual std::vector<Mor>  enumerate_hom(ObjId dom, ObjId cod) const = 0;
  virtual Mor               compute_structure(StructureMap map,
                                              std::span<const ObjId> args) const = 0;

  static constexpr std::size_t kMaxHomCandidates = 4'000'000;

 private:
  using StructureKey = std::pair<StructureMap, std::vector<ObjId>>;

  std::vector<ObjId> base_;
  ObjId              unit_ = 0;

  mutable std::shared_mutex                                   mutex_;
  mutable std::deque<ObjectRecord>                            records_;
  mutable std::map<std::tuple<Shape, ObjId, ObjId>, ObjId>    interned_;
  mutable std::map<std::pair<ObjId, ObjId>, std::vector<Mor>> homs_;
  mutable std::map<StructureKey, Mor>                         structure_cache_;
  std::map<StructureKey, Mor>                                 overrides_;
};

template <typename Make>
ObjId Model::intern(Shape shape, ObjId a, ObjId b, Make&& make) const {
  const auto key = std::make_tuple(shape, a, b);
  {
    std::shared_lock lock(mutex_);
    if (auto it = interned_.find(key); it != interned_.end()) return it->second;
  }
  ObjectRecord rec = make();
  rec.shape        = shape;
  rec.a            = a;
  rec.b            = b;
  std::unique_lock lock(mutex_);
  if (auto it = interned_.find(key); it != interned_.end()) return it->second;
  const auto id = static_cast<ObjId>(records_.size());
  records_.push_back(std::move(rec));
  interned_.emplace(key, id);
  return id;
}

// Pointed finite sets {0, ..., n-1} with basepoint 0 and basepoint-preserving
// maps.  The sum is the wedge (basepoint, then the non-base elements of the
// left summand, then those of the right), the product is the cartesian
// product with lexicographic numbering, and i sends a left element x to
// (x, 0) and a right element y to (0, y).  The one-point set is both units.
class PointedSets final : public Model {
 public:
  // Base objects of the given sizes, named "P<n>".
  explicit PointedSets(std::vector<std::size_t> sizes);
  // Every pointed set of size 1..max_size.
  static std::unique_ptr<PointedSets> up_to(std::size_t max_size);

  std::string kind() const override { return "pointed_sets"; }

 protected:
  ObjId            make_sum(ObjId a, ObjId b) const override;
  ObjId            make_prod(ObjId a, ObjId b) const override;
  std::vector<int> sum_table(const Mor& f, const Mor& g) const override;
  std::vector<int> prod_table(const Mor& f, const Mor& g) const override;
  bool             preserves_structure(ObjId dom, ObjId cod,
                                       std::span<const int> map) const override;
  std::vector<Mor> enumerate_hom(ObjId dom, ObjId cod) const override;
  Mor compute_structure(StructureMap map, std::span<const ObjId> args) const override;
};

// A commutative monoid on {0, ..., n-1} with identity 0, as a row-major
// Cayley table.
struct MonoidTable {
  std::string      name;
  std::size_t      size = 0;
  std::vector<int> mul;

  int operator()(int a, int b) const { return mul[static_cast<std::size_t>(a) * size + b]; }
};

// Throws ModelError unless the table is a commutative monoid with identity 0.
void validate_monoid(const MonoidTable& m);

// One representative of every isomorphism class of commutative monoids of
// size 1..max_size.  Cyclic groups are named "C<n>", the rest
// "M<n><letter>".
std::vector<MonoidTable> enumerate_commutative_monoids(std::size_t max_size);

// Commutative monoids and monoid homomorphisms.  Both the sum and the product
// are the direct product (so A+B and A*B are the same object) and i is the
// identity.  The trivial monoid "C1" is both units.
class CommutativeMonoids final : public Model {
 public:
  explicit CommutativeMonoids(std::vector<MonoidTable> tables);
  static std::unique_ptr<CommutativeMonoids> up_to(std::size_t max_size);

  std::string kind() const override { return "commutative_monoids"; }

  int multiply(ObjId x, int a, int b) const;

 protected:
  ObjId            make_sum(ObjId a, ObjId b) const override;
  ObjId            make_prod(ObjId a, ObjId b) const override;
  std::vector<int> sum_table(const Mor& f, const Mor& g) const override;
  std::vector<int> prod_table(const Mor& f, const Mor& g) const override;
  bool             preserves_structure(ObjId dom, ObjId cod,
                                       std::span<const int> map) const override;
  std::vector<Mor> enumerate_hom(ObjId dom, ObjId cod) const override;
  Mor compute_structure(StructureMap map, std::span<const ObjId> args) const override;
};

}  // namespace plcat

#endif  // PLCAT_MODEL_HPP_
