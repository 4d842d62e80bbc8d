// Versioned JSON structure files: {"version": 1, "base", "kind", "payload"}.
// Payloads hold integer-indexed tables; carriers that cannot be tabulated (the lazy base category)
// are described by their construction instead.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "duo/dayconv.hpp"
#include "duo/tannaka.hpp"
#include "duo/warp.hpp"

namespace duo {

// Malformed JSON, schema violations, out-of-range indices and partial tables.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SpecFile {
  BaseKind base;
  std::string kind;  // category|monoidal|braided|duoidal|bimonoid|produoidal|warping|witness
  nlohmann::json payload;
};

const std::vector<std::string>& spec_kinds();

SpecFile parse_spec(const std::string& text);
// Canonical text: sorted keys, two-space indent, trailing newline.
std::string serialize_spec(const SpecFile& f);

nlohmann::json map_to_json(const BaseMap& f);
BaseMap map_from_json(BaseKind k, const nlohmann::json& j);
nlohmann::json mor_to_json(const Category& c, const Mor& f);  // {"src","tgt","map": name}
Mor mor_from_json(const Category& c, const nlohmann::json& j);

// FinCat carriers as tables, BaseCat as {"type":"base","suite"}. Other categories are refused.
nlohmann::json category_to_json(const Category& c);
CatPtr category_from_json(BaseKind k, const nlohmann::json& j);

nlohmann::json monoidal_to_json(const MonoidalStructure& m);
MonoidalStructure monoidal_from_json(BaseKind k, const nlohmann::json& j);
nlohmann::json braided_to_json(const Braiding& b);
Braiding braided_from_json(BaseKind k, const nlohmann::json& j);
nlohmann::json duoidal_to_json(const DuoidalStructure& d);
DuoidalStructure duoidal_from_json(BaseKind k, const nlohmann::json& j);
nlohmann::json bimonoid_to_json(const Bimonoid& b);
Bimonoid bimonoid_from_json(BaseKind k, const nlohmann::json& j);
nlohmann::json presheaf_to_json(const Presheaf& p);

struct ProduoidalSpec {
  DuoidalStructure d;
  std::vector<Presheaf> witnesses;
};
nlohmann::json produoidal_to_json(const DuoidalStructure& d, const std::vector<Presheaf>& witnesses);
ProduoidalSpec produoidal_from_json(BaseKind k, const nlohmann::json& j);

struct WarpingSpec {
  WarpingData w;
  std::optional<Braiding> braiding;                // present when "monoidality" is
  std::optional<WarpMonoidality> monoidality;
};
// Table carriers only; the identity warping of any structure is written as {"preset": "identity"}.
nlohmann::json warping_to_json(const WarpingData& w, const Braiding* b = nullptr,
                               const WarpMonoidality* md = nullptr);
WarpingSpec warping_from_json(BaseKind k, const nlohmann::json& j);

struct WitnessSpec {
  DuoidalStructure d;
  ClosednessWitness w;
};
WitnessSpec witness_from_json(BaseKind k, const nlohmann::json& j);

// Monoidal structure lifted to modules over a bimonoid's monoid: {"lift_bimonoid": B, "carriers": [...]}.
struct LiftSpec {
  Bimonoid b;
  std::vector<Obj> carriers;
};
LiftSpec lift_from_json(BaseKind k, const nlohmann::json& j);

// Table copy of a category whose objects() are all of it; object i is the i-th listed object.
std::shared_ptr<FinCat> tabulate_category(const Category& c);

}  // namespace duo
