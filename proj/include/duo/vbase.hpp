// Exact enrichment bases: finite sets and finite-dimensional F_p vector spaces.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace duo {

class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised for kind mismatches, non-parallel pairs and ill-shaped tables.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Upper bound on the size/dimension of any constructed BaseValue.
std::int64_t size_budget();
void set_size_budget(std::int64_t n);

struct BaseKind {
  enum class Tag : std::uint8_t { FinSet, FinVect };
  Tag tag = Tag::FinSet;
  int p = 0;

  static BaseKind finset() { return {}; }
  static BaseKind finvect(int p);

  bool is_set() const { return tag == Tag::FinSet; }
  std::string name() const;
  bool operator==(const BaseKind&) const = default;
};

// Labels are presentation only; equality of values compares kind and size.
struct BaseValue {
  BaseKind kind;
  std::int64_t size = 0;
  std::vector<std::string> labels;

  std::string label(std::int64_t i) const;
  bool operator==(const BaseValue& o) const { return kind == o.kind && size == o.size; }
};

// FinSet: table[i] is the image of element i.
// FinVect: tgt.size x src.size matrix, row-major, entries in [0, p).
struct BaseMap {
  BaseValue src, tgt;
  std::vector<std::int64_t> table;

  std::int64_t at(std::int64_t r, std::int64_t c) const { return table[r * src.size + c]; }
  bool operator==(const BaseMap& o) const {
    return src == o.src && tgt == o.tgt && table == o.table;
  }
};

BaseValue make_value(BaseKind k, std::int64_t n);
BaseValue make_set(std::vector<std::string> labels);
BaseValue unit_value(BaseKind k);
BaseValue zero_value(BaseKind k);

BaseMap identity(const BaseValue& x);
BaseMap compose(const BaseMap& g, const BaseMap& f);  // g after f
BaseMap zero_map(const BaseValue& x, const BaseValue& y);  // FinVect only
BaseMap function_map(const BaseValue& x, const BaseValue& y, std::vector<std::int64_t> t);
BaseMap matrix_map(const BaseValue& x, const BaseValue& y, std::vector<std::int64_t> t);

// Generalized elements unit -> x. FinSet: element i. FinVect: basis vector e_i.
BaseMap point(const BaseValue& x, std::int64_t i);
BaseMap vector_point(const BaseValue& x, std::vector<std::int64_t> coords);
// Number of generators used for extensional checks: elements (FinSet) or basis vectors.
std::int64_t generator_count(const BaseValue& x);

BaseValue tensor(const BaseValue& x, const BaseValue& y);
BaseMap tensor(const BaseMap& f, const BaseMap& g);
BaseMap symmetry(const BaseValue& x, const BaseValue& y);  // x(x)y -> y(x)x
BaseMap associator(const BaseValue& x, const BaseValue& y, const BaseValue& z);
BaseMap left_unitor(const BaseValue& x);   // I(x)x -> x
BaseMap right_unitor(const BaseValue& x);  // x(x)I -> x

struct Coproduct {
  BaseValue value;
  std::vector<BaseMap> injections;
  std::vector<std::int64_t> offsets;
};
Coproduct coproduct(const std::vector<BaseValue>& xs, BaseKind k);
// Induced map out of a coproduct; each f_i : x_i -> target.
BaseMap copair(const Coproduct& c, const std::vector<BaseMap>& fs, const BaseValue& target);

struct Coequalizer {
  BaseValue value;
  BaseMap projection;  // target(f) -> value
  BaseMap section;     // value -> target(f), projection . section = id
};
Coequalizer coequalizer(const BaseMap& f, const BaseMap& g);
// The unique k with k . projection = h, or nullopt when h does not coequalize the pair.
std::optional<BaseMap> factor_through(const Coequalizer& q, const BaseMap& f, const BaseMap& g,
                                      const BaseMap& h);

struct Equalizer {
  BaseValue value;
  BaseMap inclusion;
};
Equalizer equalizer(const BaseMap& f, const BaseMap& g);
std::optional<BaseMap> factor_through(const Equalizer& e, const BaseMap& f, const BaseMap& g,
                                      const BaseMap& h);

struct InternalHom {
  BaseValue value;
  BaseMap eval;  // [y,z](x)y -> z
};
InternalHom internal_hom(const BaseValue& y, const BaseValue& z);
BaseMap curry(const BaseMap& f, const BaseValue& x, const BaseValue& y);  // x(x)y -> z  to  x -> [y,z]
BaseMap uncurry(const BaseMap& g, const BaseValue& y);                    // x -> [y,z]  to  x(x)y -> z

std::optional<BaseMap> is_invertible(const BaseMap& f);
bool is_injective(const BaseMap& f);
// Some x : w -> src(f) with f . x = y, when one exists.
std::optional<BaseMap> preimage(const BaseMap& f, const BaseMap& y);
// (x(x)y)(x)(z(x)w) -> (x(x)z)(x)(y(x)w), built from associators and the symmetry.
BaseMap middle_four(const BaseValue& x, const BaseValue& y, const BaseValue& z, const BaseValue& w);

// Linear combinations over F_p with integer coefficients normalized mod p.
BaseMap add(const BaseMap& f, const BaseMap& g);
BaseMap subtract(const BaseMap& f, const BaseMap& g);
std::int64_t rank(const BaseMap& f);

namespace fp {
std::int64_t norm(std::int64_t a, int p);
std::int64_t inv(std::int64_t a, int p);
bool is_prime(int p);
}  // namespace fp

}  // namespace duo
