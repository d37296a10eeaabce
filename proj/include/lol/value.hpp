// Runtime values: dynamic tags, coercions, truthiness, display formatting,
// arithmetic, and the statically-typed variable slots they are stored in.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lol/diag.hpp"

namespace lol {

enum class Tag : uint8_t { Noob, Troof, Numbr, Numbar, Yarn, Array };

const char* tag_name(Tag t);

enum class BinOpKind {
  Sum,
  Diff,
  Produkt,
  Quoshunt,
  Mod,
  BothSaem,
  Diffrint,
  Bigger,
  Smallr,
};

enum class UnOpKind { Squar, Unsquar, Flip };

class Value {
public:
  Value() = default;  // NOOB

  static Value troof(bool b) { return Value(Data(std::in_place_index<1>, b)); }
  static Value numbr(int64_t n) { return Value(Data(std::in_place_index<2>, n)); }
  static Value numbar(double d) { return Value(Data(std::in_place_index<3>, d)); }
  static Value yarn(std::string s) { return Value(Data(std::in_place_index<4>, std::move(s))); }
  static Value array(Tag elem, size_t n);

  Tag tag() const { return static_cast<Tag>(data_.index()); }
  bool is_numeric() const { return tag() == Tag::Numbr || tag() == Tag::Numbar; }

  bool as_troof() const { return std::get<1>(data_); }
  int64_t as_numbr() const { return std::get<2>(data_); }
  double as_numbar() const { return std::get<3>(data_); }
  const std::string& as_yarn() const { return std::get<4>(data_); }

  // Array access. Callers bounds-check via size().
  Tag elem_tag() const;
  size_t size() const;
  const Value& elem(size_t i) const;
  void set_elem(size_t i, Value v);

  bool operator==(const Value& other) const { return data_ == other.data_; }

private:
  struct ArrayData {
    Tag elem;
    std::vector<Value> elems;
    bool operator==(const ArrayData&) const = default;
  };
  using Data = std::variant<std::monostate, bool, int64_t, double, std::string, ArrayData>;

  explicit Value(Data d) : data_(std::move(d)) {}
  Data data_;
};

// The zero value a freshly declared variable of type t holds.
Value zero_of(Tag t);

// MAEK / IS NOW A cast rules. target may not be Array; Array sources error.
Value coerce(const Value& v, Tag target);

// Condition evaluation. Arrays have no truth value.
bool truthiness(const Value& v);

// VISIBLE formatting. NUMBAR prints as the shortest decimal string that
// round-trips, with a forced ".0" for integral values in fixed notation.
std::string display(const Value& v);

Value arith(BinOpKind op, const Value& a, const Value& b);
Value math_unary(UnOpKind op, const Value& v);

// One variable's storage, local or inside a symmetric segment.
struct VariableSlot {
  Value value;
  std::optional<Tag> static_type;  // Tag::Array for arrays
  bool is_shared = false;
  bool has_lock = false;
};

// Assignment honoring static typing: numeric<->numeric coercion, YARN parsed
// into numeric slots, NOOB becoming the type's zero; anything else errors.
// Array slots accept only arrays of identical element type and size.
void store_into_slot(VariableSlot& slot, Value v);

// Element store with coercion to the array's element type.
void store_array_element(Value& array, int64_t index, Value v);

// Bounds-checked element read.
const Value& read_array_element(const Value& array, int64_t index);

}  // namespace lol
