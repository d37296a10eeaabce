#include "lol/value.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>

namespace lol {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw RuntimeError(msg); }

// Numeric literal shapes accepted by casts: the same forms the lexer accepts,
// an optional minus then digits, with exactly one interior '.' for NUMBAR.
bool is_numbr_literal(const std::string& s) {
  size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

bool is_numbar_literal(const std::string& s) {
  size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  size_t digits = 0, dots = 0;
  for (; i < s.size(); ++i) {
    if (s[i] == '.') {
      if (++dots > 1 || digits == 0) return false;
      digits = 0;
    } else if (s[i] >= '0' && s[i] <= '9') {
      ++digits;
    } else {
      return false;
    }
  }
  return digits > 0 && dots == 1;
}

int64_t parse_yarn_numbr(const std::string& s) {
  if (!is_numbr_literal(s)) fail("cannot cast YARN \"" + s + "\" to NUMBR");
  int64_t out = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || p != s.data() + s.size())
    fail("NUMBR value out of range: \"" + s + "\"");
  return out;
}

double parse_yarn_numbar(const std::string& s) {
  if (!is_numbr_literal(s) && !is_numbar_literal(s))
    fail("cannot cast YARN \"" + s + "\" to NUMBAR");
  return std::strtod(s.c_str(), nullptr);
}

double check_finite(double d) {
  if (!std::isfinite(d)) fail("NUMBAR result is not finite");
  return d;
}

Value numeric_result(bool as_float, int64_t i, double d) {
  return as_float ? Value::numbar(check_finite(d)) : Value::numbr(i);
}

}  // namespace

const char* tag_name(Tag t) {
  switch (t) {
    case Tag::Noob: return "NOOB";
    case Tag::Troof: return "TROOF";
    case Tag::Numbr: return "NUMBR";
    case Tag::Numbar: return "NUMBAR";
    case Tag::Yarn: return "YARN";
    case Tag::Array: return "ARRAY";
  }
  return "?";
}

Value Value::array(Tag elem, size_t n) {
  ArrayData d{elem, std::vector<Value>(n, zero_of(elem))};
  return Value(Data(std::in_place_index<5>, std::move(d)));
}

Tag Value::elem_tag() const { return std::get<5>(data_).elem; }
size_t Value::size() const { return std::get<5>(data_).elems.size(); }
const Value& Value::elem(size_t i) const { return std::get<5>(data_).elems[i]; }
void Value::set_elem(size_t i, Value v) { std::get<5>(data_).elems[i] = std::move(v); }

Value zero_of(Tag t) {
  switch (t) {
    case Tag::Noob: return Value();
    case Tag::Troof: return Value::troof(false);
    case Tag::Numbr: return Value::numbr(0);
    case Tag::Numbar: return Value::numbar(0.0);
    case Tag::Yarn: return Value::yarn("");
    case Tag::Array: break;
  }
  fail("no zero value for ARRAY");
}

Value coerce(const Value& v, Tag target) {
  if (target == Tag::Array || v.tag() == Tag::Array)
    fail("cannot cast " + std::string(tag_name(v.tag())) + " to " + tag_name(target));
  if (v.tag() == Tag::Noob) return zero_of(target);
  if (v.tag() == target) return v;
  switch (target) {
    case Tag::Troof:
      return Value::troof(truthiness(v));
    case Tag::Yarn:
      return Value::yarn(display(v));
    case Tag::Numbr:
      switch (v.tag()) {
        case Tag::Troof: return Value::numbr(v.as_troof() ? 1 : 0);
        case Tag::Numbar: {
          double d = v.as_numbar();
          if (!(d > -9.3e18 && d < 9.3e18)) fail("NUMBAR out of NUMBR range");
          return Value::numbr(static_cast<int64_t>(d));  // truncates toward zero
        }
        case Tag::Yarn: return Value::numbr(parse_yarn_numbr(v.as_yarn()));
        default: break;
      }
      break;
    case Tag::Numbar:
      switch (v.tag()) {
        case Tag::Troof: return Value::numbar(v.as_troof() ? 1.0 : 0.0);
        case Tag::Numbr: return Value::numbar(static_cast<double>(v.as_numbr()));
        case Tag::Yarn: return Value::numbar(parse_yarn_numbar(v.as_yarn()));
        default: break;
      }
      break;
    default:
      break;
  }
  fail(std::string("cannot cast ") + tag_name(v.tag()) + " to " + tag_name(target));
}

bool truthiness(const Value& v) {
  switch (v.tag()) {
    case Tag::Noob: return false;
    case Tag::Troof: return v.as_troof();
    case Tag::Numbr: return v.as_numbr() != 0;
    case Tag::Numbar: return v.as_numbar() != 0.0;
    case Tag::Yarn: return !v.as_yarn().empty();
    case Tag::Array: break;
  }
  fail("an ARRAY has no truth value");
}

std::string display(const Value& v) {
  switch (v.tag()) {
    case Tag::Noob: return "NOOB";
    case Tag::Troof: return v.as_troof() ? "WIN" : "FAIL";
    case Tag::Numbr: return std::to_string(v.as_numbr());
    case Tag::Numbar: {
      char buf[64];
      auto res = std::to_chars(buf, buf + sizeof buf, v.as_numbar());
      std::string s(buf, res.ptr);
      if (s.find('.') == std::string::npos && s.find('e') == std::string::npos)
        s += ".0";
      return s;
    }
    case Tag::Yarn: return v.as_yarn();
    case Tag::Array: break;
  }
  fail("whole arrays are not displayable");
}

namespace {

// Arithmetic operands: NUMBR/NUMBAR pass through, TROOF counts as 1/0,
// YARN must parse fully as a numeric literal. NOOB does no math.
Value to_numeric_operand(const Value& v) {
  switch (v.tag()) {
    case Tag::Numbr:
    case Tag::Numbar:
      return v;
    case Tag::Troof:
      return Value::numbr(v.as_troof() ? 1 : 0);
    case Tag::Yarn: {
      const std::string& s = v.as_yarn();
      if (is_numbr_literal(s)) return Value::numbr(parse_yarn_numbr(s));
      return Value::numbar(parse_yarn_numbar(s));
    }
    default:
      fail(std::string("cannot do math on ") + tag_name(v.tag()));
  }
}

int64_t checked_neg_guard_mod(int64_t a, int64_t b) {
  if (b == 0) fail("division by zero");
  if (b == -1) return 0;  // INT64_MIN % -1 would overflow
  return a % b;
}

}  // namespace

Value arith(BinOpKind op, const Value& a_in, const Value& b_in) {
  // Equality has a textual case before numeric promotion.
  if ((op == BinOpKind::BothSaem || op == BinOpKind::Diffrint) &&
      a_in.tag() == Tag::Yarn && b_in.tag() == Tag::Yarn) {
    bool same = a_in.as_yarn() == b_in.as_yarn();
    return Value::troof(op == BinOpKind::BothSaem ? same : !same);
  }
  if ((op == BinOpKind::Bigger || op == BinOpKind::Smallr) &&
      (a_in.tag() == Tag::Yarn || b_in.tag() == Tag::Yarn))
    fail("BIGGER/SMALLR do not order YARNs");

  Value a = to_numeric_operand(a_in);
  Value b = to_numeric_operand(b_in);
  bool as_float = a.tag() == Tag::Numbar || b.tag() == Tag::Numbar;
  double da = a.tag() == Tag::Numbar ? a.as_numbar() : static_cast<double>(a.as_numbr());
  double db = b.tag() == Tag::Numbar ? b.as_numbar() : static_cast<double>(b.as_numbr());
  int64_t ia = a.tag() == Tag::Numbr ? a.as_numbr() : 0;
  int64_t ib = b.tag() == Tag::Numbr ? b.as_numbr() : 0;

  switch (op) {
    case BinOpKind::Sum: {
      int64_t r = 0;
      if (!as_float && __builtin_add_overflow(ia, ib, &r)) fail("NUMBR overflow in SUM OF");
      return numeric_result(as_float, r, da + db);
    }
    case BinOpKind::Diff: {
      int64_t r = 0;
      if (!as_float && __builtin_sub_overflow(ia, ib, &r)) fail("NUMBR overflow in DIFF OF");
      return numeric_result(as_float, r, da - db);
    }
    case BinOpKind::Produkt: {
      int64_t r = 0;
      if (!as_float && __builtin_mul_overflow(ia, ib, &r)) fail("NUMBR overflow in PRODUKT OF");
      return numeric_result(as_float, r, da * db);
    }
    case BinOpKind::Quoshunt:
      if (as_float) {
        if (db == 0.0) fail("division by zero");
        return Value::numbar(check_finite(da / db));
      }
      if (ib == 0) fail("division by zero");
      if (ia == std::numeric_limits<int64_t>::min() && ib == -1)
        fail("NUMBR overflow in QUOSHUNT OF");
      return Value::numbr(ia / ib);  // truncates toward zero
    case BinOpKind::Mod:
      if (as_float) {
        if (db == 0.0) fail("division by zero");
        return Value::numbar(check_finite(std::fmod(da, db)));
      }
      return Value::numbr(checked_neg_guard_mod(ia, ib));
    case BinOpKind::BothSaem:
      return Value::troof(as_float ? da == db : ia == ib);
    case BinOpKind::Diffrint:
      return Value::troof(as_float ? da != db : ia != ib);
    case BinOpKind::Bigger:
      return Value::troof(as_float ? da > db : ia > ib);
    case BinOpKind::Smallr:
      return Value::troof(as_float ? da < db : ia < ib);
  }
  fail("unknown operator");
}

Value math_unary(UnOpKind op, const Value& v) {
  if (!v.is_numeric())
    fail(std::string(tag_name(v.tag())) + " is not numeric");
  switch (op) {
    case UnOpKind::Squar:
      if (v.tag() == Tag::Numbr) {
        int64_t r = 0;
        if (__builtin_mul_overflow(v.as_numbr(), v.as_numbr(), &r))
          fail("NUMBR overflow in SQUAR OF");
        return Value::numbr(r);
      }
      return Value::numbar(check_finite(v.as_numbar() * v.as_numbar()));
    case UnOpKind::Unsquar: {
      double d = v.tag() == Tag::Numbr ? static_cast<double>(v.as_numbr()) : v.as_numbar();
      if (d < 0.0) fail("UNSQUAR OF a negative value");
      return Value::numbar(std::sqrt(d));
    }
    case UnOpKind::Flip: {
      double d = v.tag() == Tag::Numbr ? static_cast<double>(v.as_numbr()) : v.as_numbar();
      if (d == 0.0) fail("division by zero");
      return Value::numbar(check_finite(1.0 / d));
    }
  }
  fail("unknown unary operator");
}

void store_into_slot(VariableSlot& slot, Value v) {
  if (slot.value.tag() == Tag::Array || v.tag() == Tag::Array) {
    if (slot.value.tag() != Tag::Array || v.tag() != Tag::Array)
      fail("arrays may only be assigned to arrays");
    if (slot.value.elem_tag() != v.elem_tag())
      fail(std::string("array element type mismatch: ") + tag_name(slot.value.elem_tag()) +
           " vs " + tag_name(v.elem_tag()));
    if (slot.value.size() != v.size())
      fail("array size mismatch: " + std::to_string(slot.value.size()) + " vs " +
           std::to_string(v.size()));
    slot.value = std::move(v);
    return;
  }
  if (!slot.static_type || v.tag() == *slot.static_type) {
    slot.value = std::move(v);
    return;
  }
  Tag want = *slot.static_type;
  bool ok = v.tag() == Tag::Noob ||
            (v.is_numeric() && (want == Tag::Numbr || want == Tag::Numbar)) ||
            (v.tag() == Tag::Yarn && (want == Tag::Numbr || want == Tag::Numbar));
  if (!ok)
    fail(std::string("cannot store ") + tag_name(v.tag()) + " in a variable SRSLY typed " +
         tag_name(want));
  slot.value = coerce(v, want);
}

void store_array_element(Value& array, int64_t index, Value v) {
  if (array.tag() != Tag::Array) fail(std::string(tag_name(array.tag())) + " is not an array");
  if (index < 0 || static_cast<size_t>(index) >= array.size())
    fail("index " + std::to_string(index) + " out of bounds for array of size " +
         std::to_string(array.size()));
  Tag want = array.elem_tag();
  if (v.tag() != want) {
    bool ok = v.tag() == Tag::Noob ||
              (v.is_numeric() && (want == Tag::Numbr || want == Tag::Numbar)) ||
              (v.tag() == Tag::Yarn && (want == Tag::Numbr || want == Tag::Numbar));
    if (!ok)
      fail(std::string("cannot store ") + tag_name(v.tag()) + " in an array of " + tag_name(want));
    v = coerce(v, want);
  }
  array.set_elem(static_cast<size_t>(index), std::move(v));
}

const Value& read_array_element(const Value& array, int64_t index) {
  if (array.tag() != Tag::Array) fail(std::string(tag_name(array.tag())) + " is not an array");
  if (index < 0 || static_cast<size_t>(index) >= array.size())
    fail("index " + std::to_string(index) + " out of bounds for array of size " +
         std::to_string(array.size()));
  return array.elem(static_cast<size_t>(index));
}

}  // namespace lol
