#include "hdepth/spec.hpp"

#include "hdepth/errors.hpp"

#include <cctype>
#include <limits>
#include <set>

namespace hdepth {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  FunctionSpec parseAll() {
    FunctionSpec spec = parseExpr();
    skipSpace();
    if (pos_ != text_.size()) fail({"end of input"}, "trailing characters");
    return spec;
  }

 private:
  [[noreturn]] void fail(std::vector<std::string> expected, const std::string& message) const {
    throw ParseError(pos_, std::move(expected), message);
  }

  [[noreturn]] void rangeError(std::size_t at, const std::string& message) const {
    throw Error(ErrorKind::ElaborationError, "at position " + std::to_string(at) + ": " + message);
  }

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skipSpace();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail({std::string("'") + c + "'"}, "unexpected " + describeHere());
    ++pos_;
  }

  std::string describeHere() const {
    if (pos_ >= text_.size()) return "end of input";
    return std::string("'") + text_[pos_] + "'";
  }

  Integer parseBigInt() {
    skipSpace();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail({"integer"}, "unexpected " + describeHere());
    }
    return parseInteger(text_.substr(start, pos_ - start));
  }

  long parseLong() {
    skipSpace();
    const std::size_t start = pos_;
    Integer value = parseBigInt();
    if (!value.fits_slong_p()) {
      pos_ = start;
      fail({"integer within 64-bit range"}, "integer out of range");
    }
    return value.get_si();
  }

  std::vector<long> parseInts() {
    std::vector<long> out{parseLong()};
    while (peek(',')) {
      ++pos_;
      out.push_back(parseLong());
    }
    return out;
  }

  FunctionSpec parseExpr() {
    static const std::vector<std::string> kNames = {"table", "poly", "free", "ci", "shift", "sum", "scale", "extend"};
    skipSpace();
    FunctionSpec spec;
    spec.position = pos_;
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    if (name.empty()) {
      pos_ = start;
      fail(kNames, "unexpected " + describeHere());
    }
    expect('(');

    if (name == "table") {
      spec.kind = FunctionSpec::Kind::Table;
      std::set<long> seen;
      bool positive = false;
      do {
        const std::size_t at = (skipSpace(), pos_);
        const long key = parseLong();
        expect(':');
        Integer value = parseBigInt();
        if (!seen.insert(key).second) rangeError(at, "duplicate table degree " + std::to_string(key));
        if (value < 0) rangeError(at, "negative table value at degree " + std::to_string(key));
        positive = positive || value > 0;
        spec.table.emplace_back(key, std::move(value));
      } while (peek(',') && (++pos_, true));
      if (!positive) rangeError(spec.position, "table has no positive value");
    } else if (name == "poly") {
      spec.kind = FunctionSpec::Kind::Poly;
      spec.ints.push_back(parseLong());
      if (spec.ints[0] < 1) rangeError(spec.position, "poly needs n >= 1");
    } else if (name == "free") {
      spec.kind = FunctionSpec::Kind::Free;
      spec.ints.push_back(parseLong());
      expect(';');
      for (long a : parseInts()) spec.ints.push_back(a);
      if (spec.ints[0] < 1) rangeError(spec.position, "free needs n >= 1");
    } else if (name == "ci") {
      spec.kind = FunctionSpec::Kind::CompleteIntersection;
      spec.ints.push_back(parseLong());
      if (peek(';')) {
        ++pos_;
        if (!peek(')')) {
          for (long d : parseInts()) spec.ints.push_back(d);
        }
      }
      const long n = spec.ints[0];
      if (n < 1) rangeError(spec.position, "ci needs n >= 1");
      if (static_cast<long>(spec.ints.size()) - 1 > n) rangeError(spec.position, "ci has more forms than variables");
      for (std::size_t i = 1; i < spec.ints.size(); ++i) {
        if (spec.ints[i] < 1) rangeError(spec.position, "ci form degrees must be >= 1");
      }
    } else if (name == "shift" || name == "scale") {
      spec.kind = name == "shift" ? FunctionSpec::Kind::Shift : FunctionSpec::Kind::Scale;
      spec.children.push_back(parseExpr());
      expect(',');
      spec.ints.push_back(parseLong());
      if (spec.kind == FunctionSpec::Kind::Scale && spec.ints[0] < 1) {
        rangeError(spec.position, "scale factor must be >= 1");
      }
    } else if (name == "sum") {
      spec.kind = FunctionSpec::Kind::Sum;
      spec.children.push_back(parseExpr());
      expect(',');
      spec.children.push_back(parseExpr());
      while (peek(',')) {
        ++pos_;
        spec.children.push_back(parseExpr());
      }
    } else if (name == "extend") {
      spec.kind = FunctionSpec::Kind::Extend;
      spec.children.push_back(parseExpr());
    } else {
      pos_ = start;
      fail(kNames, "unknown constructor '" + std::string(name) + "'");
    }
    expect(')');
    return spec;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FunctionSpec parseSpec(std::string_view text) { return Parser(text).parseAll(); }

HilbertFunction elaborate(const FunctionSpec& spec) {
  using Kind = FunctionSpec::Kind;
  try {
    switch (spec.kind) {
      case Kind::Table: {
        std::map<long, Integer> values(spec.table.begin(), spec.table.end());
        return fromTable(values);
      }
      case Kind::Poly:
        return polynomialRing(static_cast<int>(spec.ints.at(0)));
      case Kind::Free: {
        std::vector<long> shifts(spec.ints.begin() + 1, spec.ints.end());
        return freeModule(static_cast<int>(spec.ints.at(0)), shifts);
      }
      case Kind::CompleteIntersection: {
        std::vector<int> degrees;
        for (auto it = spec.ints.begin() + 1; it != spec.ints.end(); ++it) degrees.push_back(static_cast<int>(*it));
        return completeIntersection(static_cast<int>(spec.ints.at(0)), degrees);
      }
      case Kind::Shift:
        return shift(elaborate(spec.children.at(0)), spec.ints.at(0));
      case Kind::Scale:
        return scale(elaborate(spec.children.at(0)), spec.ints.at(0));
      case Kind::Sum: {
        HilbertFunction acc = elaborate(spec.children.at(0));
        for (std::size_t i = 1; i < spec.children.size(); ++i) acc = add(acc, elaborate(spec.children[i]));
        return acc;
      }
      case Kind::Extend:
        return extend(elaborate(spec.children.at(0)));
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ElaborationError) throw;
    throw Error(ErrorKind::ElaborationError, "at position " + std::to_string(spec.position) + ": " +
                                                 toString(e.kind()) + ": " + e.what());
  }
  throw Error(ErrorKind::ElaborationError, "unknown constructor");
}

HilbertFunction parseFunction(std::string_view text) { return elaborate(parseSpec(text)); }

namespace {

std::string joinInts(std::vector<long>::const_iterator first, std::vector<long>::const_iterator last) {
  std::string out;
  for (auto it = first; it != last; ++it) {
    if (it != first) out += ",";
    out += std::to_string(*it);
  }
  return out;
}

}  // namespace

std::string toString(const FunctionSpec& spec) {
  using Kind = FunctionSpec::Kind;
  switch (spec.kind) {
    case Kind::Table: {
      std::string out = "table(";
      for (std::size_t i = 0; i < spec.table.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(spec.table[i].first) + ":" + spec.table[i].second.get_str();
      }
      return out + ")";
    }
    case Kind::Poly:
      return "poly(" + std::to_string(spec.ints.at(0)) + ")";
    case Kind::Free:
      return "free(" + std::to_string(spec.ints.at(0)) + "; " + joinInts(spec.ints.begin() + 1, spec.ints.end()) + ")";
    case Kind::CompleteIntersection:
      return "ci(" + std::to_string(spec.ints.at(0)) + ";" +
             (spec.ints.size() > 1 ? " " + joinInts(spec.ints.begin() + 1, spec.ints.end()) : std::string()) + ")";
    case Kind::Shift:
      return "shift(" + toString(spec.children.at(0)) + ", " + std::to_string(spec.ints.at(0)) + ")";
    case Kind::Scale:
      return "scale(" + toString(spec.children.at(0)) + ", " + std::to_string(spec.ints.at(0)) + ")";
    case Kind::Sum: {
      std::string out = "sum(";
      for (std::size_t i = 0; i < spec.children.size(); ++i) {
        if (i > 0) out += ", ";
        out += toString(spec.children[i]);
      }
      return out + ")";
    }
    case Kind::Extend:
      return "extend(" + toString(spec.children.at(0)) + ")";
  }
  return {};
}

}  // namespace hdepth
