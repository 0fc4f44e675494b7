#include "hdepth/squarefree.hpp"

#include "hdepth/errors.hpp"
#include "hdepth/rng.hpp"

#include <algorithm>
#include <cctype>

namespace hdepth {

namespace {

bool divides(MonomialMask g, MonomialMask u) { return (g & ~u) == 0; }

void checkVariables(int n) {
  if (n < 1 || n > kHardVariableCap) {
    throw Error(ErrorKind::TooManyVariables,
                "variable count " + std::to_string(n) + " outside [1, " + std::to_string(kHardVariableCap) + "]");
  }
}

}  // namespace

std::vector<MonomialMask> minimalize(std::vector<MonomialMask> generators) {
  std::sort(generators.begin(), generators.end(), [](MonomialMask a, MonomialMask b) {
    const int da = __builtin_popcount(a), db = __builtin_popcount(b);
    return da != db ? da < db : a < b;
  });
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  std::vector<MonomialMask> out;
  for (MonomialMask g : generators) {
    const bool redundant = std::any_of(out.begin(), out.end(), [g](MonomialMask h) { return divides(h, g); });
    if (!redundant) out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SquarefreeIdeal::SquarefreeIdeal(int n, std::vector<MonomialMask> generators) : n_(n) {
  checkVariables(n);
  const MonomialMask allowed = n >= 32 ? ~MonomialMask{0} : (MonomialMask{1} << n) - 1;
  for (MonomialMask g : generators) {
    if ((g & ~allowed) != 0) throw Error(ErrorKind::InvalidIdeal, "generator uses a variable beyond x" + std::to_string(n));
  }
  generators_ = minimalize(std::move(generators));
}

bool SquarefreeIdeal::contains(Monomial u) const noexcept {
  return std::any_of(generators_.begin(), generators_.end(), [u](MonomialMask g) { return divides(g, u.mask); });
}

bool SquarefreeIdeal::contains(const SquarefreeIdeal& other) const noexcept {
  return std::all_of(other.generators_.begin(), other.generators_.end(),
                     [this](MonomialMask g) { return contains(Monomial{g}); });
}

SquarefreeIdeal parseIdeal(std::string_view text, int n) {
  checkVariables(n);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto here = [&]() -> std::string {
    return pos < text.size() ? std::string("'") + text[pos] + "'" : std::string("end of input");
  };

  skip();
  if (pos < text.size() && (text[pos] == '0' || text[pos] == '1')) {
    const char c = text[pos++];
    skip();
    if (pos != text.size()) throw ParseError(pos, {"end of input"}, "unexpected " + here());
    return c == '0' ? SquarefreeIdeal::zero(n) : SquarefreeIdeal::unit(n);
  }

  std::vector<MonomialMask> generators;
  while (true) {
    MonomialMask mask = 0;
    while (true) {
      skip();
      if (pos >= text.size() || text[pos] != 'x') throw ParseError(pos, {"variable x<i>"}, "unexpected " + here());
      const std::size_t at = pos++;
      const std::size_t digits = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == digits || pos - digits > 3) throw ParseError(digits, {"variable index"}, "unexpected " + here());
      const int index = std::stoi(std::string(text.substr(digits, pos - digits)));
      if (index < 1 || index > n) {
        throw Error(ErrorKind::InvalidIdeal, "at position " + std::to_string(at) + ": variable x" +
                                                 std::to_string(index) + " outside x1..x" + std::to_string(n));
      }
      const MonomialMask bit = MonomialMask{1} << (index - 1);
      if (mask & bit) {
        throw Error(ErrorKind::InvalidIdeal, "at position " + std::to_string(at) + ": x" + std::to_string(index) +
                                                 " repeated, monomial is not squarefree");
      }
      mask |= bit;
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    generators.push_back(mask);
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    if (pos != text.size()) throw ParseError(pos, {"'*'", "','", "end of input"}, "unexpected " + here());
    break;
  }
  return SquarefreeIdeal(n, std::move(generators));
}

std::string toString(const SquarefreeIdeal& ideal) {
  if (ideal.isZero()) return "0";
  std::string out;
  for (MonomialMask g : ideal.generators()) {
    if (!out.empty()) out += ", ";
    if (g == 0) {
      out += "1";
      continue;
    }
    bool first = true;
    for (int i = 0; i < ideal.variables(); ++i) {
      if (!(g & (MonomialMask{1} << i))) continue;
      if (!first) out += "*";
      out += "x" + std::to_string(i + 1);
      first = false;
    }
  }
  return out;
}

SquarefreeQuotient::SquarefreeQuotient(SquarefreeIdeal J, SquarefreeIdeal I) : J_(std::move(J)), I_(std::move(I)) {
  if (J_.variables() != I_.variables()) throw Error(ErrorKind::InvalidIdeal, "J and I live in different rings");
  if (!J_.contains(I_)) throw Error(ErrorKind::InvalidIdeal, "I is not contained in J");
  if (I_.contains(J_)) throw Error(ErrorKind::InvalidIdeal, "J \\ I is empty (I = J)");
}

std::vector<Integer> alphaVector(const SquarefreeQuotient& q, int variableCap) {
  const int n = q.variables();
  if (variableCap > kHardVariableCap) variableCap = kHardVariableCap;
  if (n > variableCap) {
    throw Error(ErrorKind::TooManyVariables, std::to_string(n) + " variables exceed the cap of " +
                                                 std::to_string(variableCap));
  }
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n + 1), 0);
  const MonomialMask end = MonomialMask{1} << n;
  for (MonomialMask u = 0; u < end; ++u) {
    if (q.J().contains(Monomial{u}) && !q.I().contains(Monomial{u})) ++counts[static_cast<std::size_t>(__builtin_popcount(u))];
  }
  std::vector<Integer> alpha;
  alpha.reserve(counts.size());
  for (auto c : counts) alpha.emplace_back(static_cast<unsigned long>(c));
  return alpha;
}

QDepthResult qdepthQuotient(const SquarefreeQuotient& q, int variableCap) {
  const std::vector<Integer> alpha = alphaVector(q, variableCap);
  const long n = q.variables();
  const ValueFn value = [&alpha, n](long j) { return j <= n ? alpha[static_cast<std::size_t>(j)] : Integer(0); };
  DepthScan scan = scanDepths(value, 0, 0, n);

  long first = 0;
  while (alpha[static_cast<std::size_t>(first)] == 0) ++first;
  const Integer next = first + 1 <= n ? alpha[static_cast<std::size_t>(first + 1)] : Integer(0);
  const Integer ratio = next / alpha[static_cast<std::size_t>(first)];

  QDepthResult result;
  result.qdepth = scan.qdepth;
  result.certificate = std::move(scan.certificate);
  result.lowerBound = first;
  result.upperBound = std::min(n, first + ratio.get_si());
  if (result.qdepth < result.upperBound) result.refutation = std::move(scan.refutation);
  return result;
}

HilbertFunction mModule(const SquarefreeQuotient& q, int variableCap) {
  const std::vector<Integer> alpha = alphaVector(q, variableCap);
  std::map<long, Integer> table;
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    if (alpha[k] != 0) table.emplace(static_cast<long>(k), alpha[k]);
  }
  return fromTable(table);
}

bool checkPropQQ(const SquarefreeQuotient& q, int variableCap) {
  return qdepthQuotient(q, variableCap).qdepth == qdepth(mModule(q, variableCap)).qdepth;
}

SquarefreeQuotient randomQuotient(int n, std::uint64_t seed, int genCountJ, int genCountI) {
  checkVariables(n);
  if (genCountJ < 1 || genCountI < 0) {
    throw Error(ErrorKind::GenerationFailed, "need at least one generator for J and a nonnegative count for I");
  }
  SeededRng rng(seed);
  const MonomialMask full = (MonomialMask{1} << n) - 1;
  constexpr int kMaxAttempts = 64;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<MonomialMask> jGens;
    for (int i = 0; i < genCountJ; ++i) jGens.push_back(static_cast<MonomialMask>(rng.uniform(1, full)));
    std::vector<MonomialMask> iGens;
    for (int i = 0; i < genCountI; ++i) {
      const MonomialMask sampled = static_cast<MonomialMask>(rng.uniform(1, full));
      const MonomialMask anchor = jGens[static_cast<std::size_t>(rng.uniform(0, genCountJ - 1))];
      iGens.push_back(sampled | anchor);
    }
    SquarefreeIdeal J(n, std::move(jGens));
    SquarefreeIdeal I(n, std::move(iGens));
    if (I.contains(J)) continue;  // J \ I empty
    return SquarefreeQuotient(std::move(J), std::move(I));
  }
  throw Error(ErrorKind::GenerationFailed, "no nondegenerate quotient after " + std::to_string(kMaxAttempts) + " draws");
}

std::string toString(const SquarefreeQuotient& q) {
  return "n=" + std::to_string(q.variables()) + " J=(" + toString(q.J()) + ") I=(" + toString(q.I()) + ")";
}

}  // namespace hdepth
