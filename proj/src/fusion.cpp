#include "uqpa/fusion.hpp"

#include <sstream>
#include <stdexcept>

namespace uqpa {

std::string multiset_str(const ModuleMultiset& m) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [label, count] : m) {
    if (count == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (count != 1) os << count.get_str();
    os << label.str();
  }
  return first ? "0" : os.str();
}

mpz_class total_dimension(const ModuleMultiset& m, int p) {
  mpz_class total = 0;
  for (const auto& [label, count] : m) total += count * (label.projective ? 2 * p : label.s);
  return total;
}

ModuleMultiset tensor_step(const ModuleMultiset& m, int p) {
  if (p < 2) throw std::invalid_argument("tensor_step: p must be at least 2");
  ModuleMultiset out;
  auto add = [&](bool proj, int sign, int s, const mpz_class& c) {
    out[ModuleLabel{proj, sign, s}] += c;
  };
  for (const auto& [label, c] : m) {
    if (c == 0) continue;
    const int sg = label.sign;
    const int s = label.s;
    if (!label.projective) {
      if (s == p) {
        add(true, sg, p - 1, c);
      } else if (s == 1) {
        add(false, sg, 2, c);
      } else {
        add(false, sg, s - 1, c);
        add(false, sg, s + 1, c);
      }
      continue;
    }
    if (p == 2) {
      add(false, sg, 2, 2 * c);
      add(false, -sg, 2, 2 * c);
    } else if (s == p - 1) {
      add(true, sg, p - 2, c);
      add(false, sg, p, 2 * c);
    } else if (s == 1) {
      add(true, sg, 2, c);
      add(false, -sg, p, 2 * c);
    } else {
      add(true, sg, s - 1, c);
      add(true, sg, s + 1, c);
    }
  }
  return out;
}

ModuleMultiset multiplicities(int n, int p) {
  if (n < 0) throw std::invalid_argument("multiplicities: n must be nonnegative");
  ModuleMultiset m{{ModuleLabel{false, 1, 1}, 1}};
  for (int i = 0; i < n; ++i) m = tensor_step(m, p);
  return m;
}

mpz_class dimension_of(const ModuleMultiset& m, int p) {
  auto count = [&](bool proj, int sign, int s) -> mpz_class {
    auto it = m.find(ModuleLabel{proj, sign, s});
    return it == m.end() ? mpz_class(0) : it->second;
  };
  mpz_class d = count(false, -1, p) * count(false, -1, p);
  for (int i = 1; i <= p; ++i) d += count(false, 1, i) * count(false, 1, i);
  for (int s = 1; s < p; ++s) {
    const mpz_class pp = count(true, 1, s);
    const mpz_class pm = count(true, -1, s);
    d += 2 * pp * pp + 2 * pm * pm + 2 * count(false, 1, s) * pp + 4 * pp * count(true, -1, p - s);
  }
  return d;
}

mpz_class dimension(int n, int p) { return dimension_of(multiplicities(n, p), p); }

mpz_class binomial(long a, long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

mpz_class catalan(int n) {
  if (n < 0) throw std::invalid_argument("catalan: n must be nonnegative");
  return binomial(2L * n, n) / (n + 1);
}

const std::vector<FloorConvention>& all_conventions() {
  static const std::vector<FloorConvention> all{
      FloorConvention::Euclidean, FloorConvention::Truncate, FloorConvention::ZeroForNegative};
  return all;
}

std::string convention_name(FloorConvention c) {
  switch (c) {
    case FloorConvention::Euclidean: return "floor-euclidean";
    case FloorConvention::Truncate: return "truncate-toward-zero";
    case FloorConvention::ZeroForNegative: return "zero-for-negative-index";
  }
  return "?";
}

std::optional<FloorConvention> parse_convention(const std::string& name) {
  for (auto c : all_conventions()) {
    if (convention_name(c) == name) return c;
  }
  if (name == "floor" || name == "euclidean") return FloorConvention::Euclidean;
  if (name == "truncate") return FloorConvention::Truncate;
  if (name == "zero") return FloorConvention::ZeroForNegative;
  return std::nullopt;
}

mpz_class ballot(long a, long b) { return binomial(a, b) - binomial(a, b - 1); }

namespace {

long half(long i, FloorConvention c) {
  if (c == FloorConvention::Truncate) return i / 2;
  return i >= 0 ? i / 2 : -((-i + 1) / 2);
}

}  // namespace

mpz_class conjecture_g(long n, long i, FloorConvention c) {
  if (c == FloorConvention::ZeroForNegative && i < 0) return 0;
  const long h = half(i, c);
  mpz_class g = 0;
  for (long j = 0; j <= h; ++j) g += 2 * ballot(n, i + 1 - j) * ballot(n, j);
  const mpz_class b = ballot(n, h + 1);
  g += (half(i + 1, c) - h) * b * b;
  return g;
}

mpz_class conjecture_eval(int n, int p, FloorConvention c) {
  mpz_class d = catalan(n);
  for (long j = 0; j <= n / p; ++j) {
    d += mpz_class(n + 1) * (n + 3) * conjecture_g(n, n - (j + 2) * p, c);
  }
  return d;
}

DimRecord dim_record(int n, int p) {
  DimRecord r;
  r.n = n;
  r.catalan = catalan(n);
  r.fusion = dimension(n, p);
  for (auto c : all_conventions()) r.conjecture[c] = conjecture_eval(n, p, c);
  return r;
}

}  // namespace uqpa
