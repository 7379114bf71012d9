#include "eck/positivity.hpp"

#include <algorithm>
#include <functional>

#include "eck/errors.hpp"

namespace eck {

namespace {

using Exponents = SPolynomial::Exponents;

Exponents zero_exponents(std::size_t num_s) { return Exponents(num_s + 1, 0); }

void add_term(std::map<Exponents, Rational>& terms, const Exponents& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms.erase(it);
  }
}

// Numerator of p multiplied by prod S_i^{extra_i}.
std::map<Exponents, Rational> lifted(const SPolynomial& p, const std::vector<int>& extra) {
  std::map<Exponents, Rational> out;
  for (const auto& [exps, c] : p.terms()) {
    Exponents e = exps;
    for (std::size_t i = 0; i < extra.size(); ++i) e[i + 1] += extra[i];
    out.emplace(std::move(e), c);
  }
  return out;
}

void require_same_weights(const SPolynomial& a, const SPolynomial& b) {
  if (a.weights() != b.weights()) throw ArityMismatch("S-polynomials over different weight sets");
}

std::vector<std::size_t> positions_within(const GeometryConfig& g, int bound) {
  std::vector<std::size_t> out;
  for (int j : g.indices) {
    if (std::abs(j) <= bound) out.push_back(g.position(j));
  }
  return out;
}

// Finds a_w >= 1 on a subset of `allowed` with sum a_w w = v, preferring
// fewer distinct weights, then earlier weights.
std::optional<std::vector<std::pair<std::size_t, int>>> decompose(const Character& v,
                                                                  const std::vector<Character>& weights,
                                                                  const std::vector<std::size_t>& allowed) {
  // Every ambient weight has t-coefficient 1, so the total multiplicity is v[0].
  const int total = v[0];
  if (total == 0 && v.is_zero()) return std::vector<std::pair<std::size_t, int>>{};
  if (total <= 0) return std::nullopt;
  const std::size_t max_size = std::min<std::size_t>(static_cast<std::size_t>(total), allowed.size());
  std::vector<std::size_t> subset;
  std::vector<int> coeffs;
  std::optional<std::vector<std::pair<std::size_t, int>>> found;

  std::function<bool(std::size_t, int, const Character&)> fill = [&](std::size_t slot, int left,
                                                                     const Character& rest) -> bool {
    if (slot + 1 == subset.size()) {
      if (rest != left * weights[subset[slot]]) return false;
      coeffs[slot] = left;
      return true;
    }
    const int slots_after = static_cast<int>(subset.size() - slot - 1);
    for (int a = 1; a <= left - slots_after; ++a) {
      coeffs[slot] = a;
      if (fill(slot + 1, left - a, rest - a * weights[subset[slot]])) return true;
    }
    return false;
  };

  std::function<bool(std::size_t, std::size_t)> choose = [&](std::size_t start, std::size_t size) -> bool {
    if (subset.size() == size) {
      coeffs.assign(size, 0);
      if (!fill(0, total, v)) return false;
      std::vector<std::pair<std::size_t, int>> out;
      for (std::size_t i = 0; i < size; ++i) out.emplace_back(subset[i], coeffs[i]);
      found = std::move(out);
      return true;
    }
    for (std::size_t i = start; i < allowed.size(); ++i) {
      subset.push_back(allowed[i]);
      if (choose(i + 1, size)) return true;
      subset.pop_back();
    }
    return false;
  };

  for (std::size_t size = 1; size <= max_size; ++size) {
    subset.clear();
    if (choose(0, size)) return found;
  }
  return std::nullopt;
}

SPolynomial power(const SPolynomial& p, int e) {
  SPolynomial out = SPolynomial::constant(p.weights(), 1);
  for (int i = 0; i < e; ++i) out = out * p;
  return out;
}

SPolynomial one_plus_delta(const std::vector<Character>& weights) {
  return SPolynomial::constant(weights, 1) + SPolynomial::delta(weights);
}

// -(1+y)(T^2 - 1) / ((1 - T T_k^{-1})(1 - T T_k)) = delta (T^2 - 1) / (S_{t+t_k} S_{t-t_k}),
// with T^2 written over the weights of C^{2k} or C^{2k+1}.
SPolynomial correction_at(const std::vector<Character>& weights, const GeometryConfig& g, int k) {
  const Character two_t = 2 * diagonal_character(g.rank());
  SPolynomial num = monomial_form(two_t, weights, positions_within(g, k)) - SPolynomial::constant(weights, 1);
  return (SPolynomial::delta(weights) * num).over_s(g.position(k)).over_s(g.position(-k));
}

// h-factors of the coordinates |j| < k.
SPolynomial inner_smooth(const std::vector<Character>& weights, const GeometryConfig& g, int k) {
  SPolynomial out = SPolynomial::constant(weights, 1);
  for (int j : g.indices) {
    if (std::abs(j) < k) out = out * h_positive(weights, g.position(j));
  }
  return out;
}

SPolynomial ccx_positive(const std::vector<Character>& weights, const GeometryConfig& g, int k) {
  return h_minus_one_positive(weights, g.position(k)) * h_minus_one_positive(weights, g.position(-k)) *
         inner_smooth(weights, g, k);
}

SPolynomial cq_positive(const std::vector<Character>& weights, const GeometryConfig& g, int level) {
  if (level <= 1) return SPolynomial::constant(weights, 1);
  const int k = level / 2;
  return one_plus_delta(weights) * cq_positive(weights, g, level - 2) +
         inner_smooth(weights, g, k) * correction_at(weights, g, k);
}

SparsePoly poly_power(const SparsePoly& p, int e) {
  SparsePoly out = SparsePoly::constant(p.rank(), 1);
  for (int i = 0; i < e; ++i) out *= p;
  return out;
}

// Horner scheme, one variable at a time: position 0 is delta, then the S's.
SparsePoly horner(const std::vector<std::pair<Exponents, Rational>>& terms, std::size_t pos,
                  const std::vector<SparsePoly>& images, std::size_t rank) {
  if (pos == images.size()) {
    Rational sum = 0;
    for (const auto& [e, c] : terms) sum += c;
    return SparsePoly::constant(rank, sum);
  }
  std::map<int, std::vector<std::pair<Exponents, Rational>>> groups;
  for (const auto& t : terms) groups[t.first[pos]].push_back(t);
  SparsePoly out(rank);
  int current = groups.rbegin()->first;
  for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
    out *= poly_power(images[pos], current - it->first);
    out += horner(it->second, pos + 1, images, rank);
    current = it->first;
  }
  return out * poly_power(images[pos], current);
}

std::string s_name(const Character& w) { return "S[" + weight_label(w) + "]"; }

}  // namespace

SPolynomial::SPolynomial(std::vector<Character> weights)
    : weights_(std::move(weights)), den_(weights_.size(), 0) {}

SPolynomial SPolynomial::constant(const std::vector<Character>& weights, const Rational& c) {
  SPolynomial p(weights);
  add_term(p.terms_, zero_exponents(weights.size()), c);
  return p;
}

SPolynomial SPolynomial::delta(const std::vector<Character>& weights) {
  SPolynomial p(weights);
  Exponents e = zero_exponents(weights.size());
  e[0] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

SPolynomial SPolynomial::s_var(const std::vector<Character>& weights, std::size_t index) {
  if (index >= weights.size()) throw InvalidArgument("S-variable index out of range");
  SPolynomial p(weights);
  Exponents e = zero_exponents(weights.size());
  e[index + 1] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

SPolynomial SPolynomial::from_terms(const std::vector<Character>& weights, std::map<Exponents, Rational> terms,
                                    std::vector<int> den) {
  SPolynomial p(weights);
  if (!den.empty()) {
    if (den.size() != weights.size()) throw ArityMismatch("denominator length differs from the weight count");
    if (std::any_of(den.begin(), den.end(), [](int d) { return d < 0; })) {
      throw InvalidArgument("negative denominator multiplicity");
    }
    p.den_ = std::move(den);
  }
  for (auto& [e, c] : terms) {
    if (e.size() != weights.size() + 1) throw ArityMismatch("exponent vector length differs from 1 + weight count");
    if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; })) {
      throw InvalidArgument("negative exponent in an S-polynomial numerator");
    }
    add_term(p.terms_, e, c);
  }
  return p;
}

SPolynomial SPolynomial::operator+(const SPolynomial& o) const {
  require_same_weights(*this, o);
  std::vector<int> den(den_.size()), extra_a(den_.size()), extra_b(den_.size());
  for (std::size_t i = 0; i < den_.size(); ++i) {
    den[i] = std::max(den_[i], o.den_[i]);
    extra_a[i] = den[i] - den_[i];
    extra_b[i] = den[i] - o.den_[i];
  }
  SPolynomial out(weights_);
  out.terms_ = lifted(*this, extra_a);
  for (const auto& [e, c] : lifted(o, extra_b)) add_term(out.terms_, e, c);
  out.den_ = std::move(den);
  return out;
}

SPolynomial SPolynomial::operator-(const SPolynomial& o) const { return *this + o * Rational(-1); }

SPolynomial SPolynomial::operator*(const SPolynomial& o) const {
  require_same_weights(*this, o);
  SPolynomial out(weights_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      add_term(out.terms_, e, ca * cb);
    }
  }
  for (std::size_t i = 0; i < den_.size(); ++i) out.den_[i] = den_[i] + o.den_[i];
  return out;
}

SPolynomial SPolynomial::operator*(const Rational& s) const {
  SPolynomial out(weights_);
  out.den_ = den_;
  if (sgn(s) == 0) return out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * s);
  return out;
}

SPolynomial SPolynomial::over_s(std::size_t index) const {
  if (index >= weights_.size()) throw InvalidArgument("S-variable index out of range");
  SPolynomial out = *this;
  ++out.den_[index];
  return out;
}

SPolynomial SPolynomial::at_delta_zero() const {
  SPolynomial out(weights_);
  out.den_ = den_;
  for (const auto& [e, c] : terms_) {
    if (e[0] == 0) out.terms_.emplace(e, c);
  }
  return out;
}

SPolynomial monomial_form(const Character& v, const std::vector<Character>& weights,
                          const std::vector<std::size_t>& allowed) {
  auto parts = decompose(v, weights, allowed);
  if (!parts) {
    throw StructuralRewriteFailed("T^" + to_string(v) + " is not a nonnegative combination of ambient weights");
  }
  SPolynomial out = SPolynomial::constant(weights, 1);
  for (auto [index, a] : *parts) {
    out = out * power(SPolynomial::s_var(weights, index) + SPolynomial::constant(weights, 1), a);
  }
  return out;
}

SPolynomial h_positive(const std::vector<Character>& weights, std::size_t index) {
  const SPolynomial s = SPolynomial::s_var(weights, index);
  const SPolynomial d = SPolynomial::delta(weights);
  return (s + d * (s + SPolynomial::constant(weights, 1))).over_s(index);
}

SPolynomial h_minus_one_positive(const std::vector<Character>& weights, std::size_t index) {
  const SPolynomial s = SPolynomial::s_var(weights, index);
  return (SPolynomial::delta(weights) * (s + SPolynomial::constant(weights, 1))).over_s(index);
}

SPolynomial pos2_correction(int n) {
  if (n < 2) throw InvalidArgument("the closed-cone recursion step needs n >= 2");
  const GeometryConfig g = GeometryConfig::make(n);
  return correction_at(ambient_weights(n), g, g.m);
}

SPolynomial to_positive_form(SpaceKind kind, int n) {
  if (n < 2) throw InvalidArgument("positive forms are built for n >= 2");
  const GeometryConfig g = GeometryConfig::make(n);
  const std::vector<Character> weights = ambient_weights(n);
  switch (kind) {
    case SpaceKind::CCQ: {
      SPolynomial out(weights);
      SPolynomial coeff = SPolynomial::constant(weights, 1);
      for (int k = g.m; k >= 1; --k) {
        out = out + coeff * ccx_positive(weights, g, k);
        coeff = coeff * one_plus_delta(weights);
      }
      if (g.odd) out = out + coeff * h_minus_one_positive(weights, g.position(0));
      return out;
    }
    case SpaceKind::CQ:
      return cq_positive(weights, g, n);
    default:
      throw InvalidArgument("positive forms exist for CCQ and CQ only");
  }
}

RatExpr back_substitute(const SPolynomial& p) {
  const std::size_t rank = p.weights().empty() ? 1 : p.weights().front().rank();
  std::vector<SparsePoly> images;
  images.push_back(SparsePoly::constant(rank, -1) - SparsePoly::y(rank));
  for (const auto& w : p.weights()) images.push_back(SparsePoly::t_power(w) - SparsePoly::constant(rank, 1));

  SparsePoly num(rank);
  if (!p.is_zero()) {
    std::vector<std::pair<Exponents, Rational>> terms(p.terms().begin(), p.terms().end());
    num = horner(terms, 0, images, rank);
  }
  // S_w = T^w - 1 = -(1 - T^w).
  std::vector<Character> den;
  int sign_flips = 0;
  for (std::size_t i = 0; i < p.weights().size(); ++i) {
    for (int r = 0; r < p.den()[i]; ++r) den.push_back(p.weights()[i]);
    sign_flips += p.den()[i];
  }
  if (sign_flips % 2 == 1) num *= Rational(-1);
  return RatExpr(std::move(num), std::move(den));
}

Certificate check_nonnegative(const SPolynomial& p, const RatExpr& original) {
  Certificate cert;
  cert.spoly = p;
  cert.nonnegative = true;
  for (const auto& [e, c] : p.terms()) {
    if (sgn(c) < 0) {
      cert.nonnegative = false;
      cert.witness = std::make_pair(e, c);
      break;
    }
  }
  cert.roundtrip_ok = ratexpr_equal(back_substitute(p), original);
  return cert;
}

Certificate certify(SpaceKind kind, int n) {
  Certificate cert = check_nonnegative(to_positive_form(kind, n), affine_class(kind, n).origin());
  cert.subject = kind;
  cert.n = n;
  return cert;
}

std::string weight_label(const Character& w) {
  std::string out;
  auto piece = [&out](int c, const std::string& var) {
    if (c == 0) return;
    if (c < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    if (std::abs(c) != 1) out += std::to_string(std::abs(c));
    out += var;
  };
  for (std::size_t i = 0; i < w.rank(); ++i) piece(w[i], i == 0 ? "t" : "t" + std::to_string(i));
  return out.empty() ? "0" : out;
}

std::string term_string(const SPolynomial& p, const Exponents& e, const Rational& c) {
  std::vector<std::string> factors;
  auto power = [](const std::string& base, int k) { return k == 1 ? base : base + "^" + std::to_string(k); };
  if (e[0] > 0) factors.push_back(power("delta", e[0]));
  for (std::size_t i = 0; i < p.num_s(); ++i) {
    if (e[i + 1] > 0) factors.push_back(power(s_name(p.weights()[i]), e[i + 1]));
  }
  std::string out = c.get_str();
  if (factors.empty()) return out;
  if (c == 1) out.clear();
  if (c == -1) out = "-";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (!(out.empty() || out == "-")) out += "*";
    out += factors[i];
  }
  return out;
}

std::string to_string(const SPolynomial& p) {
  std::string num;
  for (const auto& [e, c] : p.terms()) {
    std::string t = term_string(p, e, c);
    if (num.empty()) {
      num = t;
    } else if (t.front() == '-') {
      num += " - " + t.substr(1);
    } else {
      num += " + " + t;
    }
  }
  if (num.empty()) num = "0";
  std::string den;
  for (std::size_t i = 0; i < p.num_s(); ++i) {
    for (int r = 0; r < p.den()[i]; ++r) den += (den.empty() ? "" : "*") + s_name(p.weights()[i]);
  }
  if (den.empty()) return num;
  return "(" + num + ") / (" + den + ")";
}

}  // namespace eck
