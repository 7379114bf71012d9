#include "eck/rat_expr.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "eck/errors.hpp"

namespace eck {

namespace {

// Multiset difference big \ small for sorted vectors.
std::vector<Character> multiset_minus(const std::vector<Character>& big, const std::vector<Character>& small) {
  std::vector<Character> out;
  std::set_difference(big.begin(), big.end(), small.begin(), small.end(), std::back_inserter(out));
  return out;
}

std::vector<Character> multiset_max(const std::vector<Character>& a, const std::vector<Character>& b) {
  std::vector<Character> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void require_same_rank(const RatExpr& a, const RatExpr& b) {
  if (a.rank() != b.rank()) {
    throw ArityMismatch("rational expression rank mismatch: " + std::to_string(a.rank()) + " vs " +
                        std::to_string(b.rank()));
  }
}

SparsePoly times_factors(SparsePoly p, const std::vector<Character>& factors) {
  for (const auto& w : factors) {
    if (p.is_zero()) break;
    p *= SparsePoly::one_minus(w);
  }
  return p;
}

Rational power(const Rational& base, int e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
  r.canonicalize();
  if (e < 0) r = 1 / r;
  return r;
}

Rational character_value(const Character& w, const EvalPoint& at) {
  if (at.t.size() != w.rank()) throw ArityMismatch("evaluation point rank mismatch");
  Rational v = 1;
  for (std::size_t i = 0; i < w.rank(); ++i) {
    if (w[i] != 0) v *= power(at.t[i], w[i]);
  }
  return v;
}

}  // namespace

RatExpr::RatExpr(SparsePoly num) : num_(std::move(num)) {}

RatExpr::RatExpr(SparsePoly num, std::vector<Character> den) : num_(std::move(num)) {
  den_.reserve(den.size());
  Character flip(num_.rank());
  int sign = 1;
  for (auto& w : den) {
    if (w.rank() != num_.rank()) throw ArityMismatch("denominator factor rank mismatch");
    if (w.is_zero()) throw DivisionByZero("denominator factor 1 - T^0 vanishes");
    if (w.is_positive()) {
      den_.push_back(w);
    } else {
      // 1/(1 - T^w) = -T^{-w} / (1 - T^{-w})
      flip -= w;
      sign = -sign;
      den_.push_back(-w);
    }
  }
  if (!flip.is_zero() || sign < 0) num_ = num_.shifted(Monomial{flip, 0}, sign);
  std::sort(den_.begin(), den_.end());
}

RatExpr RatExpr::operator-() const {
  RatExpr r = *this;
  r.num_ = -r.num_;
  return r;
}

RatExpr operator+(const RatExpr& a, const RatExpr& b) {
  require_same_rank(a, b);
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  RatExpr r;
  r.den_ = multiset_max(a.den_, b.den_);
  r.num_ = times_factors(a.num_, multiset_minus(r.den_, a.den_)) +
           times_factors(b.num_, multiset_minus(r.den_, b.den_));
  return r;
}

RatExpr operator-(const RatExpr& a, const RatExpr& b) {
  require_same_rank(a, b);
  if (a.is_zero() && b.is_zero()) {
    RatExpr r = a;
    r.den_ = multiset_max(a.den_, b.den_);
    return r;
  }
  if (b.is_zero()) return a;
  if (a.is_zero()) return -b;
  RatExpr r;
  r.den_ = multiset_max(a.den_, b.den_);
  r.num_ = times_factors(a.num_, multiset_minus(r.den_, a.den_)) -
           times_factors(b.num_, multiset_minus(r.den_, b.den_));
  return r;
}

RatExpr operator*(const RatExpr& a, const RatExpr& b) {
  require_same_rank(a, b);
  RatExpr r;
  r.num_ = a.num_ * b.num_;
  r.den_.reserve(a.den_.size() + b.den_.size());
  std::merge(a.den_.begin(), a.den_.end(), b.den_.begin(), b.den_.end(), std::back_inserter(r.den_));
  return r;
}

RatExpr operator*(const Rational& s, const RatExpr& a) {
  RatExpr r = a;
  r.num_ *= s;
  return r;
}

RatExpr operator*(const SparsePoly& p, const RatExpr& a) {
  if (p.rank() != a.rank()) throw ArityMismatch("polynomial factor rank mismatch");
  RatExpr r = a;
  r.num_ = p * a.num_;
  return r;
}

SparsePoly expand_denominator(std::span<const Character> den, std::size_t rank) {
  SparsePoly p = SparsePoly::constant(rank, 1);
  for (const auto& w : den) p *= SparsePoly::one_minus(w);
  return p;
}

RatExpr ratexpr_arith(const RatExpr& a, const RatExpr& b, ArithKind kind, bool reduce_result) {
  RatExpr r;
  switch (kind) {
    case ArithKind::add:
      r = a + b;
      break;
    case ArithKind::sub:
      r = a - b;
      break;
    case ArithKind::mul:
      r = a * b;
      break;
  }
  return reduce_result ? reduce(r) : r;
}

bool ratexpr_equal(const RatExpr& a, const RatExpr& b, const EqualityOptions& opts) {
  require_same_rank(a, b);
  for (int i = 0; i < opts.prefilter_points; ++i) {
    EvalPoint pt = random_point(a.rank(), opts.seed + static_cast<std::uint64_t>(i));
    if (evaluate(a, pt) != evaluate(b, pt)) return false;
  }
  return (a - b).is_zero();
}

RatExpr reduce(const RatExpr& a) {
  if (a.is_zero()) return RatExpr::zero(a.rank());
  SparsePoly num = a.num();
  std::vector<Character> kept;
  for (const auto& w : a.den()) {
    if (auto q = divide_one_minus(num, w)) {
      num = std::move(*q);
    } else {
      kept.push_back(w);
    }
  }
  return RatExpr(std::move(num), std::move(kept));
}

EvalPoint random_point(std::size_t rank, std::uint64_t seed) {
  static constexpr int kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                    43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
  std::vector<int> primes(std::begin(kPrimes), std::end(kPrimes));
  if (2 * rank + 2 > primes.size()) throw ArityMismatch("rank too large for the prime pool");
  std::mt19937_64 rng(seed);
  std::shuffle(primes.begin(), primes.end(), rng);
  EvalPoint pt;
  for (std::size_t i = 0; i < rank; ++i) pt.t.emplace_back(primes[2 * i], primes[2 * i + 1]);
  for (auto& v : pt.t) v.canonicalize();
  pt.y = Rational(primes[2 * rank], primes[2 * rank + 1]);
  pt.y.canonicalize();
  return pt;
}

Rational evaluate(const SparsePoly& p, const EvalPoint& at) {
  // Cache powers per coordinate; exponents repeat heavily across terms.
  std::vector<std::map<int, Rational>> cache(p.rank());
  std::map<int, Rational> ycache;
  Rational sum = 0;
  Rational v;
  for (const auto& t : p.terms()) {
    v = t.coef;
    for (std::size_t i = 0; i < p.rank(); ++i) {
      int e = t.mono.chr[i];
      if (e == 0) continue;
      auto it = cache[i].find(e);
      if (it == cache[i].end()) it = cache[i].emplace(e, power(at.t[i], e)).first;
      v *= it->second;
    }
    if (t.mono.ypow > 0) {
      auto it = ycache.find(t.mono.ypow);
      if (it == ycache.end()) it = ycache.emplace(t.mono.ypow, power(at.y, t.mono.ypow)).first;
      v *= it->second;
    }
    sum += v;
  }
  return sum;
}

Rational evaluate(const RatExpr& a, const EvalPoint& at) {
  if (at.t.size() != a.rank()) throw ArityMismatch("evaluation point rank mismatch");
  Rational den = 1;
  for (const auto& w : a.den()) {
    Rational f = 1 - character_value(w, at);
    if (sgn(f) == 0) throw DenominatorVanishes("factor 1 - " + to_string(w) + " vanishes at the point");
    den *= f;
  }
  return evaluate(a.num(), at) / den;
}

Character LatticeMap::apply(const Character& c) const {
  if (c.rank() != source_rank) throw IllFormedMap("lattice map source rank mismatch");
  Character out(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    int v = 0;
    for (std::size_t k = 0; k < source_rank; ++k) v += rows[r][k] * c[k];
    out[r] = v;
  }
  return out;
}

namespace {

void validate(const LatticeMap& map) {
  if (map.rows.empty() || map.rows.size() > kMaxRank) throw IllFormedMap("lattice map has no usable target rank");
  for (const auto& row : map.rows) {
    if (row.size() != map.source_rank) throw IllFormedMap("lattice map row has the wrong length");
  }
}

}  // namespace

SparsePoly substitute(const SparsePoly& p, const LatticeMap& map) {
  validate(map);
  if (p.rank() != map.source_rank) throw IllFormedMap("lattice map source rank mismatch");
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) terms.push_back(Term{Monomial{map.apply(t.mono.chr), t.mono.ypow}, t.coef});
  return SparsePoly::from_terms(map.target_rank(), std::move(terms));
}

RatExpr substitute(const RatExpr& a, const LatticeMap& map) {
  SparsePoly num = substitute(a.num(), map);
  std::vector<Character> den;
  for (const auto& w : a.den()) {
    Character img = map.apply(w);
    if (img.is_zero()) throw DenominatorVanishes("factor 1 - " + to_string(w) + " is sent to 1 - T^0");
    den.push_back(img);
  }
  return RatExpr(std::move(num), std::move(den));
}

SparsePoly substitute_y(const SparsePoly& p, const Rational& value) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  std::map<int, Rational> powers;
  for (const auto& t : p.terms()) {
    auto it = powers.find(t.mono.ypow);
    if (it == powers.end()) it = powers.emplace(t.mono.ypow, power(value, t.mono.ypow)).first;
    terms.push_back(Term{Monomial{t.mono.chr, 0}, t.coef * it->second});
  }
  return SparsePoly::from_terms(p.rank(), std::move(terms));
}

RatExpr substitute_y(const RatExpr& a, const Rational& value) {
  return RatExpr(substitute_y(a.num(), value), a.den());
}

RatExpr embed(const RatExpr& a, std::size_t rank) {
  if (rank < a.rank()) throw ArityMismatch("embedding must not shrink the lattice");
  std::vector<Character> den;
  for (const auto& w : a.den()) den.push_back(w.with_rank(rank));
  return RatExpr(a.num().with_rank(rank), std::move(den));
}

std::string to_string(const RatExpr& a) {
  std::string num = to_string(a.num());
  if (a.den().empty()) return num;
  std::string den;
  for (const auto& w : a.den()) {
    if (!den.empty()) den += "*";
    den += "(1 - " + to_string(w) + ")";
  }
  return "(" + num + ") / (" + den + ")";
}

}  // namespace eck
