#include "eck/sparse_poly.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "eck/errors.hpp"

namespace eck {

namespace {

void require_same_rank(const SparsePoly& a, const SparsePoly& b) {
  if (a.rank() != b.rank()) {
    throw ArityMismatch("polynomial rank mismatch: " + std::to_string(a.rank()) + " vs " +
                        std::to_string(b.rank()));
  }
}

// Merges two sorted term lists; `sign` is applied to b's coefficients.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    auto c = i->mono <=> j->mono;
    if (c < 0) {
      out.push_back(*i++);
    } else if (c > 0) {
      out.push_back(sign > 0 ? *j : Term{j->mono, -j->coef});
      ++j;
    } else {
      Rational s = sign > 0 ? Rational(i->coef + j->coef) : Rational(i->coef - j->coef);
      if (sgn(s) != 0) out.push_back(Term{i->mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i != a.end(); ++i) out.push_back(*i);
  for (; j != b.end(); ++j) out.push_back(sign > 0 ? *j : Term{j->mono, -j->coef});
  return out;
}

// Products with a short factor are done as merges of shifted copies; the
// monomial order is a group order so a shift keeps the list sorted.
constexpr std::size_t kMergeThreshold = 8;

}  // namespace

SparsePoly SparsePoly::constant(std::size_t rank, const Rational& c) {
  SparsePoly p(rank);
  if (sgn(c) != 0) p.terms_.push_back(Term{Monomial{Character(rank), 0}, c});
  return p;
}

SparsePoly SparsePoly::monomial(const Monomial& m, const Rational& c) {
  if (m.ypow < 0) throw InvalidArgument("negative power of y");
  SparsePoly p(m.chr.rank());
  if (sgn(c) != 0) p.terms_.push_back(Term{m, c});
  return p;
}

SparsePoly SparsePoly::t_power(const Character& w, const Rational& c) {
  return monomial(Monomial{w, 0}, c);
}

SparsePoly SparsePoly::y(std::size_t rank) { return monomial(Monomial{Character(rank), 1}); }

SparsePoly SparsePoly::one_minus(const Character& w) {
  return constant(w.rank(), 1) - t_power(w);
}

SparsePoly SparsePoly::from_terms(std::size_t rank, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.mono.chr.rank() != rank) throw ArityMismatch("term rank mismatch");
    if (t.mono.ypow < 0) throw InvalidArgument("negative power of y");
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
  SparsePoly p(rank);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef += t.coef;
    } else {
      if (!p.terms_.empty() && sgn(p.terms_.back().coef) == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && sgn(p.terms_.back().coef) == 0) p.terms_.pop_back();
  return p;
}

bool SparsePoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.ypow == 0 && terms_[0].mono.chr.is_zero());
}

bool SparsePoly::is_pure_y() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.mono.chr.is_zero(); });
}

int SparsePoly::max_ypow() const {
  // Sorted by ypow first.
  return terms_.empty() ? 0 : terms_.back().mono.ypow;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  require_same_rank(*this, o);
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, +1);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  require_same_rank(*this, o);
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, -1);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& o) { return *this = *this * o; }

SparsePoly& SparsePoly::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coef *= s;
  }
  return *this;
}

SparsePoly SparsePoly::shifted(const Monomial& m, const Rational& c) const {
  if (m.chr.rank() != rank_) throw ArityMismatch("shift rank mismatch");
  SparsePoly r(rank_);
  if (sgn(c) == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{t.mono * m, t.coef * c});
  return r;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  require_same_rank(a, b);
  SparsePoly r(a.rank());
  if (a.is_zero() || b.is_zero()) return r;
  const SparsePoly& big = a.size() >= b.size() ? a : b;
  const SparsePoly& small = a.size() >= b.size() ? b : a;
  if (small.size() <= kMergeThreshold) {
    r = big.shifted(small.terms_[0].mono, small.terms_[0].coef);
    for (std::size_t k = 1; k < small.size(); ++k) {
      r.terms_ = merge_terms(r.terms_, big.shifted(small.terms_[k].mono, small.terms_[k].coef).terms_, +1);
    }
    return r;
  }
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.size() * 4 + b.size() * 4);
  Rational prod;
  for (const auto& s : small.terms_) {
    for (const auto& t : big.terms_) {
      mpq_mul(prod.get_mpq_t(), s.coef.get_mpq_t(), t.coef.get_mpq_t());
      auto [it, inserted] = acc.try_emplace(s.mono * t.mono, prod);
      if (!inserted) it->second += prod;
    }
  }
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (sgn(c) != 0) r.terms_.push_back(Term{m, std::move(c)});
  }
  std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& x, const Term& y) { return x.mono < y.mono; });
  return r;
}

SparsePoly SparsePoly::with_rank(std::size_t rank) const {
  SparsePoly r(rank);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{Monomial{t.mono.chr.with_rank(rank), t.mono.ypow}, t.coef});
  // Padding with zeros preserves the lexicographic order.
  return r;
}

bool operator==(const SparsePoly& a, const SparsePoly& b) {
  if (a.rank_ != b.rank_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coef != b.terms_[i].coef) return false;
  }
  return true;
}

SparsePoly poly_arith(const SparsePoly& a, const SparsePoly& b, ArithKind kind) {
  switch (kind) {
    case ArithKind::add:
      return a + b;
    case ArithKind::sub:
      return a - b;
    case ArithKind::mul:
      return a * b;
  }
  throw InvalidArgument("unknown arithmetic kind");
}

SparsePoly poly_div_exact(const SparsePoly& p, const SparsePoly& d) {
  require_same_rank(p, d);
  if (d.is_zero()) throw DivisionByZero("division by the zero polynomial");
  const std::size_t rank = p.rank();
  SparsePoly q(rank);
  if (p.is_zero()) return q;

  // Exponent box that every quotient term must lie in: per coordinate,
  // min and max degrees add under multiplication of Laurent polynomials.
  const std::size_t dims = rank + 1;
  auto coord = [rank](const Monomial& m, std::size_t i) { return i == rank ? m.ypow : m.chr[i]; };
  auto bounds = [&](const SparsePoly& f) {
    std::vector<int> lo(dims, 0), hi(dims, 0);
    for (std::size_t i = 0; i < dims; ++i) {
      lo[i] = hi[i] = coord(f.terms()[0].mono, i);
      for (const auto& t : f.terms()) {
        lo[i] = std::min(lo[i], coord(t.mono, i));
        hi[i] = std::max(hi[i], coord(t.mono, i));
      }
    }
    return std::pair{lo, hi};
  };
  auto [plo, phi] = bounds(p);
  auto [dlo, dhi] = bounds(d);
  std::vector<int> qlo(dims), qhi(dims);
  for (std::size_t i = 0; i < dims; ++i) {
    qlo[i] = plo[i] - dlo[i];
    qhi[i] = phi[i] - dhi[i];
    if (qlo[i] > qhi[i]) throw NotDivisible("quotient exponent box is empty");
  }
  qlo[rank] = std::max(qlo[rank], 0);

  std::map<Monomial, Rational> rem;
  for (const auto& t : p.terms()) rem.emplace(t.mono, t.coef);
  const Term& lead = d.leading();
  std::vector<Term> qterms;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    Monomial qm{top->first.chr - lead.mono.chr, top->first.ypow - lead.mono.ypow};
    for (std::size_t i = 0; i < dims; ++i) {
      int v = coord(qm, i);
      if (v < qlo[i] || v > qhi[i]) throw NotDivisible("remainder does not vanish");
    }
    Rational qc = top->second / lead.coef;
    for (const auto& t : d.terms()) {
      Monomial m = t.mono * qm;
      Rational delta = qc * t.coef;
      auto [it, inserted] = rem.try_emplace(m, -delta);
      if (!inserted) {
        it->second -= delta;
        if (sgn(it->second) == 0) rem.erase(it);
      }
    }
    qterms.push_back(Term{qm, qc});
  }
  return SparsePoly::from_terms(rank, std::move(qterms));
}

std::optional<SparsePoly> divide_one_minus(const SparsePoly& p, const Character& w) {
  if (w.rank() != p.rank()) throw ArityMismatch("divisor rank mismatch");
  if (w.is_zero()) throw DivisionByZero("factor 1 - T^0 is zero");
  if (p.is_zero()) return SparsePoly(p.rank());
  // Along each coset e + Zw the quotient coefficients are prefix sums of
  // the numerator coefficients; divisibility means every coset sums to 0.
  std::size_t pivot = 0;
  while (w[pivot] == 0) ++pivot;
  const int wp = w[pivot];
  auto floordiv = [](int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
  };
  std::unordered_map<Monomial, std::vector<std::pair<int, const Rational*>>, MonomialHash> chains;
  for (const auto& t : p.terms()) {
    int k = floordiv(t.mono.chr[pivot], wp);
    Character rep = t.mono.chr;
    for (std::size_t i = 0; i < w.rank(); ++i) rep[i] -= k * w[i];
    chains[Monomial{rep, t.mono.ypow}].emplace_back(k, &t.coef);
  }
  std::vector<Term> q;
  q.reserve(p.size());
  for (auto& [rep, chain] : chains) {
    std::sort(chain.begin(), chain.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    Rational run = 0;
    for (std::size_t i = 0; i < chain.size(); ++i) {
      run += *chain[i].second;
      const int k = chain[i].first;
      const int next = i + 1 < chain.size() ? chain[i + 1].first : k + 1;
      if (sgn(run) == 0) continue;
      if (i + 1 == chain.size()) return std::nullopt;
      // q_j = run for every k <= j < next.
      for (int j = k; j < next; ++j) {
        Character c = rep.chr;
        for (std::size_t s = 0; s < w.rank(); ++s) c[s] += j * w[s];
        q.push_back(Term{Monomial{c, rep.ypow}, run});
      }
    }
  }
  return SparsePoly::from_terms(p.rank(), std::move(q));
}

std::string to_string(const SparsePoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coef;
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string mono;
    if (t.mono.ypow > 0) mono = t.mono.ypow == 1 ? "y" : "y^" + std::to_string(t.mono.ypow);
    if (!t.mono.chr.is_zero()) mono += (mono.empty() ? "" : "*") + to_string(t.mono.chr);
    if (mono.empty()) {
      out += c.get_str();
    } else if (c == 1) {
      out += mono;
    } else {
      out += c.get_str() + "*" + mono;
    }
  }
  return out;
}

}  // namespace eck
