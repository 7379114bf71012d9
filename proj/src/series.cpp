#include "eck/series.hpp"

#include <algorithm>

#include "eck/errors.hpp"

namespace eck {

namespace {

void prune(LaurentU& a) {
  std::erase_if(a, [](const auto& kv) { return sgn(kv.second) == 0; });
}

const LaurentU kZero{};

}  // namespace

LaurentU operator+(const LaurentU& a, const LaurentU& b) {
  LaurentU r = a;
  for (const auto& [e, c] : b) r[e] += c;
  prune(r);
  return r;
}

LaurentU operator*(const LaurentU& a, const LaurentU& b) {
  LaurentU r;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) r[ea + eb] += ca * cb;
  }
  prune(r);
  return r;
}

LaurentU operator*(const Rational& s, const LaurentU& a) {
  LaurentU r;
  if (sgn(s) == 0) return r;
  for (const auto& [e, c] : a) r[e] = s * c;
  return r;
}

bool is_zero(const LaurentU& a) { return a.empty(); }

BiSeries::BiSeries(int lo, int order) : lo_(lo), c_(static_cast<std::size_t>(std::max(order, 0))) {}

BiSeries BiSeries::constant(const LaurentU& c, int order) {
  BiSeries s(0, order);
  if (order > 0) s.c_[0] = c;
  return s;
}

BiSeries BiSeries::exp(const Rational& a, bool scaled, int order) {
  BiSeries s(0, order);
  Rational term = 1;  // a^k / k!
  for (int k = 0; k < order; ++k) {
    if (sgn(term) != 0) s.c_[static_cast<std::size_t>(k)][scaled ? k : 0] = term;
    term = term * a / (k + 1);
  }
  return s;
}

const LaurentU& BiSeries::coeff(int p) const {
  if (p < lo_ || p >= end()) return kZero;
  return c_[static_cast<std::size_t>(p - lo_)];
}

LaurentU& BiSeries::coeff_ref(int p) {
  if (p < lo_ || p >= end()) throw InvalidArgument("series coefficient outside the truncation window");
  return c_[static_cast<std::size_t>(p - lo_)];
}

BiSeries BiSeries::operator*(const BiSeries& o) const {
  const int order = std::min(this->order(), o.order());
  BiSeries r(lo_ + o.lo_, order);
  for (int i = 0; i < order; ++i) {
    if (c_[static_cast<std::size_t>(i)].empty()) continue;
    for (int j = 0; i + j < order; ++j) {
      const auto& b = o.c_[static_cast<std::size_t>(j)];
      if (b.empty()) continue;
      r.c_[static_cast<std::size_t>(i + j)] = r.c_[static_cast<std::size_t>(i + j)] + c_[static_cast<std::size_t>(i)] * b;
    }
  }
  return r;
}

BiSeries BiSeries::operator+(const BiSeries& o) const {
  const int lo = std::min(lo_, o.lo_);
  const int end = std::min(this->end(), o.end());
  BiSeries r(lo, end - lo);
  for (int p = lo; p < end; ++p) r.c_[static_cast<std::size_t>(p - lo)] = coeff(p) + o.coeff(p);
  return r;
}

BiSeries BiSeries::operator-() const {
  BiSeries r = *this;
  for (auto& c : r.c_) c = Rational(-1) * c;
  return r;
}

BiSeries BiSeries::normalized() const {
  std::size_t skip = 0;
  while (skip < c_.size() && c_[skip].empty()) ++skip;
  BiSeries r(lo_ + static_cast<int>(skip), static_cast<int>(c_.size() - skip));
  std::copy(c_.begin() + static_cast<std::ptrdiff_t>(skip), c_.end(), r.c_.begin());
  return r;
}

BiSeries BiSeries::inverse() const {
  BiSeries a = normalized();
  if (a.order() == 0) throw DivisionByZero("series vanishes through its truncation order");
  const LaurentU& lead = a.c_[0];
  if (lead.size() != 1) throw DivisionByZero("leading coefficient is not a unit in Q[u, 1/u]");
  const auto& [e0, c0] = *lead.begin();
  LaurentU inv_lead{{-e0, Rational(1) / c0}};
  BiSeries b(-a.lo_, a.order());
  b.c_[0] = inv_lead;
  for (int k = 1; k < a.order(); ++k) {
    LaurentU acc;
    for (int j = 1; j <= k; ++j) {
      const auto& aj = a.c_[static_cast<std::size_t>(j)];
      if (aj.empty()) continue;
      acc = acc + aj * b.c_[static_cast<std::size_t>(k - j)];
    }
    b.c_[static_cast<std::size_t>(k)] = Rational(-1) * (inv_lead * acc);
  }
  return b;
}

std::string to_string(const LaurentU& a, const std::string& var) {
  if (a.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : a) {
    Rational v = c;
    bool neg = sgn(v) < 0;
    if (neg) v = -v;
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    std::string mono = e == 0 ? "" : (e == 1 ? var : var + "^" + std::to_string(e));
    if (mono.empty()) {
      out += v.get_str();
    } else {
      out += (v == 1 ? "" : v.get_str() + "*") + mono;
    }
  }
  return out;
}

}  // namespace eck
