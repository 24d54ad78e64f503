#include "gpdual/polynomial.hpp"

#include <algorithm>

namespace gpdual {

std::string Monomial::str(const std::string& stem) const {
  if (is_one()) return "1";
  std::string s;
  for (int i = 0; i < n; ++i) {
    if (!e[i]) continue;
    if (!s.empty()) s += "*";
    s += stem + std::to_string(i);
    if (e[i] > 1) s += "^" + std::to_string(int(e[i]));
  }
  return s;
}

SparsePolynomial SparsePolynomial::constant(const Ring& r, std::uint32_t c) {
  c %= r.field.modulus();
  if (!c) return zero(r);
  return SparsePolynomial(r, {Term{Monomial::one(r.nvars), c}});
}

SparsePolynomial SparsePolynomial::variable(const Ring& r, int i) {
  if (i < 0 || i >= r.nvars) throw InvariantError("variable index out of range");
  return SparsePolynomial(r, {Term{Monomial::var(r.nvars, i), 1}});
}

SparsePolynomial SparsePolynomial::monomial(const Ring& r, const Monomial& m,
                                            std::uint32_t c) {
  c %= r.field.modulus();
  if (!c) return zero(r);
  return SparsePolynomial(r, {Term{m, c}});
}

SparsePolynomial SparsePolynomial::from_terms(const Ring& r, std::vector<Term> ts) {
  std::sort(ts.begin(), ts.end(), [&](const Term& a, const Term& b) {
    return r.order.greater(a.m, b.m);
  });
  std::vector<Term> out;
  out.reserve(ts.size());
  for (auto& t : ts) {
    std::uint32_t c = t.c % r.field.modulus();
    if (!out.empty() && out.back().m == t.m) {
      out.back().c = r.field.add(out.back().c, c);
      if (!out.back().c) out.pop_back();
    } else if (c) {
      out.push_back(Term{t.m, c});
    }
  }
  return SparsePolynomial(r, std::move(out));
}

const Term& SparsePolynomial::leading_term() const {
  if (t_.empty()) throw InvariantError("leading_term of zero polynomial");
  return t_.front();
}

int SparsePolynomial::degree() const {
  int d = -1;
  for (auto& t : t_) d = std::max(d, int(t.m.deg));
  return d;
}

bool SparsePolynomial::is_homogeneous() const {
  for (auto& t : t_)
    if (t.m.deg != t_.front().m.deg) return false;
  return true;
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& o) const {
  if (!(ring_ == o.ring_)) throw InvariantError("polynomial ring mismatch");
  std::vector<Term> out;
  out.reserve(t_.size() + o.t_.size());
  const PrimeField& f = ring_.field;
  std::size_t i = 0, j = 0;
  while (i < t_.size() && j < o.t_.size()) {
    int c = ring_.order.cmp(t_[i].m, o.t_[j].m);
    if (c > 0) {
      out.push_back(t_[i++]);
    } else if (c < 0) {
      out.push_back(o.t_[j++]);
    } else {
      std::uint32_t s = f.add(t_[i].c, o.t_[j].c);
      if (s) out.push_back(Term{t_[i].m, s});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), t_.begin() + i, t_.end());
  out.insert(out.end(), o.t_.begin() + j, o.t_.end());
  return SparsePolynomial(ring_, std::move(out));
}

SparsePolynomial SparsePolynomial::operator-() const {
  std::vector<Term> out = t_;
  for (auto& t : out) t.c = ring_.field.neg(t.c);
  return SparsePolynomial(ring_, std::move(out));
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& o) const {
  return *this + (-o);
}

SparsePolynomial SparsePolynomial::scaled(std::uint32_t c) const {
  c %= ring_.field.modulus();
  if (!c) return zero(ring_);
  std::vector<Term> out = t_;
  for (auto& t : out) t.c = ring_.field.mul(t.c, c);
  return SparsePolynomial(ring_, std::move(out));
}

SparsePolynomial SparsePolynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_.field.inv(leading_coeff()));
}

SparsePolynomial SparsePolynomial::times_term(const Monomial& m, std::uint32_t c) const {
  c %= ring_.field.modulus();
  if (!c || is_zero()) return zero(ring_);
  std::vector<Term> out;
  out.reserve(t_.size());
  /* multiplication by a monomial preserves the term order */
  for (auto& t : t_) out.push_back(Term{t.m.mul(m), ring_.field.mul(t.c, c)});
  return SparsePolynomial(ring_, std::move(out));
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& o) const {
  if (!(ring_ == o.ring_)) throw InvariantError("polynomial ring mismatch");
  std::vector<Term> prod;
  prod.reserve(t_.size() * o.t_.size());
  const PrimeField& f = ring_.field;
  for (auto& a : t_)
    for (auto& b : o.t_) prod.push_back(Term{a.m.mul(b.m), f.mul(a.c, b.c)});
  return from_terms(ring_, std::move(prod));
}

std::uint32_t SparsePolynomial::evaluate(std::span<const std::uint32_t> point) const {
  if (point.size() != static_cast<std::size_t>(ring_.nvars))
    throw InvariantError("evaluate: wrong point length");
  const PrimeField& f = ring_.field;
  std::uint32_t acc = 0;
  for (auto& t : t_) {
    std::uint32_t v = t.c;
    for (int i = 0; i < ring_.nvars; ++i)
      if (t.m.e[i]) v = f.mul(v, f.pow(point[i], t.m.e[i]));
    acc = f.add(acc, v);
  }
  return acc;
}

SparsePolynomial SparsePolynomial::derivative(int var) const {
  const PrimeField& f = ring_.field;
  std::vector<Term> out;
  for (auto& t : t_) {
    if (!t.m.e[var]) continue;
    std::uint32_t c = f.mul(t.c, t.m.e[var] % f.modulus());
    if (!c) continue;  // exponent divisible by p
    Term d{t.m, c};
    d.m.e[var] -= 1;
    d.m.deg -= 1;
    out.push_back(d);
  }
  return SparsePolynomial(ring_, std::move(out));  // order preserved termwise
}

SparsePolynomial SparsePolynomial::dehomogenize(int var, const Ring& target) const {
  if (target.nvars != ring_.nvars - 1 || !(target.field == ring_.field))
    throw InvariantError("dehomogenize: bad target ring");
  std::vector<Term> out;
  out.reserve(t_.size());
  for (auto& t : t_) {
    Monomial m = Monomial::one(target.nvars);
    int d = 0;
    for (int i = 0; i < ring_.nvars; ++i) {
      if (i == var) continue;
      int k = i < var ? i : i - 1;
      m.e[k] = t.m.e[i];
      d += t.m.e[i];
    }
    m.deg = static_cast<std::uint16_t>(d);
    out.push_back(Term{m, t.c});
  }
  return from_terms(target, std::move(out));
}

SparsePolynomial SparsePolynomial::substitute_linear(const FieldMatrix& map,
                                                     const Ring& target) const {
  if (map.rows() != static_cast<std::size_t>(ring_.nvars) ||
      map.cols() != static_cast<std::size_t>(target.nvars))
    throw InvariantError("substitute_linear: map shape mismatch");
  /* linear images of the old variables, built once */
  std::vector<SparsePolynomial> image;
  image.reserve(ring_.nvars);
  for (int i = 0; i < ring_.nvars; ++i) {
    std::vector<Term> ts;
    for (int j = 0; j < target.nvars; ++j)
      if (map.at(i, j)) ts.push_back(Term{Monomial::var(target.nvars, j), map.at(i, j)});
    image.push_back(from_terms(target, std::move(ts)));
  }
  SparsePolynomial acc = zero(target);
  for (auto& t : t_) {
    SparsePolynomial prod = constant(target, t.c);
    for (int i = 0; i < ring_.nvars; ++i)
      for (int k = 0; k < t.m.e[i]; ++k) prod = prod * image[i];
    acc = acc + prod;
  }
  return acc;
}

std::string SparsePolynomial::str(const std::string& stem) const {
  if (is_zero()) return "0";
  std::string s;
  for (auto& t : t_) {
    if (!s.empty()) s += " + ";
    if (t.m.is_one()) s += std::to_string(t.c);
    else if (t.c == 1) s += t.m.str(stem);
    else s += std::to_string(t.c) + "*" + t.m.str(stem);
  }
  return s;
}

FieldMatrix jacobian_at(const std::vector<SparsePolynomial>& polys,
                        std::span<const std::uint32_t> point) {
  if (polys.empty()) throw InvariantError("jacobian_at: empty system");
  const Ring& r = polys.front().ring();
  FieldMatrix j(r.field, polys.size(), r.nvars);
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (!(polys[i].ring() == r)) throw InvariantError("jacobian_at: ring mismatch");
    for (int v = 0; v < r.nvars; ++v)
      j.set(i, v, polys[i].derivative(v).evaluate(point));
  }
  return j;
}

}  // namespace gpdual
