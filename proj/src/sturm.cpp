#include "cyclolab/sturm.hpp"

#include <stdexcept>

namespace cyclo {

namespace {

// Subresultant PRS starting at (a, b) with deg a >= deg b > -1. When `sturm_signs` is set
// each new member is negated as needed so that it is a positive multiple of -rem(prev2, prev1).
std::vector<IntPoly> subresultant_chain(const IntPoly& a, const IntPoly& b, bool sturm_signs) {
  std::vector<IntPoly> chain{a, b};
  IntPoly A = a, B = b;  // unsigned subresultant members
  int eps_prev = 1, eps_cur = 1;
  Integer g = 1, h = 1;
  while (B.degree() > 0) {
    const unsigned long delta = static_cast<unsigned long>(A.degree() - B.degree());
    IntPoly R = pseudo_divide(A, B).remainder;
    if (R.is_zero()) break;
    Integer beta = g * pow(h, delta);
    IntPoly next = div_exact(R, beta);

    int eps_next = 1;
    if (sturm_signs) {
      int lc_sign = sign(B.lead());
      int s = ((delta + 1) % 2 == 0) ? 1 : lc_sign;
      eps_next = -eps_prev * s * sign(beta);
    }
    chain.push_back(eps_next < 0 ? -next : next);

    A = std::move(B);
    B = std::move(next);
    eps_prev = eps_cur;
    eps_cur = eps_next;
    g = A.lead();
    // h <- g^delta / h^(delta - 1), exact by the subresultant theorem.
    if (delta == 0) {
      // h unchanged
    } else {
      Integer num = pow(g, delta);
      Integer den = pow(h, delta - 1);
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
  return chain;
}

int sign_at_infinity(const IntPoly& p, bool positive) {
  int s = sign(p.lead());
  if (!positive && p.degree() % 2 != 0) s = -s;
  return s;
}

int count_variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

std::vector<IntPoly> sturm_chain(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("Sturm chain of the zero polynomial");
  if (p.degree() == 0) return {p};
  return subresultant_chain(p, derivative(p), true);
}

SturmSequence::SturmSequence(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("Sturm sequence of the zero polynomial");
  IntPoly base = primitive_part(p);
  chain_ = sturm_chain(base);
  if (chain_.back().degree() > 0) {
    IntPoly g = primitive_part(chain_.back());
    chain_ = sturm_chain(div_exact(base, g));
  }
}

int SturmSequence::variations_at(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& s : chain_) signs.push_back(sign_at(s, x));
  return count_variations(signs);
}

int SturmSequence::variations_at_infinity(bool positive) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& s : chain_) signs.push_back(sign_at_infinity(s, positive));
  return count_variations(signs);
}

int SturmSequence::variations(const Bound& x) const {
  if (x.is_neg_inf()) return variations_at_infinity(false);
  if (x.is_pos_inf()) return variations_at_infinity(true);
  return variations_at(x.value());
}

int SturmSequence::count(const Bound& lo, const Bound& hi) const {
  return variations(lo) - variations(hi);
}

bool SturmSequence::is_root(const Bound& x) const {
  return x.finite() && sign_at(chain_.front(), x.value()) == 0;
}

int SturmSequence::count(const Bound& lo, bool lo_closed, const Bound& hi, bool hi_closed) const {
  int c = count(lo, hi);
  if (lo_closed && is_root(lo)) ++c;
  if (!hi_closed && is_root(hi)) --c;
  return c;
}

int sturm_count(const IntPoly& p, const Bound& lo, const Bound& hi) {
  if (p.is_zero()) throw std::domain_error("sturm_count: zero polynomial");
  if (lo.is_pos_inf() || hi.is_neg_inf() || (lo.finite() && hi.finite() && lo.value() >= hi.value()))
    throw std::invalid_argument("sturm_count: requires lo < hi");
  return SturmSequence(p).count(lo, hi);
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  IntPoly x = primitive_part(a), y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  if (y.degree() == 0) return IntPoly{1};
  std::vector<IntPoly> chain = subresultant_chain(x, y, false);
  IntPoly last = chain.back();
  if (last.degree() == 0) return IntPoly{1};
  return primitive_part(last);
}

std::vector<std::pair<IntPoly, unsigned>> squarefree_factorization(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree factorization of the zero polynomial");
  std::vector<std::pair<IntPoly, unsigned>> out;
  IntPoly a0 = primitive_part(p);
  if (a0.degree() < 1) return out;
  IntPoly da = derivative(a0);
  IntPoly b = gcd(a0, da);
  IntPoly c = div_exact(a0, b);
  IntPoly d = div_exact(da, b) - derivative(c);
  for (unsigned i = 1; c.degree() > 0; ++i) {
    IntPoly a = gcd(c, d);
    if (a.degree() > 0) out.emplace_back(a, i);
    c = div_exact(c, a);
    d = div_exact(d, a) - derivative(c);
  }
  return out;
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree part of the zero polynomial");
  IntPoly a0 = primitive_part(p);
  if (a0.degree() < 1) return a0;
  return div_exact(a0, gcd(a0, derivative(a0)));
}

}  // namespace cyclo
