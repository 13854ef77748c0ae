#include "cyclolab/ordering.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cyclolab/parallel.hpp"

namespace cyclo {

namespace {

void require_distinct(u64 m, u64 n, const char* who) {
  if (m == 0 || n == 0) throw std::invalid_argument(std::string(who) + ": indices must be positive");
  if (m == n) throw std::invalid_argument(std::string(who) + ": m == n");
}

std::vector<u64> sort_class(const std::vector<u64>& ns) {
  std::vector<IntPoly> polys;
  polys.reserve(ns.size());
  for (u64 n : ns) polys.push_back(cyclotomic(n));
  std::vector<std::size_t> idx(ns.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return compare_large(polys[a], polys[b]) < 0; });
  std::vector<u64> out;
  out.reserve(ns.size());
  for (std::size_t i : idx) out.push_back(ns[i]);
  return out;
}

}  // namespace

OrderKey order_key(u64 n) {
  OrderKey k;
  k.n = n;
  k.coeffs = cyclotomic(n);
  k.phi = static_cast<u64>(k.coeffs.degree());
  return k;
}

int compare_large(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    int c = cmp(a.coeffs()[i], b.coeffs()[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  throw std::invalid_argument("compare_large: equal polynomials");
}

int compare_small(const IntPoly& a, const IntPoly& b) {
  const std::size_t len = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < len; ++i) {
    int c = cmp(a.coeff(i), b.coeff(i));
    if (c != 0) return c < 0 ? -1 : 1;
  }
  throw std::invalid_argument("compare_small: equal polynomials");
}

Order compare_large(u64 m, u64 n) {
  require_distinct(m, n, "compare_large");
  return compare_large(cyclotomic(m), cyclotomic(n)) < 0 ? Order::Less : Order::Greater;
}

Order compare_small(u64 m, u64 n) {
  require_distinct(m, n, "compare_small");
  return compare_small(cyclotomic(m), cyclotomic(n)) < 0 ? Order::Less : Order::Greater;
}

std::vector<u64> phi_class_sorted(u64 k) {
  if (k == 0) throw std::invalid_argument("phi_class_sorted: k must be positive");
  return sort_class(inverse_phi(k));
}

std::vector<u64> ordered_prefix(u64 K, unsigned jobs) {
  if (K == 0) throw std::invalid_argument("ordered_prefix: K must be positive");
  auto classes = parallel_map(static_cast<std::size_t>(K), jobs,
                              [](std::size_t i) { return phi_class_sorted(static_cast<u64>(i) + 1); });
  std::vector<u64> out;
  for (const auto& c : classes) out.insert(out.end(), c.begin(), c.end());
  return out;
}

u64 gap(u64 n) {
  if (n == 0) throw std::invalid_argument("gap: n must be positive");
  const IntPoly p = cyclotomic(n);
  const std::size_t top = static_cast<std::size_t>(p.degree());
  for (std::size_t i = top; i-- > 0;)
    if (sgn(p.coeffs()[i]) != 0) return top - i;
  throw std::logic_error("gap: cyclotomic polynomial is a monomial");
}

ConsecutiveCertificate certify_consecutive(u64 m, u64 n) {
  require_distinct(m, n, "certify_consecutive");
  ConsecutiveCertificate c;
  if (compare_large(m, n) == Order::Less) {
    c.first = m;
    c.second = n;
  } else {
    c.first = n;
    c.second = m;
  }
  const u64 k0 = totient(c.first), k1 = totient(c.second);
  for (u64 k = k0; k <= k1; ++k) {
    std::vector<u64> cls = phi_class_sorted(k);
    if (cls.empty()) continue;
    auto lo = cls.begin(), hi = cls.end();
    if (k == k0) lo = std::find(cls.begin(), cls.end(), c.first) + 1;
    if (k == k1) hi = std::find(cls.begin(), cls.end(), c.second);
    if (lo < hi) c.between.insert(c.between.end(), lo, hi);
    c.classes.emplace_back(k, std::move(cls));
  }
  c.consecutive = c.between.empty();
  return c;
}

Mod4Report check_3mod4_criterion(u64 p) {
  if (!is_prime(p)) throw std::invalid_argument("check_3mod4_criterion: p must be prime");
  if (p % 4 != 3) throw std::invalid_argument("check_3mod4_criterion: p must be 3 mod 4");
  Mod4Report r;
  r.p = p;
  const u64 target = p - 1;
  for (u64 q : factorize(target).primes()) {
    if (target % (q - 1)) continue;
    u64 rest = target / (q - 1);
    unsigned j = 1;
    while (rest % q == 0) {
      rest /= q;
      ++j;
    }
    if (rest == 1 && j >= 2) {
      r.witness = PrimePowerWitness{p, q, j};
      break;
    }
  }
  r.consecutive = !r.witness;
  if (certify_consecutive(2 * p, p).consecutive != r.consecutive)
    throw std::logic_error("check_3mod4_criterion: criterion disagrees with the class sort");
  return r;
}

}  // namespace cyclo
