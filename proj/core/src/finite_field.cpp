#include "mld/finite_field.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mld/errors.hpp"

namespace mld {

namespace {

// Below this size roots are found by evaluating at every residue.
constexpr std::uint64_t kBruteForceLimit = 512;

void trim(UniPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

UniPoly poly_mod(const PrimeField& f, UniPoly a, const UniPoly& m) {
  trim(a);
  const std::uint64_t lead_inv = f.inv(m.back());
  while (a.size() >= m.size()) {
    const std::uint64_t q = f.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = f.sub(a[shift + i], f.mul(q, m[i]));
    trim(a);
  }
  return a;
}

UniPoly poly_mulmod(const PrimeField& f, const UniPoly& a, const UniPoly& b, const UniPoly& m) {
  if (a.empty() || b.empty()) return {};
  UniPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
  }
  return poly_mod(f, std::move(c), m);
}

UniPoly poly_powmod(const PrimeField& f, UniPoly base, std::uint64_t e, const UniPoly& m) {
  UniPoly result{1};
  result = poly_mod(f, result, m);
  base = poly_mod(f, std::move(base), m);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(f, result, base, m);
    base = poly_mulmod(f, base, base, m);
    e >>= 1;
  }
  return result;
}

UniPoly poly_gcd(const PrimeField& f, UniPoly a, UniPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UniPoly r = poly_mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint64_t li = f.inv(a.back());
    for (auto& c : a) c = f.mul(c, li);
  }
  return a;
}

UniPoly poly_div(const PrimeField& f, UniPoly a, const UniPoly& m) {
  trim(a);
  if (a.size() < m.size()) return {};
  UniPoly q(a.size() - m.size() + 1, 0);
  const std::uint64_t lead_inv = f.inv(m.back());
  while (a.size() >= m.size()) {
    const std::uint64_t c = f.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - m.size();
    q[shift] = c;
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, m[i]));
    trim(a);
  }
  return q;
}

std::uint64_t evaluate(const PrimeField& f, const UniPoly& a, std::uint64_t x) {
  std::uint64_t v = 0;
  for (std::size_t i = a.size(); i-- > 0;) v = f.add(f.mul(v, x), a[i]);
  return v;
}

// g is monic, squarefree and splits into distinct linear factors.
void split(const PrimeField& f, const UniPoly& g, std::mt19937_64& rng, std::vector<std::uint64_t>& out) {
  if (g.size() <= 1) return;
  if (g.size() == 2) {
    out.push_back(f.neg(g[0]));
    return;
  }
  const std::uint64_t p = f.modulus();
  for (;;) {
    const std::uint64_t delta = f.random(rng);
    UniPoly h = poly_powmod(f, UniPoly{delta, 1}, (p - 1) / 2, g);
    if (h.empty()) h = {0};
    h[0] = f.sub(h[0], 1);
    trim(h);
    UniPoly d = poly_gcd(f, g, h);
    if (d.size() > 1 && d.size() < g.size()) {
      split(f, d, rng, out);
      split(f, poly_div(f, g, d), rng, out);
      return;
    }
  }
}

}  // namespace

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p < 2 || p >= (std::uint64_t{1} << 62)) {
    throw InputError("prime " + std::to_string(p) + " is outside [2, 2^62)");
  }
  Integer z(static_cast<unsigned long>(p));
  if (mpz_probab_prime_p(z.get_mpz_t(), 30) == 0) {
    throw InputError(std::to_string(p) + " is not prime");
  }
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1 % p_;
  a %= p_;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero in F_p");
  return pow(a, p_ - 2);
}

std::uint64_t PrimeField::reduce(const Integer& a) const {
  Integer r;
  Integer m(static_cast<unsigned long>(p_));
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r.get_ui();
}

std::uint64_t PrimeField::random(std::mt19937_64& rng) const {
  return std::uniform_int_distribution<std::uint64_t>(0, p_ - 1)(rng);
}

std::uint64_t PrimeField::random_nonzero(std::mt19937_64& rng) const {
  return std::uniform_int_distribution<std::uint64_t>(1, p_ - 1)(rng);
}

std::vector<std::uint64_t> roots(const PrimeField& f, UniPoly poly, std::mt19937_64& rng) {
  trim(poly);
  if (poly.empty()) throw InputError("roots of the zero polynomial");
  std::vector<std::uint64_t> out;
  if (poly.size() == 1) return out;
  const std::uint64_t p = f.modulus();
  if (p <= kBruteForceLimit || p == 2) {
    for (std::uint64_t x = 0; x < p; ++x) {
      if (evaluate(f, poly, x) == 0) out.push_back(x);
    }
    return out;
  }
  // gcd(poly, x^p - x) is the product of the distinct linear factors.
  UniPoly xp = poly_powmod(f, UniPoly{0, 1}, p, poly);
  if (xp.size() < 2) xp.resize(2, 0);
  xp[1] = f.sub(xp[1], 1);
  trim(xp);
  UniPoly g = poly_gcd(f, poly, xp);
  if (g.size() > 1 && g[0] == 0) {
    out.push_back(0);
    g.erase(g.begin());
  }
  split(f, g, rng, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace mld
