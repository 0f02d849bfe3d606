#include "bsinf/algebra.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <thread>

#include "bsinf/errors.hpp"

namespace bsinf {

namespace {

// Polynomials in y with coefficients in Q[x], index = power of y.
using Recursive = std::vector<UnivarPoly>;

void trim(Recursive& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int deg(const Recursive& p) { return static_cast<int>(p.size()) - 1; }

UnivarPoly content(const Recursive& p) {
  UnivarPoly g;
  for (const UnivarPoly& c : p) {
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

Recursive to_rec(const BivarPoly& f) {
  Recursive r = f.as_univariate_in(Var::second);
  trim(r);
  return r;
}

BivarPoly from_rec(const Recursive& r) { return BivarPoly::from_univariate_in(r, Var::second); }

Recursive primitive_part(const Recursive& p) {
  const UnivarPoly c = content(p);
  Recursive out;
  out.reserve(p.size());
  for (const UnivarPoly& coef : p) out.push_back(divide_exact(coef, c));
  // Rescale to coprime integer coefficients to keep the remainder sequence small.
  return to_rec(from_rec(out).normalized());
}

Recursive pseudo_remainder(Recursive a, const Recursive& b) {
  const UnivarPoly& lb = b.back();
  const int db = deg(b);
  while (!a.empty() && deg(a) >= db) {
    const UnivarPoly la = a.back();
    const int shift = deg(a) - db;
    for (UnivarPoly& c : a) c = lb * c;
    for (int k = 0; k <= db; ++k) a[static_cast<std::size_t>(k + shift)] -= la * b[static_cast<std::size_t>(k)];
    a.pop_back();
    trim(a);
  }
  return a;
}

}  // namespace

BivarPoly gcd(const BivarPoly& a, const BivarPoly& b) {
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  Recursive ra = to_rec(a);
  Recursive rb = to_rec(b);
  const UnivarPoly c = gcd(content(ra), content(rb));
  ra = primitive_part(ra);
  rb = primitive_part(rb);
  if (deg(ra) < deg(rb)) std::swap(ra, rb);
  while (!rb.empty()) {
    if (deg(rb) == 0) {
      // A primitive polynomial free of y is a constant.
      ra = Recursive{UnivarPoly::constant(1)};
      break;
    }
    Recursive r = pseudo_remainder(ra, rb);
    ra = std::move(rb);
    rb = r.empty() ? Recursive{} : primitive_part(r);
  }
  const BivarPoly pp = deg(ra) > 0 ? from_rec(ra) : BivarPoly::constant(1);
  return (BivarPoly::from_univariate(c, Var::first) * pp).normalized();
}

BivarPoly divide_exact(const BivarPoly& a, const BivarPoly& b) {
  if (b.is_zero()) throw std::domain_error("bivariate division by zero");
  Recursive r = to_rec(a);
  const Recursive d = to_rec(b);
  const int dd = deg(d);
  Recursive q(r.size() >= d.size() ? r.size() - d.size() + 1 : 0);
  while (!r.empty() && deg(r) >= dd) {
    const int shift = deg(r) - dd;
    const UnivarPoly f = divide_exact(r.back(), d.back());
    q[static_cast<std::size_t>(shift)] = f;
    for (int k = 0; k <= dd; ++k) r[static_cast<std::size_t>(k + shift)] -= f * d[static_cast<std::size_t>(k)];
    trim(r);
  }
  if (!r.empty()) throw std::logic_error("inexact bivariate division");
  return from_rec(q);
}

BivarPoly squarefree_part(const BivarPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial();
  if (f.is_constant()) throw DegreeZero();
  const BivarPoly g = gcd(gcd(f, f.derivative(Var::first)), f.derivative(Var::second));
  return divide_exact(f, g).normalized();
}

Integer determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sgn_flip = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sgn_flip = -sgn_flip;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  Integer d = m[n - 1][n - 1];
  if (sgn_flip < 0) d = -d;
  return d;
}

UnivarPoly resultant(const BivarPoly& f, const BivarPoly& g, Var v) {
  const int m = f.degree_in(v);
  const int n = g.degree_in(v);
  if (m <= 0 || n <= 0) throw DegenerateElimination("resultant needs positive degree in the eliminated variable");
  const Var other = v == Var::first ? Var::second : Var::first;

  // Work with integer multiples: Res(F f, G g) = F^n G^m Res(f, g).
  auto integer_scale = [](const BivarPoly& p) {
    Integer l = 1;
    for (const auto& [mono, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    return l;
  };
  const Integer sf = integer_scale(f);
  const Integer sg = integer_scale(g);
  const std::vector<UnivarPoly> fc = (Rational(sf) * f).as_univariate_in(v);
  const std::vector<UnivarPoly> gc = (Rational(sg) * g).as_univariate_in(v);

  const int bound = std::min(n * f.degree_in(other) + m * g.degree_in(other), f.degree() * g.degree());
  const int npts = bound + 1;
  std::vector<Integer> nodes(static_cast<std::size_t>(npts));
  for (int k = 0; k < npts; ++k) nodes[static_cast<std::size_t>(k)] = (k % 2 == 1) ? (k + 1) / 2 : -(k / 2);
  std::vector<Integer> values(static_cast<std::size_t>(npts));

  const std::size_t size = static_cast<std::size_t>(m + n);
  auto evaluate = [&](std::size_t k) {
    const Rational t(nodes[k]);
    std::vector<Integer> a(static_cast<std::size_t>(m) + 1), b(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= m; ++i) a[static_cast<std::size_t>(i)] = fc[static_cast<std::size_t>(i)](t).get_num();
    for (int i = 0; i <= n; ++i) b[static_cast<std::size_t>(i)] = gc[static_cast<std::size_t>(i)](t).get_num();
    std::vector<std::vector<Integer>> syl(size, std::vector<Integer>(size));
    for (int r = 0; r < n; ++r)
      for (int i = 0; i <= m; ++i) syl[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + m - i)] = a[static_cast<std::size_t>(i)];
    for (int r = 0; r < m; ++r)
      for (int i = 0; i <= n; ++i) syl[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + n - i)] = b[static_cast<std::size_t>(i)];
    values[k] = determinant(std::move(syl));
  };

  const std::size_t workers = std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()),
                                                    static_cast<std::size_t>(npts) / 16 + 1);
  if (workers <= 1) {
    for (std::size_t k = 0; k < nodes.size(); ++k) evaluate(k);
  } else {
    std::vector<std::future<void>> jobs;
    for (std::size_t w = 0; w < workers; ++w)
      jobs.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t k = w; k < nodes.size(); k += workers) evaluate(k);
      }));
    for (auto& j : jobs) j.get();
  }

  // Newton divided differences on the integer nodes.
  std::vector<Rational> dd(values.begin(), values.end());
  for (int level = 1; level < npts; ++level)
    for (int k = npts - 1; k >= level; --k)
      dd[static_cast<std::size_t>(k)] = (dd[static_cast<std::size_t>(k)] - dd[static_cast<std::size_t>(k - 1)]) /
                                        Rational(nodes[static_cast<std::size_t>(k)] - nodes[static_cast<std::size_t>(k - level)]);
  UnivarPoly p = UnivarPoly::constant(dd.back());
  for (int k = npts - 2; k >= 0; --k) {
    const UnivarPoly lin(std::vector<Rational>{Rational(-nodes[static_cast<std::size_t>(k)]), Rational(1)});
    p = p * lin + UnivarPoly::constant(dd[static_cast<std::size_t>(k)]);
  }
  const Rational scale = make_rational(1, pow(sf, static_cast<unsigned long>(n)) * pow(sg, static_cast<unsigned long>(m)));
  return scale * p;
}

std::vector<BivarPoly> coprime_basis(const std::vector<BivarPoly>& factors) {
  std::vector<BivarPoly> basis;
  for (const BivarPoly& f : factors)
    if (!f.is_constant()) basis.push_back(squarefree_part(f));
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < basis.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < basis.size() && !changed; ++j) {
        const BivarPoly g = gcd(basis[i], basis[j]);
        if (g.is_constant()) continue;
        std::vector<BivarPoly> parts{g, divide_exact(basis[i], g), divide_exact(basis[j], g)};
        basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(j));
        basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
        for (BivarPoly& p : parts)
          if (!p.is_constant()) basis.push_back(p.normalized());
        changed = true;
      }
    }
  }
  std::sort(basis.begin(), basis.end(), [](const BivarPoly& a, const BivarPoly& b) { return a.to_string() < b.to_string(); });
  return basis;
}

}  // namespace bsinf
