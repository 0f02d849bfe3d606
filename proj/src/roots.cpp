#include "bsinf/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace bsinf {

namespace {

using intpoly::Coeffs;

std::size_t sign_variations(const Coeffs& p) {
  std::size_t v = 0;
  int prev = 0;
  for (const Integer& c : p) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

// q(x) -> q(x + 1), in place.
void taylor_shift_one(Coeffs& a) {
  const std::size_t n = a.size();
  if (n < 2) return;
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j-- > i;) a[j] += a[j + 1];
}

// Sign variations of (x+1)^n q(1/(x+1)); bounds the root count of q in (0, 1).
std::size_t descartes_unit(const Coeffs& q) {
  Coeffs r(q.rbegin(), q.rend());
  taylor_shift_one(r);
  return sign_variations(r);
}

// 2^n q(x/2)
Coeffs scale_half(const Coeffs& q) {
  Coeffs out(q);
  const std::size_t n = q.size() - 1;
  for (std::size_t i = 0; i < q.size(); ++i) mpz_mul_2exp(out[i].get_mpz_t(), out[i].get_mpz_t(), n - i);
  return out;
}

// q(2^k x)
Coeffs scale_up(const Coeffs& q, long k) {
  Coeffs out(q);
  for (std::size_t i = 0; i < q.size(); ++i) mpz_mul_2exp(out[i].get_mpz_t(), out[i].get_mpz_t(), static_cast<unsigned long>(k) * i);
  return out;
}

Coeffs reflect(const Coeffs& p) {
  Coeffs out(p);
  for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
  return out;
}

Rational dyadic(const Integer& c, long k, long scale_log2) {
  // c / 2^k * 2^scale
  return Rational(c) * pow2(scale_log2 - k);
}

// Roots of p in (0, 2^K), p(0) != 0. Appends intervals in the scaled-back variable.
void isolate_positive(const Coeffs& p, long K, bool negate, std::vector<RootInterval>& out) {
  struct Job {
    Coeffs q;
    Integer c;
    long k;
  };
  std::vector<Job> stack;
  stack.push_back(Job{scale_up(p, K), 0, 0});
  auto emit = [&](Rational lo, Rational hi, std::optional<Rational> exact) {
    if (negate) {
      std::swap(lo, hi);
      lo = -lo;
      hi = -hi;
      if (exact) exact = -*exact;
    }
    out.push_back(RootInterval{lo, hi, exact});
  };
  while (!stack.empty()) {
    Job job = std::move(stack.back());
    stack.pop_back();
    if (job.q.size() <= 1) continue;
    const std::size_t v = descartes_unit(job.q);
    if (v == 0) continue;
    if (v == 1) {
      emit(dyadic(job.c, job.k, K), dyadic(job.c + 1, job.k, K), std::nullopt);
      continue;
    }
    Coeffs left = scale_half(job.q);
    Coeffs right = left;
    taylor_shift_one(right);
    const Integer mid = 2 * job.c + 1;
    if (right.front() == 0) {
      const Rational m = dyadic(mid, job.k + 1, K);
      emit(m, m, m);
      right.erase(right.begin());
    }
    stack.push_back(Job{std::move(right), mid, job.k + 1});
    stack.push_back(Job{std::move(left), 2 * job.c, job.k + 1});
  }
}

// Sign just right of a for a squarefree p.
int sign_right_of(const Coeffs& p, const Coeffs& dp, const Rational& a) {
  const int s = intpoly::sign_at(p, a);
  return s != 0 ? s : intpoly::sign_at(dp, a);
}

// Shrinks an open isolating interval until neither endpoint is a root.
void clear_endpoints(RootInterval& r, const Coeffs& p, const Coeffs& dp) {
  if (r.exact_point) return;
  while (intpoly::sign_at(p, r.low) == 0 || intpoly::sign_at(p, r.high) == 0) {
    const Rational mid = (r.low + r.high) / 2;
    const int sm = intpoly::sign_at(p, mid);
    if (sm == 0) {
      r = RootInterval{mid, mid, mid};
      return;
    }
    if (sign_right_of(p, dp, r.low) != sm)
      r.high = mid;
    else
      r.low = mid;
  }
}

Coeffs squarefree_integer(const UnivarPoly& p) { return p.squarefree().primitive_integer(); }

void bisect_to(RootInterval& r, const Coeffs& p, const Rational& width) {
  if (r.exact_point) return;
  int slow = intpoly::sign_at(p, r.low);
  while (r.high - r.low > width) {
    const Rational mid = (r.low + r.high) / 2;
    const int sm = intpoly::sign_at(p, mid);
    if (sm == 0) {
      r = RootInterval{mid, mid, mid};
      return;
    }
    if (sm == slow) {
      r.low = mid;
    } else {
      r.high = mid;
    }
  }
}

void detect_rational(RootInterval& r, const Coeffs& p) {
  if (r.exact_point) return;
  const Integer& lead = p.back();  // positive after make_primitive
  bisect_to(r, p, make_rational(1, lead + 1));
  if (r.exact_point) return;
  // A rational root P/Q of a primitive polynomial has Q | lead, so lead*root is an integer.
  const Integer cand = ceil_of(r.low * lead);
  const Rational t = make_rational(cand, lead);
  if (r.contains(t) && intpoly::sign_at(p, t) == 0) r = RootInterval{t, t, t};
}

}  // namespace

long root_bound_log2(const UnivarPoly& p) {
  const Coeffs c = p.primitive_integer();
  if (c.empty()) throw std::domain_error("root bound of the zero polynomial");
  const long n = static_cast<long>(c.size()) - 1;
  const long bn = static_cast<long>(mpz_sizeinbase(c.back().get_mpz_t(), 2));
  long best = 0;
  for (long k = 1; k <= n; ++k) {
    const Integer& a = c[static_cast<std::size_t>(n - k)];
    if (a == 0) continue;
    const long ba = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2));
    const long num = ba - bn + 1;
    // ceil(num / k) for possibly negative num
    const long q = num >= 0 ? (num + k - 1) / k : -((-num) / k);
    best = std::max(best, q);
  }
  return best + 1;
}

std::vector<RootInterval> isolate_real_roots(const UnivarPoly& p, IsolationOptions opts) {
  if (p.is_zero()) throw std::domain_error("root isolation of the zero polynomial");
  Coeffs sq = squarefree_integer(p);
  std::vector<RootInterval> out;
  if (sq.size() <= 1) return out;
  const Coeffs full = sq;
  const Coeffs dfull = intpoly::derivative(full);
  if (sq.front() == 0) {
    out.push_back(RootInterval{0, 0, Rational(0)});
    sq.erase(sq.begin());
  }
  if (sq.size() > 1) {
    const long K = root_bound_log2(UnivarPoly::from_integers(sq));
    isolate_positive(sq, K, false, out);
    isolate_positive(reflect(sq), K, true, out);
  }
  for (RootInterval& r : out) {
    clear_endpoints(r, full, dfull);
    if (opts.detect_rational) detect_rational(r, full);
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.low < b.low; });
  return out;
}

void refine(RootInterval& root, const UnivarPoly& p, const Rational& width) {
  if (root.exact_point) return;
  bisect_to(root, squarefree_integer(p), width);
}

Rational distance_from_zero(RootInterval& root, const UnivarPoly& p) {
  if (root.exact_point) {
    if (*root.exact_point == 0) throw std::logic_error("distance_from_zero on the root 0");
    return abs(*root.exact_point);
  }
  const Coeffs sq = squarefree_integer(p);
  while (root.low <= 0 && root.high >= 0) {
    if (root.exact_point) break;
    bisect_to(root, sq, root.width() / 2);
  }
  if (root.exact_point) return abs(*root.exact_point);
  return root.low > 0 ? root.low : -root.high;
}

SturmSequence::SturmSequence(const UnivarPoly& p) {
  if (p.is_zero()) throw std::domain_error("Sturm sequence of the zero polynomial");
  Coeffs a = squarefree_integer(p);
  seq_.push_back(a);
  if (a.size() <= 1) return;
  Coeffs b = intpoly::derivative(a);
  auto positive_primitive = [](Coeffs& c) {
    intpoly::trim(c);
    if (c.empty()) return;
    const Integer g = intpoly::content(c);  // nonnegative
    if (g != 1)
      for (Integer& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  };
  positive_primitive(b);
  while (!b.empty()) {
    seq_.push_back(b);
    Coeffs r = intpoly::pseudo_remainder(a, b);
    const std::size_t delta = a.size() - b.size() + 1;
    const bool lc_pow_positive = b.back() > 0 || delta % 2 == 0;
    if (lc_pow_positive)
      for (Integer& x : r) x = -x;
    positive_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
}

namespace {

std::size_t count_changes(const std::vector<int>& signs) {
  std::size_t v = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

}  // namespace

std::size_t SturmSequence::variations_at(const Rational& t) const {
  std::vector<int> s;
  s.reserve(seq_.size());
  for (const Coeffs& c : seq_) s.push_back(intpoly::sign_at(c, t));
  return count_changes(s);
}

std::size_t SturmSequence::variations_at_pos_inf() const {
  std::vector<int> s;
  for (const Coeffs& c : seq_) s.push_back(sgn(c.back()));
  return count_changes(s);
}

std::size_t SturmSequence::variations_at_neg_inf() const {
  std::vector<int> s;
  for (const Coeffs& c : seq_) s.push_back((c.size() % 2 == 1) ? sgn(c.back()) : -sgn(c.back()));
  return count_changes(s);
}

std::size_t count_roots_in(const UnivarPoly& p, const Rational& low, const Rational& high) {
  if (!(low < high)) throw std::invalid_argument("count_roots_in needs low < high");
  const SturmSequence s(p);
  return s.variations_at(low) - s.variations_at(high);
}

std::size_t count_positive_roots(const UnivarPoly& p) {
  const SturmSequence s(p);
  return s.variations_at(0) - s.variations_at_pos_inf();
}

std::size_t count_negative_roots(const UnivarPoly& p) {
  const SturmSequence s(p);
  // Roots in (-inf, 0]; drop the root at 0 if present.
  const std::size_t with_zero = s.variations_at_neg_inf() - s.variations_at(0);
  return with_zero - (p(0) == 0 ? 1 : 0);
}

std::size_t count_real_roots(const UnivarPoly& p) {
  const SturmSequence s(p);
  return s.variations_at_neg_inf() - s.variations_at_pos_inf();
}

}  // namespace bsinf
