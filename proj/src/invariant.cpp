#include "bsinf/invariant.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "bsinf/algebra.hpp"
#include "bsinf/errors.hpp"
#include "bsinf/germ.hpp"

namespace bsinf {

KInvariant::KInvariant(std::vector<std::size_t> values) : entries(std::move(values)) {
  if (std::find(entries.begin(), entries.end(), 0u) != entries.end())
    throw std::invalid_argument("k-invariant entries must be positive");
  std::sort(entries.begin(), entries.end());
}

std::string KInvariant::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(entries[i]);
  }
  return s + ")";
}

bool NormalFormDescriptor::is_ordered() const {
  for (const DescriptorPair& p : pairs)
    if (p.r0 == 0 && p.r1 == 0) return false;
  return std::is_sorted(pairs.begin(), pairs.end());
}

std::string NormalFormDescriptor::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) s += ", ";
    s += "(" + std::to_string(pairs[i].r0) + "," + std::to_string(pairs[i].r1) + ")";
  }
  return s + ")";
}

bool InfinityReport::certified() const {
  return std::all_of(points.begin(), points.end(), [](const PointRecord& r) { return r.certified; });
}

std::vector<DirectionCount> InfinityReport::directions() const {
  std::vector<DirectionCount> out;
  for (const PointRecord& r : points) {
    if (r.plus) out.push_back(*r.plus);
    if (r.minus) out.push_back(*r.minus);
  }
  return out;
}

namespace {

struct GermJob {
  const BivarPoly* factor;
  ProjPointAtInfinity point;
};

SignedBranchCount count_one(const BivarPoly& f, const ProjPointAtInfinity& c, const InvariantOptions& opts) {
  const GermChart chart = chart_germ(f, c);
  if (opts.epsilon) return count_half_branches_at(chart, *opts.epsilon);
  try {
    return count_half_branches(chart);
  } catch (const UncertifiedCount& e) {
    return e.count();
  }
}

InfinityReport assemble(const std::vector<BivarPoly>& basis, std::string input, const InvariantOptions& opts) {
  std::vector<GermJob> jobs;
  for (const BivarPoly& b : basis)
    for (ProjPointAtInfinity& c : points_at_infinity(b)) jobs.push_back(GermJob{&b, std::move(c)});

  const bool threaded = opts.parallel && jobs.size() > 1 && std::thread::hardware_concurrency() > 1;
  const auto policy = threaded ? std::launch::async : std::launch::deferred;
  std::vector<std::future<SignedBranchCount>> futures;
  futures.reserve(jobs.size());
  for (const GermJob& j : jobs)
    futures.push_back(std::async(policy, [&j, &opts] { return count_one(*j.factor, j.point, opts); }));

  struct Acc {
    std::size_t plus = 0, minus = 0;
    bool certified = true;
    std::optional<Rational> eps;
  };
  std::map<ProjPointAtInfinity, Acc> acc;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const SignedBranchCount n = futures[i].get();
    Acc& a = acc[jobs[i].point];
    a.plus += n.plus;
    a.minus += n.minus;
    a.certified = a.certified && n.certified;
    if (!a.eps || n.epsilon_used < *a.eps) a.eps = n.epsilon_used;
  }

  InfinityReport rep;
  rep.input = std::move(input);
  std::vector<std::size_t> all;
  for (const auto& [point, a] : acc) {
    const auto [plus_dir, minus_dir] = direction_pair(point);
    PointRecord r{point, std::nullopt, std::nullopt, a.certified, a.eps.value_or(Rational(0))};
    if (a.plus) {
      r.plus = DirectionCount{plus_dir, a.plus};
      all.push_back(a.plus);
    }
    if (a.minus) {
      r.minus = DirectionCount{minus_dir, a.minus};
      all.push_back(a.minus);
    }
    rep.points.push_back(std::move(r));
  }
  rep.k = KInvariant(std::move(all));
  rep.bounded = rep.k.empty();
  if (norm1(rep.k) % 2 == 0) {
    rep.descriptor = canonical_descriptor(rep.k);
  } else if (rep.certified()) {
    throw std::logic_error("certified counts with odd total for " + rep.input);
  }
  return rep;
}

BivarPoly line(std::size_t l) {
  return BivarPoly::y() - Rational(static_cast<unsigned long>(l)) * BivarPoly::x();
}

// (y - l x)^2 + sign * r (y + l x)
BivarPoly parabola(std::size_t l, std::size_t r, int sign) {
  const BivarPoly lx = Rational(static_cast<unsigned long>(l)) * BivarPoly::x();
  const BivarPoly d = BivarPoly::y() - lx;
  const Rational rr(static_cast<long>(r) * sign);
  return d * d + rr * (BivarPoly::y() + lx);
}

}  // namespace

InfinityReport k_at_infinity(const BivarPoly& f, const InvariantOptions& opts) {
  const BivarPoly sq = squarefree_part(f);
  std::string input = sq.to_string();
  return assemble({sq}, std::move(input), opts);
}

InfinityReport k_at_infinity(const std::vector<BivarPoly>& factors, const InvariantOptions& opts) {
  for (const BivarPoly& f : factors)
    if (f.is_zero()) throw ZeroPolynomial();
  const std::vector<BivarPoly> basis = coprime_basis(factors);
  if (basis.empty()) throw DegreeZero();
  std::string input = product(basis).normalized().to_string();
  return assemble(basis, std::move(input), opts);
}

bool equivalent_at_infinity(const InfinityReport& a, const InfinityReport& b) { return a.k == b.k; }

bool equivalent_at_infinity(const BivarPoly& f, const BivarPoly& g) {
  return equivalent_at_infinity(k_at_infinity(f), k_at_infinity(g));
}

NormalFormDescriptor canonical_descriptor(const KInvariant& eta) {
  if (norm1(eta) % 2 != 0) throw NotRealizable("tuple " + eta.to_string() + " has odd sum");
  std::vector<std::size_t> odd, even;
  for (std::size_t v : eta.entries) (v % 2 ? odd : even).push_back(v);
  NormalFormDescriptor a;
  for (std::size_t i = 0; i + 1 < odd.size(); i += 2) a.pairs.push_back({odd[i], (odd[i + 1] - odd[i]) / 2});
  for (std::size_t v : even) a.pairs.push_back({0, v / 2});
  std::sort(a.pairs.begin(), a.pairs.end());
  return a;
}

KInvariant flatten(const NormalFormDescriptor& a) {
  std::vector<std::size_t> v;
  for (const DescriptorPair& p : a.pairs) {
    if (p.r0) v.push_back(p.r0);
    if (p.r0 + 2 * p.r1) v.push_back(p.r0 + 2 * p.r1);
  }
  return KInvariant(std::move(v));
}

std::vector<BivarPoly> emit_normal_form_factors(const NormalFormDescriptor& a) {
  std::vector<BivarPoly> out;
  for (std::size_t l = 1; l <= a.pairs.size(); ++l) {
    const DescriptorPair& p = a.pairs[l - 1];
    for (std::size_t r = 1; r <= p.r0; ++r)
      out.push_back(line(l) - BivarPoly::constant(Rational(static_cast<unsigned long>(r))));
    for (std::size_t r = 1; r <= p.r1; ++r) out.push_back(parabola(l, r, -1));
  }
  return out;
}

BivarPoly emit_normal_form(const NormalFormDescriptor& a) { return product(emit_normal_form_factors(a)); }

std::vector<BivarPoly> realize_paper_factors(const KInvariant& eta) {
  if (norm1(eta) % 2 != 0) throw NotRealizable("tuple " + eta.to_string() + " has odd sum");
  std::vector<std::size_t> n, even;  // odd entries as 2n + 1
  for (std::size_t v : eta.entries) {
    if (v % 2)
      n.push_back((v - 1) / 2);
    else
      even.push_back(v);
  }
  const std::size_t m = n.size() / 2;
  std::vector<BivarPoly> out;
  for (std::size_t l = 1; l <= m; ++l) {
    out.push_back(line(l));
    for (std::size_t r = 1; r <= n[l - 1]; ++r) out.push_back(parabola(l, r, -1));
  }
  for (std::size_t l = 1; l <= m; ++l)
    for (std::size_t r = 1; r <= n[m + l - 1]; ++r) out.push_back(parabola(l, r, +1));
  for (std::size_t l = 1; l <= even.size(); ++l)
    for (std::size_t r = 1; r <= even[l - 1] / 2; ++r) out.push_back(parabola(m + l, r, -1));
  return out;
}

BivarPoly realize_paper(const KInvariant& eta) { return product(realize_paper_factors(eta)); }

std::size_t norm1(const KInvariant& eta) {
  return std::accumulate(eta.entries.begin(), eta.entries.end(), std::size_t{0});
}

BivarPoly product(const std::vector<BivarPoly>& factors) {
  BivarPoly p = BivarPoly::constant(1);
  for (const BivarPoly& f : factors) p *= f;
  return p;
}

std::string factored_string(const std::vector<BivarPoly>& factors) {
  if (factors.empty()) return "1";
  if (factors.size() == 1) return factors.front().to_string();
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += " * ";
    s += "(" + factors[i].to_string() + ")";
  }
  return s;
}

}  // namespace bsinf
