#include "biaslab/containers.hpp"

#include <stdexcept>

namespace biaslab {

ContainerParams ContainerParams::defaults(int n) {
  if (n < 3) throw std::out_of_range("container params need n >= 3");
  ContainerParams p;
  p.n = n;
  Interval log_n = Interval::log2_of(static_cast<unsigned long>(n));
  Interval nn(static_cast<unsigned long>(n));
  Interval half_fact = Interval::of_rational(
      Rational(factorial(static_cast<unsigned>(n - 1)), 2));
  p.alpha = Interval(2ul) * Interval::sqrt_of(log_n / nn);
  p.s = Interval::exact(Integer(4) * factorial(static_cast<unsigned>(n - 1))) /
        Interval::sqrt_of(nn * log_n);
  p.a = (Interval(1ul) + p.alpha) * half_fact;
  return p;
}

ContainerParams ContainerParams::with_a(int n, const Rational& a_value) {
  ContainerParams p = defaults(n);
  p.a = Interval::of_rational(a_value);
  p.a_override = a_value;
  return p;
}

bool ContainerParams::size_exceeds_a(std::size_t k) const {
  return a.size_exceeds(static_cast<std::uint64_t>(k));
}

CycleId select_pivot(const IdSet& A, const OverlapGraph& g) {
  if (A.none()) throw std::invalid_argument("select_pivot: empty set");
  CycleId best = 0;
  std::size_t best_degree = 0;
  bool have = false;
  for_each_id(A, [&](CycleId v) {
    std::size_t d = 0;
    for (CycleId u : g.neighbors_of(v))
      if (A.test(u)) ++d;
    if (!have || d > best_degree) {  // ties keep the smallest id
      have = true;
      best = v;
      best_degree = d;
    }
  });
  return best;
}

std::pair<IdSet, IdSet> container_step(const IdSet& S, const IdSet& A,
                                       const IdSet& K,
                                       const ContainerParams& params,
                                       const OverlapGraph& g) {
  if (!params.size_exceeds_a(A.count())) return {S, A};
  CycleId pivot = select_pivot(A, g);
  if (K.test(pivot)) {
    IdSet S2 = S;
    S2.set(pivot);
    IdSet A2 = A;
    for (CycleId u : g.neighbors_of(pivot)) A2.reset(u);
    return {std::move(S2), std::move(A2)};
  }
  IdSet A2 = A;
  A2.reset(pivot);
  return {S, std::move(A2)};
}

ContainerTrace run_containers(const IdSet& K, const OverlapGraph& g,
                              const ContainerParams& params, bool record_full) {
  const std::size_t V = g.vertex_count();
  if (K.size() != V) throw std::invalid_argument("knowledge set size mismatch");

  ContainerTrace trace;
  IdSet S(V);
  IdSet A(V);
  A.set();
  if (record_full) trace.full_sets.emplace_back(S, A);

  std::size_t i = 0;
  for (;;) {
    if (!params.size_exceeds_a(A.count())) break;  // rule 1 from here on
    CycleId pivot = select_pivot(A, g);
    bool in_k = K.test(pivot);
    if (in_k && S.test(pivot)) {
      // pivot already recorded and keeps maximum degree: genuine fixed point
      // with |A| > a (induced subgraph on A is edgeless)
      break;
    }
    if (in_k) {
      S.set(pivot);
      for (CycleId u : g.neighbors_of(pivot)) A.reset(u);
      trace.steps.push_back({2, pivot, A.count()});
    } else {
      A.reset(pivot);
      trace.steps.push_back({3, pivot, A.count()});
    }
    ++i;
    if (record_full) trace.full_sets.emplace_back(S, A);
  }

  trace.fixed_point_index = i;
  trace.trivial_stop = (i == 0);
  trace.fingerprint = std::move(S);
  trace.container = std::move(A);
  return trace;
}

}  // namespace biaslab
