#include "biaslab/compression.hpp"

#include <algorithm>
#include <stdexcept>

namespace biaslab {

Integer short_cycle_count(int n) {
  Integer r = 0;
  int threshold = 2 * (n + 1) / 3;
  for (int k = 3; k <= std::min(threshold, n); ++k)
    r += cycle_count_by_length(n, k);
  return r;
}

Rational short_cycle_bound(int n) {
  return Rational(factorial(static_cast<unsigned>(n - 1)) * n * n,
                  Integer(6) * factorial(static_cast<unsigned>(n / 3)));
}

CompressionScheme build_scheme(const CycleCatalog& catalog,
                               const OverlapGraph& g) {
  CompressionScheme s;
  s.catalog = &catalog;
  const int n = catalog.n();
  s.threshold = 2 * (n + 1) / 3;
  s.short_set.resize(catalog.size());
  for (CycleId id = 0; id < catalog.size(); ++id)
    if (catalog[id].length() <= s.threshold) s.short_set.set(id);
  s.r = s.short_set.count();

  s.triples = theta_triples(g);
  std::sort(s.triples.begin(), s.triples.end());
  for (const auto& t : s.triples) {
    if (!s.short_set.test(t[0]))
      throw std::logic_error("theta triple whose smallest cycle is not short");
  }

  s.by_largest_offsets.assign(catalog.size() + 1, 0);
  for (const auto& t : s.triples) s.by_largest_offsets[t[2] + 1]++;
  for (std::size_t i = 1; i < s.by_largest_offsets.size(); ++i)
    s.by_largest_offsets[i] += s.by_largest_offsets[i - 1];
  s.by_largest.resize(s.triples.size());
  std::vector<std::uint32_t> cursor(s.by_largest_offsets.begin(),
                                    s.by_largest_offsets.end() - 1);
  for (const auto& t : s.triples) s.by_largest[cursor[t[2]]++] = t;
  return s;
}

BiasSet compress(const BiasSet& b, const CompressionScheme& scheme,
                 const OverlapGraph& g) {
  if (!is_biased_clique(b, g))
    throw std::invalid_argument("compress needs a biased clique");
  BiasSet out = b;
  for (const auto& t : scheme.triples) {
    if (b.members.test(t[0]) && b.members.test(t[1]) && b.members.test(t[2])) {
      out.members.reset(t[0]);
      out.members.reset(t[2]);
    }
  }
  if (!is_scarce(out, g))
    throw std::logic_error("compression produced a non-scarce set");
  return out;
}

std::optional<BiasSet> reconstruct(const BiasSet& scarce, const IdSet& x,
                                   const CompressionScheme& scheme,
                                   const OverlapGraph& g) {
  const auto& cat = *scheme.catalog;
  if (x.size() != cat.size() || scarce.members.size() != cat.size())
    throw std::invalid_argument("id set size mismatch");
  if ((x & ~scheme.short_set).any())
    throw std::invalid_argument("x must be a subset of the short cycles");

  BiasSet b = BiasSet::empty(cat);
  for (CycleId id = 0; id < cat.size(); ++id) {
    if (scheme.short_set.test(id)) {
      if (x.test(id)) b.members.set(id);
      continue;
    }
    bool member = scarce.members.test(id);
    if (!member) {
      for (std::uint32_t p = scheme.by_largest_offsets[id];
           p < scheme.by_largest_offsets[id + 1] && !member; ++p) {
        const auto& t = scheme.by_largest[p];
        member = b.members.test(t[0]) && b.members.test(t[1]);
      }
    }
    if (member) b.members.set(id);
  }

  if ((b.members & scheme.short_set) != x) return std::nullopt;
  if (!is_biased_clique(b, g)) return std::nullopt;
  if (compress(b, scheme, g).members != scarce.members) return std::nullopt;
  return b;
}

}  // namespace biaslab
