#include "oirep/morphism.hpp"

#include <algorithm>
#include <sstream>

namespace oirep {

long long binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

bool OrdMorphism::operator<(const OrdMorphism& o) const {
  if (source != o.source) return source < o.source;
  if (target != o.target) return target < o.target;
  return values < o.values;
}

std::uint64_t OrdMorphism::image_mask() const {
  std::uint64_t m = 0;
  for (int v : values) m |= (std::uint64_t(1) << v);
  return m;
}

OrdMorphism identity_morphism(int n) {
  OrdMorphism f;
  f.source = f.target = n;
  f.values.resize(n);
  for (int i = 0; i < n; ++i) f.values[i] = i + 1;
  return f;
}

OrdMorphism irreducible(int n, int i) {
  if (n < 0 || i < 1 || i > n + 1) throw DomainError("irreducible index out of range");
  OrdMorphism f;
  f.source = n;
  f.target = n + 1;
  f.values.resize(n);
  for (int j = 1; j <= n; ++j) f.values[j - 1] = j < i ? j : j + 1;
  return f;
}

OrdMorphism make_morphism(int m, int n, std::vector<int> values) {
  if (m < 0 || n < 0 || int(values.size()) != m) throw DomainError("bad morphism data");
  for (int i = 0; i < m; ++i) {
    if (values[i] < 1 || values[i] > n) throw DomainError("morphism value out of range");
    if (i > 0 && values[i] <= values[i - 1]) throw DomainError("morphism values not increasing");
  }
  OrdMorphism f;
  f.source = m;
  f.target = n;
  f.values = std::move(values);
  return f;
}

OrdMorphism canonical_inclusion(int m, int n) {
  if (m > n) throw DomainError("no inclusion from larger to smaller");
  OrdMorphism f;
  f.source = m;
  f.target = n;
  f.values.resize(m);
  for (int i = 0; i < m; ++i) f.values[i] = i + 1;
  return f;
}

bool hits_min(const OrdMorphism& f) { return f.source >= 1 && f.values.front() == 1; }

bool hits_max(const OrdMorphism& f) { return f.source >= 1 && f.values.back() == f.target; }

OrdMorphism compose(const OrdMorphism& g, const OrdMorphism& f) {
  if (f.target != g.source)
    throw CompositionError("compose: target " + std::to_string(f.target) +
                           " != source " + std::to_string(g.source));
  OrdMorphism h;
  h.source = f.source;
  h.target = g.target;
  h.values.resize(f.source);
  for (int i = 0; i < f.source; ++i) h.values[i] = g.values[f.values[i] - 1];
  return h;
}

std::vector<OrdMorphism> enumerate_morphisms(int m, int n) {
  std::vector<OrdMorphism> out;
  if (m < 0 || n < 0 || m > n) return out;
  OrdMorphism f;
  f.source = m;
  f.target = n;
  f.values.resize(m);
  for (int i = 0; i < m; ++i) f.values[i] = i + 1;
  while (true) {
    out.push_back(f);
    int i = m - 1;
    while (i >= 0 && f.values[i] == n - (m - 1 - i)) --i;
    if (i < 0) break;
    ++f.values[i];
    for (int j = i + 1; j < m; ++j) f.values[j] = f.values[j - 1] + 1;
  }
  return out;
}

int morphism_index(const OrdMorphism& f) {
  int m = f.source, n = f.target;
  long long idx = 0;
  int prev = 0;
  for (int i = 0; i < m; ++i) {
    for (int x = prev + 1; x < f.values[i]; ++x) idx += binom(n - x, m - i - 1);
    prev = f.values[i];
  }
  return int(idx);
}

std::vector<OrdMorphism> factorize(const OrdMorphism& f) {
  std::vector<OrdMorphism> out;
  OrdMorphism cur = f;
  while (cur.degree() > 0) {
    // largest target element not in the image
    int missing = 0;
    std::vector<bool> hit(cur.target + 1, false);
    for (int v : cur.values) hit[v] = true;
    for (int x = cur.target; x >= 1; --x)
      if (!hit[x]) {
        missing = x;
        break;
      }
    out.push_back(irreducible(cur.target - 1, missing));
    for (int& v : cur.values)
      if (v > missing) --v;
    --cur.target;
  }
  return out;
}

OrdMorphism embed(Side s, const OrdMorphism& f) {
  OrdMorphism g;
  g.source = f.source + 1;
  g.target = f.target + 1;
  g.values.resize(g.source);
  if (s == Side::a) {
    g.values[0] = 1;
    for (int i = 0; i < f.source; ++i) g.values[i + 1] = f.values[i] + 1;
  } else {
    for (int i = 0; i < f.source; ++i) g.values[i] = f.values[i];
    g.values[f.source] = f.target + 1;
  }
  return g;
}

OrdMorphism submerge(Side s, const OrdMorphism& f) {
  if (f.source < 1) throw DomainError("submerge needs positive source");
  OrdMorphism g;
  g.source = f.source - 1;
  g.target = f.target - 1;
  g.values.resize(g.source);
  if (s == Side::a) {
    for (int i = 0; i < g.source; ++i) g.values[i] = f.values[i + 1] - 1;
  } else {
    for (int i = 0; i < g.source; ++i) g.values[i] = f.values[i];
  }
  return g;
}

OrdMorphism boundary(Side s, BoundaryDir d, const OrdMorphism& f) {
  const bool guard = (s == Side::a) ? !hits_min(f) : !hits_max(f);
  if (!guard)
    throw PreconditionError("boundary guard violated for " + to_text(f) + " side " +
                            side_name(s));
  if (f.target < 1) throw PreconditionError("boundary needs positive target");
  OrdMorphism g;
  if (d == BoundaryDir::lower) {
    g.source = f.source;
    g.target = f.target - 1;
    g.values.resize(g.source);
    for (int i = 0; i < f.source; ++i)
      g.values[i] = (s == Side::a) ? f.values[i] - 1 : f.values[i];
  } else {
    g.source = f.source + 1;
    g.target = f.target;
    g.values.resize(g.source);
    if (s == Side::a) {
      g.values[0] = 1;
      for (int i = 0; i < f.source; ++i) g.values[i + 1] = f.values[i];
    } else {
      for (int i = 0; i < f.source; ++i) g.values[i] = f.values[i];
      g.values[f.source] = f.target;
    }
  }
  return g;
}

OrdMorphism mirror(const OrdMorphism& f) {
  OrdMorphism g;
  g.source = f.source;
  g.target = f.target;
  g.values.resize(f.source);
  for (int i = 0; i < f.source; ++i) g.values[i] = f.target + 1 - f.values[f.source - 1 - i];
  return g;
}

std::string to_text(const OrdMorphism& f) {
  std::ostringstream os;
  os << f.source << "->" << f.target << ":";
  if (f.is_identity()) {
    os << "id";
    return os.str();
  }
  os << "[";
  for (int i = 0; i < f.source; ++i) os << (i ? "," : "") << f.values[i];
  os << "]";
  return os.str();
}

}  // namespace oirep
