#include "oirep/algebra.hpp"

#include <deque>
#include <sstream>

namespace oirep {

AlgebraElement algebra_zero(int m, int n) {
  AlgebraElement a;
  a.source = m;
  a.target = n;
  a.coeffs.assign(size_t(binom(n, m)), Scalar(0));
  return a;
}

AlgebraElement algebra_element(const OrdMorphism& f) {
  AlgebraElement a = algebra_zero(f.source, f.target);
  a.coeffs[morphism_index(f)] = Scalar(1);
  return a;
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.source != b.source || a.target != b.target)
    throw DimensionError("algebra element slice mismatch");
  AlgebraElement r = a;
  for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
  return r;
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.source != b.source || a.target != b.target)
    throw DimensionError("algebra element slice mismatch");
  AlgebraElement r = a;
  for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] -= b.coeffs[i];
  return r;
}

AlgebraElement operator*(const Scalar& c, const AlgebraElement& a) {
  AlgebraElement r = a;
  for (auto& x : r.coeffs) x *= c;
  return r;
}

AlgebraElement algebra_product(const AlgebraElement& g, const AlgebraElement& f) {
  if (f.target != g.source) throw CompositionError("algebra product slice mismatch");
  AlgebraElement r = algebra_zero(f.source, g.target);
  auto fs = enumerate_morphisms(f.source, f.target);
  auto gs = enumerate_morphisms(g.source, g.target);
  for (size_t j = 0; j < fs.size(); ++j) {
    if (f.coeffs[j].is_zero()) continue;
    for (size_t i = 0; i < gs.size(); ++i) {
      if (g.coeffs[i].is_zero()) continue;
      r.coeffs[morphism_index(compose(gs[i], fs[j]))] += g.coeffs[i] * f.coeffs[j];
    }
  }
  return r;
}

std::string to_text(const AlgebraElement& a) {
  std::ostringstream os;
  auto fs = enumerate_morphisms(a.source, a.target);
  bool first = true;
  for (size_t i = 0; i < fs.size(); ++i) {
    if (a.coeffs[i].is_zero()) continue;
    Scalar c = a.coeffs[i];
    if (first) {
      first = false;
      if (c.value() < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << " " << (c.value() < 0 ? "-" : "+") << " ";
      if (c.value() < 0) c = -c;
    }
    if (!c.is_one()) os << c.str() << "*";
    os << to_text(fs[i]);
  }
  if (first) os << "0";
  return os.str();
}

IdealSlice named_ideal_slice(IdealName name, int m, int n) {
  if (name != IdealName::Aug && m < 1)
    throw DomainError("Ia/Ib are ideals of the positive part; source must be >= 1");
  auto fs = enumerate_morphisms(m, n);
  int dim = int(fs.size());
  IdealSlice s;
  s.source = m;
  s.target = n;
  if (name == IdealName::Aug) {
    Matrix diffs(dim, dim > 1 ? dim - 1 : 0);
    for (int k = 0; k + 1 < dim; ++k) {
      diffs.at(k, k) = Scalar(1);
      diffs.at(k + 1, k) = Scalar(-1);
    }
    s.basis = column_space(diffs);
    return s;
  }
  std::vector<int> picked;
  for (int k = 0; k < dim; ++k) {
    bool in = (name == IdealName::Ia) ? fs[k].values.front() != 1
                                      : fs[k].values.back() != n;
    if (in) picked.push_back(k);
  }
  Matrix b(dim, int(picked.size()));
  for (int j = 0; j < int(picked.size()); ++j) b.at(picked[j], j) = Scalar(1);
  s.basis = column_space(b);
  return s;
}

Matrix postcompose_matrix(const OrdMorphism& g, int m) {
  auto dom = enumerate_morphisms(m, g.source);
  Matrix r(int(binom(g.target, m)), int(dom.size()));
  for (size_t j = 0; j < dom.size(); ++j)
    r.at(morphism_index(compose(g, dom[j])), int(j)) = Scalar(1);
  return r;
}

Matrix precompose_matrix(const OrdMorphism& f, int r) {
  auto dom = enumerate_morphisms(f.target, r);
  Matrix m(int(binom(r, f.source)), int(dom.size()));
  for (size_t j = 0; j < dom.size(); ++j)
    m.at(morphism_index(compose(dom[j], f)), int(j)) = Scalar(1);
  return m;
}

Matrix submerge_matrix(Side s, int m, int n) {
  if (m < 1) throw DomainError("submerge map needs source >= 1");
  auto dom = enumerate_morphisms(m, n);
  Matrix r(int(binom(n - 1, m - 1)), int(dom.size()));
  for (size_t j = 0; j < dom.size(); ++j)
    r.at(morphism_index(submerge(s, dom[j])), int(j)) = Scalar(1);
  return r;
}

Matrix guarded_submerge_matrix(Side s, int m, int n) {
  if (m < 1) throw DomainError("guarded map needs source >= 1");
  auto dom = enumerate_morphisms(m, n);
  Matrix r(int(binom(n - 1, m - 1)), int(dom.size()));
  for (size_t j = 0; j < dom.size(); ++j) {
    bool keep = (s == Side::a) ? hits_min(dom[j]) : hits_max(dom[j]);
    if (keep) r.at(morphism_index(submerge(s, dom[j])), int(j)) = Scalar(1);
  }
  return r;
}

IdealSlice submerge_kernel_slice(Side s, int m, int n) {
  IdealSlice r;
  r.source = m;
  r.target = n;
  r.basis = column_space(kernel_basis(submerge_matrix(s, m, n)));
  return r;
}

IdealSlice guarded_kernel_slice(Side s, int m, int n) {
  IdealSlice r;
  r.source = m;
  r.target = n;
  r.basis = column_space(kernel_basis(guarded_submerge_matrix(s, m, n)));
  return r;
}

SliceFamily ideal_closure(const std::vector<AlgebraElement>& generators,
                          ClosureKind kind, int max_level, Ambient ambient) {
  const int min_source = ambient == Ambient::positive ? 1 : 0;
  std::map<SliceKey, SpanBuilder> spans;
  auto span_at = [&](int m, int n) -> SpanBuilder& {
    auto it = spans.find({m, n});
    if (it == spans.end())
      it = spans.emplace(SliceKey{m, n}, SpanBuilder(int(binom(n, m)))).first;
    return it->second;
  };

  std::deque<std::pair<SliceKey, Vec>> work;
  auto push = [&](int m, int n, const Vec& v) {
    if (n > max_level || m < min_source) return;
    if (span_at(m, n).insert(v)) work.push_back({{m, n}, v});
  };

  for (const auto& g : generators) {
    if (g.source < min_source)
      throw DomainError("generator source below the ambient algebra");
    push(g.source, g.target, g.coeffs);
  }

  while (!work.empty()) {
    auto [key, v] = work.front();
    work.pop_front();
    auto [m, n] = key;
    if (kind != ClosureKind::right && n + 1 <= max_level) {
      for (int i = 1; i <= n + 1; ++i)
        push(m, n + 1, postcompose_matrix(irreducible(n, i), m).apply(v));
    }
    if (kind != ClosureKind::left && m - 1 >= min_source) {
      for (int i = 1; i <= m; ++i)
        push(m - 1, n, precompose_matrix(irreducible(m - 1, i), n).apply(v));
    }
  }

  SliceFamily out;
  for (int n = 0; n <= max_level; ++n)
    for (int m = min_source; m <= n; ++m) {
      IdealSlice s;
      s.source = m;
      s.target = n;
      auto it = spans.find({m, n});
      s.basis = (it == spans.end()) ? Matrix(int(binom(n, m)), 0)
                                    : column_space(it->second.basis());
      out[{m, n}] = std::move(s);
    }
  return out;
}

std::vector<AlgebraElement> augmentation_generators(int max_level) {
  std::vector<AlgebraElement> gens;
  for (int n = 0; n <= max_level; ++n)
    for (int m = 0; m < n; ++m) {
      auto fs = enumerate_morphisms(m, n);
      for (size_t k = 0; k + 1 < fs.size(); ++k)
        gens.push_back(algebra_element(fs[k]) - algebra_element(fs[k + 1]));
    }
  return gens;
}

}  // namespace oirep
