#include "ordcone/double_description.hpp"

#include <algorithm>

namespace ordcone {

void sort_canonical(std::vector<QVector>& vs) {
  std::sort(vs.begin(), vs.end(), [](const QVector& a, const QVector& b) { return b < a; });
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

namespace {

struct Ray {
  QVector v;
  std::vector<bool> zero;  // zero[k]: <processed constraint k, v> == 0
};

std::vector<QVector> prepare_constraints(std::size_t dim, std::span<const QVector> constraints) {
  std::vector<QVector> out;
  for (const auto& a : constraints) {
    if (a.dim() != dim) throw DimensionError("constraint length differs from cone dimension");
    if (!a.is_zero()) out.push_back(primitive(a));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool adjacent(const Ray& p, const Ray& q, std::span<const QVector> processed, std::size_t pointed_dim) {
  if (pointed_dim < 2) return false;
  std::vector<QVector> common;
  for (std::size_t k = 0; k < processed.size(); ++k)
    if (p.zero[k] && q.zero[k]) common.push_back(processed[k]);
  // Cheap combinatorial filter before the exact rank test.
  if (common.size() + 2 < pointed_dim) return false;
  return rank(processed.front().dim(), common) == pointed_dim - 2;
}

// Orthogonal projection onto the complement of span(lines).
QVector project_off(const QVector& r, const std::vector<QVector>& lines) {
  if (lines.empty()) return r;
  const std::size_t k = lines.size();
  QMatrix gram(k, k);
  QVector rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gram(i, j) = dot(lines[i], lines[j]);
    rhs[i] = dot(lines[i], r);
  }
  const auto coeffs = solve(gram, rhs);
  QVector out = r;
  for (std::size_t i = 0; i < k; ++i) out -= (*coeffs)[i] * lines[i];
  return out;
}

}  // namespace

ConeEnumeration enumerate_cone(std::size_t dim, std::span<const QVector> constraints) {
  const std::vector<QVector> cs = prepare_constraints(dim, constraints);

  std::vector<QVector> lines;
  for (std::size_t i = 0; i < dim; ++i) lines.push_back(QVector::unit(dim, i));
  std::vector<Ray> rays;
  std::vector<QVector> processed;

  for (const auto& a : cs) {
    auto cut = std::find_if(lines.begin(), lines.end(), [&](const QVector& l) { return dot(a, l) != 0; });
    if (cut != lines.end()) {
      QVector l0 = *cut;
      lines.erase(cut);
      Rational al0 = dot(a, l0);
      if (al0 < 0) {
        l0 = -l0;
        al0 = -al0;
      }
      for (auto& l : lines) {
        const Rational t = dot(a, l);
        if (t != 0) l = primitive(l - (t / al0) * l0);
      }
      for (auto& r : rays) {
        const Rational t = dot(a, r.v);
        if (t != 0) r.v = primitive(r.v - (t / al0) * l0);
        r.zero.push_back(true);
      }
      Ray fresh{primitive(l0), std::vector<bool>(processed.size(), true)};
      fresh.zero.push_back(false);
      rays.push_back(std::move(fresh));
      processed.push_back(a);
      continue;
    }

    std::vector<Ray> positive, negative, next;
    std::vector<Rational> pos_val, neg_val;
    for (auto& r : rays) {
      const Rational t = dot(a, r.v);
      if (t > 0) {
        positive.push_back(r);
        pos_val.push_back(t);
      } else if (t < 0) {
        negative.push_back(r);
        neg_val.push_back(t);
      } else {
        next.push_back(r);
      }
    }
    const std::size_t pointed_dim = dim - lines.size();
    std::vector<Ray> created;
    for (std::size_t i = 0; i < positive.size(); ++i)
      for (std::size_t j = 0; j < negative.size(); ++j) {
        if (!adjacent(positive[i], negative[j], processed, pointed_dim)) continue;
        Ray c;
        c.v = primitive(pos_val[i] * negative[j].v - neg_val[j] * positive[i].v);
        c.zero.resize(processed.size());
        for (std::size_t k = 0; k < processed.size(); ++k)
          c.zero[k] = positive[i].zero[k] && negative[j].zero[k];
        created.push_back(std::move(c));
      }
    for (auto& r : positive) next.push_back(std::move(r));
    for (auto& r : next) r.zero.push_back(dot(a, r.v) == 0);
    for (auto& r : created) {
      r.zero.push_back(true);
      next.push_back(std::move(r));
    }
    rays = std::move(next);
    processed.push_back(a);
  }

  ConeEnumeration out;
  out.lines = span_basis(dim, lines);
  for (const auto& r : rays) {
    QVector v = project_off(r.v, out.lines);
    if (!v.is_zero()) out.rays.push_back(primitive(v));
  }
  sort_canonical(out.rays);
  return out;
}

std::vector<QVector> as_generator_list(const ConeEnumeration& e) {
  std::vector<QVector> out = e.rays;
  for (const auto& l : e.lines) {
    out.push_back(l);
    out.push_back(-l);
  }
  sort_canonical(out);
  return out;
}

}  // namespace ordcone
