#include "liftkit/fintop/constructions.hpp"

#include <numeric>
#include <stdexcept>

namespace liftkit::fintop {

FiniteSpace product(const FiniteSpace& a, const FiniteSpace& b) {
  const std::size_t n = a.size() * b.size();
  if (n > kMaxPoints) throw std::invalid_argument("product has more than 64 points");
  std::vector<PointSet> cl(n, 0);
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < b.size(); ++y)
      for (std::size_t x2 = 0; x2 < a.size(); ++x2)
        for (std::size_t y2 = 0; y2 < b.size(); ++y2)
          if (a.arrow(x, x2) && b.arrow(y, y2)) cl[x * b.size() + y] |= bit(x2 * b.size() + y2);
  return FiniteSpace::from_closures(std::move(cl));
}

FiniteSpace coproduct(const FiniteSpace& a, const FiniteSpace& b) {
  const std::size_t n = a.size() + b.size();
  if (n > kMaxPoints) throw std::invalid_argument("coproduct has more than 64 points");
  std::vector<PointSet> cl;
  for (std::size_t x = 0; x < a.size(); ++x) cl.push_back(a.closure(x));
  for (std::size_t y = 0; y < b.size(); ++y) cl.push_back(b.closure(y) << a.size());
  return FiniteSpace::from_closures(std::move(cl));
}

Cone pullback(const SpaceMap& f, const SpaceMap& g) {
  if (!(f.codomain() == g.codomain())) throw std::invalid_argument("pullback needs a cospan");
  std::vector<std::pair<std::size_t, std::size_t>> pts;
  for (std::size_t x = 0; x < f.domain().size(); ++x)
    for (std::size_t y = 0; y < g.domain().size(); ++y)
      if (f(x) == g(y)) pts.emplace_back(x, y);
  if (pts.size() > kMaxPoints) throw std::invalid_argument("pullback has more than 64 points");
  std::vector<PointSet> cl(pts.size(), 0);
  std::vector<std::uint8_t> to_x, to_y;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (f.domain().arrow(pts[i].first, pts[j].first) &&
          g.domain().arrow(pts[i].second, pts[j].second))
        cl[i] |= bit(j);
    }
    to_x.push_back(static_cast<std::uint8_t>(pts[i].first));
    to_y.push_back(static_cast<std::uint8_t>(pts[i].second));
  }
  auto space = share(FiniteSpace::from_closures(std::move(cl)));
  return {space, SpaceMap::trusted(space, f.domain_ptr(), std::move(to_x)),
          SpaceMap::trusted(space, g.domain_ptr(), std::move(to_y))};
}

Cone pushout(const SpaceMap& f, const SpaceMap& g) {
  if (!(f.domain() == g.domain())) throw std::invalid_argument("pushout needs a span");
  const std::size_t nx = f.codomain().size();
  const std::size_t ny = g.codomain().size();
  // Union-find over X + Y, glued along the span.
  std::vector<std::size_t> parent(nx + ny);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::size_t z = 0; z < f.domain().size(); ++z) {
    const std::size_t a = find(f(z)), b = find(nx + g(z));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> cls(nx + ny);
  std::vector<std::size_t> index(nx + ny, SIZE_MAX);
  std::size_t count = 0;
  for (std::size_t v = 0; v < nx + ny; ++v) {
    const std::size_t r = find(v);
    if (index[r] == SIZE_MAX) index[r] = count++;
    cls[v] = index[r];
  }
  std::vector<std::string> labels(count);
  for (std::size_t i = 0; i < count; ++i) labels[i] = default_label(i);
  std::vector<Arrow> arrows;
  for (std::size_t x = 0; x < nx; ++x)
    for_each_point(f.codomain().closure(x), [&](std::size_t y) { arrows.emplace_back(cls[x], cls[y]); });
  for (std::size_t x = 0; x < ny; ++x)
    for_each_point(g.codomain().closure(x),
                   [&](std::size_t y) { arrows.emplace_back(cls[nx + x], cls[nx + y]); });
  auto closed = FiniteSpace::from_arrows(labels, arrows);
  auto space = share(FiniteSpace::from_closures(
      std::vector<PointSet>(closed.closures().begin(), closed.closures().end())));
  std::vector<std::uint8_t> from_x(nx), from_y(ny);
  for (std::size_t x = 0; x < nx; ++x) from_x[x] = static_cast<std::uint8_t>(cls[x]);
  for (std::size_t y = 0; y < ny; ++y) from_y[y] = static_cast<std::uint8_t>(cls[nx + y]);
  return {space, SpaceMap::trusted(f.codomain_ptr(), space, std::move(from_x)),
          SpaceMap::trusted(g.codomain_ptr(), space, std::move(from_y))};
}

SpaceMap product(const SpaceMap& f, const SpaceMap& g) {
  auto dom = share(product(f.domain(), g.domain()));
  auto cod = share(product(f.codomain(), g.codomain()));
  std::vector<std::uint8_t> img(dom->size());
  for (std::size_t x = 0; x < f.domain().size(); ++x)
    for (std::size_t y = 0; y < g.domain().size(); ++y)
      img[x * g.domain().size() + y] = static_cast<std::uint8_t>(f(x) * g.codomain().size() + g(y));
  return SpaceMap::trusted(dom, cod, std::move(img));
}

SpaceMap coproduct(const SpaceMap& f, const SpaceMap& g) {
  auto dom = share(coproduct(f.domain(), g.domain()));
  auto cod = share(coproduct(f.codomain(), g.codomain()));
  std::vector<std::uint8_t> img(f.images());
  for (auto v : g.images()) img.push_back(static_cast<std::uint8_t>(v + f.codomain().size()));
  return SpaceMap::trusted(dom, cod, std::move(img));
}

SpaceMap inclusion(const SpacePtr& space, PointSet points) {
  auto sub = share(space->subspace(points));
  std::vector<std::uint8_t> img;
  for_each_point(points & space->points(), [&](std::size_t x) { img.push_back(static_cast<std::uint8_t>(x)); });
  return SpaceMap::trusted(sub, space, std::move(img));
}

}  // namespace liftkit::fintop
