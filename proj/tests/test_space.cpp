#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "liftkit/fintop/canonical.hpp"
#include "liftkit/fintop/enumerate.hpp"
#include "liftkit/fintop/space.hpp"

using namespace liftkit::fintop;

namespace {

// Independent route: every off-diagonal 0/1 matrix, filtered for transitivity.
std::vector<std::vector<PointSet>> naive_preorders(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) cells.emplace_back(i, j);
  std::vector<std::vector<PointSet>> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << cells.size()); ++m) {
    std::vector<PointSet> cl(n);
    for (std::size_t i = 0; i < n; ++i) cl[i] = bit(i);
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (m >> c & 1) cl[cells[c].first] |= bit(cells[c].second);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j)
        for (std::size_t k = 0; k < n && ok; ++k)
          if ((cl[i] >> j & 1) && (cl[j] >> k & 1) && !(cl[i] >> k & 1)) ok = false;
    if (ok) out.push_back(cl);
  }
  return out;
}

// Minimum row-major matrix string over all permutations.
std::string brute_min_matrix(const std::vector<PointSet>& cl) {
  const std::size_t n = cl.size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::string best;
  do {
    std::string s;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s += (cl[p[i]] >> p[j] & 1) ? '1' : '0';
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

std::size_t naive_class_count(std::size_t n) {
  std::set<std::string> classes;
  for (const auto& cl : naive_preorders(n)) classes.insert(brute_min_matrix(cl));
  return classes.size();
}

bool brute_homeomorphic(const FiniteSpace& a, const FiniteSpace& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::uint8_t> p(a.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t x = 0; x < a.size() && ok; ++x)
      for (std::size_t y = 0; y < a.size() && ok; ++y) ok = a.arrow(x, y) == b.arrow(p[x], p[y]);
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

FiniteSpace random_space(std::mt19937& rng, std::size_t n) {
  std::vector<Arrow> arrows;
  std::bernoulli_distribution coin(0.3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && coin(rng)) arrows.emplace_back(i, j);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(default_label(i));
  return FiniteSpace::from_arrows(labels, arrows);
}

}  // namespace

TEST_CASE("Sierpinski space from arrows") {
  const Arrow ab{0, 1};
  auto s = FiniteSpace::from_arrows({"a", "b"}, std::span(&ab, 1));
  CHECK(s.open_sets() == std::vector<PointSet>{0b00, 0b01, 0b11});
  CHECK(s.is_open(bit(0)));
  CHECK(s.is_closed(bit(1)));
  CHECK(s.closure(0) == 0b11);
  CHECK(s.closure(1) == 0b10);
  CHECK(s.label(0) == "a");
}

TEST_CASE("one-point and five-point spaces from arrows") {
  auto p = FiniteSpace::from_arrows({"a"}, {});
  CHECK(p.size() == 1);
  CHECK(p.open_sets().size() == 2);

  // a<-U->x<-V->b
  std::vector<Arrow> arrows{{1, 0}, {1, 2}, {3, 2}, {3, 4}};
  auto five = FiniteSpace::from_arrows({"a", "U", "x", "V", "b"}, arrows);
  CHECK(five.closure(1) == (bit(0) | bit(1) | bit(2)));
  CHECK(five.star(2) == (bit(1) | bit(2) | bit(3)));
  CHECK(five.is_closed(bit(0)));
  CHECK(five.is_closed(bit(2)));
}

TEST_CASE("duplicate labels are rejected") {
  CHECK_THROWS_AS(FiniteSpace::from_arrows({"a", "a"}, {}), std::invalid_argument);
  std::vector<Arrow> bad{{0, 3}};
  CHECK_THROWS_AS(FiniteSpace::from_arrows({"a", "b"}, bad), std::invalid_argument);
  CHECK_THROWS_AS(FiniteSpace::from_closures({0b10, 0b10}), std::invalid_argument);
}

TEST_CASE("closing an already closed relation changes nothing") {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    auto s = random_space(rng, 1 + t % 6);
    std::vector<Arrow> arrows;
    for (std::size_t x = 0; x < s.size(); ++x)
      for (std::size_t y = 0; y < s.size(); ++y)
        if (s.arrow(x, y)) arrows.emplace_back(x, y);
    auto again = FiniteSpace::from_arrows(s.labels(), arrows);
    CHECK(again == s);
  }
}

TEST_CASE("open and closed sets are complementary") {
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const auto& s : enumerate_spaces(n, true)) {
      for (PointSet sub = 0; sub <= s.points(); ++sub) {
        CHECK(s.is_open(sub) == s.is_closed(s.points() & ~sub));
      }
    }
  }
}

TEST_CASE("homeomorphism class counts match brute force") {
  // Frozen from naive_class_count; OEIS A001930 lists 1, 3, 9, 33, 139, 718.
  const std::size_t expected[] = {1, 1, 3, 9, 33, 139};
  for (std::size_t n = 1; n <= 4; ++n) CHECK(naive_class_count(n) == expected[n]);
  for (std::size_t n = 0; n <= 5; ++n) CHECK(enumerate_spaces(n, true).size() == expected[n]);
  CHECK(count_spaces(6, true) == 718);
}

TEST_CASE("labeled counts match brute force") {
  // OEIS A000798: 1, 1, 4, 29, 355, 6942, 209527.
  const std::size_t expected[] = {1, 1, 4, 29, 355, 6942};
  for (std::size_t n = 0; n <= 4; ++n) CHECK(naive_preorders(n).size() == expected[n]);
  for (std::size_t n = 0; n <= 5; ++n) CHECK(enumerate_spaces(n, false).size() == expected[n]);
  CHECK(count_spaces(6, false) == 209527);
}

TEST_CASE("enumeration guard") {
  CHECK_THROWS_AS(enumerate_spaces(8, true), GuardError);
  CHECK_THROWS_AS(count_spaces(8, false), GuardError);
}

TEST_CASE("two-point classes are discrete, Sierpinski, antidiscrete") {
  auto two = enumerate_spaces(2, true);
  REQUIRE(two.size() == 3);
  std::set<std::string> forms;
  for (const auto& s : two) forms.insert(s.matrix_string());
  CHECK(forms == std::set<std::string>{"10/01", "11/01", "11/11"});
}

TEST_CASE("canonical form examples") {
  const Arrow ab{0, 1};
  auto sier = FiniteSpace::from_arrows({"a", "b"}, std::span(&ab, 1));
  const Arrow yx{1, 0};
  auto relabeled = FiniteSpace::from_arrows({"x", "y"}, std::span(&yx, 1));
  CHECK(is_homeomorphic(sier, relabeled));
  CHECK(canonical_form(sier) == "11/01");
  CHECK_FALSE(is_homeomorphic(sier, FiniteSpace::antidiscrete(2)));

  std::vector<Arrow> abc{{0, 1}, {0, 2}};
  std::vector<Arrow> acb{{0, 2}, {0, 1}};
  CHECK(canonical_form(FiniteSpace::from_arrows({"a", "b", "c"}, abc)) ==
        canonical_form(FiniteSpace::from_arrows({"a", "b", "c"}, acb)));
}

TEST_CASE("canonical form is the lexicographic minimum and decides homeomorphism") {
  std::mt19937 rng(11);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + t % 5;
    auto a = random_space(rng, n);
    auto b = random_space(rng, n);
    CHECK(is_homeomorphic(a, b) == brute_homeomorphic(a, b));
    // Shell-order minimum is one fixed matrix per class.
    std::vector<std::uint8_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_form(a.permuted(perm)) == canonical_form(a));
  }
}

TEST_CASE("automorphism counts") {
  CHECK(automorphisms(FiniteSpace::discrete(4)).size() == 24);
  CHECK(automorphisms(FiniteSpace::antidiscrete(3)).size() == 6);
  const Arrow ab{0, 1};
  CHECK(automorphisms(FiniteSpace::from_arrows({"a", "b"}, std::span(&ab, 1))).size() == 1);
}

TEST_CASE("map enumeration examples") {
  const Arrow ab{0, 1};
  auto sier = share(FiniteSpace::from_arrows({"a", "b"}, std::span(&ab, 1)));
  CHECK(enumerate_maps(sier, sier).size() == 3);
  CHECK(enumerate_maps(share(FiniteSpace::discrete(2)), sier).size() == 4);
  for (const auto& s : enumerate_spaces_upto(4)) {
    CHECK(count_maps(s, FiniteSpace::point()) == 1);
    CHECK(count_maps(FiniteSpace::empty(), s) == 1);
    CHECK(count_maps(s, FiniteSpace::empty()) == (s.is_empty() ? 1 : 0));
  }
}

TEST_CASE("monotone maps are exactly those pulling closed sets back to closed sets") {
  auto spaces = enumerate_spaces_upto(3);
  for (const auto& a : spaces) {
    for (const auto& b : spaces) {
      const std::size_t total = [&] {
        std::size_t t = 1;
        for (std::size_t i = 0; i < a.size(); ++i) t *= b.size();
        return a.size() == 0 ? 1 : t;
      }();
      std::size_t continuous = 0;
      std::vector<std::uint8_t> img(a.size());
      for (std::size_t code = 0; code < total && b.size() > 0; ++code) {
        std::size_t c = code;
        for (auto& v : img) {
          v = static_cast<std::uint8_t>(c % b.size());
          c /= b.size();
        }
        bool closed_ok = true;
        for (PointSet f : b.closed_sets()) {
          PointSet pre = 0;
          for (std::size_t x = 0; x < a.size(); ++x)
            if (f >> img[x] & 1) pre |= bit(x);
          if (!a.is_closed(pre)) closed_ok = false;
        }
        CHECK(closed_ok == is_monotone(a, b, img));
        continuous += closed_ok;
      }
      if (b.size() > 0) CHECK(continuous == count_maps(a, b));
    }
  }
}
