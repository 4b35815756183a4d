#include "quadtile/search.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace quadtile {

namespace {

struct Key {
  Rational e;
  Rational f;
  friend auto operator<=>(const Key&, const Key&) = default;
};

struct Item {
  Quad value;
  Recipe recipe;
  std::size_t bits;
};

std::size_t height_bits(const Quad& q) { return std::max(q.e().bit_size(), q.f().bit_size()); }

}  // namespace

std::optional<Recipe> bounded_closure_search(const Quad& z, std::span<const Quad> shapes, const SearchLimits& limits) {
  const Rational pool[] = {Rational(1, 2), Rational(2), Rational(1, 3), Rational(3)};

  std::map<Key, std::size_t> seen;
  std::vector<Item> items;
  auto offer = [&](Quad v, Recipe r) -> bool {
    if (v.sign() <= 0) return false;
    const std::size_t bits = height_bits(v);
    if (bits > limits.max_bits) return false;
    auto [it, fresh] = seen.emplace(Key{v.e(), v.f()}, items.size());
    if (!fresh) return false;
    items.push_back({std::move(v), std::move(r), bits});
    return items.back().value == z;
  };

  for (std::size_t i = 0; i < shapes.size(); ++i) {
    if (offer(shapes[i], Recipe::unit(i))) return items.back().recipe;
  }

  std::vector<std::size_t> frontier(items.size());
  for (std::size_t i = 0; i < frontier.size(); ++i) frontier[i] = i;

  for (std::size_t round = 0; round < limits.depth; ++round) {
    const std::size_t before = items.size();
    for (std::size_t a = 0; a < frontier.size(); ++a) {
      const Item u = items[frontier[a]];
      if (offer(u.value.inv(), Recipe::transpose(u.recipe))) return items.back().recipe;
      for (const Rational& q : pool) {
        if (offer(q * u.value, Recipe::scale(u.recipe, q))) return items.back().recipe;
      }
      for (std::size_t b = a; b < frontier.size(); ++b) {
        const Item& v = items[frontier[b]];
        if (offer(u.value + v.value, Recipe::stack(u.recipe, v.recipe))) return items.back().recipe;
      }
    }
    if (items.size() == before) break;

    // Next frontier: the smallest values seen so far, ties by discovery order.
    std::vector<std::size_t> order(items.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return items[x].bits < items[y].bits; });
    order.resize(std::min(order.size(), limits.width));
    frontier = std::move(order);
  }
  return std::nullopt;
}

}  // namespace quadtile
