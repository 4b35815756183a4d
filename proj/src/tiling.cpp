#include "quadtile/tiling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>

#include "quadtile/error.hpp"

namespace quadtile {

namespace {

constexpr std::size_t kBruteForceLimit = 256;

void require_one_field(const Tiling& t) {
  const auto& ctx = *t.field();
  auto check = [&](const Quad& q) {
    if (!q.context()->same_field(ctx)) {
      throw Error(ErrorKind::ContextMismatch, "tiling mixes p=" + ctx.p().str() + " and p=" + q.p().str());
    }
  };
  check(t.height);
  for (const auto& tile : t.tiles) {
    check(tile.x);
    check(tile.y);
    check(tile.w);
    check(tile.h);
  }
}

// Tile edges replaced by their positions in the exactly sorted list of
// distinct coordinates, one list per axis. Equal ranks mean equal values,
// so every later comparison is an integer one.
struct Ranked {
  std::vector<std::uint32_t> x0, x1, y0, y1;
  std::uint32_t left = 0, right = 0, bottom = 0, top = 0;
};

std::vector<std::uint32_t> rank_values(const std::vector<Quad>& values) {
  // Doubles decide the order when they are far enough apart (see compare());
  // close or out-of-range pairs fall back to the exact comparison.
  struct Approx {
    double value;
    double mag;
  };
  std::vector<Approx> approx(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double s = values[i].context()->root_approx();
    const double e = values[i].e().to_double();
    const double f = values[i].f().to_double();
    approx[i] = {e + f * s, std::fabs(e) + std::fabs(f) * s};
  }
  auto less = [&](std::uint32_t a, std::uint32_t b) {
    const double mag = approx[a].mag + approx[b].mag;
    if (std::isfinite(mag) && mag > 1e-280 && mag < 1e280) {
      const double diff = approx[a].value - approx[b].value;
      if (std::fabs(diff) > 1e-14 * mag) return diff < 0;
    }
    return compare(values[a], values[b]) < 0;
  };

  std::vector<std::uint32_t> order(values.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), less);
  std::vector<std::uint32_t> rank(values.size());
  std::uint32_t r = 0;
  for (std::size_t n = 0; n < order.size(); ++n) {
    if (n > 0 && values[order[n]] != values[order[n - 1]]) ++r;
    rank[order[n]] = r;
  }
  return rank;
}

Ranked rank_tiling(const Tiling& t) {
  const std::size_t n = t.tiles.size();
  std::vector<Quad> xs, ys;
  xs.reserve(2 * n + 2);
  ys.reserve(2 * n + 2);
  for (const auto& tile : t.tiles) {
    xs.push_back(tile.x);
    xs.push_back(tile.x + tile.w);
    ys.push_back(tile.y);
    ys.push_back(tile.y + tile.h);
  }
  const Quad zero = t.field()->zero();
  xs.push_back(zero);
  xs.push_back(t.width);
  ys.push_back(zero);
  ys.push_back(t.height);
  const auto rx = rank_values(xs);
  const auto ry = rank_values(ys);

  Ranked out;
  out.x0.resize(n);
  out.x1.resize(n);
  out.y0.resize(n);
  out.y1.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.x0[i] = rx[2 * i];
    out.x1[i] = rx[2 * i + 1];
    out.y0[i] = ry[2 * i];
    out.y1[i] = ry[2 * i + 1];
  }
  out.left = rx[2 * n];
  out.right = rx[2 * n + 1];
  out.bottom = ry[2 * n];
  out.top = ry[2 * n + 1];
  return out;
}

bool positive(const Ranked& r, std::size_t i) { return r.x0[i] < r.x1[i] && r.y0[i] < r.y1[i]; }

bool interiors_overlap(const Ranked& r, std::size_t a, std::size_t b) {
  return r.x0[a] < r.x1[b] && r.x0[b] < r.x1[a] && r.y0[a] < r.y1[b] && r.y0[b] < r.y1[a];
}

using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;

Pairs overlaps_bruteforce(const Ranked& r) {
  Pairs out;
  const std::size_t n = r.x0.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!positive(r, i)) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (positive(r, j) && interiors_overlap(r, i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

// Sweep over x; the active set holds y-intervals of tiles whose open
// x-range contains the sweep position. While the set is pairwise disjoint,
// a new interval overlaps some member iff it overlaps a neighbour. An
// interval that overlaps is reported and left out of the set, so at least
// one overlapping pair is always found when one exists.
Pairs overlaps_sweep(const Ranked& r) {
  struct Event {
    std::uint32_t at;
    bool open;
    std::size_t id;
  };
  std::vector<Event> events;
  events.reserve(2 * r.x0.size());
  for (std::size_t i = 0; i < r.x0.size(); ++i) {
    if (!positive(r, i)) continue;
    events.push_back({r.x0[i], true, i});
    events.push_back({r.x1[i], false, i});
  }
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    if (a.at != b.at) return a.at < b.at;
    if (a.open != b.open) return !a.open;  // closing edges first: touching is fine
    return a.id < b.id;
  });

  auto by_low = [&r](std::size_t a, std::size_t b) { return r.y0[a] != r.y0[b] ? r.y0[a] < r.y0[b] : a < b; };
  std::set<std::size_t, decltype(by_low)> active(by_low);
  auto y_overlap = [&r](std::size_t a, std::size_t b) { return r.y0[a] < r.y1[b] && r.y0[b] < r.y1[a]; };

  Pairs out;
  for (const auto& ev : events) {
    if (!ev.open) {
      active.erase(ev.id);
      continue;
    }
    const auto it = active.insert(ev.id).first;
    bool clash = false;
    if (it != active.begin()) {
      const std::size_t prev = *std::prev(it);
      if (y_overlap(prev, ev.id)) {
        out.emplace_back(std::min(prev, ev.id), std::max(prev, ev.id));
        clash = true;
      }
    }
    if (auto next = std::next(it); next != active.end() && y_overlap(*next, ev.id)) {
      out.emplace_back(std::min(*next, ev.id), std::max(*next, ev.id));
      clash = true;
    }
    if (clash) active.erase(it);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Tiles are an exact dissection of their bounding box. Tries every full cut
// along one axis at once and recurses into the slabs.
bool guillotine_rec(const Ranked& r, std::vector<std::size_t>& idx, bool vertical_first) {
  if (idx.size() <= 1) return true;
  for (int attempt = 0; attempt < 2; ++attempt) {
    const bool vertical = (attempt == 0) == vertical_first;
    const auto& lo = vertical ? r.x0 : r.y0;
    const auto& hi = vertical ? r.x1 : r.y1;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return lo[a] != lo[b] ? lo[a] < lo[b] : a < b; });
    std::vector<std::vector<std::size_t>> slabs(1);
    std::uint32_t reach = hi[idx.front()];
    slabs.back().push_back(idx.front());
    for (std::size_t n = 1; n < idx.size(); ++n) {
      const std::size_t i = idx[n];
      // Every tile left of this one ends at or before its start: full cut.
      if (reach <= lo[i]) slabs.emplace_back();
      slabs.back().push_back(i);
      reach = std::max(reach, hi[i]);
    }
    if (slabs.size() > 1) {
      for (auto& slab : slabs) {
        if (!guillotine_rec(r, slab, !vertical)) return false;
      }
      return true;
    }
  }
  return false;
}

bool guillotine_ranked(const Ranked& r) {
  std::vector<std::size_t> idx(r.x0.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  return guillotine_rec(r, idx, true);
}

Quad total_area(const Tiling& t) {
  const mpq_class& p = t.field()->p().raw();
  mpq_class e, f, term;
  for (const auto& tile : t.tiles) {
    const mpq_class& we = tile.w.e().raw();
    const mpq_class& wf = tile.w.f().raw();
    const mpq_class& he = tile.h.e().raw();
    const mpq_class& hf = tile.h.f().raw();
    term = wf * hf;
    term *= p;
    e += term;
    term = we * he;
    e += term;
    term = we * hf;
    f += term;
    term = wf * he;
    f += term;
  }
  return t.field()->make(Rational(e), Rational(f));
}

VerifyReport cover_report(const Tiling& t, const Ranked& r) {
  VerifyReport report;
  report.contained = true;
  for (std::size_t i = 0; i < t.tiles.size(); ++i) {
    if (!positive(r, i)) {
      report.contained = false;
      report.failures.push_back({{i}, "non-positive tile size"});
      continue;
    }
    if (r.x0[i] < r.left || r.y0[i] < r.bottom || r.x1[i] > r.right || r.y1[i] > r.top) {
      report.contained = false;
      report.failures.push_back({{i}, "tile outside bounds"});
    }
  }

  const auto pairs = t.tiles.size() <= kBruteForceLimit ? overlaps_bruteforce(r) : overlaps_sweep(r);
  report.disjoint = pairs.empty();
  for (const auto& [a, b] : pairs) report.failures.push_back({{a, b}, "interiors overlap"});

  const Quad area = total_area(t);
  const Quad expected = t.width * t.height;
  report.covered = area == expected;
  if (!report.covered) {
    report.failures.push_back({{}, "tile area " + area.str() + " != bounds area " + expected.str()});
  }
  return report;
}

}  // namespace

namespace detail {

std::vector<std::pair<std::size_t, std::size_t>> overlapping_pairs_bruteforce(const Tiling& t) {
  return overlaps_bruteforce(rank_tiling(t));
}

std::vector<std::pair<std::size_t, std::size_t>> overlapping_pairs_sweep(const Tiling& t) {
  return overlaps_sweep(rank_tiling(t));
}

}  // namespace detail

VerifyReport verify_exact_cover(const Tiling& t) {
  require_one_field(t);
  return cover_report(t, rank_tiling(t));
}

namespace {

// long == shape * short, componentwise.
bool scaled_by(const Quad& longer, const Quad& shorter, const Quad& shape) {
  const mpq_class& a = shape.e().raw();
  const mpq_class& b = shape.f().raw();
  const mpq_class& se = shorter.e().raw();
  const mpq_class& sf = shorter.f().raw();
  mpq_class v = a * sf;
  v += b * se;
  if (v != longer.f().raw()) return false;
  v = b * sf;
  v *= shape.p().raw();
  v += a * se;
  return v == longer.e().raw();
}

bool matches(const PlacedTile& tile, const Quad& shape) {
  return scaled_by(tile.h, tile.w, shape) || scaled_by(tile.w, tile.h, shape);
}

}  // namespace

VerifyReport verify_ratios(const Tiling& t, std::span<const Quad> shapes) {
  VerifyReport report;
  for (std::size_t i = 0; i < t.tiles.size(); ++i) {
    const auto& tile = t.tiles[i];
    bool ok = false;
    if (tile.shape_index) {
      ok = *tile.shape_index < shapes.size() && matches(tile, shapes[*tile.shape_index]);
    } else {
      ok = std::any_of(shapes.begin(), shapes.end(), [&](const Quad& s) { return matches(tile, s); });
    }
    if (!ok) {
      report.ratios_ok = false;
      report.failures.push_back({{i}, "tile ratio matches no shape"});
    }
  }
  return report;
}

bool label_shapes(Tiling& t, std::span<const Quad> shapes) {
  bool all = true;
  for (auto& tile : t.tiles) {
    if (tile.shape_index) continue;
    const auto it = std::find_if(shapes.begin(), shapes.end(), [&](const Quad& s) { return matches(tile, s); });
    if (it == shapes.end()) {
      all = false;
    } else {
      tile.shape_index = static_cast<std::size_t>(it - shapes.begin());
    }
  }
  return all;
}

bool is_guillotine(const Tiling& t) {
  require_one_field(t);
  const Ranked r = rank_tiling(t);
  if (!cover_report(t, r).exact_dissection()) {
    throw Error(ErrorKind::NotADissection, "guillotine test needs an exact dissection");
  }
  return guillotine_ranked(r);
}

VerifyReport verify_all(const Tiling& t, std::span<const Quad> shapes) {
  require_one_field(t);
  const Ranked r = rank_tiling(t);
  VerifyReport report = cover_report(t, r);
  VerifyReport ratios = verify_ratios(t, shapes);
  report.ratios_ok = ratios.ratios_ok;
  report.failures.insert(report.failures.end(), ratios.failures.begin(), ratios.failures.end());
  report.guillotine = report.exact_dissection() && guillotine_ranked(r);
  return report;
}

Tiling transpose(const Tiling& t) {
  Tiling out{t.height, t.width, {}};
  out.tiles.reserve(t.tiles.size());
  for (const auto& tile : t.tiles) out.tiles.push_back({tile.y, tile.x, tile.h, tile.w, tile.shape_index});
  return out;
}

Tiling normalize(const Tiling& t) {
  const Quad s = t.width.inv();
  Tiling out{t.field()->one(), t.height * s, {}};
  out.tiles.reserve(t.tiles.size());
  for (const auto& tile : t.tiles) {
    out.tiles.push_back({tile.x * s, tile.y * s, tile.w * s, tile.h * s, tile.shape_index});
  }
  return out;
}

}  // namespace quadtile
