#include "sl3/enumerate.hpp"

#include "sl3/classify.hpp"
#include "sl3/error.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

namespace sl3 {

WeightMultiset tensor_weights(const SignSequence& eps) {
  WeightMultiset cur{{{0, 0}, 1}};
  for (Sign s : eps.signs()) {
    WeightMultiset next;
    auto put = [&](int p, int q, std::uint64_t m) {
      if (p >= 0 && q >= 0) next[{p, q}] += m;
    };
    for (const auto& [w, m] : cur) {
      const auto [p, q] = w;
      if (s == Sign::Plus) {
        put(p + 1, q, m);
        put(p - 1, q + 1, m);
        put(p, q - 1, m);
      } else {
        put(p, q + 1, m);
        put(p + 1, q - 1, m);
        put(p - 1, q, m);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

std::uint64_t invariant_dim(const SignSequence& eps) {
  const auto w = tensor_weights(eps);
  auto it = w.find({0, 0});
  return it == w.end() ? 0 : it->second;
}

int default_vertex_budget(const SignSequence& eps) {
  const int l = static_cast<int>(eps.size());
  return 2 * l * l;
}

// ---------------------------------------------------------------------------

namespace {

/// Carries containment over to a rebuilt map through a dart translation.
Web rebuild(const Web& w, PlaneMap map, const std::function<int(int)>& dart) {
  auto host = [&](Host h) {
    if (h.kind == Host::Kind::FaceLeftOf) h.index = dart(h.index);
    return h;
  };
  std::vector<Host> circles;
  for (const Host& h : w.circle_hosts()) circles.push_back(host(h));
  std::vector<ComponentNest> nests;
  for (const auto& comp : w.closed_components()) {
    nests.push_back({dart(comp.outer_dart), dart(comp.outer_dart), host(comp.host)});
  }
  return Web::assemble(std::move(map), std::move(circles), std::move(nests));
}

SignSequence rotated(const SignSequence& eps, int k) {
  const int n = static_cast<int>(eps.size());
  std::vector<Sign> s(n);
  for (int j = 0; j < n; ++j) s[j] = eps[((j + k) % n + n) % n];
  return SignSequence(std::move(s));
}

SignSequence with_prefix(std::vector<Sign> prefix, const SignSequence& eps, int skip) {
  for (std::size_t j = skip; j < eps.size(); ++j) prefix.push_back(eps[j]);
  return SignSequence(std::move(prefix));
}

}  // namespace

Web rotate_boundary(const Web& w, int k) {
  const PlaneMap& m = w.map();
  const int n = m.boundary_size();
  if (n == 0) return w;
  PlaneMap out;
  out.boundary = rotated(m.boundary, k);
  out.polarity = m.polarity;
  auto dart = [&](int d) {
    if (!m.is_boundary_dart(d)) return d;
    return m.boundary_dart(((m.boundary_index(d) - k) % n + n) % n);
  };
  out.twin.assign(m.dart_count(), -1);
  for (int d = 0; d < m.dart_count(); ++d) out.twin[dart(d)] = dart(m.twin[d]);
  return rebuild(w, std::move(out), dart);
}

Web insert_arc(const Web& w, int p, Sign s) {
  const PlaneMap& m = w.map();
  const int n = m.boundary_size();
  const int V = m.vertex_count();
  if (p < 0 || p > n) throw Error(ErrorCode::InvalidArgument, "arc position out of range");
  PlaneMap out;
  std::vector<Sign> signs = m.boundary.signs();
  signs.insert(signs.begin() + p, {s, flip(s)});
  out.boundary = SignSequence(std::move(signs));
  out.polarity = m.polarity;
  auto dart = [&](int d) {
    if (!m.is_boundary_dart(d)) return d;
    const int k = m.boundary_index(d);
    return 3 * V + (k < p ? k : k + 2);
  };
  out.twin.assign(m.dart_count() + 2, -1);
  for (int d = 0; d < m.dart_count(); ++d) out.twin[dart(d)] = dart(m.twin[d]);
  out.twin[3 * V + p] = 3 * V + p + 1;
  out.twin[3 * V + p + 1] = 3 * V + p;
  return rebuild(w, std::move(out), dart);
}

Web insert_y(const Web& w, int p) {
  const PlaneMap& m = w.map();
  const int n = m.boundary_size();
  const int V = m.vertex_count();
  if (p < 0 || p >= n) throw Error(ErrorCode::InvalidArgument, "Y position out of range");
  const Sign s = m.boundary[p];
  PlaneMap out;
  std::vector<Sign> signs = m.boundary.signs();
  signs[p] = flip(s);
  signs.insert(signs.begin() + p, flip(s));
  out.boundary = SignSequence(std::move(signs));
  out.polarity = m.polarity;
  out.polarity.push_back(s == Sign::Plus ? Polarity::Sink : Polarity::Source);
  const int base = 3 * (V + 1);
  auto dart = [&](int d) {
    if (!m.is_boundary_dart(d)) return d;
    const int k = m.boundary_index(d);
    return base + (k <= p ? k : k + 1);
  };
  out.twin.assign(m.dart_count() + 4, -1);
  for (int d = 0; d < m.dart_count(); ++d) {
    if (d != m.boundary_dart(p)) out.twin[dart(d)] = dart(m.twin[d]);
  }
  // New vertex: up, left leg, right leg.
  const int u = 3 * V;
  const int up = dart(m.twin[m.boundary_dart(p)]);
  out.twin[u] = up;
  out.twin[up] = u;
  out.twin[u + 1] = base + p;
  out.twin[base + p] = u + 1;
  out.twin[u + 2] = base + p + 1;
  out.twin[base + p + 1] = u + 2;
  return rebuild(w, std::move(out), dart);
}

Web insert_h(const Web& w, int p) {
  const PlaneMap& m = w.map();
  const int n = m.boundary_size();
  const int V = m.vertex_count();
  if (p < 0 || p + 1 >= n || m.boundary[p] == m.boundary[p + 1]) {
    throw Error(ErrorCode::InvalidArgument, "H insertion needs two adjacent points of opposite sign");
  }
  const Sign s = m.boundary[p];
  PlaneMap out;
  std::vector<Sign> signs = m.boundary.signs();
  signs[p] = flip(s);
  signs[p + 1] = s;
  out.boundary = SignSequence(std::move(signs));
  out.polarity = m.polarity;
  const Polarity pu = s == Sign::Plus ? Polarity::Sink : Polarity::Source;
  out.polarity.push_back(pu);
  out.polarity.push_back(opposite(pu));
  const int base = 3 * (V + 2);
  auto dart = [&](int d) { return m.is_boundary_dart(d) ? base + m.boundary_index(d) : d; };
  out.twin.assign(m.dart_count() + 6, -1);
  const int bp = m.boundary_dart(p);
  const int bq = m.boundary_dart(p + 1);
  for (int d = 0; d < m.dart_count(); ++d) {
    if (d != bp && d != bq) out.twin[dart(d)] = dart(m.twin[d]);
  }
  // u: edge to v, up, leg; v: up, edge to u, leg.
  const int u = 3 * V;
  const int v = 3 * V + 3;
  auto link = [&](int a, int b) {
    out.twin[a] = b;
    out.twin[b] = a;
  };
  link(u, v + 1);
  link(u + 2, base + p);
  link(v + 2, base + p + 1);
  if (m.twin[bp] == bq) {
    link(u + 1, v);
  } else {
    link(u + 1, dart(m.twin[bp]));
    link(v, dart(m.twin[bq]));
  }
  return rebuild(w, std::move(out), dart);
}

// ---------------------------------------------------------------------------

namespace {

enum class Grow : std::uint8_t { Arc, Y, H };

/// Smaller boundary from which eps (rotated by i) grows by the given step,
/// or nullopt when the step does not apply.
std::optional<SignSequence> shrink(const SignSequence& eps, int i, Grow g) {
  const int n = static_cast<int>(eps.size());
  if (n < 2) return std::nullopt;
  const SignSequence r = rotated(eps, i);
  const Sign a = r[0];
  const Sign b = r[1];
  switch (g) {
    case Grow::Arc:
      if (a == b) return std::nullopt;
      return with_prefix({}, r, 2);
    case Grow::Y:
      if (a != b) return std::nullopt;
      return with_prefix({flip(a)}, r, 2);
    case Grow::H:
      if (a == b) return std::nullopt;
      return with_prefix({flip(a), flip(b)}, r, 2);
  }
  return std::nullopt;
}

class Search {
 public:
  Search(int budget, std::optional<std::uint64_t> seed) : budget_(budget) {
    if (seed) rng_.emplace(*seed);
  }

  /// Non-elliptic webs on eps with exactly v vertices.
  const std::vector<Web>& layer(const SignSequence& eps, int v) {
    static const std::vector<Web> none;
    if (v < 0 || !eps.admissible()) return none;
    auto& slots = memo_[eps.to_string()];
    if (static_cast<int>(slots.size()) <= v) slots.resize(v + 1);
    if (slots[v]) return *slots[v];

    std::map<std::string, Web> found;
    const int n = static_cast<int>(eps.size());
    if (n == 0) {
      if (v == 0) found.emplace(Web().canonical_key(), Web::empty());
    } else {
      std::vector<std::pair<int, Grow>> steps;
      for (int i = 0; i < n; ++i) {
        for (Grow g : {Grow::Arc, Grow::Y, Grow::H}) steps.emplace_back(i, g);
      }
      if (rng_) std::shuffle(steps.begin(), steps.end(), *rng_);
      for (const auto& [i, g] : steps) {
        const auto sub = shrink(eps, i, g);
        if (!sub) continue;
        const int need = v - (g == Grow::Arc ? 0 : g == Grow::Y ? 1 : 2);
        // Copy: the recursive call may grow the memo and move the vectors.
        const std::vector<Web> smaller = layer(*sub, need);
        const SignSequence r = rotated(eps, i);
        for (const Web& x : smaller) {
          Web y = g == Grow::Arc ? insert_arc(x, 0, r[0]) : g == Grow::Y ? insert_y(x, 0) : insert_h(x, 0);
          if (g == Grow::H && !is_non_elliptic(y)) continue;
          Web w = rotate_boundary(y, -i);
          std::string key = w.canonical_key();
          found.try_emplace(std::move(key), std::move(w));
        }
      }
    }
    std::vector<Web> out;
    for (auto& [key, w] : found) out.push_back(std::move(w));
    auto& slot = memo_[eps.to_string()];
    slot[v] = std::move(out);
    return *slot[v];
  }

  /// Every boundary sequence the search can reach from eps.
  static std::vector<SignSequence> reachable(const SignSequence& eps) {
    std::set<SignSequence> seen{eps};
    std::vector<SignSequence> queue{eps};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const SignSequence cur = queue[qi];
      for (int i = 0; i < static_cast<int>(cur.size()); ++i) {
        for (Grow g : {Grow::Arc, Grow::Y, Grow::H}) {
          auto sub = shrink(cur, i, g);
          if (sub && sub->admissible() && seen.insert(*sub).second) queue.push_back(*sub);
        }
      }
    }
    return queue;
  }

  int budget() const { return budget_; }

 private:
  int budget_;
  std::optional<std::mt19937_64> rng_;
  std::map<std::string, std::vector<std::optional<std::vector<Web>>>> memo_;
};

}  // namespace

Enumeration search_non_elliptic(const SignSequence& eps, int vertex_budget, std::optional<std::uint64_t> seed) {
  if (vertex_budget < 0) throw Error(ErrorCode::InvalidArgument, "vertex budget must be nonnegative");
  Enumeration result;
  result.budget = vertex_budget;
  if (!eps.admissible()) return result;
  Search search(vertex_budget, seed);
  std::vector<std::pair<std::string, Web>> all;
  for (int v = 0; v <= vertex_budget; ++v) {
    for (const Web& w : search.layer(eps, v)) all.emplace_back(w.canonical_key(), w);
  }
  // Two empty layers above the budget for every reachable boundary rule out
  // anything larger: each growth step adds at most two vertices.
  for (const SignSequence& sub : Search::reachable(eps)) {
    if (!search.layer(sub, vertex_budget + 1).empty() || !search.layer(sub, vertex_budget + 2).empty()) {
      result.complete = false;
      break;
    }
  }
  std::sort(all.begin(), all.end(), [](auto& a, auto& b) { return a.first < b.first; });
  for (auto& [key, w] : all) result.webs.push_back(std::move(w));
  return result;
}

Enumeration search_superficial_non_elliptic(const SignSequence& eps, int vertex_budget,
                                            std::optional<std::uint64_t> seed) {
  Enumeration e = search_non_elliptic(eps, vertex_budget, seed);
  std::erase_if(e.webs, [](const Web& w) { return !is_superficial(w); });
  return e;
}

namespace {

std::vector<Web> require_complete(Enumeration e, const SignSequence& eps) {
  if (!e.complete) {
    throw Error(ErrorCode::BudgetExceeded, "non-elliptic " + eps.to_string() + "-webs may exceed the budget of " +
                                               std::to_string(e.budget) + " vertices");
  }
  return std::move(e.webs);
}

}  // namespace

std::vector<Web> enumerate_non_elliptic(const SignSequence& eps, int vertex_budget) {
  return require_complete(search_non_elliptic(eps, vertex_budget), eps);
}

std::vector<Web> enumerate_superficial_non_elliptic(const SignSequence& eps, int vertex_budget) {
  return require_complete(search_superficial_non_elliptic(eps, vertex_budget), eps);
}

}  // namespace sl3
