#include "sl3/foam.hpp"

#include "sl3/error.hpp"
#include "sl3/web_text.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

namespace sl3 {

FrobElement FrobElement::x_power(int k) {
  FrobElement e;
  if (k >= 0 && k < 3) e.c[k] = 1;
  return e;
}

FrobElement frob_add(const FrobElement& a, const FrobElement& b) {
  FrobElement r;
  for (int i = 0; i < 3; ++i) r.c[i] = a.c[i] + b.c[i];
  return r;
}

FrobElement frob_mul(const FrobElement& a, const FrobElement& b) {
  FrobElement r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; i + j < 3; ++j) r.c[i + j] += a.c[i] * b.c[j];
  return r;
}

Rational frob_trace(const FrobElement& a) { return -a.c[2]; }

FrobTensor2 frob_comul(const FrobElement& a) {
  FrobTensor2 t{};
  for (int m = 0; m < 3; ++m) {
    if (a.c[m] == 0) continue;
    for (int i = 0; i < 3; ++i) {
      int j = m + 2 - i;
      if (j >= 0 && j < 3) t[i][j] -= a.c[m];
    }
  }
  return t;
}

FrobElement handle_element() {
  FrobTensor2 d = frob_comul(FrobElement::x_power(0));
  FrobElement r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i + j < 3) r.c[i + j] += d[i][j];
  return r;
}

int theta_value(int d1, int d2, int d3) {
  if (d1 > 2 || d2 > 2 || d3 > 2 || d1 < 0 || d2 < 0 || d3 < 0) return 0;
  if (d1 == d2 || d2 == d3 || d1 == d3) return 0;
  // (0,1,2) and its rotations have d2 == d1 + 1 mod 3
  return (d1 + 1) % 3 == d2 ? 1 : -1;
}

namespace {

std::string where(const PreFoam& f, int line) {
  std::string s = "foam '" + f.name + "'";
  if (line > 0) s = "line " + std::to_string(line) + ": " + s;
  return s;
}

constexpr int kPerms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};

/// X^d times handle^g.
FrobElement facet_element(const PreFoam::Facet& fc) {
  FrobElement e = FrobElement::x_power(fc.dots);
  FrobElement h = handle_element();
  for (int i = 0; i < fc.genus; ++i) e = frob_mul(e, h);
  return e;
}

/// Coefficient of X^{a_1} (x) ... (x) X^{a_b} in Delta^{(b-1)}(e), b >= 1.
/// Delta^{(b-1)}(X^m) = (-1)^{b-1} sum over a_1 + ... + a_b = m + 2(b-1).
Rational comul_entry(const FrobElement& e, const std::vector<int>& idx) {
  int b = static_cast<int>(idx.size());
  int total = std::accumulate(idx.begin(), idx.end(), 0);
  int m = total - 2 * (b - 1);
  if (m < 0 || m > 2) return 0;
  return (b % 2 == 1) ? e.c[m] : Rational(-e.c[m]);
}

}  // namespace

void check_prefoam(const PreFoam& f) {
  std::vector<std::vector<int>> used(f.facets.size());
  for (std::size_t i = 0; i < f.facets.size(); ++i) {
    const auto& fc = f.facets[i];
    if (fc.genus < 0 || fc.dots < 0 || fc.slots < 0)
      throw Error(ErrorCode::Malformed, where(f, fc.line) + ": negative genus, dots or slots on facet '" + fc.id + "'");
    used[i].assign(fc.slots, 0);
  }
  for (const auto& sc : f.circles) {
    for (const auto& leg : sc.legs) {
      if (leg.facet < 0 || leg.facet >= static_cast<int>(f.facets.size()))
        throw Error(ErrorCode::Malformed, where(f, sc.line) + ": singular circle '" + sc.id + "' names an unknown facet");
      const auto& fc = f.facets[leg.facet];
      if (leg.slot < 0 || leg.slot >= fc.slots)
        throw Error(ErrorCode::Malformed, where(f, sc.line) + ": facet '" + fc.id + "' has no slot " + std::to_string(leg.slot));
      if (used[leg.facet][leg.slot]++)
        throw Error(ErrorCode::Malformed,
                    where(f, sc.line) + ": slot " + fc.id + ":" + std::to_string(leg.slot) + " attached twice");
    }
  }
  for (std::size_t i = 0; i < f.facets.size(); ++i)
    for (int s = 0; s < f.facets[i].slots; ++s)
      if (!used[i][s])
        throw Error(ErrorCode::NotClosed,
                    where(f, f.facets[i].line) + ": slot " + f.facets[i].id + ":" + std::to_string(s) + " is free");
}

int degree(const PreFoam& f) {
  int chi = 0;
  for (const auto& fc : f.facets) chi += 2 - 2 * fc.genus - fc.slots - fc.dots;
  return -2 * chi;
}

Rational evaluate(const PreFoam& f) {
  std::vector<int> order(f.circles.size());
  std::iota(order.begin(), order.end(), 0);
  return evaluate(f, order);
}

Rational evaluate(const PreFoam& f, const std::vector<int>& circle_order) {
  check_prefoam(f);
  {
    std::vector<int> sorted = circle_order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> ids(f.circles.size());
    std::iota(ids.begin(), ids.end(), 0);
    if (sorted != ids) throw Error(ErrorCode::InvalidArgument, "circle order is not a permutation");
  }

  const std::size_t nf = f.facets.size();
  std::vector<FrobElement> elems(nf);
  Rational scalar = 1;
  for (std::size_t i = 0; i < nf; ++i) {
    elems[i] = facet_element(f.facets[i]);
    if (f.facets[i].slots == 0) scalar *= frob_trace(elems[i]);
  }
  if (scalar == 0) return 0;

  // Position in the contraction order after which each facet is fully assigned.
  std::vector<int> remaining(nf);
  for (std::size_t i = 0; i < nf; ++i) remaining[i] = f.facets[i].slots;
  std::vector<std::vector<int>> closes(circle_order.size());
  for (std::size_t pos = 0; pos < circle_order.size(); ++pos)
    for (const auto& leg : f.circles[circle_order[pos]].legs)
      if (--remaining[leg.facet] == 0) closes[pos].push_back(leg.facet);

  std::vector<std::vector<int>> idx(nf);
  for (std::size_t i = 0; i < nf; ++i) idx[i].assign(f.facets[i].slots, 0);

  Rational total = 0;
  auto dfs = [&](auto&& self, std::size_t pos, const Rational& acc) -> void {
    if (pos == circle_order.size()) {
      total += acc;
      return;
    }
    const auto& sc = f.circles[circle_order[pos]];
    for (const auto& p : kPerms) {
      for (int k = 0; k < 3; ++k) idx[sc.legs[k].facet][sc.legs[k].slot] = p[k];
      Rational v = acc * theta_value(p[0], p[1], p[2]);
      for (int fi : closes[pos]) {
        if (v == 0) break;
        v *= comul_entry(elems[fi], idx[fi]);
      }
      if (v != 0) self(self, pos + 1, v);
    }
  };
  dfs(dfs, 0, scalar);
  return total;
}

PreFoam disjoint_union(const PreFoam& a, const PreFoam& b) {
  PreFoam r = a;
  r.name = a.name + "+" + b.name;
  const int off = static_cast<int>(a.facets.size());
  for (auto fc : b.facets) {
    fc.id = b.name + "." + fc.id;
    r.facets.push_back(fc);
  }
  for (auto sc : b.circles) {
    sc.id = b.name + "." + sc.id;
    for (auto& leg : sc.legs) leg.facet += off;
    r.circles.push_back(sc);
  }
  return r;
}

namespace {

[[noreturn]] void foam_parse_fail(int line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

int parse_int_field(const std::string& tok, const std::string& key, int line) {
  std::string prefix = key + "=";
  if (tok.rfind(prefix, 0) != 0) foam_parse_fail(line, "expected '" + prefix + "<n>', got '" + tok + "'");
  int v = 0;
  const char* b = tok.data() + prefix.size();
  const char* e = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || ptr != e || b == e || v < 0)
    foam_parse_fail(line, "bad value in '" + tok + "'");
  return v;
}

}  // namespace

std::vector<PreFoam> parse_foams(std::string_view text) {
  std::vector<PreFoam> out;
  std::map<std::string, int> facet_ids;
  std::map<std::string, int> circle_ids;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream ls(raw.substr(0, raw.find('#')));
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];
    if (kw == "foam") {
      if (toks.size() != 2) foam_parse_fail(line, "expected 'foam <name>'");
      out.push_back(PreFoam{toks[1], {}, {}});
      facet_ids.clear();
      circle_ids.clear();
      continue;
    }
    if (out.empty()) foam_parse_fail(line, "'" + kw + "' before any 'foam' line");
    PreFoam& f = out.back();
    if (kw == "facet") {
      if (toks.size() != 5) foam_parse_fail(line, "expected 'facet <id> genus=<g> dots=<d> slots=<k>'");
      if (!facet_ids.emplace(toks[1], static_cast<int>(f.facets.size())).second)
        foam_parse_fail(line, "duplicate facet '" + toks[1] + "'");
      f.facets.push_back({toks[1], parse_int_field(toks[2], "genus", line), parse_int_field(toks[3], "dots", line),
                          parse_int_field(toks[4], "slots", line), line});
    } else if (kw == "singular") {
      if (toks.size() != 5) foam_parse_fail(line, "expected 'singular <id> <facet:slot> <facet:slot> <facet:slot>'");
      if (!circle_ids.emplace(toks[1], static_cast<int>(f.circles.size())).second)
        foam_parse_fail(line, "duplicate singular circle '" + toks[1] + "'");
      PreFoam::Singular sc{toks[1], {}, line};
      for (int k = 0; k < 3; ++k) {
        const std::string& t = toks[2 + k];
        auto colon = t.rfind(':');
        if (colon == std::string::npos) foam_parse_fail(line, "expected '<facet>:<slot>', got '" + t + "'");
        auto it = facet_ids.find(t.substr(0, colon));
        if (it == facet_ids.end()) foam_parse_fail(line, "unknown facet '" + t.substr(0, colon) + "'");
        int slot = 0;
        const char* b = t.data() + colon + 1;
        const char* e = t.data() + t.size();
        auto [ptr, ec] = std::from_chars(b, e, slot);
        if (ec != std::errc() || ptr != e || b == e) foam_parse_fail(line, "bad slot in '" + t + "'");
        sc.legs[k] = {it->second, slot};
      }
      f.circles.push_back(sc);
    } else {
      foam_parse_fail(line, "unknown keyword '" + kw + "'");
    }
  }
  return out;
}

std::vector<PreFoam> parse_foam_file(const std::string& path) { return parse_foams(read_file(path)); }

std::string to_text(const PreFoam& f) {
  std::ostringstream os;
  os << "foam " << f.name << '\n';
  for (const auto& fc : f.facets)
    os << "facet " << fc.id << " genus=" << fc.genus << " dots=" << fc.dots << " slots=" << fc.slots << '\n';
  for (const auto& sc : f.circles) {
    os << "singular " << sc.id;
    for (const auto& leg : sc.legs) os << ' ' << f.facets[leg.facet].id << ':' << leg.slot;
    os << '\n';
  }
  return os.str();
}

}  // namespace sl3
