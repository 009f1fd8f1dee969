#include "hopfdouble/finite_group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace hopfdouble {
namespace {

using Perm = std::vector<int>;

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

Perm compose(const Perm& g, const Perm& h) {
  Perm r(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) r[x] = g[sz(h[x])];
  return r;
}

std::string cycle_string(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  bool wide = p.size() > 9;
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s] || p[s] == static_cast<int>(s)) continue;
    out += "(";
    std::size_t x = s;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (wide && !first) out += " ";
      out += std::to_string(x + 1);
      first = false;
      x = sz(p[x]);
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

std::vector<std::vector<int>> parse_cycles(const std::string& text, std::size_t& pos) {
  std::vector<std::vector<int>> cycles;
  while (pos < text.size() && text[pos] == '(') {
    std::size_t close = text.find(')', pos);
    if (close == std::string::npos) throw ParseError("unclosed cycle at offset " + std::to_string(pos));
    std::string body = text.substr(pos + 1, close - pos - 1);
    std::vector<int> cycle;
    if (body.find_first_of(" \t") != std::string::npos) {
      std::istringstream is(body);
      std::string tok;
      while (is >> tok) {
        if (!std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); }))
          throw ParseError("bad point '" + tok + "' at offset " + std::to_string(pos));
        cycle.push_back(std::stoi(tok));
      }
    } else {
      for (char c : body) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw ParseError(std::string("bad point '") + c + "' at offset " + std::to_string(pos));
        cycle.push_back(c - '0');
      }
    }
    for (int p : cycle)
      if (p < 1) throw ParseError("points are numbered from 1 (offset " + std::to_string(pos) + ")");
    cycles.push_back(std::move(cycle));
    pos = close + 1;
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  return cycles;
}

}  // namespace

FiniteGroup group_from_table(std::vector<std::vector<int>> table, std::vector<std::string> labels, int max_order) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error("empty Cayley table");
  if (n > max_order)
    throw Error("group order " + std::to_string(n) + " exceeds the bound " + std::to_string(max_order));
  for (int a = 0; a < n; ++a) {
    if (table[sz(a)].size() != sz(n)) throw DimensionMismatch("Cayley table row " + std::to_string(a) + " has wrong length");
    for (int v : table[sz(a)])
      if (v < 0 || v >= n) throw Error("Cayley table entry out of range in row " + std::to_string(a));
  }
  FiniteGroup g;
  g.order = n;
  g.table = std::move(table);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          throw Error("associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                      std::to_string(c) + ")");
  int e = -1;
  for (int a = 0; a < n && e < 0; ++a) {
    bool ok = true;
    for (int b = 0; b < n && ok; ++b) ok = g.mul(a, b) == b && g.mul(b, a) == b;
    if (ok) e = a;
  }
  if (e < 0) throw Error("no identity element");
  g.identity = e;
  g.inverse.assign(sz(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) == e && g.mul(b, a) == e) g.inverse[sz(a)] = b;
    if (g.inverse[sz(a)] < 0) throw Error("element " + std::to_string(a) + " has no inverse");
  }
  if (labels.empty())
    for (int a = 0; a < n; ++a) labels.push_back("g" + std::to_string(a));
  if (labels.size() != sz(n)) throw DimensionMismatch("label count differs from group order");
  g.labels = std::move(labels);
  return g;
}

FiniteGroup group_from_generators(const std::string& text, int max_order) {
  std::vector<std::vector<std::vector<int>>> gens;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  while (pos < text.size()) {
    if (text[pos] == 'e') {
      gens.push_back({});
      ++pos;
    } else {
      if (text[pos] != '(') throw ParseError("expected '(' at offset " + std::to_string(pos));
      gens.push_back(parse_cycles(text, pos));
    }
    skip();
    if (pos < text.size()) {
      if (text[pos] != ',') throw ParseError("expected ',' at offset " + std::to_string(pos));
      ++pos;
      skip();
    }
  }
  int degree = 1;
  for (const auto& g : gens)
    for (const auto& c : g)
      for (int p : c) degree = std::max(degree, p);

  std::vector<Perm> perms;
  for (const auto& g : gens) {
    Perm p(sz(degree));
    for (int x = 0; x < degree; ++x) p[sz(x)] = x;
    for (auto it = g.rbegin(); it != g.rend(); ++it) {
      // apply the rightmost cycle first
      const auto& c = *it;
      Perm cyc(sz(degree));
      for (int x = 0; x < degree; ++x) cyc[sz(x)] = x;
      std::set<int> points(c.begin(), c.end());
      if (points.size() != c.size()) throw ParseError("repeated point in a cycle");
      for (std::size_t k = 0; k < c.size(); ++k) cyc[sz(c[k] - 1)] = c[(k + 1) % c.size()] - 1;
      p = compose(cyc, p);
    }
    perms.push_back(std::move(p));
  }

  Perm id(sz(degree));
  for (int x = 0; x < degree; ++x) id[sz(x)] = x;
  std::set<Perm> seen{id};
  std::deque<Perm> queue{id};
  while (!queue.empty()) {
    Perm p = queue.front();
    queue.pop_front();
    for (const auto& s : perms) {
      Perm q = compose(s, p);
      if (seen.insert(q).second) {
        if (static_cast<int>(seen.size()) > max_order)
          throw Error("group order exceeds the bound " + std::to_string(max_order));
        queue.push_back(std::move(q));
      }
    }
  }
  std::vector<Perm> elems(seen.begin(), seen.end());
  std::map<Perm, int> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> table(elems.size(), std::vector<int>(elems.size()));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    labels.push_back(cycle_string(elems[i]));
    for (std::size_t j = 0; j < elems.size(); ++j) table[i][j] = index.at(compose(elems[i], elems[j]));
  }
  return group_from_table(std::move(table), std::move(labels), max_order);
}

FiniteGroup cyclic_group(int n) {
  std::vector<std::vector<int>> table(sz(n), std::vector<int>(sz(n)));
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    labels.push_back(a == 0 ? "e" : "c" + std::to_string(a));
    for (int b = 0; b < n; ++b) table[sz(a)][sz(b)] = (a + b) % n;
  }
  return group_from_table(std::move(table), std::move(labels), std::max(n, kDefaultMaxOrder));
}

HopfPtr function_hopf(const FiniteGroup& g) {
  const int n = g.order;
  HopfData h;
  h.dim = n;
  for (const auto& l : g.labels) h.labels.push_back("d_" + l);
  std::vector<TensorEntry> mult, comult;
  for (int a = 0; a < n; ++a) {
    mult.push_back({a, a, a, Scalar(1)});
    for (int x = 0; x < n; ++x) comult.push_back({a, x, g.mul(g.inv(x), a), Scalar(1)});
  }
  h.mult = SparseTensor3({n, n, n}, std::move(mult));
  h.comult = SparseTensor3({n, n, n}, std::move(comult));
  h.counit.assign(sz(n), Scalar());
  h.counit[sz(g.identity)] = 1;
  h.unit.assign(sz(n), Scalar(1));
  h.antipode = Matrix(sz(n), sz(n));
  for (int a = 0; a < n; ++a) h.antipode(sz(a), sz(g.inv(a))) = 1;
  return HopfAlgebra::create(std::move(h));
}

HopfPtr group_algebra(const FiniteGroup& g) {
  const int n = g.order;
  HopfData h;
  h.dim = n;
  h.labels = g.labels;
  std::vector<TensorEntry> mult, comult;
  for (int a = 0; a < n; ++a) {
    comult.push_back({a, a, a, Scalar(1)});
    for (int b = 0; b < n; ++b) mult.push_back({a, b, g.mul(a, b), Scalar(1)});
  }
  h.mult = SparseTensor3({n, n, n}, std::move(mult));
  h.comult = SparseTensor3({n, n, n}, std::move(comult));
  h.counit.assign(sz(n), Scalar(1));
  h.unit.assign(sz(n), Scalar());
  h.unit[sz(g.identity)] = 1;
  h.antipode = Matrix(sz(n), sz(n));
  for (int a = 0; a < n; ++a) h.antipode(sz(a), sz(g.inv(a))) = 1;
  return HopfAlgebra::create(std::move(h));
}

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g) {
  std::vector<ConjugacyClass> out;
  std::vector<bool> done(sz(g.order), false);
  for (int a = 0; a < g.order; ++a) {
    if (done[sz(a)]) continue;
    std::set<int> members;
    for (int h = 0; h < g.order; ++h) members.insert(g.conj(h, a));
    for (int m : members) done[sz(m)] = true;
    out.push_back({std::vector<int>(members.begin(), members.end()), *members.begin()});
  }
  return out;
}

DoubleRepresentation class_representation(const DoublePtr& d, const FiniteGroup& g, const ConjugacyClass& c) {
  if (d->base_dim() != g.order) throw DimensionMismatch("double is not built on a function algebra of this group");
  const int n = static_cast<int>(c.members.size());
  std::map<int, int> pos;
  for (int k = 0; k < n; ++k) pos[c.members[sz(k)]] = k;
  DoubleRepresentation rho{d, n, {}, {}};
  for (int x = 0; x < g.order; ++x) {
    Matrix f(sz(n), sz(n)), u(sz(n), sz(n));
    for (int k = 0; k < n; ++k) {
      if (c.members[sz(k)] == x) f(sz(k), sz(k)) = 1;
      u(sz(pos.at(g.conj(x, c.members[sz(k)]))), sz(k)) = 1;
    }
    rho.rhoF.push_back(std::move(f));
    rho.rhoU.push_back(std::move(u));
  }
  return rho;
}

}  // namespace hopfdouble
