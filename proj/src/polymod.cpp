#include "latdef/detail/polymod.hpp"

#include <algorithm>

namespace latdef::detail {

void Mono::refresh() {
  deg = 0;
  mask = 0;
  for (std::size_t i = 0; i < kEngineVars; ++i) {
    deg += e[i];
    if (e[i] > 0) mask |= 1u << i;
  }
}

bool divides(const Mono& a, const Mono& b) {
  if (a.comp != b.comp || (a.mask & ~b.mask) != 0 || a.deg > b.deg) return false;
  for (std::size_t i = 0; i < kEngineVars; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

Mono mono_mul(const Mono& a, const Mono& b) {
  Mono r;
  for (std::size_t i = 0; i < kEngineVars; ++i) r.e[i] = a.e[i] + b.e[i];
  r.comp = b.comp;
  r.deg = a.deg + b.deg;
  r.mask = a.mask | b.mask;
  return r;
}

Mono mono_div(const Mono& b, const Mono& a) {
  Mono r;
  for (std::size_t i = 0; i < kEngineVars; ++i) r.e[i] = b.e[i] - a.e[i];
  r.refresh();
  return r;
}

Mono mono_lcm(const Mono& a, const Mono& b) {
  Mono r;
  for (std::size_t i = 0; i < kEngineVars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  r.comp = a.comp;
  r.refresh();
  return r;
}

int Order::compare(const Mono& a, const Mono& b) const {
  int ablock = 0, bblock = 0;
  if (block != 0) {
    for (std::size_t i = 0; i < nvars; ++i)
      if (block & (1u << i)) {
        ablock += a.e[i];
        bblock += b.e[i];
      }
    if (ablock != bblock) return ablock > bblock ? 1 : -1;
    for (std::size_t i = nvars; i-- > 0;)
      if ((block & (1u << i)) && a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  }
  const auto by_position = [&]() -> int {
    const int ra = position_rank(a.comp), rb = position_rank(b.comp);
    if (ra != rb) return ra < rb ? 1 : -1;
    return 0;
  };
  const auto by_rest = [&]() -> int {
    if (lex) {
      for (std::size_t i = 0; i < nvars; ++i)
        if (!(block & (1u << i)) && a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
      return 0;
    }
    const int da = a.deg - ablock, db = b.deg - bblock;
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = nvars; i-- > 0;)
      if (!(block & (1u << i)) && a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    return 0;
  };
  if (top) {
    if (int r = by_rest()) return r;
    return by_position();
  }
  if (int p = by_position()) return p;
  return by_rest();
}

void canonicalize(Poly& p, const Order& ord) {
  std::sort(p.begin(), p.end(), [&](const Term& x, const Term& y) { return ord.greater(x.m, y.m); });
  Poly out;
  out.reserve(p.size());
  for (auto& t : p) {
    if (!out.empty() && out.back().m == t.m) {
      out.back().c += t.c;
    } else {
      if (!out.empty() && out.back().c == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().c == 0) out.pop_back();
  p = std::move(out);
}

namespace {

mpz_class content(const Poly& p) {
  mpz_class g = 0;
  for (const auto& t : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void divide_exact(Poly& p, const mpz_class& g) {
  if (g == 1 || g == 0) return;
  for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
}

// a * sf * f[fi..] - b * sg * g[gi..], merged in order.
Poly combine(const mpz_class& a, const Mono* sf, const Poly& f, std::size_t fi, const mpz_class& b,
             const Mono& sg, const Poly& g, std::size_t gi, const Order& ord) {
  Poly out;
  out.reserve((f.size() - std::min(fi, f.size())) + (g.size() - std::min(gi, g.size())));
  const bool a_one = a == 1;
  Mono mf, mg;
  bool have_g = gi < g.size();
  if (have_g) mg = mono_mul(sg, g[gi].m);
  while (fi < f.size() || have_g) {
    if (fi < f.size()) mf = sf ? mono_mul(*sf, f[fi].m) : f[fi].m;
    const int c = !have_g ? 1 : (fi >= f.size() ? -1 : ord.compare(mf, mg));
    if (c > 0) {
      Term t{mf, a_one ? f[fi].c : mpz_class(a * f[fi].c)};
      out.push_back(std::move(t));
      ++fi;
    } else if (c < 0) {
      Term t{mg, mpz_class(-b * g[gi].c)};
      out.push_back(std::move(t));
      if (++gi < g.size()) mg = mono_mul(sg, g[gi].m);
      else have_g = false;
    } else {
      mpz_class v = a_one ? mpz_class(f[fi].c) : mpz_class(a * f[fi].c);
      mpz_submul(v.get_mpz_t(), b.get_mpz_t(), g[gi].c.get_mpz_t());
      if (v != 0) out.push_back(Term{mf, std::move(v)});
      ++fi;
      if (++gi < g.size()) mg = mono_mul(sg, g[gi].m);
      else have_g = false;
    }
  }
  return out;
}

const Poly* find_reducer(const Mono& m, const std::vector<const Poly*>& g) {
  const Poly* best = nullptr;
  for (const Poly* p : g)
    if (divides((*p)[0].m, m) && (!best || p->size() < best->size())) best = p;
  return best;
}

// Full reduction; with keep_lead the leading term is left alone (tail
// reduction of a basis element).
Poly reduce_full(Poly f, const std::vector<const Poly*>& g, const Order& ord, bool keep_lead = false,
                 bool top_only = false) {
  Poly r;
  if (keep_lead && !f.empty()) {
    r.push_back(f[0]);
    f.erase(f.begin());
  }
  std::size_t pos = 0;
  int steps = 0;
  while (pos < f.size()) {
    const Poly* h = find_reducer(f[pos].m, g);
    if (!h) {
      if (top_only && r.empty()) {
        make_primitive(f);
        return f;
      }
      r.push_back(std::move(f[pos]));
      ++pos;
      continue;
    }
    const mpz_class& lc = (*h)[0].c;
    mpz_class gg;
    mpz_gcd(gg.get_mpz_t(), lc.get_mpz_t(), f[pos].c.get_mpz_t());
    mpz_class a = lc / gg, b = f[pos].c / gg;
    if (a < 0) {
      a = -a;
      b = -b;
    }
    if (a != 1)
      for (auto& t : r) t.c *= a;
    const Mono shift = mono_div(f[pos].m, (*h)[0].m);
    f = combine(a, nullptr, f, pos + 1, b, shift, *h, 1, ord);
    pos = 0;
    if (++steps % 16 == 0) {
      mpz_class c = content(r);
      if (c != 1) {
        for (const auto& t : f) {
          mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.c.get_mpz_t());
          if (c == 1) break;
        }
        if (c > 1) {
          divide_exact(r, c);
          divide_exact(f, c);
        }
      }
    }
  }
  make_primitive(r);
  return r;
}

struct Pair {
  std::size_t i, j;
  Mono lcm;
};

bool coprime(const Mono& a, const Mono& b) { return (a.mask & b.mask) == 0; }

}  // namespace

void make_primitive(Poly& p) {
  if (p.empty()) return;
  mpz_class c = content(p);
  if (p[0].c < 0) c = -c;
  if (c != 1)
    for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
}

Poly normal_form(Poly f, const std::vector<Poly>& g, const Order& ord) {
  std::vector<const Poly*> ptrs;
  for (const auto& p : g)
    if (!p.empty()) ptrs.push_back(&p);
  return reduce_full(std::move(f), ptrs, ord);
}

Poly spoly(const Poly& f, const Poly& g, const Order& ord) {
  const Mono l = mono_lcm(f[0].m, g[0].m);
  mpz_class gg;
  mpz_gcd(gg.get_mpz_t(), f[0].c.get_mpz_t(), g[0].c.get_mpz_t());
  const mpz_class a = g[0].c / gg, b = f[0].c / gg;
  const Mono sf = mono_div(l, f[0].m), sg = mono_div(l, g[0].m);
  Poly s = combine(a, &sf, f, 1, b, sg, g, 1, ord);
  make_primitive(s);
  return s;
}

std::vector<Poly> groebner(std::vector<Poly> gens, const Order& ord) {
  bool ideal = true;
  for (auto& p : gens) {
    canonicalize(p, ord);
    make_primitive(p);
    for (const auto& t : p) ideal = ideal && t.m.comp == 0;
  }
  gens.erase(std::remove_if(gens.begin(), gens.end(), [](const Poly& p) { return p.empty(); }), gens.end());
  std::sort(gens.begin(), gens.end(), [&](const Poly& a, const Poly& b) {
    const int c = ord.compare(a[0].m, b[0].m);
    return c != 0 ? c < 0 : a.size() < b.size();
  });

  std::vector<Poly> g;
  std::vector<bool> active;
  std::vector<Pair> pairs;
  std::vector<const Poly*> reducers;

  const auto rebuild_reducers = [&] {
    reducers.clear();
    for (std::size_t i = 0; i < g.size(); ++i)
      if (active[i]) reducers.push_back(&g[i]);
  };

  const auto update = [&](std::size_t h) {
    const Mono& lh = g[h][0].m;
    std::vector<Pair> c;
    for (std::size_t i = 0; i < h; ++i)
      if (active[i] && g[i][0].m.comp == lh.comp) c.push_back(Pair{i, h, mono_lcm(lh, g[i][0].m)});
    std::vector<Pair> d;
    for (std::size_t x = 0; x < c.size(); ++x) {
      const Pair& p = c[x];
      bool keep = ideal && coprime(lh, g[p.i][0].m);
      if (!keep) {
        keep = true;
        for (std::size_t y = x + 1; y < c.size() && keep; ++y)
          if (divides(c[y].lcm, p.lcm)) keep = false;
        for (std::size_t y = 0; y < d.size() && keep; ++y)
          if (divides(d[y].lcm, p.lcm)) keep = false;
      }
      if (keep) d.push_back(p);
    }
    std::vector<Pair> next;
    next.reserve(pairs.size() + d.size());
    for (auto& p : pairs) {
      bool drop = false;
      if (divides(lh, p.lcm)) {
        const Mono l1 = mono_lcm(g[p.i][0].m, lh), l2 = mono_lcm(g[p.j][0].m, lh);
        drop = !(l1 == p.lcm) && !(l2 == p.lcm);
      }
      if (!drop) next.push_back(std::move(p));
    }
    for (auto& p : d)
      if (!(ideal && coprime(lh, g[p.i][0].m))) next.push_back(std::move(p));
    pairs = std::move(next);
    for (std::size_t i = 0; i < h; ++i)
      if (active[i] && divides(lh, g[i][0].m)) active[i] = false;
  };

  const auto insert = [&](Poly p) {
    g.push_back(std::move(p));
    active.push_back(true);
    update(g.size() - 1);
    rebuild_reducers();
  };

  for (auto& p : gens) {
    Poly h = reduce_full(std::move(p), reducers, ord, false, true);
    if (!h.empty()) insert(std::move(h));
  }

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t x = 1; x < pairs.size(); ++x) {
      const Mono& a = pairs[x].lcm;
      const Mono& b = pairs[best].lcm;
      if (a.deg < b.deg || (a.deg == b.deg && ord.compare(a, b) < 0)) best = x;
    }
    const Pair p = pairs[best];
    pairs[best] = std::move(pairs.back());
    pairs.pop_back();
    Poly h = reduce_full(spoly(g[p.i], g[p.j], ord), reducers, ord, false, true);
    if (!h.empty()) insert(std::move(h));
  }

  std::vector<Poly> out;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (active[i]) out.push_back(g[i]);
  std::vector<Poly> reduced;
  reduced.reserve(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::vector<const Poly*> others;
    for (std::size_t j = 0; j < out.size(); ++j)
      if (j != i) others.push_back(&out[j]);
    reduced.push_back(reduce_full(out[i], others, ord, true));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Poly& a, const Poly& b) { return ord.compare(a[0].m, b[0].m) < 0; });
  return reduced;
}

}  // namespace latdef::detail
