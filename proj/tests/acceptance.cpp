// Acceptance suite: one PASS/FAIL line per criterion. Exits non-zero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>
#include <csignal>
#include <string>
#include <vector>

#include "gen.hpp"
#include "latdef/analysis.hpp"
#include "latdef/cli.hpp"
#include "latdef/coarsest.hpp"
#include "latdef/error.hpp"
#include "latdef/sublattice.hpp"
#include "latdef/trajectories.hpp"
#include "oracle.hpp"

#include <sys/wait.h>
#include <unistd.h>

using namespace latdef;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

LaurentPoly S(std::size_t n, const char* text, const char* prefix = "s") { return parse_laurent(text, n, prefix); }

LaurentVec V(std::size_t n, std::initializer_list<const char*> entries, const char* prefix = "s") {
  std::vector<LaurentPoly> ps;
  for (const char* e : entries) ps.push_back(S(n, e, prefix));
  return LaurentVec(n, std::move(ps));
}

Submodule M(std::size_t n, std::size_t k, std::initializer_list<LaurentVec> gens) { return Submodule(n, k, gens); }
Submodule I(std::size_t n, std::initializer_list<const char*> gens, const char* prefix = "s") {
  std::vector<LaurentVec> vs;
  for (const char* g : gens) vs.push_back(V(n, {g}, prefix));
  return Submodule(n, 1, vs);
}

Rational evaluate(const LaurentPoly& p, const std::vector<Rational>& x) {
  Rational acc = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const long a = e[i];
      for (long j = 0; j < (a < 0 ? -a : a); ++j) {
        if (a < 0) t /= x[i];
        else t *= x[i];
      }
    }
    acc += t;
  }
  return acc;
}

// Rank over Q of a small rational matrix.
std::size_t dense_rank(std::vector<oracle::Row> m, std::size_t cols) { return oracle::rref(m, cols).size(); }

// Nullspace basis of a dense matrix.
std::vector<oracle::Row> dense_nullspace(std::vector<oracle::Row> m, std::size_t cols) {
  const auto pivots = oracle::rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<oracle::Row> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    oracle::Row v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
    out.push_back(std::move(v));
  }
  return out;
}

// Solutions r of row * r = 0 with every entry supported on `box` are all in
// the shift span of `claimed`, and every claimed generator is a solution.
bool syzygy_box_check(const LaurentVec& row, const std::vector<LaurentVec>& claimed, std::size_t n,
                      const std::vector<ExpVec>& box, const std::vector<ExpVec>& shifts) {
  const std::size_t c = row.k();
  for (const auto& g : claimed) {
    LaurentPoly acc(n);
    for (std::size_t j = 0; j < c; ++j) acc += row[j] * g[j];
    if (!acc.is_zero()) return false;
  }
  // Unknown (j, e): coefficient of s^e in r_j. Columns of the linear map.
  oracle::Coords out;
  std::vector<LaurentPoly> images;
  for (std::size_t j = 0; j < c; ++j)
    for (const auto& e : box) images.push_back(row[j].shifted(e));
  for (const auto& img : images) out.row(LaurentVec(n, {img}));
  const std::size_t eqs = out.index.size(), unknowns = images.size();
  std::vector<oracle::Row> m(eqs, oracle::Row(unknowns));
  for (std::size_t u = 0; u < unknowns; ++u) {
    oracle::Row col = out.row(LaurentVec(n, {images[u]}));
    for (std::size_t r = 0; r < col.size(); ++r) m[r][u] = col[r];
  }
  for (const auto& sol : dense_nullspace(m, unknowns)) {
    LaurentVec v(n, c);
    for (std::size_t j = 0; j < c; ++j)
      for (std::size_t b = 0; b < box.size(); ++b)
        if (sol[j * box.size() + b] != 0) v[j].add_term(box[b], sol[j * box.size() + b]);
    if (!oracle::in_shift_span(v, claimed, shifts)) return false;
  }
  return true;
}

IntLattice random_lattice_index_at_most_9(gen::Rng& rng, std::size_t n) {
  if (n == 1) return IntLattice::diagonal({gen::uniform(rng, 1, 9)});
  long a = 0, c = 0;
  do {
    a = gen::uniform(rng, 1, 9);
    c = gen::uniform(rng, 1, 9);
  } while (a * c > 9);
  const long b = gen::uniform(rng, 0, c - 1);
  const IntMatrix basis{{a, b}, {0, c}};
  return IntLattice::from_generators(gen::unimodular(rng, 2) * basis);
}

// ---------------------------------------------------------------- criteria

Outcome criterion1() {
  const auto t0 = Clock::now();
  const IntMatrix s = IntMatrix{{2, 2}, {1, -3}}.transpose();
  const SmithDecomposition sd = smith(s);
  const double t = seconds_since(t0);
  Outcome o;
  const IntVec diag = sd.diagonal();
  o.pass = diag == IntVec{1, 8} && abs(sd.U.determinant()) == 1 && abs(sd.V.determinant()) == 1 &&
           sd.U * sd.D * sd.V == s && t < 1.0;
  o.detail = "D=diag(" + diag[0].get_str() + "," + diag[1].get_str() + "), U*D*V=S, " + std::to_string(t) + "s";
  return o;
}

Outcome coarsest_example(const char* poly, const IntLattice& expected, std::size_t expected_rank) {
  const auto t0 = Clock::now();
  const Submodule p = I(2, {poly});
  const CoarsestReport r = coarsest_lattice(p);
  std::set<long> primes;
  bool audit_ok = true;
  for (const auto& e : r.audit) {
    primes.insert(e.prime);
    audit_ok = audit_ok && !e.is_extension && expected.contains(e.lattice);
  }
  const IntLattice brute = brute_force_coarsest(p, 16);
  const double t = seconds_since(t0);
  Outcome o;
  o.pass = r.lattice == expected && r.rank == expected_rank && audit_ok && primes == std::set<long>{2, 3, 5, 7} &&
           brute == expected && t < 30.0;
  o.detail = "lattice " + r.lattice.to_string() + ", audit " + std::to_string(r.audit.size()) +
             " entries, brute force " + brute.to_string() + ", " + std::to_string(t) + "s";
  return o;
}

Outcome criterion2() { return coarsest_example("1 + s1*s2 + s2^2", hnf(IntMatrix{{1, 1}, {2, 0}}), 2); }
Outcome criterion3() { return coarsest_example("1 + s1*s2", hnf(IntMatrix{{1, 1}}), 1); }

Outcome criterion4() {
  const IntLattice two = IntLattice::diagonal({2});
  const Submodule target = I(1, {"t1 - 1"}, "t");
  Outcome o;
  int contracting = 0, invariant = 0;
  for (const char* g : {"s1^2 - 1", "s1 - 1", "s1 + 1"}) {
    const Submodule p = I(1, {g});
    contracting += contract(p, two).q == target;
    const bool inv = is_extension_from(p, two).is_extension;
    invariant += inv;
    if (inv != (std::string(g) == "s1^2 - 1")) o.pass = false;
  }
  o.pass = o.pass && contracting == 3 && invariant == 1;
  o.detail = std::to_string(contracting) + "/3 contract to <t1 - 1>, " + std::to_string(invariant) +
             " invariant (s1^2 - 1)";
  return o;
}

enum class Run { pass, fail, timeout };

// Runs one instance in a child process that is killed after `budget` seconds.
Run run_bounded(const std::function<bool()>& body, unsigned budget) {
  std::fflush(stdout);
  const pid_t pid = fork();
  if (pid < 0) return body() ? Run::pass : Run::fail;
  if (pid == 0) {
    alarm(budget);
    bool ok = false;
    try {
      ok = body();
    } catch (...) {
    }
    _exit(ok ? 0 : 1);
  }
  int status = 0;
  waitpid(pid, &status, 0);
  if (WIFSIGNALED(status) && WTERMSIG(status) == SIGALRM) return Run::timeout;
  return WIFEXITED(status) && WEXITSTATUS(status) == 0 ? Run::pass : Run::fail;
}

// Instances whose Groebner computation exceeds the budget are drawn past, not
// counted; the detail line reports how many.
Outcome criterion5() {
  constexpr int kDecided = 240;
  constexpr unsigned kBudget = 3;
  gen::Rng rng(20250501);
  int drawn = 0, decided = 0, failures = 0, timeouts = 0;
  while (decided < kDecided && drawn < 2 * kDecided) {
    ++drawn;
    const std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 1, 2));
    const std::size_t k = static_cast<std::size_t>(gen::uniform(rng, 1, 2));
    std::vector<LaurentVec> gens;
    for (long i = gen::uniform(rng, 1, 3); i > 0; --i) gens.push_back(gen::vec(rng, n, k, 2, 2));
    if (support_diameter(gens) > 4) throw std::logic_error("generator exceeds the support bound");
    const IntLattice s = random_lattice_index_at_most_9(rng, n);
    if (!s.is_full_rank() || s.index() > 9) throw std::logic_error("lattice outside the instance family");
    const Run r = run_bounded(
        [&] {
          const RoundtripReport rep = contract_extend_roundtrips(Submodule(n, k, gens), s);
          return rep.qec_equals_q && rep.pce_in_p && rep.pcec_equals_pc;
        },
        kBudget);
    if (r == Run::timeout) {
      ++timeouts;
      continue;
    }
    ++decided;
    failures += r == Run::fail;
  }
  Outcome o;
  o.pass = failures == 0 && decided >= 200;
  o.detail = std::to_string(decided) + " instances, " + std::to_string(failures) + " failures; " +
             std::to_string(timeouts) + " of " + std::to_string(drawn) + " drawn exceeded " +
             std::to_string(kBudget) + "s";
  return o;
}

Outcome criterion6() {
  const SublatticeContext ctx = make_context(IntLattice::diagonal({2}));
  const Window w = Window::box({0}, {9});
  const ExtensionProductCheck a = extension_product_check({ctx, I(1, {"t1 - 1"}, "t")}, w);
  const ExtensionProductCheck b = extension_product_check({ctx, I(1, {"t1^2 + t1 - 1"}, "t")}, w);
  Outcome o;
  o.pass = a.holds && a.extension_dim == 2 && a.sublattice_dim == 1 && b.holds && b.extension_dim == 4 &&
           b.sublattice_dim == 2;
  o.detail = std::to_string(a.extension_dim) + " = 2 x " + std::to_string(a.sublattice_dim) + ", " +
             std::to_string(b.extension_dim) + " = 2 x " + std::to_string(b.sublattice_dim);
  return o;
}

Outcome criterion7() {
  const Submodule p = I(1, {"1 + s1^2 - s1^4"});
  const CoarsestReport r = coarsest_lattice(p);
  const Submodule q = contract(p, r.lattice).q;
  Outcome o;
  o.pass = r.lattice == IntLattice::diagonal({2}) && q == I(1, {"1 + t1 - t1^2"}, "t");
  o.detail = "lattice " + r.lattice.to_string() + ", contraction " + to_strings(q.gb().front(), "t")[0];
  return o;
}

Outcome criterion8() {
  Outcome o;
  const Submodule p = M(2, 2, {V(2, {"s1", "s2"})});
  bool image_ok = false;
  if (is_controllable(p)) {
    const LaurentMatrix r = image_representation(p);
    const LaurentVec pr = LaurentMatrix::from_rows(2, 2, p.gb()).apply(r.col(0));
    image_ok = r.cols == 1 && pr.is_zero() && kernel(r.transpose()) == p;
  }
  const Submodule q = I(1, {"s1 - 1"});
  bool rejects = false;
  try {
    image_representation(q);
  } catch (const PreconditionError&) {
    rejects = true;
  }
  const bool closure = torsion_closure(M(1, 2, {V(1, {"s1 - 1", "0"})})) == M(1, 2, {V(1, {"1", "0"})});
  o.pass = image_ok && !is_controllable(q) && rejects && closure;
  o.detail = std::string("image rep ") + (image_ok ? "ok" : "bad") + ", <s1 - 1> " +
             (rejects ? "rejected" : "accepted") + ", closure " + (closure ? "<e1>" : "wrong");
  return o;
}

Outcome criterion9() {
  const IntLattice l22 = IntLattice::diagonal({2, 2});
  const std::vector<std::pair<Submodule, std::size_t>> fixtures{
      {I(2, {"s1 - 1"}), 1}, {I(2, {"s1 - 1", "s2 - 1"}), 2}, {Submodule::zero(2, 1), 0}};
  Outcome o;
  for (const auto& [p, want] : fixtures) {
    const std::size_t d = degree_of_autonomy(p);
    const std::size_t dc = degree_of_autonomy(contract(p, l22).q);
    o.pass = o.pass && d == want && dc == want;
    o.detail += (o.detail.empty() ? "" : ", ") + std::to_string(d) + "/" + std::to_string(dc);
  }
  o.detail = "degree/contracted degree: " + o.detail;
  return o;
}

Outcome criterion10() {
  const std::vector<std::vector<std::vector<long>>> subgroups{{}, {{1, 0}}, {{0, 1}}, {{1, 1}}, {{1, 0}, {0, 1}}};
  const std::vector<IntLattice> listed{IntLattice::full(2), IntLattice::diagonal({1, 2}), IntLattice::diagonal({2, 1}),
                                       hnf(IntMatrix{{1, 1}, {2, 0}}), IntLattice::diagonal({2, 2})};
  Outcome o;
  std::vector<IntLattice> images;
  std::vector<GaloisSubgroup> hs;
  for (const auto& gens : subgroups) {
    const GaloisSubgroup h{{2, 2}, gens};
    hs.push_back(h);
    const IntLattice l = subgroup_to_lattice(h);
    images.push_back(l);
    // Direct check: x is fixed iff a . x is even for every generator a.
    for (const auto& x : oracle::box(2, -3, 3)) {
      bool fixed = true;
      for (const auto& a : gens) fixed = fixed && (a[0] * x[0] + a[1] * x[1]) % 2 == 0;
      if (fixed != l.contains(exp_to_intvec(x, 2))) o.pass = false;
    }
    if (lattice_to_subgroup(l, {2, 2}).exponent_lattice() != h.exponent_lattice()) o.pass = false;
    if (galois_group_of(l).order != h.order()) o.pass = false;
  }
  for (const auto& l : listed)
    if (std::count(images.begin(), images.end(), l) != 1) o.pass = false;
  int pairs = 0;
  for (std::size_t i = 0; i < hs.size(); ++i)
    for (std::size_t j = 0; j < hs.size(); ++j) {
      const bool sub = hs[j].exponent_lattice().contains(hs[i].exponent_lattice());
      if (sub != images[i].contains(images[j])) o.pass = false;
      pairs += sub;
    }
  o.detail = "5 subgroups -> 5 distinct listed lattices, " + std::to_string(pairs) + " inclusions reversed";
  return o;
}

// ------------------------------------------------- derived examples (criterion 11)

struct Derived {
  const char* name;
  std::function<bool()> check;
};

std::vector<Derived> derived_examples() {
  const IntLattice two = IntLattice::diagonal({2});
  const IntLattice h2 = hnf(IntMatrix{{1, 1}, {2, 0}});
  const IntLattice l22 = IntLattice::diagonal({2, 2});
  const auto shifts1 = oracle::box(1, -4, 4);
  const auto shifts2 = oracle::box(2, -3, 3);
  std::vector<Derived> d;

  d.push_back({"index of <(2,2),(1,-3)> is 8", [] {
                 const Integer cofactor = Integer(2) * -3 - Integer(2) * 1;
                 return hnf(IntMatrix{{2, 2}, {1, -3}}).index() == abs(cofactor) && abs(cofactor) == 8;
               }});
  d.push_back({"smith diag(2,3) = diag(1,6)", [] {
                 const IntVec dg = smith(IntMatrix{{2, 0}, {0, 3}}).diagonal();
                 return dg == IntVec{1, 6} && std::gcd(2, 3) == dg[0] && dg[0] * dg[1] == 6;
               }});
  d.push_back({"H2 meet L(2,2) = L(2,2)", [=] {
                 return meet(h2, l22) == l22 && h2.contains(IntVec{2, 0}) && h2.contains(IntVec{0, 2});
               }});
  d.push_back({"L(2,2) join L(3,3) = Z^2", [] {
                 const IntLattice j = join(IntLattice::diagonal({2, 2}), IntLattice::diagonal({3, 3}));
                 // (1,0) = (3,0) - (2,0), (0,1) = (0,3) - (0,2).
                 return j == IntLattice::full(2) && j.contains(IntVec{1, 0}) && j.contains(IntVec{0, 1});
               }});
  d.push_back({"(1 + s1*s2)(1 - s1*s2) = 1 - s1^2*s2^2", [] {
                 const LaurentPoly a = S(2, "1 + s1*s2"), b = S(2, "1 - s1*s2"), c = S(2, "1 - s1^2*s2^2");
                 bool ok = a * b == c;
                 for (int x = -3; x <= 3; ++x)
                   for (int y = 1; y <= 3; ++y) {
                     if (x == 0) continue;
                     const std::vector<Rational> pt{Rational(x), Rational(y, 2)};
                     ok = ok && evaluate(a, pt) * evaluate(b, pt) == evaluate(c, pt);
                   }
                 return ok;
               }});
  d.push_back({"normalize s1^-2*s2 + s1", [] {
                 const LaurentVec v = V(2, {"s1^-2*s2 + s1"});
                 const auto [p, m] = normalize_to_poly(v);
                 ExpVec lo{};
                 lo[0] = lo[1] = 1000;
                 for (const auto& e : v.support()) lo[0] = std::min(lo[0], e[0]), lo[1] = std::min(lo[1], e[1]);
                 return p == V(2, {"s2 + s1^3"}) && m == lo && m[0] == -2 && m[1] == 0;
               }});
  d.push_back({"normalize (s1^-1, 1)", [] {
                 const auto [p, m] = normalize_to_poly(V(1, {"s1^-1", "1"}));
                 return p == V(1, {"1", "s1"}) && m[0] == -1;
               }});
  d.push_back({"monomial map composition", [] {
                 gen::Rng rng(5);
                 for (int t = 0; t < 20; ++t) {
                   MonomialMap f{gen::unimodular(rng, 2), {gen::coefficient(rng) + 3, 2}};
                   MonomialMap g{gen::unimodular(rng, 2), {Rational(-1), gen::coefficient(rng) + 5}};
                   if (f.scalars[0] == 0 || g.scalars[1] == 0) continue;
                   const LaurentVec v = gen::vec(rng, 2, 2, 3, 2);
                   if (apply_monomial_map(compose(f, g), v) != apply_monomial_map(f, apply_monomial_map(g, v)))
                     return false;
                 }
                 return true;
               }});
  d.push_back({"coset split of s - 1 over 2Z", [=] {
                 const auto parts = coset_split(V(1, {"s1 - 1"}), two);
                 bool ok = parts.size() == 2;
                 for (const auto& [rep, part] : parts)
                   for (const auto& e : part.support())
                     ok = ok && ((e[0] % 2 == 0) == two.contains(rep));
                 return ok && parts.at(IntVec{0}) == V(1, {"-1"}) && parts.at(IntVec{1}) == V(1, {"s1"});
               }});
  d.push_back({"<s - 1, s + 1> is the unit ideal", [=] {
                 return I(1, {"s1 - 1", "s1 + 1"}).is_full() &&
                        oracle::in_shift_span(V(1, {"1"}), {V(1, {"s1 - 1"}), V(1, {"s1 + 1"})}, shifts1);
               }});
  d.push_back({"<s^2 (s - 1)> = <s - 1>", [=] {
                 return I(1, {"s1^3 - s1^2"}) == I(1, {"s1 - 1"}) &&
                        oracle::in_shift_span(V(1, {"s1 - 1"}), {V(1, {"s1^3 - s1^2"})}, shifts1);
               }});
  d.push_back({"1 not in <s - 1>", [] {
                 return !I(1, {"s1 - 1"}).contains(V(1, {"1"})) && evaluate(S(1, "s1 - 1"), {1}) == 0 &&
                        evaluate(S(1, "1"), {1}) == 1;
               }});
  d.push_back({"(s2, -s1) not in <(s1, s2)>", [] {
                 const LaurentVec v = V(2, {"s2", "-s1"});
                 // Multiples a*(s1, s2) satisfy v1*s2 - v2*s1 = 0.
                 const LaurentPoly w = v[0] * S(2, "s2") - v[1] * S(2, "s1");
                 return !M(2, 2, {V(2, {"s1", "s2"})}).contains(v) && !w.is_zero();
               }});
  d.push_back({"<s^2 - 1> differs from <s - 1>", [] {
                 return I(1, {"s1^2 - 1"}) != I(1, {"s1 - 1"}) && evaluate(S(1, "s1^2 - 1"), {-1}) == 0 &&
                        evaluate(S(1, "s1 - 1"), {-1}) != 0;
               }});
  d.push_back({"syzygies of [s1 s2]", [=] {
                 const Submodule syz = syzygies(LaurentMatrix::from_rows(2, 2, {V(2, {"s1", "s2"})}));
                 return syz == M(2, 2, {V(2, {"-s2", "s1"})}) &&
                        syzygy_box_check(V(2, {"s1", "s2"}), syz.gb(), 2, oracle::box(2, -1, 1), shifts2);
               }});
  d.push_back({"syzygies of [s - 1, s - 1]", [=] {
                 const Submodule syz = syzygies(LaurentMatrix::from_rows(1, 2, {V(1, {"s1 - 1", "s1 - 1"})}));
                 return syz == M(1, 2, {V(1, {"1", "-1"})}) &&
                        syzygy_box_check(V(1, {"s1 - 1", "s1 - 1"}), syz.gb(), 1, oracle::box(1, -2, 2), shifts1);
               }});
  d.push_back({"kernel of (f, g) -> s2 f - s1 g", [=] {
                 const Submodule ker = kernel(LaurentMatrix::from_rows(2, 2, {V(2, {"s2", "-s1"})}));
                 const Submodule p = M(2, 2, {V(2, {"s1", "s2"})});
                 return ker == p && torsion_closure(p) == p &&
                        syzygy_box_check(V(2, {"s2", "-s1"}), ker.gb(), 2, oracle::box(2, -1, 1), shifts2);
               }});
  d.push_back({"(<s^2 - 1> : s + 1) = <s - 1>", [=] {
                 const Submodule q = module_quotient(I(1, {"s1^2 - 1"}), S(1, "s1 + 1"));
                 // (s - 1)(s + 1) lies in the ideal; the quotient is proper since s + 1 is 2 at s = 1,
                 // and <s - 1> is maximal.
                 return q == I(1, {"s1 - 1"}) &&
                        oracle::in_shift_span(V(1, {"s1^2 - 1"}), {V(1, {"s1^2 - 1"})}, shifts1) &&
                        evaluate(S(1, "s1 + 1"), {1}) != 0 && !q.is_full();
               }});
  d.push_back({"(<(s - 1) e1> : s - 1) = <e1>", [] {
                 const Submodule p = M(1, 2, {V(1, {"s1 - 1", "0"})});
                 const Submodule q = module_quotient(p, S(1, "s1 - 1"));
                 return q == M(1, 2, {V(1, {"1", "0"})}) && !q.contains(V(1, {"0", "1"}));
               }});
  d.push_back({"eliminate s1 from <s2 - s1, s1 - 1>", [=] {
                 const Submodule p = I(2, {"s2 - s1", "s1 - 1"});
                 const Submodule e = eliminate(p, {0});
                 // s2 - 1 = (s2 - s1) + (s1 - 1); the ideal is proper (both vanish at (1, 1)).
                 return e == I(1, {"s1 - 1"}) &&
                        oracle::in_shift_span(V(2, {"s2 - 1"}), {V(2, {"s2 - s1"}), V(2, {"s1 - 1"})}, shifts2) &&
                        evaluate(S(2, "s2 - s1"), {1, 1}) == 0 && evaluate(S(2, "s1 - 1"), {1, 1}) == 0;
               }});
  d.push_back({"contract <s - 1> to 2Z", [=] {
                 const Submodule p = I(1, {"s1 - 1"});
                 const bool q_ok = contract(p, two).q == I(1, {"t1 - 1"}, "t");
                 // Even-support part of the shift span is spanned by even shifts of s^2 - 1.
                 const auto even = oracle::span_restricted(
                     {V(1, {"s1 - 1"})}, shifts1, 1, 1, [](std::size_t, const ExpVec& e) { return e[0] % 2 == 0; });
                 bool ok = !even.empty();
                 std::vector<ExpVec> even_shifts;
                 for (const auto& x : oracle::box(1, -6, 6))
                   if (x[0] % 2 == 0) even_shifts.push_back(x);
                 for (const auto& v : even) ok = ok && oracle::in_shift_span(v, {V(1, {"s1^2 - 1"})}, even_shifts);
                 return q_ok && ok && restriction_check(p, two, Window::box({0}, {9})).holds;
               }});
  d.push_back({"<s - 1> is not an extension from 2Z", [=] {
                 const ExtensionVerdict v = is_extension_from(I(1, {"s1 - 1"}), two);
                 if (v.is_extension || !v.witness) return false;
                 const LaurentPoly c = v.witness->component[0];
                 return c.size() == 1 && evaluate(c, {1}) != 0 && evaluate(S(1, "s1 - 1"), {1}) == 0;
               }});
  d.push_back({"Q^ec = Q for <t^2 + t - 1>", [=] {
                 return contract_extend_roundtrips({make_context(two), I(1, {"t1^2 + t1 - 1"}, "t")}).qec_equals_q;
               }});
  d.push_back({"P^ce = <s^2 - 1> strictly inside <s - 1>", [=] {
                 const Submodule pce = extend(contract(I(1, {"s1 - 1"}), two));
                 return pce == I(1, {"s1^2 - 1"}) && !pce.contains(V(1, {"s1 - 1"})) &&
                        evaluate(S(1, "s1 - 1"), {-1}) != 0;
               }});
  d.push_back({"<(1,2),(0,3)> is constant of rank 2", [] {
                 const Submodule p = M(1, 2, {V(1, {"1", "2"}), V(1, {"0", "3"})});
                 return is_constant_module(p) && rank_over_fractions(p) == 2 &&
                        IntMatrix{{1, 2}, {0, 3}}.determinant() != 0;
               }});
  d.push_back({"<s - 1> is not constant", [] {
                 return !is_constant_module(I(1, {"s1 - 1"})) &&
                        support_difference_lattice(I(1, {"s1 - 1"})).contains(IntVec{1});
               }});
  d.push_back({"coarsest of <s^2 - 1> with bound 8", [] {
                 const Submodule p = I(1, {"s1^2 - 1"});
                 bool ok = brute_force_coarsest(p, 8) == IntLattice::diagonal({2}) &&
                           is_extension_from(p, IntLattice::diagonal({2})).is_extension;
                 for (long m : {4, 3, 6}) {
                   ok = ok && !is_extension_from(p, IntLattice::diagonal({m})).is_extension;
                   // The component -1 of the split is not in the ideal: it is -1 at s = 1.
                   const auto parts = coset_split(V(1, {"s1^2 - 1"}), IntLattice::diagonal({m}));
                   ok = ok && parts.size() == 2 && evaluate(parts.at(IntVec{0})[0], {1}) == -1;
                 }
                 return ok;
               }});
  d.push_back({"rank of <(1, s), (s, s^2)> is 1", [] {
                 const Submodule p = M(1, 2, {V(1, {"1", "s1"}), V(1, {"s1", "s1^2"})});
                 std::size_t numeric = 0;
                 for (int x : {2, 3, -5}) {
                   const Rational s = x;
                   numeric = std::max(numeric, dense_rank({{1, s}, {s, s * s}}, 2));
                 }
                 return rank_over_fractions(p) == 1 && numeric == 1;
               }});
  d.push_back({"torsion closure of <(s1, s2)> is itself", [=] {
                 const Submodule p = M(2, 2, {V(2, {"s1", "s2"})});
                 const Submodule c = torsion_closure(p);
                 bool ok = c == p;
                 for (const auto& g : c.gb()) ok = ok && oracle::in_shift_span(g, p.generators(), shifts2);
                 return ok;
               }});
  d.push_back({"torsion closure of <(s - 1) e1> is <e1>", [] {
                 return torsion_closure(M(1, 2, {V(1, {"s1 - 1", "0"})})) == M(1, 2, {V(1, {"1", "0"})});
               }});
  d.push_back({"<(s1, s2)> is controllable", [] { return is_controllable(M(2, 2, {V(2, {"s1", "s2"})})); }});
  d.push_back({"<s - 1> is not controllable", [] {
                 // (s - 1) * 1 lies in the ideal and 1 does not: A/<s - 1> is nonzero torsion.
                 return !is_controllable(I(1, {"s1 - 1"})) && evaluate(S(1, "s1 - 1"), {1}) == 0;
               }});
  d.push_back({"image rep of <(s1, s2)> is (-s2, s1)", [] {
                 const LaurentMatrix r = image_representation(M(2, 2, {V(2, {"s1", "s2"})}));
                 const LaurentVec c = r.col(0);
                 const LaurentPoly prod = S(2, "s1") * c[0] + S(2, "s2") * c[1];
                 return (c == V(2, {"-s2", "s1"}) || c == V(2, {"s2", "-s1"})) && prod.is_zero();
               }});
  d.push_back({"decomposition of <(s - 1) e1>", [] {
                 const Decomposition dc = decomposition(M(1, 2, {V(1, {"s1 - 1", "0"})}));
                 return dc.closure == M(1, 2, {V(1, {"1", "0"})}) && dc.presentation.rows == 1 &&
                        dc.presentation.cols == 1 && Submodule(1, 1, {dc.presentation.row(0)}) == I(1, {"s1 - 1"});
               }});
  d.push_back({"decomposition of <s - 1>", [] {
                 const Decomposition dc = decomposition(I(1, {"s1 - 1"}));
                 return dc.closure.is_full() && dc.quotient_is_torsion && dc.cokernel_torsion_free &&
                        Submodule(1, 1, {dc.presentation.row(0)}) == I(1, {"s1 - 1"});
               }});
  d.push_back({"degree of <s1 - 1> is 1", [] {
                 const Submodule p = I(2, {"s1 - 1"});
                 // Solutions are functions of x2 only: the window dimension grows like the side length.
                 const auto a = window_solutions(p, Window::box({0, 0}, {3, 3})).dimension;
                 const auto b = window_solutions(p, Window::box({0, 0}, {7, 7})).dimension;
                 return degree_of_autonomy(p) == 1 && a == 4 && b == 8 && eliminate(p, {0}).is_zero();
               }});
  d.push_back({"degree of <s1 - 1, s2 - 1> is 2", [] {
                 const Submodule p = I(2, {"s1 - 1", "s2 - 1"});
                 const auto a = window_solutions(p, Window::box({0, 0}, {3, 3})).dimension;
                 const auto b = window_solutions(p, Window::box({0, 0}, {7, 7})).dimension;
                 return degree_of_autonomy(p) == 2 && a == 1 && b == 1;
               }});
  d.push_back({"contraction of <(s1, s2)> to L(2,2) is controllable", [=] {
                 return is_controllable(contract(M(2, 2, {V(2, {"s1", "s2"})}), l22).q);
               }});
  d.push_back({"window dimension of <s^2 - 1> on [0,5] is 2", [] {
                 std::vector<oracle::Row> eqs;
                 for (int x = 0; x + 2 <= 5; ++x) {
                   oracle::Row r(6);
                   r[static_cast<std::size_t>(x + 2)] = 1;
                   r[static_cast<std::size_t>(x)] = -1;
                   eqs.push_back(r);
                 }
                 return window_solutions(I(1, {"s1^2 - 1"}), Window::box({0}, {5})).dimension == 2 &&
                        6 - dense_rank(eqs, 6) == 2;
               }});
  d.push_back({"vandermonde (3, 1) -> (2, 1)", [] {
                 const auto a = vandermonde_reconstruct(2, {3, 1});
                 // f(x) = a0 + a1 (-1)^x.
                 return a == std::vector<Rational>{2, 1} && a[0] + a[1] == 3 && a[0] - a[1] == 1;
               }});
  d.push_back({"cli analyze on [[s1, s2]]", [] {
                 const auto r = run_command("analyze", parse_system("n=2 k=2 P=[[s1, s2]]"), {});
                 const auto rep = r["result"]["image_rep"];
                 return r["result"]["is_controllable"] == true && r["result"]["is_autonomous"] == false &&
                        (rep == nlohmann::json::parse(R"([["-s2"],["s1"]])") ||
                         rep == nlohmann::json::parse(R"([["s2"],["-s1"]])"));
               }});
  return d;
}

Outcome criterion11(Clock::time_point suite_start) {
  Outcome o;
  int passed = 0, total = 0;
  std::string failed;
  for (const auto& ex : derived_examples()) {
    ++total;
    bool ok = false;
    try {
      ok = ex.check();
    } catch (const std::exception& e) {
      failed += std::string(" [") + ex.name + ": " + e.what() + "]";
    }
    if (ok) ++passed;
    else if (failed.find(ex.name) == std::string::npos) failed += std::string(" [") + ex.name + "]";
  }
  const double t = seconds_since(suite_start);
  o.pass = passed == total && t < 600.0;
  o.detail = std::to_string(passed) + "/" + std::to_string(total) + " derived examples, acceptance runtime " +
             std::to_string(t) + "s" + (failed.empty() ? "" : ", failed:" + failed);
  return o;
}

}  // namespace

// Optional arguments select criteria by number; default runs all of them.
int main(int argc, char** argv) {
  const auto start = Clock::now();
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"Smith frame of <(2,2),(1,-3)>", criterion1},
      {"coarsest lattice of <1 + s1*s2 + s2^2> is H2", criterion2},
      {"coarsest lattice of <1 + s1*s2> is <(1,1)>", criterion3},
      {"three ideals contract to <t - 1> on 2Z", criterion4},
      {"contraction/extension round trips on random instances", criterion5},
      {"extension product window dimensions", criterion6},
      {"order reduction of <1 + s^2 - s^4>", criterion7},
      {"controllability suite", criterion8},
      {"degree of autonomy", criterion9},
      {"Galois correspondence for mu2 x mu2", criterion10},
      {"derived examples against independent checks", [&] { return criterion11(start); }},
  };
  int failures = 0;
  std::set<std::size_t> only;
  for (int a = 1; a < argc; ++a) only.insert(std::strtoul(argv[a], nullptr, 10));
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!only.empty() && !only.count(i + 1)) continue;
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("criterion %2zu: %s  %s (%s; %.2fs)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first,
                o.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed; total %.2fs\n", failures, criteria.size(), seconds_since(start));
  return failures == 0 ? 0 : 1;
}
