#include "latdef/sublattice.hpp"

#include "latdef/error.hpp"

namespace latdef {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// P intersected with Q[s1^{±d1}, ..., sn^{±dn}]^k, written in t_i = s_i^{d_i}.
// A^k is free over that subring with basis s^b e_j, b in prod [0, d_i); the
// contraction is the part of the restricted module living on b = 0, obtained
// with a position-over-term basis whose b = 0 positions rank last.
Submodule diagonal_contraction(const Submodule& p, const std::vector<long>& d) {
  const std::size_t n = p.nvars(), k = p.k();
  std::size_t rho = 1;
  for (long di : d) rho *= static_cast<std::size_t>(di);
  if (rho == 1) return p;
  if (rho * k > 4096) throw InputError("sublattice index too large for contraction");

  const auto residue_index = [&](const ExpVec& x, ExpVec& q) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const long qi = floor_div(x[i], d[i]);
      q[i] = static_cast<std::int32_t>(qi);
      idx = idx * static_cast<std::size_t>(d[i]) + static_cast<std::size_t>(x[i] - qi * d[i]);
    }
    return idx;
  };

  std::vector<ExpVec> shifts;
  for (ExpVec b{};;) {
    shifts.push_back(b);
    std::size_t i = 0;
    while (i < n && ++b[i] >= d[i]) b[i++] = 0;
    if (i == n) break;
  }

  const std::size_t width = k * rho;
  std::vector<LaurentVec> gens;
  for (const auto& g : p.generators())
    for (const auto& b : shifts) {
      LaurentVec v(n, width);
      for (std::size_t j = 0; j < k; ++j)
        for (const auto& [x, c] : g[j].terms()) {
          ExpVec q{};
          const std::size_t idx = residue_index(exp_add(x, b), q);
          v[j * rho + idx].add_term(q, c);
        }
      gens.push_back(normalize_to_poly(v).first);
    }

  TermOrder ord;
  ord.position_priority.resize(width);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t idx = 0; idx < rho; ++idx)
      ord.position_priority[j * rho + idx] =
          static_cast<int>(idx == 0 ? width + j : j * rho + idx);

  std::vector<LaurentVec> out;
  // Localization is exact, so intersecting the polynomial lift with the b = 0
  // summand and saturating afterwards (inside Submodule) gives the contraction.
  for (const auto& g : polynomial_gb(gens, n, width, ord)) {
    bool pure = true;
    for (std::size_t c = 0; c < width && pure; ++c) pure = c % rho == 0 || g[c].is_zero();
    if (!pure) continue;
    LaurentVec v(n, k);
    for (std::size_t j = 0; j < k; ++j) v[j] = g[j * rho];
    out.push_back(std::move(v));
  }
  return Submodule(n, k, std::move(out));
}

}  // namespace

Integer SublatticeContext::index() const { return lattice.index(); }

SublatticeContext make_context(const IntLattice& s) {
  const std::size_t n = s.ambient_dim();
  const std::size_t r = s.rank();
  SublatticeContext ctx;
  ctx.lattice = s;
  ctx.smith = r == 0 ? SmithDecomposition{IntMatrix::identity(n), IntMatrix(n, 0), IntMatrix(0, 0)}
                    : smith(s.basis().transpose());
  ctx.phi = MonomialMap::lattice_map(unimodular_inverse(ctx.smith.U));
  for (std::size_t i = 0; i < r; ++i) ctx.d.push_back(to_long(ctx.smith.D(i, i)));
  ctx.embedding = IntMatrix(n, r);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < r; ++j) ctx.embedding(i, j) = ctx.smith.U(i, j) * ctx.d[j];
  return ctx;
}

LaurentVec embed(const SublatticeContext& ctx, const LaurentVec& v) {
  const std::size_t n = ctx.ambient_dim(), r = ctx.rank();
  if (v.nvars() != r) throw InputError("embed: element is not in the contracted frame");
  LaurentVec out(n, v.k());
  for (std::size_t j = 0; j < v.k(); ++j)
    for (const auto& [q, c] : v[j].terms()) {
      ExpVec x{};
      for (std::size_t i = 0; i < n; ++i) {
        long acc = 0;
        for (std::size_t l = 0; l < r; ++l) acc += to_long(ctx.embedding(i, l)) * q[l];
        x[i] = static_cast<std::int32_t>(acc);
      }
      out[j].add_term(x, c);
    }
  return out;
}

ContractedModule contract(const Submodule& p, const IntLattice& s) { return contract(p, make_context(s)); }

ContractedModule contract(const Submodule& p, const SublatticeContext& ctx) {
  const std::size_t n = p.nvars(), r = ctx.rank();
  if (ctx.ambient_dim() != n) throw InputError("contract: lattice and module dimensions differ");

  std::vector<LaurentVec> moved;
  for (const auto& g : p.gb()) moved.push_back(apply_monomial_map(ctx.phi, g));
  const Submodule transported(n, p.k(), std::move(moved));

  std::vector<long> dfull(ctx.d);
  dfull.resize(n, 1);
  Submodule q = diagonal_contraction(transported, dfull);
  if (r < n) {
    std::vector<std::size_t> drop;
    for (std::size_t i = r; i < n; ++i) drop.push_back(i);
    q = eliminate(q, drop);
  }
  return ContractedModule{ctx, std::move(q)};
}

Submodule extend(const ContractedModule& q) {
  std::vector<LaurentVec> gens;
  for (const auto& g : q.q.gb()) gens.push_back(embed(q.ctx, g));
  return Submodule(q.ctx.ambient_dim(), q.q.k(), std::move(gens));
}

ExtensionVerdict is_extension_from(const Submodule& p, const IntLattice& s) {
  return is_extension_from(p, p.gb(), s);
}

ExtensionVerdict is_extension_from(const Submodule& p, const std::vector<LaurentVec>& gens, const IntLattice& s) {
  if (s.ambient_dim() != p.nvars()) throw InputError("is_extension_from: lattice and module dimensions differ");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto parts = coset_split(gens[i], s);
    if (parts.size() <= 1) continue;
    for (const auto& [rep, part] : parts)
      if (!p.contains(part)) return {false, ExtensionWitness{i, gens[i], rep, part}};
  }
  return {};
}

RoundtripReport contract_extend_roundtrips(const Submodule& p, const IntLattice& s) {
  RoundtripReport rep;
  const ContractedModule pc = contract(p, s);
  const Submodule pce = extend(pc);
  for (const auto& g : pce.gb()) rep.pce_in_p = rep.pce_in_p && p.contains(g);
  rep.pcec_equals_pc = contract(pce, pc.ctx).q == pc.q;
  rep.qec_equals_q = contract_extend_roundtrips(pc).qec_equals_q;
  rep.pce_equals_p = pce == p;
  return rep;
}

RoundtripReport contract_extend_roundtrips(const ContractedModule& q) {
  RoundtripReport rep;
  rep.qec_equals_q = contract(extend(q), q.ctx).q == q.q;
  return rep;
}

GaloisDescription galois_group_of(const IntLattice& s) {
  if (!s.is_full_rank())
    throw PreconditionError("the Galois description needs a full-rank sublattice; degenerate directions give "
                            "an infinite extension");
  const SublatticeContext ctx = make_context(s);
  GaloisDescription g{ctx.d, 1};
  for (long di : ctx.d) g.order *= di;
  return g;
}

}  // namespace latdef
