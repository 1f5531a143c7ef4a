#include "latdef/cli.hpp"

#include <algorithm>
#include <sstream>

#include "latdef/analysis.hpp"
#include "latdef/coarsest.hpp"
#include "latdef/error.hpp"
#include "latdef/sublattice.hpp"
#include "latdef/trajectories.hpp"

namespace latdef {

using nlohmann::json;

namespace {

json jint(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json jmatrix(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(jint(m(r, c)));
    out.push_back(row);
  }
  return out;
}

json jlattice(const IntLattice& l) {
  return {{"basis", jmatrix(l.basis())},
          {"rank", l.rank()},
          {"ambient_dim", l.ambient_dim()},
          {"index", l.is_full_rank() ? jint(l.index()) : json(nullptr)}};
}

json jvec(const LaurentVec& v, std::string_view prefix) { return to_strings(v, prefix); }

json jrows(const std::vector<LaurentVec>& rows, std::string_view prefix) {
  json out = json::array();
  for (const auto& r : rows) out.push_back(jvec(r, prefix));
  return out;
}

json jlmatrix(const LaurentMatrix& m, std::string_view prefix) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows; ++r) out.push_back(jvec(m.row(r), prefix));
  return out;
}

std::string window_text(const WindowSpec& w) {
  std::ostringstream out;
  for (std::size_t i = 0; i < w.lo.size(); ++i) out << (i ? "," : "") << w.lo[i] << ".." << w.hi[i];
  return out.str();
}

json echo_input(const SystemFile& sys) {
  json in = {{"n", sys.n}, {"k", sys.k}};
  if (sys.has_matrix) {
    in["variables"] = std::string(sys.prefix());
    in["matrix"] = jrows(sys.rows, sys.prefix());
  }
  if (!sys.lattices.empty()) {
    json ls = json::object();
    for (const auto& [name, m] : sys.lattices) ls[name] = jmatrix(m);
    in["lattices"] = ls;
  }
  if (!sys.windows.empty()) {
    json ws = json::object();
    for (const auto& [name, w] : sys.windows) ws[name] = window_text(w);
    in["windows"] = ws;
  }
  return in;
}

const SystemFile& need_matrix(const SystemFile& sys, bool contracted) {
  if (!sys.has_matrix) throw InputError("this command needs a matrix P or Q in the system file");
  if (sys.contracted != contracted)
    throw InputError(contracted ? "this command needs a contracted module Q (variables t1..tn)"
                                : "this command needs a system P (variables s1..sn)");
  return sys;
}

IntMatrix lattice_rows(const SystemFile& sys, const std::string& spec) {
  if (spec.empty()) {
    if (sys.lattices.size() != 1) throw InputError("name a lattice with --lattice");
    return sys.lattices.begin()->second;
  }
  if (spec.front() == '[') return parse_int_rows(spec);
  const auto it = sys.lattices.find(spec);
  if (it == sys.lattices.end()) throw InputError("unknown lattice '" + spec + "'");
  return it->second;
}

IntLattice resolve_lattice(const SystemFile& sys, const std::string& spec, std::size_t n) {
  const IntMatrix rows = lattice_rows(sys, spec);
  if (rows.cols() != n) throw InputError("the lattice does not live in Z^" + std::to_string(n));
  return IntLattice::from_generators(rows);
}

Window resolve_window(const SystemFile& sys, const std::string& spec, std::size_t n) {
  WindowSpec w;
  if (spec.empty()) {
    if (sys.windows.size() != 1) throw InputError("name a window with --window");
    w = sys.windows.begin()->second;
  } else if (const auto it = sys.windows.find(spec); it != sys.windows.end()) {
    w = it->second;
  } else {
    w = parse_window_spec(spec);
  }
  if (w.lo.size() != n) throw InputError("the window needs one range per variable");
  return Window::box(w.lo, w.hi);
}

TermOrder resolve_order(const std::string& name) {
  if (name == "grevlex") return TermOrder::grevlex();
  if (name == "lex") return TermOrder::lex();
  throw InputError("unknown order '" + name + "' (use grevlex or lex)");
}

// Box around the supports of `gens`, widened by `pad` on every side.
Window padded_box(const std::vector<LaurentVec>& gens, std::size_t n, long pad) {
  std::vector<long> lo(n, 0), hi(n, 0);
  bool first = true;
  for (const auto& g : gens)
    for (const auto& e : g.support()) {
      for (std::size_t i = 0; i < n; ++i) {
        lo[i] = first ? e[i] : std::min<long>(lo[i], e[i]);
        hi[i] = first ? e[i] : std::max<long>(hi[i], e[i]);
      }
      first = false;
    }
  for (std::size_t i = 0; i < n; ++i) lo[i] -= pad, hi[i] += pad;
  return Window::box(lo, hi);
}

json cmd_gb(const SystemFile& sys, const CliOptions& opt) {
  need_matrix(sys, false);
  const Submodule p = sys.module();
  const auto basis = groebner_basis(p, resolve_order(opt.order));
  return {{"order", opt.order}, {"basis", jrows(basis, "s")}, {"size", basis.size()}};
}

json cmd_member(const SystemFile& sys, const CliOptions& opt, json& oracle) {
  need_matrix(sys, false);
  if (opt.vector.empty()) throw InputError("member needs --vector");
  const LaurentVec v = parse_vector(opt.vector, sys.n, "s");
  if (v.k() != sys.k) throw InputError("the vector needs k entries");
  const Submodule p = sys.module();
  const bool in = p.contains(v);
  if (opt.oracle) {
    std::vector<LaurentVec> all = sys.rows;
    all.push_back(v);
    const long pad = support_diameter(all) + 1;
    const bool found = WindowSpan(sys.rows, sys.k, padded_box(all, sys.n, pad)).contains(v);
    oracle = {{"window_member", found}, {"agrees", found == in}, {"conclusive", found || !in}};
  }
  return {{"vector", jvec(v, "s")}, {"member", in}, {"normal_form", jvec(p.normal_form(v), "s")}};
}

json context_json(const SublatticeContext& ctx) {
  json d = json::array();
  for (long x : ctx.d) d.push_back(x);
  json diag = json::array();
  for (const auto& x : ctx.smith.diagonal()) diag.push_back(jint(x));
  return {{"lattice", jlattice(ctx.lattice)},
          {"d", d},
          {"embedding", jmatrix(ctx.embedding)},
          {"smith", {{"U", jmatrix(ctx.smith.U)}, {"D", diag}, {"V", jmatrix(ctx.smith.V)}}}};
}

json cmd_contract(const SystemFile& sys, const CliOptions& opt, json& oracle) {
  need_matrix(sys, false);
  const Submodule p = sys.module();
  const IntLattice s = resolve_lattice(sys, opt.lattice, sys.n);
  const ContractedModule q = contract(p, s);
  const RoundtripReport rt = contract_extend_roundtrips(p, s);
  json out = context_json(q.ctx);
  out["contraction"] = jrows(q.q.gb(), "t");
  out["extension_of_contraction"] = jrows(extend(q).gb(), "s");
  out["roundtrip"] = {{"qec_equals_q", rt.qec_equals_q},
                      {"pce_in_p", rt.pce_in_p},
                      {"pcec_equals_pc", rt.pcec_equals_pc},
                      {"pce_equals_p", rt.pce_equals_p}};
  if (opt.oracle) {
    if (sys.n > 2) {
      oracle = {{"skipped", "window checks run for n <= 2"}};
    } else {
      std::vector<LaurentVec> qe;
      for (const auto& g : q.q.gb()) qe.push_back(embed(q.ctx, g));
      const long margin = std::max(support_diameter(sys.rows), support_diameter(qe));
      const Window w = opt.window.empty() && sys.windows.empty()
                           ? padded_box(sys.rows, sys.n, 2 * margin + 2)
                           : resolve_window(sys, opt.window, sys.n);
      const RestrictionCheck rc = restriction_check(p, s, w);
      oracle = {{"restriction_holds", rc.holds},
                {"margin", rc.margin},
                {"restricted_dim", rc.restricted_dim},
                {"contracted_dim", rc.contracted_dim}};
    }
  }
  return out;
}

json cmd_extend(const SystemFile& sys, const CliOptions& opt, json& oracle) {
  need_matrix(sys, true);
  // Q lives in t1..tr with r = rank of the lattice.
  const IntMatrix rows = lattice_rows(sys, opt.lattice);
  const IntLattice s = IntLattice::from_generators(rows);
  const SublatticeContext ctx = make_context(s);
  if (ctx.rank() != sys.n) throw InputError("Q must use as many variables as the rank of the lattice");
  const ContractedModule q{ctx, sys.module()};
  const Submodule qe = extend(q);
  json out = context_json(ctx);
  out["extension"] = jrows(qe.gb(), "s");
  out["qec_equals_q"] = contract_extend_roundtrips(q).qec_equals_q;
  if (opt.oracle) {
    if (!s.is_full_rank()) {
      oracle = {{"skipped", "the product check needs a full-rank lattice"}};
    } else {
      const std::size_t n = s.ambient_dim();
      const Window box = opt.window.empty() && sys.windows.empty()
                             ? Window::box(std::vector<long>(n, 0), std::vector<long>(n, 9))
                             : resolve_window(sys, opt.window, n);
      const ExtensionProductCheck ec = extension_product_check(q, aligned_window(s, box));
      oracle = {{"product_holds", ec.holds},
                {"extension_dim", ec.extension_dim},
                {"sublattice_dim", ec.sublattice_dim},
                {"index", jint(ec.index)}};
    }
  }
  return out;
}

json cmd_invariant(const SystemFile& sys, const CliOptions& opt) {
  need_matrix(sys, false);
  const Submodule p = sys.module();
  const IntLattice s = resolve_lattice(sys, opt.lattice, sys.n);
  const ExtensionVerdict v = is_extension_from(p, s);
  json out = {{"lattice", jlattice(s)}, {"is_extension", v.is_extension}, {"witness", nullptr}};
  if (v.witness) {
    json coset = json::array();
    for (const auto& c : v.witness->coset) coset.push_back(jint(c));
    out["witness"] = {{"generator", v.witness->generator},
                      {"element", jvec(v.witness->element, "s")},
                      {"coset", coset},
                      {"component", jvec(v.witness->component, "s")}};
  }
  return out;
}

json cmd_coarsest(const SystemFile& sys, const CliOptions& opt, json& oracle) {
  need_matrix(sys, false);
  const Submodule p = sys.module();
  CoarsestReport r = coarsest_lattice(p, opt.audit_primes);
  if (opt.oracle) {
    if (sys.n > 2) {
      oracle = {{"skipped", "brute force runs for n <= 2"}};
    } else {
      const IntLattice brute = brute_force_coarsest(p, 16);
      r.oracle_confirmed = brute == r.lattice;
      oracle = {{"index_bound", 16}, {"lattice", jlattice(brute)}, {"agrees", *r.oracle_confirmed}};
    }
  }
  json audit = json::array();
  for (const auto& e : r.audit)
    audit.push_back({{"prime", e.prime}, {"lattice", jmatrix(e.lattice.basis())}, {"is_extension", e.is_extension}});
  json restarts = json::array();
  for (const auto& l : r.restarts) restarts.push_back(jmatrix(l.basis()));
  return {{"lattice", jlattice(r.lattice)},
          {"rank", r.rank},
          {"is_constant_module", r.is_constant_module},
          {"audit", audit},
          {"restarts", restarts},
          {"oracle_confirmed", r.oracle_confirmed ? json(*r.oracle_confirmed) : json(nullptr)}};
}

json cmd_analyze(const SystemFile& sys, const CliOptions& opt) {
  need_matrix(sys, false);
  const Submodule p = sys.module();
  const AnalysisReport r = analyze(p);
  json out = {{"rank_over_fractions", r.rank_over_fractions},
              {"is_controllable", r.is_controllable},
              {"is_autonomous", r.is_autonomous},
              {"torsion_closure", jrows(r.torsion_closure.gb(), "s")},
              {"image_rep", r.image_rep ? jlmatrix(*r.image_rep, "s") : json(nullptr)},
              {"degree_of_autonomy", r.degree_of_autonomy},
              {"decomposition",
               {{"closure_generators", jrows(r.decomposition.closure_generators, "s")},
                {"presentation", jlmatrix(r.decomposition.presentation, "s")},
                {"quotient_is_torsion", r.decomposition.quotient_is_torsion},
                {"cokernel_torsion_free", r.decomposition.cokernel_torsion_free}}}};
  if (!opt.check_transfer.empty()) {
    const IntLattice s = resolve_lattice(sys, opt.check_transfer, sys.n);
    const TransferReport t = transfer_checks(p, s);
    out["transfer"] = {{"lattice", jlattice(s)},
                       {"full_rank", t.full_rank},
                       {"controllable_descends", t.controllable_descends},
                       {"autonomous_descends", t.autonomous_descends},
                       {"controllable_matches", t.controllable_matches},
                       {"autonomous_matches", t.autonomous_matches},
                       {"image_rep_transfers", t.image_rep_transfers},
                       {"all_hold", t.all()}};
  }
  return out;
}

json cmd_simulate(const SystemFile& sys, const CliOptions& opt) {
  need_matrix(sys, false);
  const Window w = resolve_window(sys, opt.window, sys.n);
  const WindowSolutionSpace sp = window_solutions(sys.rows, sys.k, w);
  json out = {{"window", {{"lo", w.lo()}, {"hi", w.hi()}, {"points", w.size()}}}, {"dimension", sp.dimension}};
  if (opt.basis) {
    json basis = json::array();
    for (const auto& f : sp.basis) {
      json vals = json::array();
      for (const auto& x : f) vals.push_back(x.get_str());
      basis.push_back(vals);
    }
    out["basis"] = basis;
  }
  return out;
}

json cmd_smith(const SystemFile& sys, const CliOptions& opt) {
  const IntMatrix gens = lattice_rows(sys, opt.lattice);
  const IntMatrix s = gens.transpose();
  const SmithDecomposition sd = smith(s);
  json diag = json::array();
  for (const auto& x : sd.diagonal()) diag.push_back(jint(x));
  return {{"generators", jmatrix(gens)},
          {"U", jmatrix(sd.U)},
          {"D", diag},
          {"V", jmatrix(sd.V)},
          {"rank", sd.rank()},
          {"product_check", sd.U * sd.D * sd.V == s}};
}

json cmd_galois(const SystemFile& sys, const CliOptions& opt) {
  const IntLattice s = IntLattice::from_generators(lattice_rows(sys, opt.lattice));
  const GaloisDescription g = galois_group_of(s);
  json moduli = json::array();
  for (long m : g.moduli) moduli.push_back(m);
  return {{"lattice", jlattice(s)}, {"moduli", moduli}, {"order", jint(g.order)}};
}

}  // namespace

const std::vector<std::string>& cli_commands() {
  static const std::vector<std::string> cmds{"gb",       "member",  "contract", "extend",   "invariant",
                                             "coarsest", "analyze", "simulate", "smith", "galois"};
  return cmds;
}

json run_command(const std::string& command, const SystemFile& sys, const CliOptions& opt) {
  json oracle;
  json result;
  if (command == "gb") result = cmd_gb(sys, opt);
  else if (command == "member") result = cmd_member(sys, opt, oracle);
  else if (command == "contract") result = cmd_contract(sys, opt, oracle);
  else if (command == "extend") result = cmd_extend(sys, opt, oracle);
  else if (command == "invariant") result = cmd_invariant(sys, opt);
  else if (command == "coarsest") result = cmd_coarsest(sys, opt, oracle);
  else if (command == "analyze") result = cmd_analyze(sys, opt);
  else if (command == "simulate") result = cmd_simulate(sys, opt);
  else if (command == "smith") result = cmd_smith(sys, opt);
  else if (command == "galois") result = cmd_galois(sys, opt);
  else throw InputError("unknown command '" + command + "'");
  json report = {{"schema", kReportSchema}, {"command", command}, {"input", echo_input(sys)}, {"result", result}};
  if (!oracle.is_null()) report["oracle"] = oracle;
  return report;
}

json error_report(const std::string& command, const std::string& code, const std::string& message) {
  return {{"schema", kReportSchema}, {"command", command}, {"error", {{"code", code}, {"message", message}}}};
}

std::string render_text(const json& report) {
  std::ostringstream out;
  out << report.value("command", "") << '\n';
  if (report.contains("error")) {
    out << "error (" << report["error"]["code"].get<std::string>() << "): "
        << report["error"]["message"].get<std::string>() << '\n';
    return out.str();
  }
  for (const auto& [key, val] : report["result"].items()) out << "  " << key << ": " << val.dump() << '\n';
  if (report.contains("oracle"))
    for (const auto& [key, val] : report["oracle"].items()) out << "  oracle." << key << ": " << val.dump() << '\n';
  return out.str();
}

}  // namespace latdef
