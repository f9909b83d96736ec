// Command-line front end: classification, Pfaffian calculus, tangent data,
// closure queries, and the bundled verification suites.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "skewpf/closure.hpp"
#include "skewpf/ideal_pieces.hpp"
#include "skewpf/json_io.hpp"
#include "skewpf/random_gen.hpp"
#include "skewpf/strata.hpp"
#include "skewpf/tangent.hpp"

namespace {

using skewpf::Json;

struct Options {
  std::string input;
  std::uint64_t seed = 0;
  bool pretty = false;
  int jet_order = 2;
  int colon_cap = 10;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
};

Json load_json(const Options& opt, std::string* raw) {
  if (opt.input.empty()) skewpf::fail(skewpf::Errc::BadInput, "this command needs --input FILE");
  std::ifstream in(opt.input);
  if (!in) skewpf::fail(skewpf::Errc::BadInput, "cannot open input file '" + opt.input + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  *raw = ss.str();
  try {
    return Json::parse(*raw);
  } catch (const Json::parse_error& e) {
    skewpf::fail(skewpf::Errc::BadInput, std::string("malformed JSON: ") + e.what());
  }
}

std::string fnv1a(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void emit(Json payload, const Options& opt) {
  payload["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - opt.start)
                              .count();
  if (opt.pretty)
    std::cout << payload.dump(2) << std::endl;
  else
    std::cout << payload.dump() << std::endl;
}

Json report_shell(const std::string& command, const Options& opt, const std::string& raw) {
  return Json{{"command", command},
              {"seed", opt.seed},
              {"input_digest", raw.empty() ? "-" : fnv1a(raw)}};
}

int run_classify(const Options& opt) {
  std::string raw;
  skewpf::SkewLinMatrix m = skewpf::skew_from_json(load_json(opt, &raw));
  skewpf::MatrixType type = skewpf::classify(m);
  Json out = report_shell("classify", opt, raw);
  out["type"] = std::string(1, skewpf::label_char(type.label));
  out["stability"] = skewpf::stability_name(type.stability);
  out["fingerprint"] = skewpf::fingerprint_to_json(skewpf::fingerprint(m));
  emit(out, opt);
  return 0;
}

int run_pfaffian(const Options& opt) {
  std::string raw;
  skewpf::SkewLinMatrix m = skewpf::skew_from_json(load_json(opt, &raw));
  skewpf::Polynomial pf = skewpf::pfaffian(m);
  Json out = report_shell("pfaffian", opt, raw);
  out["pfaffian"] = skewpf::xpoly_to_json(pf);
  out["pfaffian_str"] = pf.str();
  out["is_zero"] = pf.is_zero();
  emit(out, opt);
  return 0;
}

int run_tangent(const Options& opt) {
  std::string raw;
  skewpf::SkewLinMatrix m = skewpf::skew_from_json(load_json(opt, &raw));
  Json out = report_shell("tangent", opt, raw);
  out["tangent_codim"] = skewpf::tangent_codim(m);
  emit(out, opt);
  return 0;
}

Json cone_report(const skewpf::SkewLinMatrix& m) {
  skewpf::MatrixType type = skewpf::classify(m);
  skewpf::ConeQuadrics cone = skewpf::cone_deg2(m);
  Json basis = Json::array();
  for (const auto& q : cone.piece.basis_polynomials()) basis.push_back(q.str());
  return Json{{"type", std::string(1, skewpf::label_char(type.label))},
              {"tangent_codim", skewpf::tangent_codim(m)},
              {"cone_dim", cone.piece.dim()},
              {"cone_basis", basis},
              {"orbit_codim", skewpf::orbit_codim(m)}};
}

int run_cone(const Options& opt) {
  std::string raw;
  skewpf::SkewLinMatrix m = skewpf::skew_from_json(load_json(opt, &raw));
  Json out = report_shell("cone", opt, raw);
  out.update(cone_report(m));
  emit(out, opt);
  return 0;
}

int run_closure(const Options& opt) {
  std::string raw;
  Json in = load_json(opt, &raw);
  if (!in.contains("matrix") || !in.contains("cubic"))
    skewpf::fail(skewpf::Errc::BadInput, "closure input needs fields 'matrix' and 'cubic'");
  skewpf::SkewLinMatrix m = skewpf::skew_from_json(in["matrix"]);
  skewpf::CubicForm F(skewpf::cubic_from_json(in["cubic"]));
  skewpf::ClosureVerdict v = skewpf::in_closure(m, F, opt.colon_cap);
  Json out = report_shell("closure", opt, raw);
  out.update(skewpf::verdict_to_json(v));
  emit(out, opt);
  return 0;
}

int run_jets(const Options& opt) {
  std::string raw;
  skewpf::JetMatrix jet = skewpf::jet_from_json(load_json(opt, &raw));
  if (opt.jet_order < jet.order()) jet = jet.truncate(opt.jet_order);
  skewpf::JetPolynomial jp = skewpf::jet_pfaffian(jet);
  Json out = report_shell("jets", opt, raw);
  Json coeffs = Json::array();
  for (int k = 0; k <= jp.order(); ++k) coeffs.push_back(skewpf::xpoly_to_json(jp.coeff(k)));
  out["pfaffian_jet"] = Json{{"order", jp.order()}, {"coefficients", coeffs}};
  if (auto fn = jp.first_nonzero())
    out["first_nonzero"] = Json{{"order", fn->first}, {"coefficient", fn->second.str()}};
  else
    out["first_nonzero"] = "all-zero";
  emit(out, opt);
  return 0;
}

// Frozen catalog expectations for verify-tables.
const int kTangentCodim[6] = {28, 27, 26, 27, 26, 22};
const int kOrbitCodim[6] = {28, 27, 29, 28, 30, 34};

skewpf::Polynomial av(int i, int j, int k) {
  return skewpf::Polynomial::var(skewpf::a_var(i, j, k));
}

std::vector<skewpf::Polynomial> reference_cone_generators(skewpf::TypeLabel t) {
  using skewpf::TypeLabel;
  switch (t) {
    case TypeLabel::c:
      return {(av(1, 2, 4) - av(3, 5, 4)) * av(0, 5, 4), (av(0, 2, 4) - av(3, 4, 4)) * av(0, 5, 4)};
    case TypeLabel::e:
      return {av(4, 5, 4) * av(0, 1, 4), av(3, 5, 4) * av(0, 1, 4)};
    case TypeLabel::f: {
      // 2x2 minors of the two 3x2 coordinate blocks, side by side and stacked
      skewpf::Polynomial N1[3][2] = {{av(1, 2, 4), av(4, 5, 4)},
                                     {av(0, 2, 4), av(3, 5, 4)},
                                     {av(0, 1, 4), av(3, 4, 4)}};
      skewpf::Polynomial N2[3][2] = {{av(1, 2, 3), av(4, 5, 3)},
                                     {av(0, 2, 3), av(3, 5, 3)},
                                     {av(0, 1, 3), av(3, 4, 3)}};
      skewpf::Polynomial side[3][4], stack[6][2];
      for (int r = 0; r < 3; ++r) {
        side[r][0] = N1[r][0];
        side[r][1] = N1[r][1];
        side[r][2] = N2[r][0];
        side[r][3] = N2[r][1];
        stack[r][0] = N1[r][0];
        stack[r][1] = N1[r][1];
        stack[3 + r][0] = N2[r][0];
        stack[3 + r][1] = N2[r][1];
      }
      std::vector<skewpf::Polynomial> ms, mt;
      for (int r0 = 0; r0 < 3; ++r0)
        for (int r1 = r0 + 1; r1 < 3; ++r1)
          for (int c0 = 0; c0 < 4; ++c0)
            for (int c1 = c0 + 1; c1 < 4; ++c1)
              ms.push_back(side[r0][c0] * side[r1][c1] - side[r0][c1] * side[r1][c0]);
      for (int r0 = 0; r0 < 6; ++r0)
        for (int r1 = r0 + 1; r1 < 6; ++r1)
          mt.push_back(stack[r0][0] * stack[r1][1] - stack[r0][1] * stack[r1][0]);
      skewpf::DegreePiece inter =
          skewpf::DegreePiece::span(ms, 2, skewpf::a_vars())
              .intersect(skewpf::DegreePiece::span(mt, 2, skewpf::a_vars()));
      return inter.basis_polynomials();
    }
    default:
      return {};
  }
}

bool cone_matches_fixture(skewpf::TypeLabel t) {
  const skewpf::SkewLinMatrix& m = skewpf::catalog(t).M;
  skewpf::ConeQuadrics cone = skewpf::cone_deg2(m);
  std::vector<skewpf::Polynomial> reference = reference_cone_generators(t);
  if (reference.empty()) return cone.piece.dim() == 0;
  skewpf::TangentSystem sys = skewpf::tangent_system(m);
  return cone.piece == skewpf::restricted_quadric_span(sys, reference);
}

int run_verify_tables(const Options& opt) {
  Json out = report_shell("verify-tables", opt, "");
  Json rows = Json::array();
  bool all_ok = true;
  for (skewpf::TypeLabel t : skewpf::all_types()) {
    const skewpf::NormalForm& nf = skewpf::catalog(t);
    skewpf::Table1Report rep = skewpf::verify_table1(t);
    int tc = skewpf::tangent_codim(nf.M);
    int oc = skewpf::orbit_codim(nf.M);
    int idx = static_cast<int>(t);
    bool cone_ok = cone_matches_fixture(t);
    bool row_ok = rep.all() && tc == kTangentCodim[idx] && oc == kOrbitCodim[idx] && cone_ok &&
                  skewpf::classify(nf.M).label == t;
    all_ok = all_ok && row_ok;
    rows.push_back(Json{{"type", std::string(1, skewpf::label_char(t))},
                        {"ms_zero", rep.ms_zero},
                        {"syzygy_span", rep.syzygy_span},
                        {"minors_vs_subpf", rep.minors_vs_subpf},
                        {"rank0_tag", rep.rank0_tag},
                        {"tangent_codim", tc},
                        {"orbit_codim", oc},
                        {"cone_fixture", cone_ok},
                        {"pass", row_ok}});
  }
  out["rows"] = rows;
  out["pass"] = all_ok;
  emit(out, opt);
  return all_ok ? 0 : 1;
}

int run_verify_strata(const Options& opt) {
  Json out = report_shell("verify-strata", opt, "");
  Json rows = Json::array();
  bool all_ok = true;
  for (skewpf::Arrow a : skewpf::all_arrows()) {
    skewpf::FamilyReport rep = skewpf::verify_family(a, opt.seed);
    bool ok = rep.all();
    all_ok = all_ok && ok;
    Json row{{"arrow", skewpf::arrow_name(a)},
             {"pf_zero", rep.pf_zero},
             {"endpoints", rep.endpoints},
             {"rank2_jet", rep.rank2_jet},
             {"pass", ok}};
    row["subpf_in_ideals"] = rep.subpf_in_ideals ? Json(*rep.subpf_in_ideals) : Json("n/a");
    rows.push_back(row);
  }
  out["rows"] = rows;
  out["pass"] = all_ok;
  emit(out, opt);
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification toolkit for 6x6 skew matrices of linear forms with "
               "vanishing Pfaffian: catalog classification, tangent data, degenerations, "
               "and the closure oracle for Pfaffian representations of cubics"};
  app.require_subcommand(1);

  Options opt;

  auto add_common = [&](CLI::App* sub, bool needs_input) {
    if (needs_input) sub->add_option("--input", opt.input, "input JSON file")->required();
    sub->add_flag("--pretty", opt.pretty, "indent JSON output");
    sub->add_option("--seed", opt.seed, "seed for randomized checks")->capture_default_str();
  };

  CLI::App* c_classify = app.add_subcommand("classify", "type and stability of a matrix");
  add_common(c_classify, true);
  CLI::App* c_pf = app.add_subcommand("pfaffian", "Pfaffian of a matrix");
  add_common(c_pf, true);
  CLI::App* c_tangent = app.add_subcommand("tangent", "tangent-space codimension");
  add_common(c_tangent, true);
  CLI::App* c_cone = app.add_subcommand("cone", "degree-2 tangent cone report");
  add_common(c_cone, true);
  CLI::App* c_closure = app.add_subcommand("closure", "closure membership for (matrix, cubic)");
  add_common(c_closure, true);
  c_closure->add_option("--colon-cap", opt.colon_cap, "saturation iteration cap")
      ->capture_default_str();
  CLI::App* c_jets = app.add_subcommand("jets", "jet Pfaffian of a matrix jet");
  add_common(c_jets, true);
  c_jets->add_option("--jet-order", opt.jet_order, "truncate the input jet to this order")
      ->capture_default_str();
  CLI::App* c_vt = app.add_subcommand("verify-tables", "re-derive the catalog tables");
  add_common(c_vt, false);
  CLI::App* c_vs = app.add_subcommand("verify-strata", "verify the degeneration families");
  add_common(c_vs, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(c_classify)) return run_classify(opt);
    if (app.got_subcommand(c_pf)) return run_pfaffian(opt);
    if (app.got_subcommand(c_tangent)) return run_tangent(opt);
    if (app.got_subcommand(c_cone)) return run_cone(opt);
    if (app.got_subcommand(c_closure)) return run_closure(opt);
    if (app.got_subcommand(c_jets)) return run_jets(opt);
    if (app.got_subcommand(c_vt)) return run_verify_tables(opt);
    if (app.got_subcommand(c_vs)) return run_verify_strata(opt);
  } catch (const skewpf::Error& e) {
    Json err{{"error", e.what()}};
    std::cerr << err.dump() << std::endl;
    return e.code() == skewpf::Errc::BadInput ? 2 : 1;
  } catch (const Json::exception& e) {
    Json err{{"error", std::string("malformed input: ") + e.what()}};
    std::cerr << err.dump() << std::endl;
    return 2;
  }
  return 2;
}
