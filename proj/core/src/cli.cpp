#include "mpp/cli.hpp"

#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "mpp/correspondence.hpp"
#include "mpp/expr.hpp"

namespace mpp {

namespace {

using nlohmann::json;

const char* className(const Parameter& phi, std::size_t blockIndex) {
  for (int i : phi.iPlus())
    if (i == static_cast<int>(blockIndex)) return "I+";
  for (int i : phi.iMinus())
    if (i == static_cast<int>(blockIndex)) return "I-";
  return "J";
}

json blockJson(const Parameter& phi, std::size_t i) {
  const auto& [b, m] = phi.blocks()[i];
  json j;
  j["char"] = print_label(b.rho);
  j["a"] = b.a;
  j["mult"] = m;
  j["dim"] = b.dim();
  j["class"] = className(phi, i);
  return j;
}

std::string factorName(const CentralizerFactor& f) {
  switch (f.kind) {
    case FactorKind::Orthogonal: return "O(" + std::to_string(f.size) + ")";
    case FactorKind::Symplectic: return "Sp(" + std::to_string(f.size) + ")";
    case FactorKind::GeneralLinear: return "GL(" + std::to_string(f.size) + ")";
  }
  return "?";
}

json paramJson(const Parameter& phi, const PsiConductor& psi) {
  json j;
  j["expr"] = print_parameter(phi);
  j["rank"] = phi.rank();
  json blocks = json::array();
  for (std::size_t i = 0; i < phi.blocks().size(); ++i) blocks.push_back(blockJson(phi, i));
  j["blocks"] = blocks;
  ComponentData cd = component_data(phi);
  json cz = json::array();
  for (const CentralizerFactor& f : cd.shape.factors) cz.push_back(factorName(f));
  j["centralizer"] = cz;
  j["componentGroupRank"] = cd.group.rankLog2();
  j["zPhi"] = print_signs(cd.zPhi);
  Flags fl = flags(phi);
  j["flags"] = {{"bounded", fl.bounded}, {"discrete", fl.discrete}, {"goodParity", fl.goodParity}};
  try {
    j["nu"] = print_signs(nu_char(phi, psi));
  } catch (const Error&) {
    j["nu"] = nullptr;
  }
  return j;
}

json leviJson(const LeviShape& shape) {
  json j;
  j["spRank"] = shape.spRank;
  j["glSizes"] = shape.glSizes;
  return j;
}

json supportJson(const Parameter& phi) {
  json j;
  {
    TemperedSupport ts = tempered_support(phi);
    json t;
    t["phi0"] = print_parameter(ts.phi0);
    json parts = json::array();
    for (const GlPart& p : ts.glParts) {
      json pj;
      pj["exponent"] = p.exponent.str();
      json bl = json::array();
      for (const auto& [b, m] : p.blocks) {
        json e;
        e["block"] = print_block(b);
        e["mult"] = m;
        bl.push_back(e);
      }
      pj["blocks"] = bl;
      parts.push_back(pj);
    }
    t["glParts"] = parts;
    t["shape"] = leviJson(ts.shape);
    j["tempered"] = t;
  }
  if (phi.bounded()) {
    GoodParitySplit gs = good_parity_split(phi);
    json g;
    g["gp"] = print_parameter(gs.gp);
    json ngp = json::array();
    for (const auto& [b, m] : gs.ngp) {
      json e;
      e["block"] = print_block(b);
      e["mult"] = m;
      ngp.push_back(e);
    }
    g["ngp"] = ngp;
    j["goodParity"] = g;

    DiscreteSupport ds = discrete_support(phi);
    json d;
    d["phi0"] = print_parameter(ds.phi0);
    json gl = json::array();
    for (const auto& [b, copies] : ds.glBlocks) {
      json e;
      e["block"] = print_block(b);
      e["copies"] = copies;
      gl.push_back(e);
    }
    d["glBlocks"] = gl;
    d["shape"] = leviJson(ds.shape);
    d["weylOrder"] = ds.weylOrder;
    json wf = json::array();
    for (const TowerFactor& tf : ds.weylFactors) {
      json e;
      switch (tf.kind) {
        case FactorKind::Orthogonal: e["kind"] = "signed-permutations"; break;
        case FactorKind::Symplectic: e["kind"] = "type-C"; break;
        case FactorKind::GeneralLinear: e["kind"] = "symmetric"; break;
      }
      e["rank"] = tf.rank;
      e["block"] = print_block(phi.blocks()[static_cast<std::size_t>(tf.blockIndex)].first);
      e["pTotalSign"] = tf.totalSignToP;
      wf.push_back(e);
    }
    d["weylFactors"] = wf;
    j["discrete"] = d;
  }
  return j;
}

json verifyNodeJson(const VerifyNode& n) {
  json j;
  j["stage"] = n.stage;
  if (!n.detail.empty()) j["detail"] = n.detail;
  if (!n.children.empty()) {
    json kids = json::array();
    for (const auto& [label, child] : n.children) {
      json k;
      k["label"] = label;
      k["node"] = verifyNodeJson(child);
      kids.push_back(k);
    }
    j["children"] = kids;
  }
  return j;
}

json verifyReportJson(const VerifyReport& rep) {
  json j;
  j["input"] = {{"expr", print_parameter(rep.input.phi)}, {"chi", print_signs(rep.input.chi)}};
  j["membership"] = membershipName(rep.membership);
  j["derived"] = print_signs(rep.derived);
  j["closedForm"] = print_signs(rep.closedForm);
  j["agreement"] = rep.agreement;
  j["pathIndependent"] = rep.pathIndependent;
  j["tree"] = verifyNodeJson(rep.tree);
  return j;
}

Parameter paramFromExpr(const std::string& expr) { return normalize(parse_param_expr(expr)); }

InvolutionSignature signatureFromString(const std::string& s, const Parameter& phi) {
  ComponentData cd = component_data(phi);
  InvolutionSignature sig;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    sig.k.push_back(std::stoi(tok));
  }
  checkSignature(cd.shape, sig);
  return sig;
}

SimpleBlock blockFromString(const std::string& s) {
  std::size_t comma = s.rfind(',');
  if (comma == std::string::npos) fail(Err::Syntax, "--block expects \"char,a\"");
  std::string charPart = s.substr(0, comma);
  // reuse the expression parser on a synthetic one-block term
  std::vector<BlockSpec> specs = parse_param_expr("[" + charPart + " x S(" + s.substr(comma + 1) + ")]");
  return SimpleBlock{specs[0].rho, specs[0].a};
}

std::string textOf(const json& j, int indent = 0) {
  // plain-text rendering: "key: value" lines, nested by two spaces
  std::string out;
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.value().is_object() || it.value().is_array()) {
        out += pad + it.key() + ":\n" + textOf(it.value(), indent + 2);
      } else {
        out += pad + it.key() + ": " + (it.value().is_string() ? it.value().get<std::string>() : it.value().dump()) + "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object() || v.is_array()) {
        out += pad + "-\n" + textOf(v, indent + 2);
      } else {
        out += pad + "- " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
      }
    }
  } else {
    out += pad + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
  }
  return out;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CLI::App app{"exact calculator for enhanced L-parameters of Mp(2n) and SO(2n+1)"};
  app.require_subcommand(1);

  int e2 = 0;
  int dPsi = -1;  // -1: derive from e2
  bool asText = false;
  bool asJson = false;
  app.add_option("--e2", e2, "valuation of 2 (default 0)");
  app.add_option("--d-psi", dPsi, "conductor exponent of psi (default 2*e2)");
  app.add_flag("--text", asText, "plain-text output");
  app.add_flag("--json", asJson, "JSON output (default)");

  std::string expr, chiStr, sigStr, blockStr, wordStr, phasesStr = "1,-1";
  std::string sideStr = "-";
  int rank = 0;
  bool exhaustive = false, discreteOnly = false, withSupport = false;
  int weylN = 1;

  CLI::App* analyze = app.add_subcommand("analyze", "classify a parameter");
  analyze->add_option("expr", expr)->required();
  analyze->add_flag("--support", withSupport, "include support decompositions");

  CLI::App* transfer = app.add_subcommand("transfer", "apply the enhancement twist");
  transfer->add_option("expr", expr)->required();
  transfer->add_option("--chi", chiStr)->required();
  std::string dirStr = "mp-to-so";
  transfer->add_option("--direction", dirStr)->check(CLI::IsMember({"mp-to-so", "so-to-mp"}));

  CLI::App* verify = app.add_subcommand("verify", "run the pipeline verifier");
  verify->add_option("expr", expr);
  verify->add_option("--chi", chiStr);
  verify->add_option("--rank", rank);
  verify->add_flag("--exhaustive", exhaustive);

  CLI::App* factors = app.add_subcommand("factors", "exact L/eps/gamma data");
  factors->add_option("expr", expr)->required();
  factors->add_option("--s", sigStr, "involution signature k per centralizer factor");

  CLI::App* endo = app.add_subcommand("endoscopy", "endoscopic factorization");
  endo->add_option("expr", expr)->required();
  endo->add_option("--s", sigStr);

  CLI::App* descend = app.add_subcommand("descend", "parameter-level Jacquet descent");
  descend->add_option("expr", expr)->required();
  descend->add_option("--chi", chiStr)->required();
  descend->add_option("--block", blockStr, "block \"char,a\" to descend along");

  CLI::App* weyl = app.add_subcommand("weyl", "signed-permutation word calculus");
  weyl->add_option("--n", weylN)->required();
  weyl->add_option("--word", wordStr)->required();
  weyl->add_option("--side", sideStr)->check(CLI::IsMember({"+", "-"}));

  CLI::App* enumerate = app.add_subcommand("enumerate", "list parameters at a rank");
  enumerate->add_option("--rank", rank)->required();
  enumerate->add_flag("--discrete", discreteOnly);
  enumerate->add_option("--phases", phasesStr, "subset of 1,-1,i,-i");

  CliResult res;
  std::vector<const char*> argv;
  argv.push_back("mpp");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    res.out = app.help();
    return res;
  } catch (const CLI::ParseError& e) {
    res.exitCode = 2;
    res.err = std::string(e.what()) + "\n";
    return res;
  }

  const PsiConductor psi{dPsi >= 0 ? dPsi : 2 * e2, e2};
  json j;
  try {
    if (*analyze) {
      Parameter phi = paramFromExpr(expr);
      j = paramJson(phi, psi);
      j["command"] = "analyze";
      if (withSupport) j["support"] = supportJson(phi);
    } else if (*transfer) {
      Parameter phi = paramFromExpr(expr);
      Character chi = parse_signs(chiStr, static_cast<int>(phi.iPlus().size()));
      EnhancedParameter e{phi, chi};
      Direction dir = dirStr == "mp-to-so" ? Direction::MpToSO : Direction::SOToMp;
      EnhancedParameter out = tw_transfer(e, psi, dir);
      CentralSigns cs = central_sign_and_sides(e, psi);
      j["command"] = "transfer";
      j["expr"] = print_parameter(phi);
      j["chiIn"] = print_signs(chi);
      j["chiOut"] = print_signs(out.chi);
      j["nu"] = print_signs(nu_char(phi, psi));
      j["centralSign"] = cs.centralSign;
      j["soSide"] = cs.soSide;
    } else if (*verify) {
      Pipeline pipe(psi);
      if (exhaustive) {
        EnumOpts opts;
        std::vector<EnhancedParameter> all = enumerate_enhanced(rank, opts);
        // fan out over the parameter stream; the memo is the only shared state
        std::vector<std::optional<VerifyReport>> results(all.size());
        const std::size_t nThreads =
            std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), 8);
        std::vector<std::thread> workers;
        for (std::size_t t = 0; t < nThreads; ++t)
          workers.emplace_back([&, t] {
            for (std::size_t i = t; i < all.size(); i += nThreads)
              if (pipe.block_membership(all[i]) != Membership::Outside)
                results[i] = pipe.verify_pipeline(all[i]);
          });
        for (auto& w : workers) w.join();
        json reports = json::array();
        int classified = 0;
        bool allAgree = true, allIndependent = true;
        for (const auto& rep : results) {
          if (!rep) continue;
          ++classified;
          allAgree = allAgree && rep->agreement;
          allIndependent = allIndependent && rep->pathIndependent;
          reports.push_back(verifyReportJson(*rep));
        }
        j["command"] = "verify";
        j["rank"] = rank;
        j["enhancedCount"] = all.size();
        j["classified"] = classified;
        j["allAgree"] = allAgree;
        j["allPathIndependent"] = allIndependent;
        j["reports"] = reports;
      } else {
        if (expr.empty())
          throw std::runtime_error("verify needs an expression with --chi, or --exhaustive");
        Parameter phi = paramFromExpr(expr);
        Character chi = parse_signs(chiStr, static_cast<int>(phi.iPlus().size()));
        VerifyReport rep = pipe.verify_pipeline({phi, chi});
        j = verifyReportJson(rep);
        j["command"] = "verify";
      }
    } else if (*factors) {
      Parameter phi = paramFromExpr(expr);
      j["command"] = "factors";
      j["expr"] = print_parameter(phi);
      if (!sigStr.empty()) {
        InvolutionSignature sig = signatureFromString(sigStr, phi);
        j["epsMinusPart"] = eps_minus_part(phi, sig, psi).str();
        j["image"] = print_signs(involutionImage(phi, sig));
      } else {
        LGamma lg = L_and_gamma(phi, psi);
        j["L"] = lg.L.str();
        j["gammaHalf"] = lg.gammaHalf.str();
        j["nu"] = print_signs(nu_char(phi, psi));
        json eps = json::array();
        for (const auto& [b, m] : phi.blocks()) {
          json e;
          e["block"] = print_block(b);
          e["eps"] = eps_half_block(b, psi).str();
          eps.push_back(e);
        }
        j["epsPerBlock"] = eps;
      }
    } else if (*endo) {
      Parameter phi = paramFromExpr(expr);
      j["command"] = "endoscopy";
      j["expr"] = print_parameter(phi);
      if (sigStr.empty()) {
        json sigs = json::array();
        for (const InvolutionSignature& s : involutions(phi)) {
          json e;
          std::string ks;
          for (std::size_t i = 0; i < s.k.size(); ++i) {
            if (i) ks += ",";
            ks += std::to_string(s.k[i]);
          }
          e["s"] = ks;
          e["image"] = print_signs(involutionImage(phi, s));
          Factorization f = factorize(phi, s);
          e["datum"] = {f.datum.nPrime, f.datum.nDoublePrime};
          sigs.push_back(e);
        }
        j["involutions"] = sigs;
      } else {
        InvolutionSignature sig = signatureFromString(sigStr, phi);
        TransferTerm t = t_phi_s(phi, sig, psi);
        j["datum"] = {t.fac.datum.nPrime, t.fac.datum.nDoublePrime};
        j["phiPrime"] = print_parameter(t.fac.phiPrime);
        j["phiDouble"] = print_parameter(t.fac.phiDouble);
        j["sign"] = t.sign.str();
        j["image"] = print_signs(involutionImage(phi, sig));
      }
    } else if (*descend) {
      Parameter phi = paramFromExpr(expr);
      Character chi = parse_signs(chiStr, static_cast<int>(phi.iPlus().size()));
      j["command"] = "descend";
      j["expr"] = print_parameter(phi);
      j["chi"] = print_signs(chi);
      if (blockStr.empty()) {
        json cs = json::array();
        for (const Choice& c : valid_choices(phi, chi, psi)) {
          json e;
          e["block"] = print_block(c.block);
          e["case"] = c.tag == DescentTag::Case1 ? 1 : (c.tag == DescentTag::Case2 ? 2 : 3);
          e["alphaPrime"] = c.alphaPrime;
          e["alphaDouble"] = c.alphaDouble;
          cs.push_back(e);
        }
        j["validChoices"] = cs;
      } else {
        SimpleBlock blk = blockFromString(blockStr);
        ComponentDescent cd = component_descent(phi, blk);
        EnhancedParameter low = jacquet_enhanced(phi, chi, blk, psi);
        j["phiMinus"] = print_parameter(low.phi);
        j["chiMinus"] = print_signs(low.chi);
        j["case"] = cd.pd.dcase.tag == DescentTag::Case1 ? 1
                    : (cd.pd.dcase.tag == DescentTag::Case2 ? 2 : 3);
        switch (cd.kernel.kind) {
          case KernelKind::Trivial: j["kernel"] = "trivial"; break;
          case KernelKind::Diagonal: j["kernel"] = "diagonal"; break;
          case KernelKind::Coordinate: j["kernel"] = "coordinate"; break;
        }
      }
    } else if (*weyl) {
      GeneratorWord word;
      std::stringstream ss(wordStr);
      std::string tok;
      while (std::getline(ss, tok, ','))
        if (!tok.empty()) word.letters.push_back(std::stoi(tok));
      ReducedResult rr = evaluate_and_reduce(weylN, word);
      j["command"] = "weyl";
      j["n"] = weylN;
      j["w"] = rr.w.str();
      j["length"] = rr.length;
      std::string red;
      for (std::size_t i = 0; i < rr.reduced.letters.size(); ++i) {
        if (i) red += ",";
        red += std::to_string(rr.reduced.letters[i]);
      }
      j["reduced"] = red;
      j["t"] = {{"roots", t_invariant(rr.w, TMode::Roots)},
                {"components", t_invariant(rr.w, TMode::Components)},
                {"word", t_invariant(rr.w, TMode::Word)}};
      ComparisonScalar plus = comparison_scalar(rr.w, '+', e2);
      ComparisonScalar minus = comparison_scalar(rr.w, '-', e2);
      j["plusScalar"] = plus.value.str();
      j["minusScalar"] = minus.value.str();
      j["gammaExponent"] = plus.gammaExponent;
      j["scalar"] = (sideStr == "+") ? plus.value.str() : minus.value.str();
    } else if (*enumerate) {
      EnumOpts opts;
      opts.discreteOnly = discreteOnly;
      opts.phaseOne = false;
      opts.phaseMinusOne = false;
      opts.phaseI = false;
      {
        std::stringstream ss(phasesStr);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
          if (tok == "1" || tok == "+1")
            opts.phaseOne = true;
          else if (tok == "-1")
            opts.phaseMinusOne = true;
          else if (tok == "i" || tok == "-i" || tok == "+i")
            opts.phaseI = true;
          else if (!tok.empty())
            fail(Err::Syntax, "unknown phase '" + tok + "'");
        }
      }
      std::vector<Parameter> all = enumerate_parameters(rank, opts);
      j["command"] = "enumerate";
      j["rank"] = rank;
      j["count"] = all.size();
      json list = json::array();
      for (const Parameter& p : all) list.push_back(print_parameter(p));
      j["parameters"] = list;
    }
  } catch (const Error& e) {
    res.exitCode = 1;
    res.err = std::string(e.what()) + "\n";
    return res;
  } catch (const std::exception& e) {
    res.exitCode = 2;
    res.err = std::string(e.what()) + "\n";
    return res;
  }

  res.out = asText ? textOf(j) : j.dump(2) + "\n";
  return res;
}

}  // namespace mpp
