// Copyright 2026 The bihom Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "bihom_cli/commands.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "bihom/cohomology.hpp"
#include "bihom/deformation.hpp"
#include "bihom/errors.hpp"
#include "bihom/extension.hpp"
#include "bihom/genderiv.hpp"
#include "bihom_cli/io.hpp"

namespace bihom::cli {

namespace {

struct Report {
  Report() = default;
  explicit Report(std::string cmd, bool pass = true) : command(std::move(cmd)), passed(pass) {}

  std::string command;
  bool passed = true;
  Json payload = Json::object();
  std::vector<std::string> diagnostics;

  void add_witnesses(const std::vector<Witness>& ws) {
    Json& arr = payload["witnesses"];
    if (!arr.is_array()) arr = Json::array();
    for (const auto& w : ws) arr.push_back(w.describe());
  }

  Outcome finish() const {
    Json j;
    j["command"] = command;
    j["status"] = passed ? "pass" : "fail";
    j["payload"] = payload;
    j["diagnostics"] = diagnostics;
    return {passed ? kExitPass : kExitFail, j.dump(2) + "\n"};
  }
};

Outcome error_outcome(const std::string& command, const std::string& message) {
  Json j;
  j["command"] = command;
  j["status"] = "error";
  j["payload"] = Json::object();
  j["diagnostics"] = Json::array({message});
  return {kExitError, j.dump(2) + "\n"};
}

struct Inputs {
  std::string algebra;
  std::string representation;
  std::string cocycle;
  std::string deformation;
  int degree = 0;
  std::optional<std::size_t> max_order;
  std::string kind;
  int k = 0;
  int l = 0;
};

BiHomAlgebra load_algebra(const std::string& path) {
  return algebra_from_json(read_json_file(path), path);
}

// The representation file if given, else the adjoint.
Representation load_representation(const std::string& path, const BiHomAlgebra& alg,
                                   Report& report) {
  if (path.empty()) {
    report.diagnostics.push_back("coefficients: adjoint representation");
    return adjoint(alg);
  }
  Representation rep = representation_from_json(read_json_file(path), path);
  if (rep.alg_dim() != alg.dim()) {
    throw InputError(path + ": alg_dim " + std::to_string(rep.alg_dim()) +
                     " does not match the algebra dimension " + std::to_string(alg.dim()));
  }
  return rep;
}

Json algebra_checks(const AlgebraReport& r) {
  Json j;
  j["commuting"] = r.commuting;
  j["alpha_multiplicative"] = r.alpha_multiplicative;
  j["beta_multiplicative"] = r.beta_multiplicative;
  j["left_alternative"] = r.left_alternative;
  j["right_alternative"] = r.right_alternative;
  return j;
}

Json representation_checks(const RepresentationReport& r) {
  Json j;
  j["commuting"] = r.commuting;
  j["phi_left"] = r.phi_left;
  j["phi_right"] = r.phi_right;
  j["psi_left"] = r.psi_left;
  j["psi_right"] = r.psi_right;
  j["rep1"] = r.rep1;
  j["rep2"] = r.rep2;
  j["rep3"] = r.rep3;
  j["rep4"] = r.rep4;
  return j;
}

void attach_algebra(Report& report, const BiHomAlgebra& alg) {
  AlgebraReport check = validate(alg);
  report.payload["algebra"] = algebra_to_json(alg);
  report.payload["checks"] = algebra_checks(check);
  report.passed = check.ok();
  report.add_witnesses(check.witnesses);
}

void attach_representation(Report& report, const BiHomAlgebra& alg, const Representation& rep) {
  RepresentationReport check = validate_representation(alg, rep);
  report.payload["representation"] = representation_to_json(rep);
  report.payload["checks"] = representation_checks(check);
  report.passed = check.ok();
  report.add_witnesses(check.witnesses);
}

Multilinear load_cocycle(const std::string& path, const BiHomAlgebra& alg,
                         std::size_t mod_dim, const char* expected_target) {
  CochainFile file = cochain_from_json(read_json_file(path), path);
  if (file.tensor.arity() != 2) throw InputError(path + ": cocycle must have degree 2");
  if (file.tensor.in_dim() != alg.dim()) {
    throw InputError(path + ": alg_dim does not match the algebra dimension");
  }
  if (expected_target && file.target && *file.target != expected_target) {
    throw InputError(path + ": target \"" + *file.target + "\" where \"" + expected_target +
                     "\" is required");
  }
  if (mod_dim != 0 && file.tensor.out_dim() != mod_dim) {
    throw InputError(path + ": mod_dim " + std::to_string(file.tensor.out_dim()) +
                     " does not match the module dimension " + std::to_string(mod_dim));
  }
  return std::move(file.tensor);
}

TruncatedDeformation padded(const TruncatedDeformation& defm, std::size_t order) {
  TruncatedDeformation out{defm.alg, {}};
  for (std::size_t i = 1; i <= order; ++i) out.terms.push_back(defm.term(i));
  return out;
}

Report cmd_validate(const Inputs& in) {
  Report report{"validate"};
  const BiHomAlgebra alg = load_algebra(in.algebra);
  AlgebraReport check = validate(alg);
  report.payload["dim"] = alg.dim();
  report.payload["checks"] = algebra_checks(check);
  report.passed = check.ok();
  report.add_witnesses(check.witnesses);
  return report;
}

Report cmd_rep(const std::string& verb, const Inputs& in) {
  Report report{"rep " + verb};
  const BiHomAlgebra alg = load_algebra(in.algebra);
  if (verb == "coadjoint") {
    attach_representation(report, alg, coadjoint(alg));
    return report;
  }
  const Representation rep = load_representation(in.representation, alg, report);
  if (verb == "validate") {
    RepresentationReport check = validate_representation(alg, rep);
    report.payload["checks"] = representation_checks(check);
    report.passed = check.ok();
    report.add_witnesses(check.witnesses);
  } else if (verb == "dual") {
    attach_representation(report, alg, dual(RegularRepresentation(alg, rep), alg));
  } else {
    attach_algebra(report, semidirect(alg, rep));
  }
  return report;
}

Report cmd_cohomology(const Inputs& in) {
  Report report{"cohomology"};
  const BiHomAlgebra alg = load_algebra(in.algebra);
  const Representation rep = load_representation(in.representation, alg, report);
  const ComplexReport r = complex_report(alg, rep, in.degree);
  report.payload["degree"] = r.degree;
  report.payload["dim_C"] = r.dim_C;
  report.payload["dim_Z"] = r.dim_Z;
  report.payload["dim_B"] = r.dim_B;
  report.payload["dim_H"] = r.dim_H;
  return report;
}

Report cmd_deform(const std::string& verb, const Inputs& in) {
  Report report{"deform " + verb};
  const TruncatedDeformation defm =
      deformation_from_json(read_json_file(in.deformation), in.deformation);
  const std::size_t order = in.max_order.value_or(defm.order());
  if (verb == "check") {
    const DeformationReport r = check_deformation(padded(defm, order));
    report.payload["order"] = order;
    report.payload["orders"] = r.orders;
    report.passed = r.ok();
    report.add_witnesses(r.witnesses);
  } else if (verb == "extend") {
    const auto term = extend_one_order(defm);
    const std::size_t m = defm.order() + 1;
    report.payload["order"] = m;
    if (term) {
      TruncatedDeformation extended = defm;
      extended.terms.push_back(*term);
      report.payload["term"] = tensor_to_json(*term);
      report.payload["deformation"] = deformation_to_json(extended);
    } else {
      report.passed = false;
      report.add_witnesses({{"obstruction_not_coboundary", {m}}});
    }
  } else {
    const TrivializeResult r = trivialize(defm, order);
    report.payload["max_order"] = order;
    if (r.isomorphism) {
      Json terms = Json::array();
      for (const auto& t : r.isomorphism->terms) terms.push_back(matrix_to_json(t));
      report.payload["isomorphism"] = std::move(terms);
    } else {
      report.passed = false;
      report.payload["failed_order"] = *r.failed_order;
      report.payload["residual"] = deformation_to_json(r.residual);
      report.add_witnesses({{"leading_term_not_coboundary", {*r.failed_order}}});
    }
  }
  return report;
}

Report cmd_extend(const std::string& verb, const Inputs& in) {
  Report report{"extend " + verb};
  const BiHomAlgebra alg = load_algebra(in.algebra);
  auto build = [&](auto&& construct) {
    try {
      const BiHomAlgebra out = construct();
      report.payload["algebra"] = algebra_to_json(out);
      report.payload["annihilator_dim"] = annihilator(out).dim();
    } catch (const ConstructionError& e) {
      report.passed = false;
      report.diagnostics.push_back(e.what());
      report.add_witnesses(e.witnesses());
    }
  };
  if (verb == "central") {
    const Multilinear omega = load_cocycle(in.cocycle, alg, 0, "module");
    const CentralReport r = check_central_cocycle(alg, omega);
    report.payload["conditions"] = {{"alpha_invariant", r.alpha_invariant},
                                    {"beta_invariant", r.beta_invariant},
                                    {"left_condition", r.left_condition},
                                    {"right_condition", r.right_condition}};
    build([&] { return central_extension(alg, omega.out_dim(), omega); });
    return report;
  }
  const Representation rep = load_representation(in.representation, alg, report);
  if (verb == "ttheta") {
    const Multilinear theta = load_cocycle(in.cocycle, alg, rep.mod_dim(), "module");
    const ThetaReport r = check_theta_cocycle(alg, rep, theta);
    report.payload["conditions"] = {{"phi_compatible", r.phi_compatible},
                                    {"psi_compatible", r.psi_compatible},
                                    {"left_cocycle", r.left_cocycle},
                                    {"right_cocycle", r.right_cocycle}};
    build([&] { return t_theta_extension(alg, rep, theta); });
  } else {
    const RegularRepresentation reg(alg, rep);
    const Multilinear theta = load_cocycle(in.cocycle, alg, rep.mod_dim(), "dual");
    const ThetaReport r = check_theta_cocycle(alg, dual(reg, alg), theta);
    report.payload["conditions"] = {{"phi_compatible", r.phi_compatible},
                                    {"psi_compatible", r.psi_compatible},
                                    {"left_cocycle", r.left_cocycle},
                                    {"right_cocycle", r.right_cocycle}};
    build([&] { return t_star_theta_extension(alg, reg, theta); });
  }
  return report;
}

Report cmd_derivations(const Inputs& in) {
  Report report{"derivations"};
  const BiHomAlgebra alg = load_algebra(in.algebra);
  const OperatorKind kind = parse_operator_kind(in.kind);
  const OperatorSpace space = operator_space(alg, kind, {in.k, in.l});
  report.payload["kind"] = to_string(kind);
  report.payload["k"] = in.k;
  report.payload["l"] = in.l;
  report.payload["dim"] = space.dim();
  Json basis = Json::array();
  for (const auto& m : space.basis) basis.push_back(matrix_to_json(m));
  report.payload["basis"] = std::move(basis);
  if (!space.witnesses.empty()) {
    Json assoc = Json::array();
    for (const auto& ws : space.witnesses) {
      Json entry = Json::array();
      for (const auto& m : ws) entry.push_back(matrix_to_json(m));
      assoc.push_back(std::move(entry));
    }
    report.payload["associated"] = std::move(assoc);
  }
  return report;
}

}  // namespace

Outcome run(const std::vector<std::string>& args) {
  CLI::App app{"Exact computations for BiHom-alternative algebras", "bihom"};
  app.require_subcommand(1);
  Inputs in;

  auto add_algebra = [&](CLI::App* sub) {
    sub->add_option("algebra", in.algebra, "Algebra file (.bha)")->required();
  };
  auto add_rep = [&](CLI::App* sub) {
    sub->add_option("representation", in.representation,
                    "Representation file (.bhr); the adjoint when omitted");
  };

  auto* validate_cmd = app.add_subcommand("validate", "Check the BiHom-alternative identities");
  add_algebra(validate_cmd);

  auto* rep_cmd = app.add_subcommand("rep", "Representations");
  rep_cmd->require_subcommand(1);
  std::vector<CLI::App*> rep_verbs;
  for (const char* verb : {"validate", "dual", "coadjoint", "semidirect"}) {
    auto* sub = rep_cmd->add_subcommand(verb);
    add_algebra(sub);
    if (std::string(verb) != "coadjoint") add_rep(sub);
    rep_verbs.push_back(sub);
  }

  auto* coh_cmd = app.add_subcommand("cohomology", "Dimensions of C, Z, B, H in degree 2 or 3");
  coh_cmd->add_option("--degree", in.degree, "2 or 3")->required()->check(CLI::IsMember({2, 3}));
  add_algebra(coh_cmd);
  add_rep(coh_cmd);

  auto* deform_cmd = app.add_subcommand("deform", "Truncated formal deformations");
  deform_cmd->require_subcommand(1);
  std::vector<CLI::App*> deform_verbs;
  for (const char* verb : {"check", "extend", "trivialize"}) {
    auto* sub = deform_cmd->add_subcommand(verb);
    sub->add_option("deformation", in.deformation, "Deformation file (.bhd)")->required();
    if (std::string(verb) != "extend") {
      sub->add_option("--max-order", in.max_order, "Truncation order")
          ->check(CLI::NonNegativeNumber);
    }
    deform_verbs.push_back(sub);
  }

  auto* extend_cmd = app.add_subcommand("extend", "Central, T_theta and T*_theta extensions");
  extend_cmd->require_subcommand(1);
  std::vector<CLI::App*> extend_verbs;
  for (const char* verb : {"central", "ttheta", "tstar"}) {
    auto* sub = extend_cmd->add_subcommand(verb);
    add_algebra(sub);
    sub->add_option("cocycle", in.cocycle, "Degree-2 cochain file (.bhc)")->required();
    if (std::string(verb) != "central") add_rep(sub);
    extend_verbs.push_back(sub);
  }

  auto* der_cmd = app.add_subcommand("derivations", "Generalized derivation spaces");
  der_cmd->add_option("--kind", in.kind, "u|der|qder|gder|sgder|cent|qcent")
      ->required()
      ->check(CLI::IsMember({"u", "der", "qder", "gder", "sgder", "cent", "qcent"}));
  der_cmd->add_option("--k", in.k, "Exponent of alpha");
  der_cmd->add_option("--l", in.l, "Exponent of beta");
  add_algebra(der_cmd);

  std::string command = args.empty() ? "" : args.front();
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream out, err;
    app.exit(e, out, err);
    return {kExitPass, out.str()};
  } catch (const CLI::ParseError& e) {
    return error_outcome(command, std::string("usage: ") + e.what());
  }

  auto parsed_verb = [](const std::vector<CLI::App*>& verbs) {
    for (auto* v : verbs) {
      if (v->parsed()) return v->get_name();
    }
    return std::string();
  };

  try {
    Report report;
    if (validate_cmd->parsed()) {
      report = cmd_validate(in);
    } else if (rep_cmd->parsed()) {
      report = cmd_rep(parsed_verb(rep_verbs), in);
    } else if (coh_cmd->parsed()) {
      report = cmd_cohomology(in);
    } else if (deform_cmd->parsed()) {
      report = cmd_deform(parsed_verb(deform_verbs), in);
    } else if (extend_cmd->parsed()) {
      report = cmd_extend(parsed_verb(extend_verbs), in);
    } else {
      report = cmd_derivations(in);
    }
    return report.finish();
  } catch (const InputError& e) {
    return error_outcome(command, std::string("input error: ") + e.what());
  } catch (const PreconditionError& e) {
    return error_outcome(command, std::string("precondition error: ") + e.what());
  } catch (const ConstructionError& e) {
    Report report{command, false};
    report.diagnostics.push_back(e.what());
    report.add_witnesses(e.witnesses());
    return report.finish();
  } catch (const std::exception& e) {
    return error_outcome(command, std::string("internal error: ") + e.what());
  }
}

}  // namespace bihom::cli
