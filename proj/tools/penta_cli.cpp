#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "penta/json_io.hpp"
#include "penta/specfact.hpp"

namespace {

using penta::io::json;

json read_input(const std::string& path) {
  std::istream* in = &std::cin;
  std::ifstream file;
  if (!path.empty() && path != "-") {
    file.open(path);
    if (!file) penta::fail(penta::ErrorCode::Data, "cannot open " + path);
    in = &file;
  }
  json j;
  try {
    *in >> j;
  } catch (const std::exception& e) {
    penta::fail(penta::ErrorCode::Data, std::string("JSON parse: ") + e.what());
  }
  return j;
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream f(out_path);
    if (!f) penta::fail(penta::ErrorCode::Data, "cannot open " + out_path);
    f << j.dump(2) << "\n";
  }
}

int exit_code_for(penta::ErrorCode code) {
  switch (code) {
    case penta::ErrorCode::NotNonnegative:
      return 3;
    case penta::ErrorCode::Infeasible:
      return 4;
    case penta::ErrorCode::Data:
    case penta::ErrorCode::Domain:
    case penta::ErrorCode::Degree:
      return 2;
    default:
      return 5;
  }
}

json run_report(const std::string& command, const json& inputs,
                const json& outputs, const penta::Report& checks,
                int exit_code) {
  return json{{"command", command},
              {"inputs", inputs},
              {"outputs", outputs},
              {"checks", penta::io::dump(checks)},
              {"exit_code", exit_code}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rational inner maps of the disc into the pentablock"};
  app.require_subcommand(1);

  double tol = 1e-8;
  int samples = 512;
  std::string in_path, out_path;
  bool check_only = false;
  app.add_option("--tol", tol, "membership / verification tolerance");

  auto add_io = [&](CLI::App* sub) {
    sub->add_option("--in", in_path, "input JSON file (default stdin)");
    sub->add_option("--out", out_path, "output file (default stdout)");
  };

  auto* classify = app.add_subcommand("classify", "domain membership of a point");
  add_io(classify);

  auto* fr = app.add_subcommand("fejer-riesz",
                                "outer spectral factor of a trig polynomial");
  add_io(fr);

  auto* construct =
      app.add_subcommand("construct", "build an inner map from zero data");
  add_io(construct);
  construct->add_flag("--check-only", check_only,
                      "validate the data without emitting the map");

  auto* schwarz = app.add_subcommand("schwarz", "two-point interpolation");
  add_io(schwarz);
  schwarz->add_flag("--check-only", check_only, "feasibility check only");

  auto* verify = app.add_subcommand("verify", "verify an inner pair or map");
  add_io(verify);
  verify->add_option("--samples", samples, "boundary sample count");

  auto* trace = app.add_subcommand("trace", "boundary trace of an inner map");
  add_io(trace);
  trace->add_option("--samples", samples, "boundary sample count");

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify->parsed()) {
      json j = read_input(in_path);
      json out;
      penta::Complex s = penta::io::load_complex(j.at("s"));
      penta::Complex p = penta::io::load_complex(j.at("p"));
      out["gamma_closed"] =
          penta::io::dump(penta::in_gamma(s, p, penta::Mode::Closed, tol));
      out["gamma_open"] =
          penta::io::dump(penta::in_gamma(s, p, penta::Mode::Open, tol));
      out["gamma_boundary"] =
          penta::io::dump(penta::in_gamma(s, p, penta::Mode::Boundary, tol));
      if (j.contains("a")) {
        penta::PentaPoint x{penta::io::load_complex(j["a"]), s, p};
        out["penta_closed"] = penta::io::dump(
            penta::in_penta(x, penta::Mode::Closed,
                            penta::PentaCriterion::Beta, tol));
        out["penta_open"] = penta::io::dump(
            penta::in_penta(x, penta::Mode::Open, penta::PentaCriterion::Beta,
                            tol));
        out["penta_boundary"] = penta::io::dump(penta::in_bpenta(x, tol));
        out["royal"] = penta::io::dump(penta::on_royal(x, tol));
      } else {
        out["royal"] =
            penta::io::dump(penta::on_royal(penta::GammaPoint{s, p}, tol));
      }
      emit(run_report("classify", j, out, penta::Report{}, 0), out_path);
      return 0;
    }

    if (fr->parsed()) {
      json j = read_input(in_path);
      penta::TrigPoly f = penta::io::load_trig(j);
      penta::FejerRieszResult r = penta::fejer_riesz(f);
      json out{{"D", penta::io::dump(r.D)},
               {"residual", r.residual},
               {"degenerate_zero", r.degenerate_zero}};
      penta::Report rep;
      double scale = std::max(1.0, f.max_coeff_abs());
      rep.add("residual", r.residual <= 1e-9 * scale, -r.residual / scale);
      int code = rep.ok() ? 0 : 1;
      emit(run_report("fejer-riesz", j, out, rep, code), out_path);
      return code;
    }

    if (construct->parsed()) {
      json j = read_input(in_path);
      penta::ConstructionData data = penta::io::load_construction(j);
      penta::ConstructionResult r = penta::build(data);
      penta::Report rep = r.report;
      penta::Report round = penta::roundtrip_check(data, r);
      for (const auto& c : round.checks) rep.checks.push_back(c);
      json out;
      if (!check_only) {
        out["x"] = penta::io::dump(r.x);
        out["R"] = penta::io::dump(r.R);
        penta::DegreePair d = penta::degree(r.x);
        out["degree"] = json{{"a", d.deg_a}, {"p", d.deg_p}};
      }
      int code = rep.ok() ? 0 : 1;
      emit(run_report("construct", j, out, rep, code), out_path);
      return code;
    }

    if (schwarz->parsed()) {
      json j = read_input(in_path);
      penta::SchwarzProblem pb = penta::io::load_schwarz(j);
      penta::FeasibilityCertificate cert = penta::feasibility(pb);
      json out{{"certificate", penta::io::dump(cert)}};
      if (check_only) {
        penta::Report rep;
        rep.add("feasible", cert.feasible, cert.margin);
        int code = cert.feasible ? 0 : 4;
        emit(run_report("schwarz", j, out, rep, code), out_path);
        return code;
      }
      penta::SchwarzSolution sol = penta::solve(pb);
      out["x"] = penta::io::dump(sol.x);
      out["path"] = sol.path;
      int code = sol.report.ok() ? 0 : 1;
      emit(run_report("schwarz", j, out, sol.report, code), out_path);
      return code;
    }

    if (verify->parsed()) {
      json j = read_input(in_path);
      penta::Report rep;
      if (j.contains("a_in")) {
        penta::PentaInnerRep x = penta::io::load_penta_rep(j);
        rep = penta::verify_penta_inner(x, samples, 32, tol);
      } else {
        penta::GammaInnerRep h = penta::io::load_gamma_rep(j);
        rep = penta::verify_gamma_inner(h, samples, 32, tol);
      }
      int code = rep.ok() ? 0 : 1;
      emit(run_report("verify", j, json::object(), rep, code), out_path);
      return code;
    }

    if (trace->parsed()) {
      json j = read_input(in_path);
      penta::PentaInnerRep x = penta::io::load_penta_rep(j);
      std::ostringstream csv;
      csv << "theta,a_re,a_im,s_re,s_im,p_re,p_im,bp_margin\n";
      csv.precision(17);
      for (int i = 0; i < samples; ++i) {
        double th = 2.0 * M_PI * i / samples;
        penta::Complex z(std::cos(th), std::sin(th));
        penta::PentaPoint v = penta::penta_eval(x, z);
        double margin = penta::in_bpenta(v, tol).margin;
        csv << th << ',' << v.a.real() << ',' << v.a.imag() << ','
            << v.s.real() << ',' << v.s.imag() << ',' << v.p.real() << ','
            << v.p.imag() << ',' << margin << "\n";
      }
      if (out_path.empty() || out_path == "-") {
        std::cout << csv.str();
      } else {
        std::ofstream f(out_path);
        if (!f) penta::fail(penta::ErrorCode::Data, "cannot open " + out_path);
        f << csv.str();
      }
      return 0;
    }
  } catch (const penta::Error& e) {
    int code = exit_code_for(e.code());
    json err{{"error", e.what()}, {"exit_code", code}};
    std::cerr << err.dump(2) << "\n";
    return code;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}, {"exit_code", 5}}.dump(2) << "\n";
    return 5;
  }
  return 0;
}
