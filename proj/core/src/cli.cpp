#include "fockflow/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fockflow/analysis.hpp"
#include "fockflow/images.hpp"
#include "fockflow/serialize.hpp"
#include "fockflow/svg.hpp"

namespace fockflow::cli {

namespace {

std::vector<double> split_doubles(const std::string& text, char sep) {
  std::vector<double> out;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, sep)) {
    std::size_t used = 0;
    out.push_back(std::stod(part, &used));
    if (used != part.size()) throw domain_error("bad number '" + part + "'");
  }
  return out;
}

std::vector<cplx> split_complex(const std::string& text) {
  std::vector<cplx> out;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, ';'))
    if (!part.empty()) out.push_back(parse_complex(part));
  return out;
}

void apply_grid(JobConfig& cfg, const std::string& text) {
  const auto v = split_doubles(text, ':');
  if (v.size() != 5 && v.size() != 6)
    throw domain_error("grid: expected xmin:xmax:ymin:ymax:n[:ny]");
  cfg.xmin = v[0];
  cfg.xmax = v[1];
  cfg.ymin = v[2];
  cfg.ymax = v[3];
  cfg.nx = static_cast<int>(v[4]);
  cfg.ny = v.size() == 6 ? static_cast<int>(v[5]) : cfg.nx;
}

void write_output(const JobConfig& cfg, const std::string& payload) {
  if (cfg.out_path.empty() || cfg.out_path == "-") {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(cfg.out_path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot open '" + cfg.out_path + "'");
  out << payload;
  if (!out) throw std::ios_base::failure("write failed for '" + cfg.out_path + "'");
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

int run_eval(const JobConfig& cfg) {
  json arr = json::array();
  for (cplx z : cfg.eval_points) {
    json row = {{"z", format_complex(z)},
                {"psi", format_complex(eval_state(cfg.state, z, cfg.trunc))},
                {"dpsi", format_complex(eval_state_derivative(cfg.state, z, cfg.trunc))}};
    if (cfg.rep) {
      const FlowSpec fs{cfg.state, *cfg.rep, cfg.trunc};
      const cplx f = potential(fs, z);
      const cplx vb = velocity(fs, z);
      row["f"] = format_complex(f);
      row["vbar"] = format_complex(vb);
      row["u"] = vb.real();
      row["v"] = -vb.imag();
    }
    arr.push_back(row);
  }
  write_output(cfg, arr.dump(2));
  return kOk;
}

int run_field(const JobConfig& cfg) {
  if (!cfg.rep) throw domain_error("field: --rep is required");
  const FlowSpec fs{cfg.state, *cfg.rep, cfg.trunc};
  const FieldGrid grid =
      sample_field(fs, cfg.xmin, cfg.xmax, cfg.ymin, cfg.ymax, cfg.nx, cfg.ny);
  if (ends_with(cfg.out_path, ".json"))
    write_output(cfg, field_grid_to_json(grid).dump());
  else
    write_output(cfg, field_grid_to_csv(grid));
  return kOk;
}

int run_zeros(const JobConfig& cfg) {
  if (!cfg.region) throw domain_error("zeros: give --center/--radius or --rect");
  const auto zeros = find_zeros(cfg.state, *cfg.region, cfg.trunc);
  json arr = json::array();
  for (const Zero& z : zeros)
    arr.push_back({{"position", format_complex(z.position)},
                   {"re", z.position.real()},
                   {"im", z.position.imag()},
                   {"multiplicity", z.multiplicity}});
  write_output(cfg, arr.dump(2));
  return kOk;
}

int run_images(const JobConfig& cfg) {
  const FlowRep rep = cfg.rep.value_or(FlowRep::vortex(2.0 * M_PI));
  ImageSystem sys;
  if (const auto* cat = cfg.state.get_if<CatState>()) {
    sys = cat_image_system(cat->alpha, cat->parity, rep, cfg.image_index);
  } else if (const auto* qc = cfg.state.get_if<QCoherentState>()) {
    sys = q_image_system(qc->q, qc->alpha, cfg.image_index);
  } else {
    throw domain_error("images: state must be a cat or qcoherent state");
  }
  write_output(cfg, image_system_to_json(sys).dump(2));
  return kOk;
}

int run_verify(const JobConfig& cfg) {
  std::vector<VerificationReport> reports;
  if (cfg.verify_all_flag) {
    reports = verify_all();
  } else {
    if (cfg.verify_names.empty())
      throw domain_error("verify: pass --all or at least one --name");
    for (const auto& name : cfg.verify_names)
      reports.push_back(verify_identity(name));
  }
  write_output(cfg, reports_to_json(reports).dump(2));
  for (const auto& r : reports)
    if (!r.pass) return kVerifyFailed;
  return kOk;
}

int run_streamlines(const JobConfig& cfg) {
  if (!cfg.rep) throw domain_error("streamlines: --rep is required");
  if (cfg.seeds.empty()) throw domain_error("streamlines: --seeds is required");
  const FlowSpec fs{cfg.state, *cfg.rep, cfg.trunc};

  SvgFigure fig;
  fig.xmin = cfg.xmin;
  fig.xmax = cfg.xmax;
  fig.ymin = cfg.ymin;
  fig.ymax = cfg.ymax;
  for (cplx seed : cfg.seeds)
    fig.streamlines.push_back(trace_streamline(fs, seed, cfg.step, cfg.n_steps));

  try {
    for (const Zero& z :
         find_zeros(cfg.state, Region::rect(cfg.xmin, cfg.xmax, cfg.ymin, cfg.ymax),
                    cfg.trunc)) {
      SingularityKind kind = SingularityKind::vortex;
      if (cfg.rep->kind == FlowRep::Kind::vortex)
        kind = cfg.rep->gamma >= 0 ? SingularityKind::vortex : SingularityKind::anti_vortex;
      else if (cfg.rep->kind == FlowRep::Kind::source)
        kind = cfg.rep->n_strength >= 0 ? SingularityKind::source : SingularityKind::sink;
      fig.markers.push_back(Singularity{z.position, kind, 1.0, z.multiplicity});
    }
  } catch (const error&) {
    // marker overlay is best-effort; streamlines are still written
  }

  if (ends_with(cfg.out_path, ".csv")) {
    std::string csv = "streamline,step,x,y\n";
    for (std::size_t i = 0; i < fig.streamlines.size(); ++i)
      for (std::size_t k = 0; k < fig.streamlines[i].size(); ++k) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "%zu,%zu,%.17g,%.17g\n", i, k,
                      fig.streamlines[i][k].real(), fig.streamlines[i][k].imag());
        csv += buf;
      }
    write_output(cfg, csv);
  } else {
    write_output(cfg, render_svg(fig));
  }
  return kOk;
}

}  // namespace

int run(const JobConfig& cfg) {
  switch (cfg.command) {
    case JobConfig::Command::eval:
      return run_eval(cfg);
    case JobConfig::Command::field:
      return run_field(cfg);
    case JobConfig::Command::zeros:
      return run_zeros(cfg);
    case JobConfig::Command::images:
      return run_images(cfg);
    case JobConfig::Command::verify:
      return run_verify(cfg);
    case JobConfig::Command::streamlines:
      return run_streamlines(cfg);
  }
  throw domain_error("run: unknown command");
}

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"fockflow: Fock-Bargmann wave functions as planar potential flows"};
  app.require_subcommand(1);

  JobConfig cfg;
  if (const char* env = std::getenv("FOCKFLOW_MAX_TERMS")) {
    try {
      cfg.trunc.max_terms = std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << R"({"error":{"kind":"config","message":"bad FOCKFLOW_MAX_TERMS"}})"
                << "\n";
      return kConfigError;
    }
  }

  std::string state_json, rep_text, grid_text, rect_text, z_text, seeds_text,
      center_text;
  double radius = 0.0;

  auto add_state = [&](CLI::App* sub) {
    sub->add_option("--state", state_json, "StateSpec as JSON")->required();
  };
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out_path, "output path ('-' = stdout)");
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate Psi, Psi' (and flow with --rep)");
  add_state(eval);
  eval->add_option("--z", z_text, "evaluation points 'z1;z2;...'")->required();
  eval->add_option("--rep", rep_text, "vortex:<Gamma> | source:<N> | mixed:<N>:<Gamma>");
  add_out(eval);

  CLI::App* field = app.add_subcommand("field", "sample phi,psi,u,v over a grid");
  add_state(field);
  field->add_option("--rep", rep_text)->required();
  field->add_option("--grid", grid_text, "xmin:xmax:ymin:ymax:n[:ny]")->required();
  add_out(field);

  CLI::App* zeros = app.add_subcommand("zeros", "find zeros of Psi in a region");
  add_state(zeros);
  zeros->add_option("--center", center_text, "disk center 'a+bi'");
  zeros->add_option("--radius", radius, "disk radius");
  zeros->add_option("--rect", rect_text, "xmin:xmax:ymin:ymax");
  add_out(zeros);

  CLI::App* images = app.add_subcommand("images", "image system of a cat/qcoherent state");
  add_state(images);
  images->add_option("--rep", rep_text);
  images->add_option("--M", cfg.image_index, "truncation index");
  add_out(images);

  CLI::App* verify = app.add_subcommand("verify", "run identity verification battery");
  verify->add_flag("--all", cfg.verify_all_flag, "run the full battery");
  verify->add_option("--name", cfg.verify_names, "identity name (repeatable)");
  add_out(verify);

  CLI::App* stream = app.add_subcommand("streamlines", "trace streamlines, write SVG/CSV");
  add_state(stream);
  stream->add_option("--rep", rep_text)->required();
  stream->add_option("--seeds", seeds_text, "seed points 'z1;z2;...'")->required();
  stream->add_option("--step", cfg.step, "RK4 step");
  stream->add_option("--steps", cfg.n_steps, "step count");
  stream->add_option("--box", grid_text, "view box xmin:xmax:ymin:ymax[:n]");
  add_out(stream);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (eval->parsed()) cfg.command = JobConfig::Command::eval;
    if (field->parsed()) cfg.command = JobConfig::Command::field;
    if (zeros->parsed()) cfg.command = JobConfig::Command::zeros;
    if (images->parsed()) cfg.command = JobConfig::Command::images;
    if (verify->parsed()) cfg.command = JobConfig::Command::verify;
    if (stream->parsed()) cfg.command = JobConfig::Command::streamlines;

    if (!state_json.empty()) cfg.state = state_from_json(json::parse(state_json));
    if (!rep_text.empty()) cfg.rep = parse_rep(rep_text);
    if (!z_text.empty()) cfg.eval_points = split_complex(z_text);
    if (!seeds_text.empty()) cfg.seeds = split_complex(seeds_text);
    if (!grid_text.empty()) {
      if (stream->parsed()) {
        const auto v = split_doubles(grid_text, ':');
        if (v.size() < 4) throw domain_error("box: expected xmin:xmax:ymin:ymax");
        cfg.xmin = v[0];
        cfg.xmax = v[1];
        cfg.ymin = v[2];
        cfg.ymax = v[3];
      } else {
        apply_grid(cfg, grid_text);
      }
    }
    if (!rect_text.empty()) {
      const auto v = split_doubles(rect_text, ':');
      if (v.size() != 4) throw domain_error("rect: expected xmin:xmax:ymin:ymax");
      cfg.region = Region::rect(v[0], v[1], v[2], v[3]);
    } else if (!center_text.empty() || radius > 0.0) {
      if (center_text.empty() || !(radius > 0.0))
        throw domain_error("zeros: --center and --radius go together");
      cfg.region = Region::disk(parse_complex(center_text), radius);
    }
    if (cfg.command == JobConfig::Command::eval && cfg.eval_points.empty())
      throw domain_error("eval: at least one point required");

    return run(cfg);
  } catch (const json::exception& e) {
    std::cerr << json{{"error", {{"kind", "config"}, {"message", e.what()}}}}.dump() << "\n";
    return kConfigError;
  } catch (const std::ios_base::failure& e) {
    std::cerr << json{{"error", {{"kind", "io"}, {"message", e.what()}}}}.dump() << "\n";
    return kIoError;
  } catch (const error& e) {
    std::cerr << json{{"error", {{"kind", "domain"}, {"message", e.what()}}}}.dump() << "\n";
    return kDomainError;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", {{"kind", "internal"}, {"message", e.what()}}}}.dump()
              << "\n";
    return kDomainError;
  }
}

}  // namespace fockflow::cli
