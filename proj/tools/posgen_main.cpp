// Command-line front end: every library operation on JSON/CSV files.
//
// Exit codes: 0 success, 1 domain error, 2 malformed input or bad usage.
// Domain and parse failures print {"error": code, "detail": text} on
// standard error.  Results go to standard output and, with --out, to a
// file with identical bytes.

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "posgen/posgen.hpp"

namespace {

using posgen::Error;
using posgen::ParseError;
using posgen::Point;
using posgen::Polynomial;
using posgen::Rational;
using posgen::MomentSequence;
using posgen::TruncatedSeries;
namespace io = posgen::io;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

io::json read_json(const std::string& path) {
  try {
    return io::parse_json(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

TruncatedSeries read_series(const std::string& path) {
  return io::series_from_json<posgen::series_tag>(read_json(path));
}

Polynomial read_poly(const std::string& path) {
  return io::series_from_json<posgen::poly_tag>(read_json(path));
}

MomentSequence read_moments(const std::string& path) {
  return io::series_from_json<posgen::moment_tag>(read_json(path));
}

std::vector<Rational> parse_rationals(const std::vector<std::string>& texts) {
  std::vector<Rational> out;
  out.reserve(texts.size());
  for (const std::string& t : texts) out.push_back(posgen::parse_rational(t));
  return out;
}

/// Box syntax: one "lo,hi" pair per axis, axes separated by ';'.
posgen::evolve::Box parse_box(const std::string& text) {
  posgen::evolve::Box box;
  std::istringstream axes(text);
  std::string axis;
  while (std::getline(axes, axis, ';')) {
    const std::size_t comma = axis.find(',');
    if (comma == std::string::npos || axis.find(',', comma + 1) != std::string::npos)
      throw ParseError("box axis '" + axis + "' is not 'lo,hi'");
    box.emplace_back(posgen::parse_rational(axis.substr(0, comma)),
                     posgen::parse_rational(axis.substr(comma + 1)));
  }
  if (box.empty()) throw ParseError("empty box specification");
  return box;
}

void emit(const std::string& bytes, const std::string& out_path) {
  std::cout << bytes;
  if (out_path.empty()) return;
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error("io_error", "cannot write file '" + out_path + "'");
  out << bytes;
}

void emit_json(const io::json& j, const std::string& out_path) {
  emit(io::canonical_dump(j), out_path);
}

io::json verdicts_json(const std::vector<posgen::moments::PsdVerdict>& vs) {
  io::json arr = io::json::array();
  for (const auto& v : vs) arr.push_back(io::to_json(v));
  return arr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact calculus for constant-coefficient differential operators"};
  app.require_subcommand(1);

  std::string in_path, rhs_path, poly_path, triplet_path, out_path;
  std::vector<std::string> t_args, lambda_args;
  std::string box_arg;
  int level = 0, degree = 0, grid = 0;

  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "also write the result to this file");
  };

  {
    auto* cmd = app.add_subcommand("mul", "product of two operators");
    cmd->add_option("--in", in_path, "left operand (series JSON)")->required();
    cmd->add_option("--rhs", rhs_path, "right operand (series JSON)")->required();
    add_out(cmd);
    cmd->callback([&] {
      emit_json(io::to_json(posgen::liegroup::mul(read_series(in_path),
                                                  read_series(rhs_path))),
                out_path);
    });
  }
  {
    auto* cmd = app.add_subcommand("inv", "group inverse of an operator");
    cmd->add_option("--in", in_path, "operand (series JSON)")->required();
    add_out(cmd);
    cmd->callback([&] {
      emit_json(io::to_json(posgen::liegroup::inverse(read_series(in_path))),
                out_path);
    });
  }
  {
    auto* cmd = app.add_subcommand("exp", "exponential of an algebra element");
    cmd->add_option("--in", in_path, "operand (series JSON)")->required();
    add_out(cmd);
    cmd->callback([&] {
      emit_json(io::to_json(posgen::liegroup::exp(read_series(in_path))),
                out_path);
    });
  }
  {
    auto* cmd = app.add_subcommand("log", "logarithm of a group element");
    cmd->add_option("--in", in_path, "operand (series JSON)")->required();
    add_out(cmd);
    cmd->callback([&] {
      emit_json(io::to_json(posgen::liegroup::log(read_series(in_path))),
                out_path);
    });
  }
  {
    auto* cmd = app.add_subcommand("dmap", "moment sequence to operator");
    cmd->add_option("--in", in_path, "operand (moments JSON)")->required();
    add_out(cmd);
    cmd->callback([&] {
      emit_json(io::to_json(posgen::moments::d_map(read_moments(in_path))),
                out_path);
    });
  }
  {
    auto* cmd = app.add_subcommand("dinv", "operator to moment sequence");
    cmd->add_option("--in", in_path, "operand (series JSON)")->required();
    add_out(cmd);
    cmd->callback([&] {
      emit_json(io::to_json(posgen::moments::d_inv(read_series(in_path))),
                out_path);
    });
  }
  {
    auto* cmd = app.add_subcommand("convolve-seq",
                                   "binomial convolution of moment sequences");
    cmd->add_option("--in", in_path, "left operand (moments JSON)")->required();
    cmd->add_option("--rhs", rhs_path, "right operand (moments JSON)")->required();
    add_out(cmd);
    cmd->callback([&] {
      emit_json(io::to_json(posgen::moments::seq_convolve(
                    read_moments(in_path), read_moments(rhs_path))),
                out_path);
    });
  }
  {
    auto* cmd = app.add_subcommand("moments",
                                   "truncated moments of an atomic measure");
    cmd->add_option("--in", in_path, "measure JSON")->required();
    cmd->add_option("--degree", degree, "truncation degree")->required();
    add_out(cmd);
    cmd->callback([&] {
      emit_json(io::to_json(posgen::measures::measure_moments(
                    io::measure_from_json(read_json(in_path)), degree)),
                out_path);
    });
  }
  {
    auto* cmd = app.add_subcommand("convolve-measure",
                                   "convolution of atomic measures");
    cmd->add_option("--in", in_path, "left operand (measure JSON)")->required();
    cmd->add_option("--rhs", rhs_path, "right operand (measure JSON)")->required();
    add_out(cmd);
    cmd->callback([&] {
      emit_json(io::to_json(posgen::measures::convolve(
                    io::measure_from_json(read_json(in_path)),
                    io::measure_from_json(read_json(rhs_path)))),
                out_path);
    });
  }
  {
    auto* cmd = app.add_subcommand("apply", "apply an operator to a polynomial");
    cmd->add_option("--in", in_path, "operator (series JSON)")->required();
    cmd->add_option("--poly", poly_path, "polynomial JSON")->required();
    add_out(cmd);
    cmd->callback([&] {
      emit_json(io::to_json(posgen::liegroup::apply(read_series(in_path),
                                                    read_poly(poly_path))),
                out_path);
    });
  }
  {
    auto* cmd = app.add_subcommand(
        "check-preserver", "moment-matrix positivity screening of an operator");
    cmd->add_option("--in", in_path, "operator (series JSON)")->required();
    cmd->add_option("--level", level, "moment matrix level k")->required();
    add_out(cmd);
    cmd->callback([&] {
      emit_json(io::to_json(posgen::moments::check_preserver(
                    read_series(in_path), level)),
                out_path);
    });
  }
  {
    auto* cmd = app.add_subcommand("levy-build",
                                   "generator from a Levy triplet");
    cmd->add_option("--triplet", triplet_path, "triplet JSON")->required();
    cmd->add_option("--degree", degree, "generator truncation degree")->required();
    add_out(cmd);
    cmd->callback([&] {
      emit_json(io::to_json(posgen::levy::generator_from_triplet(
                    io::triplet_from_json(read_json(triplet_path)), degree)),
                out_path);
    });
  }
  {
    auto* cmd = app.add_subcommand(
        "check-generator",
        "screen a generator candidate: exp(t a) over a time grid, or the "
        "dilation family over a lambda grid (with --lambda and --degree)");
    cmd->add_option("--in", in_path, "generator (series JSON)")->required();
    cmd->add_option("--level", level, "moment matrix level k")->required();
    auto* topt = cmd->add_option("--t", t_args, "time >= 0 (repeatable)");
    auto* lopt =
        cmd->add_option("--lambda", lambda_args, "dilation value (repeatable)");
    auto* dopt = cmd->add_option("--degree", degree,
                                 "normalization exponent for --lambda");
    topt->excludes(lopt);
    lopt->needs(dopt);
    add_out(cmd);
    cmd->callback([&] {
      const TruncatedSeries a = read_series(in_path);
      if (!lambda_args.empty()) {
        emit_json(verdicts_json(posgen::levy::scaled_family_probe(
                      a, degree, parse_rationals(lambda_args), level)),
                  out_path);
        return;
      }
      if (t_args.empty())
        throw ParseError("check-generator needs --t times or --lambda values");
      emit_json(verdicts_json(posgen::levy::check_generator_grid(
                    a, parse_rationals(t_args), level)),
                out_path);
    });
  }
  {
    auto* cmd = app.add_subcommand("evolve", "evolve a polynomial to one time");
    cmd->add_option("--in", in_path, "generator (series JSON)")->required();
    cmd->add_option("--poly", poly_path, "initial polynomial JSON")->required();
    cmd->add_option("--t", t_args, "time")->required()->expected(1);
    add_out(cmd);
    cmd->callback([&] {
      emit_json(io::to_json(posgen::evolve::evolve(
                    read_series(in_path), read_poly(poly_path),
                    posgen::parse_rational(t_args.front()))),
                out_path);
    });
  }
  {
    auto* cmd = app.add_subcommand("trajectory",
                                   "evolve along a time grid, CSV output");
    cmd->add_option("--in", in_path, "generator (series JSON)")->required();
    cmd->add_option("--poly", poly_path, "initial polynomial JSON")->required();
    cmd->add_option("--t", t_args, "time >= 0 (repeatable, nondecreasing)")
        ->required();
    add_out(cmd);
    cmd->callback([&] {
      const std::vector<Rational> ts = parse_rationals(t_args);
      const std::vector<Polynomial> snaps = posgen::evolve::trajectory(
          read_series(in_path), read_poly(poly_path), ts);
      emit(io::trajectory_csv(ts, snaps), out_path);
    });
  }
  {
    auto* cmd = app.add_subcommand(
        "nonneg",
        "nonnegativity: exact univariate decision, or grid sampling with "
        "--box/--grid (necessary check only)");
    cmd->add_option("--poly", poly_path, "polynomial JSON")->required();
    auto* bopt = cmd->add_option("--box", box_arg, "grid box 'lo,hi;lo,hi;...'");
    auto* gopt = cmd->add_option("--grid", grid, "grid points per axis");
    bopt->needs(gopt);
    gopt->needs(bopt);
    add_out(cmd);
    cmd->callback([&] {
      const Polynomial p = read_poly(poly_path);
      if (!box_arg.empty()) {
        const posgen::evolve::GridScan scan =
            posgen::evolve::nonneg_grid(p, parse_box(box_arg), grid);
        io::json j{{"mode", "grid"}, {"nonneg", scan.clean}};
        if (!scan.clean) {
          io::json witness = io::json::array();
          for (const Rational& c : scan.witness)
            witness.push_back(posgen::to_string(c));
          j["witness"] = std::move(witness);
          j["value"] = posgen::to_string(scan.value);
        }
        emit_json(j, out_path);
        return;
      }
      const posgen::evolve::NonnegCertificate cert =
          posgen::evolve::nonneg_univariate(p);
      io::json j{{"mode", "exact"},
                 {"nonneg", cert.nonneg},
                 {"reason", cert.reason}};
      if (cert.root_interval) {
        j["interval"] = io::json::array({
            posgen::to_string(cert.root_interval->first),
            posgen::to_string(cert.root_interval->second),
        });
      }
      emit_json(j, out_path);
    });
  }

  try {
    app.parse(argc, argv);
    return 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const ParseError& e) {
    std::cerr << io::canonical_dump(
        io::json{{"error", e.code()}, {"detail", e.what()}});
    return 2;
  } catch (const Error& e) {
    std::cerr << io::canonical_dump(
        io::json{{"error", e.code()}, {"detail", e.what()}});
    return 1;
  }
}
