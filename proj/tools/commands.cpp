#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "quadtile/area.hpp"
#include "quadtile/certificate.hpp"
#include "quadtile/constructor.hpp"
#include "quadtile/criteria.hpp"
#include "quadtile/document.hpp"
#include "quadtile/error.hpp"
#include "quadtile/svg.hpp"

namespace quadtile::cli {

namespace {

// Fixed so that verify reports are reproducible.
constexpr std::uint64_t kAreaSeed = 0x5eed'a7ea;
constexpr int kAreaTriples = 3;

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrorKind::ParseError, "cannot write " + path);
  f << text;
}

// The document goes to --out when given, otherwise to stdout.
void emit(const Options& opts, const json& doc, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  if (opts.out.empty()) {
    out << text;
  } else {
    write_output(opts.out, text);
  }
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

template <class Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitInputError;
}

void print_classification(const ShapeSpec& spec, std::ostream& out) {
  out << "classification: " << describe(classify(spec)) << "\n";
}

std::vector<AreaCoeffs> spot_check_coeffs() {
  std::mt19937_64 rng(kAreaSeed);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  std::vector<AreaCoeffs> cs;
  for (int n = 0; n < kAreaTriples; ++n) {
    cs.push_back({Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), Rational(num(rng), den(rng))});
  }
  return cs;
}

}  // namespace

int cmd_decide(const Options& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ShapeSpec spec = parse_problem(read_input(opts.problem));
    if (opts.classify) print_classification(spec, out);
    const Decision d = decide(spec);
    out << "verdict: " << (d.yes() ? "YES" : "NO") << "\n";
    out << "case: " << describe(d.classification) << "\n";
    out << "target: " << spec.target << "\n";
    return d.yes() ? kExitYes : kExitNo;
  });
}

int cmd_tile(const Options& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ShapeSpec spec = parse_problem(read_input(opts.problem));
    if (opts.classify) print_classification(spec, out);
    const Decision d = decide(spec);
    if (!d.yes()) {
      const CertificateBundle bundle = make_bundle(spec);
      emit(opts, bundle_to_json(bundle), out);
      if (!opts.out.empty()) {
        out << "verdict: NO\ncertificate written to " << opts.out << "\n";
      }
      return kExitNo;
    }
    const Tiling t = construct(spec);
    const VerifyReport report = verify_all(t, spec.shapes);
    if (!report.exact_dissection() || !report.ratios_ok || t.ratio() != spec.target) {
      throw Error(ErrorKind::InternalVerificationFailure, "constructed tiling failed re-verification");
    }
    emit(opts, tiling_to_json(t), out);
    if (!opts.svg.empty()) write_output(opts.svg, render_svg(t));
    if (!opts.out.empty()) {
      out << "verdict: YES\ntiles: " << t.size() << "\ntiling written to " << opts.out << "\n";
    }
    return kExitYes;
  });
}

int cmd_verify(const Options& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (opts.tiling.empty()) throw Error(ErrorKind::ParseError, "verify needs --tiling");
    const ShapeSpec spec = parse_problem(read_input(opts.problem));
    const Tiling t = parse_tiling(read_input(opts.tiling));
    if (!t.field()->same_field(*spec.ctx)) {
      throw Error(ErrorKind::ContextMismatch, "tiling p=" + t.field()->p().str() + ", problem p=" + spec.ctx->p().str());
    }
    if (opts.classify) print_classification(spec, out);

    const VerifyReport report = verify_all(t, spec.shapes);
    const bool bounds_ok = t.width.sign() > 0 && t.ratio() == spec.target;
    out << "tiles: " << t.size() << "\n";
    out << "contained: " << yes_no(report.contained) << "\n";
    out << "disjoint: " << yes_no(report.disjoint) << "\n";
    out << "covered: " << yes_no(report.covered) << "\n";
    out << "ratios_ok: " << yes_no(report.ratios_ok) << "\n";
    out << "bounds_ratio_ok: " << yes_no(bounds_ok) << "\n";
    out << "guillotine: " << yes_no(report.guillotine) << "\n";
    if (report.exact_dissection()) {
      const auto cs = spot_check_coeffs();
      out << "area_additivity: " << yes_no(area_additivity_check(t, cs)) << " (" << cs.size()
          << " random coefficient triples)\n";
    }
    for (const auto& f : report.failures) {
      out << "failure:";
      for (std::size_t i : f.tiles) out << " #" << i;
      out << " " << f.reason << "\n";
    }
    const bool ok = report.exact_dissection() && report.ratios_ok && bounds_ok;
    out << "result: " << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? kExitYes : kExitNo;
  });
}

int cmd_certify(const Options& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ShapeSpec spec = parse_problem(read_input(opts.problem));
    if (opts.classify) print_classification(spec, out);
    const CertificateBundle bundle = make_bundle(spec);
    if (!check_bundle(bundle, spec)) throw Error(ErrorKind::InternalVerificationFailure, "certificate failed its own check");
    emit(opts, bundle_to_json(bundle), out);
    if (!opts.out.empty()) {
      out << "verdict: NO\nk: " << bundle.k << "\nquarter_discriminant: " << bundle.core.quarter_discriminant
          << "\nreductions: " << bundle.reductions.size() << "\ncertificate written to " << opts.out << "\n";
    }
    return kExitYes;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact rectangle dissection into rectangles of quadratic-irrational side ratios", "quadtile"};
  app.require_subcommand(1);
  Options opts;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--problem", opts.problem, "problem document (JSON); stdin when omitted");
    sub->add_flag("--classify", opts.classify, "also print the shape classification");
  };
  auto* decide_cmd = app.add_subcommand("decide", "decide whether the target rectangle can be tiled");
  add_common(decide_cmd);
  auto* tile_cmd = app.add_subcommand("tile", "construct a verified tiling, or a certificate when impossible");
  add_common(tile_cmd);
  tile_cmd->add_option("--out", opts.out, "output document; stdout when omitted");
  tile_cmd->add_option("--svg", opts.svg, "also render the tiling as SVG");
  auto* verify_cmd = app.add_subcommand("verify", "check a tiling document against a problem");
  add_common(verify_cmd);
  verify_cmd->add_option("--tiling", opts.tiling, "tiling document (JSON)")->required();
  auto* certify_cmd = app.add_subcommand("certify", "emit an impossibility certificate");
  add_common(certify_cmd);
  certify_cmd->add_option("--out", opts.out, "output document; stdout when omitted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  if (*decide_cmd) return cmd_decide(opts, out, err);
  if (*tile_cmd) return cmd_tile(opts, out, err);
  if (*verify_cmd) return cmd_verify(opts, out, err);
  return cmd_certify(opts, out, err);
}

}  // namespace quadtile::cli
