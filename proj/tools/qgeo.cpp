// Command-line front end. Every command is a thin adapter over the library:
// flags in, library calls, JSON or CSV out. Exit codes: 0 success, 1 verify
// found violations, 2 usage or malformed input, 3 domain error.
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qgeo/channel.hpp"
#include "qgeo/geodesic.hpp"
#include "qgeo/hilbert.hpp"
#include "qgeo/metric.hpp"
#include "qgeo/serialize.hpp"
#include "qgeo/verify.hpp"

namespace {

using Json = nlohmann::ordered_json;

int log_level() {
  static const int level = [] {
    const char* env = std::getenv("QGEO_LOG");
    if (env == nullptr) return 0;
    const std::string v(env);
    if (v == "debug") return 2;
    if (v == "info") return 1;
    return 0;
  }();
  return level;
}

void log_info(const std::string& msg) {
  if (log_level() >= 1) std::cerr << "[info] " << msg << "\n";
}

void log_debug(const std::string& msg) {
  if (log_level() >= 2) std::cerr << "[debug] " << msg << "\n";
}

// Shortest round-trip decimal form, locale-independent.
std::string format_double(double v) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qgeo::ParseError("cannot read input file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw qgeo::ParseError("cannot open output file '" + out_path + "'");
  out << text;
}

qgeo::Vec3 to_vec3(const std::vector<double>& v, const char* flag) {
  if (v.size() != 3) {
    throw qgeo::ParseError(std::string(flag) + " expects exactly 3 comma-separated reals");
  }
  return {v[0], v[1], v[2]};
}

void warn_inverting(double prob) {
  if (prob > 0.75) {
    std::cerr << "warning: p > 3/4 gives a negative contraction factor; "
                 "the Bloch vector inverts\n";
  }
}

struct ChannelArgs {
  std::string in_path;
  std::vector<double> bloch;
  std::string bell;
  double prob = 0.0;
  std::string out_path;
};

int run_channel(const ChannelArgs& a) {
  const int sources = (a.in_path.empty() ? 0 : 1) + (a.bloch.empty() ? 0 : 1) +
                      (a.bell.empty() ? 0 : 1);
  if (sources != 1) {
    std::cerr << "error: provide exactly one of --in, --bloch, --bell\n";
    return 2;
  }
  warn_inverting(a.prob);

  std::string text;
  if (!a.bell.empty()) {
    const qgeo::BellKind kind = qgeo::bell_kind_from_string(a.bell);
    log_info("one-sided channel on Bell state " + qgeo::to_string(kind));
    const qgeo::DensityOperator out = qgeo::depolarize_bell(kind, a.prob);
    const double dev = out.matrix().max_abs_diff(
        qgeo::depolarize_bell_closed_form(kind, a.prob).matrix());
    Json j = Json::parse(qgeo::operator_to_json(out.matrix()));
    j["cross_check_dev"] = dev;
    text = j.dump(2);
  } else if (!a.bloch.empty()) {
    const qgeo::BlochVector p(to_vec3(a.bloch, "--bloch"));
    const qgeo::DensityOperator out =
        qgeo::depolarize(qgeo::density_from_bloch(p), a.prob);
    text = qgeo::operator_to_json(out.matrix());
  } else {
    log_info("reading state from " + a.in_path);
    const qgeo::DensityOperator rho = qgeo::density_from_json(read_file(a.in_path));
    const qgeo::DensityOperator out = qgeo::depolarize(rho, a.prob);
    text = qgeo::operator_to_json(out.matrix());
  }
  emit(text + "\n", a.out_path);
  return 0;
}

struct MetricArgs {
  std::vector<double> at;
  std::vector<double> dp;
  std::optional<double> prob;
  std::string kind = "statistical";
  std::vector<double> probs;
  std::vector<double> phases;
  std::vector<double> dprobs;
  std::vector<double> dphases;
};

int run_metric(const MetricArgs& a) {
  Json j;
  if (a.kind == "fubini") {
    if (a.probs.empty() || a.probs.size() != a.phases.size() ||
        a.dprobs.size() != a.probs.size() || a.dphases.size() != a.probs.size()) {
      std::cerr << "error: fubini kind needs --probs, --phases, --dprobs, "
                   "--dphases of equal length\n";
      return 2;
    }
    if (a.prob) {
      std::cerr << "warning: the pure-state metric is unaffected by --p; ignoring it\n";
    }
    const qgeo::PureStateChart chart(a.probs, a.phases);
    j["ds2"] = qgeo::fubini_study_quadratic(chart, a.dprobs, a.dphases);
  } else {
    if (a.at.empty() || a.dp.empty()) {
      std::cerr << "error: kind '" << a.kind << "' needs --at and --dp\n";
      return 2;
    }
    const qgeo::Vec3 at = to_vec3(a.at, "--at");
    const qgeo::Vec3 dp = to_vec3(a.dp, "--dp");
    if (a.prob) warn_inverting(*a.prob);
    if (a.kind == "statistical") {
      j["ds2"] = qgeo::line_element_bloch(qgeo::BlochVector(at), dp);
      if (a.prob) {
        j["ds2_depolarized"] =
            qgeo::line_element_depolarized(qgeo::BlochVector(at), dp, *a.prob);
      }
    } else {  // bures: the chart is the half-radius ball, x = P/2
      const qgeo::Vec3 x = qgeo::scaled(at, 0.5);
      const qgeo::Vec3 dx = qgeo::scaled(dp, 0.5);
      j["ds2"] = qgeo::bures_line_element(qgeo::BuresPoint(x), dx);
      if (a.prob) {
        const double f = qgeo::contraction_factor(*a.prob);
        j["ds2_depolarized"] = qgeo::bures_line_element(
            qgeo::BuresPoint(qgeo::scaled(x, f)), qgeo::scaled(dx, f));
      }
    }
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

struct GeodesicArgs {
  std::vector<double> frame;
  double prob = 0.0;
  int count = 0;
  std::string out_path;
};

int run_geodesic(const GeodesicArgs& a) {
  if (a.frame.size() != 8) {
    std::cerr << "error: --frame expects 8 comma-separated reals (two seed 4-vectors)\n";
    return 2;
  }
  warn_inverting(a.prob);
  const qgeo::Vec4 u{a.frame[0], a.frame[1], a.frame[2], a.frame[3]};
  const qgeo::Vec4 v{a.frame[4], a.frame[5], a.frame[6], a.frame[7]};
  const qgeo::GeodesicFrame frame = qgeo::frame_from_seed(u, v);
  const auto samples = qgeo::sample_geodesic(frame, a.prob, a.count);
  log_debug("sampled " + std::to_string(samples.size()) + " geodesic points");

  std::string csv = "s,P0,P1,P2,P3,Q0,Q1,Q2,Q3,physical_flag\n";
  for (const auto& sample : samples) {
    csv += format_double(sample.s);
    for (int k = 0; k < 4; ++k) csv += "," + format_double(sample.undeformed[k]);
    for (int k = 0; k < 4; ++k) csv += "," + format_double(sample.deformed[k]);
    csv += sample.undeformed[0] >= 0.0 ? ",1\n" : ",0\n";
  }
  emit(csv, a.out_path);
  return 0;
}

struct VerifyArgs {
  std::uint64_t seed = 1;
  int count = 10000;
  std::vector<double> p_grid;
  double cap = 0.99;
  std::string check = "all";
  int workers = 1;
};

int run_verify(const VerifyArgs& a) {
  qgeo::SampleConfig cfg;
  cfg.seed = a.seed;
  cfg.count = a.count;
  cfg.prob_grid = a.p_grid.empty() ? qgeo::uniform_prob_grid(21) : a.p_grid;
  cfg.radius_cap = a.cap;

  std::vector<qgeo::VerificationReport> reports;
  if (a.check == "all") {
    reports = qgeo::run_all(cfg, a.workers);
  } else if (a.check == "monotonicity") {
    reports.push_back(qgeo::check_monotonicity(cfg, a.workers));
  } else if (a.check == "bures_monotonicity") {
    reports.push_back(qgeo::check_bures_monotonicity(cfg, a.workers));
  } else if (a.check == "chart_consistency") {
    reports.push_back(qgeo::check_chart_consistency(cfg, a.workers));
  } else if (a.check == "fubini_relation") {
    reports.push_back(qgeo::check_fubini_relation(cfg, a.workers));
  } else {
    reports.push_back(qgeo::check_geodesic_closure(cfg, a.workers));
  }

  bool clean = true;
  for (const auto& r : reports) {
    log_info(r.check_name + ": " + std::to_string(r.violations) + " violations in " +
             std::to_string(r.samples) + " samples (" + format_double(r.elapsed_ms) +
             " ms)");
    if (r.violations > 0) clean = false;
  }
  std::cout << qgeo::reports_to_json(reports) << "\n";
  return clean ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bloch-ball geometry of the qubit depolarizing channel"};
  app.require_subcommand(1);

  ChannelArgs channel_args;
  CLI::App* channel = app.add_subcommand(
      "channel", "Apply the depolarizing channel to a state");
  channel->add_option("--in", channel_args.in_path, "Input state JSON file");
  channel->add_option("--bloch", channel_args.bloch, "Input Bloch vector x,y,z")
      ->delimiter(',');
  channel->add_option("--bell", channel_args.bell,
                      "Bell state (phi+|phi-|psi+|psi-); one-sided channel");
  channel->add_option("--p", channel_args.prob, "Error probability")->required();
  channel->add_option("--out", channel_args.out_path, "Output file (default stdout)");

  MetricArgs metric_args;
  CLI::App* metric = app.add_subcommand("metric", "Evaluate a line element");
  metric->add_option("--at", metric_args.at, "Bloch point x,y,z")->delimiter(',');
  metric->add_option("--dp", metric_args.dp, "Tangent a,b,c")->delimiter(',');
  metric->add_option("--p", metric_args.prob, "Also report the depolarized value");
  metric->add_option("--kind", metric_args.kind, "Metric kind")
      ->check(CLI::IsMember({"statistical", "bures", "fubini"}));
  metric->add_option("--probs", metric_args.probs, "Chart probabilities (fubini)")
      ->delimiter(',');
  metric->add_option("--phases", metric_args.phases, "Chart phases (fubini)")
      ->delimiter(',');
  metric->add_option("--dprobs", metric_args.dprobs, "Probability tangent (fubini)")
      ->delimiter(',');
  metric->add_option("--dphases", metric_args.dphases, "Phase tangent (fubini)")
      ->delimiter(',');

  GeodesicArgs geodesic_args;
  CLI::App* geodesic = app.add_subcommand(
      "geodesic", "Sample a great-circle geodesic and its deformed image");
  geodesic->add_option("--frame", geodesic_args.frame,
                       "Two seed 4-vectors a0,a1,a2,a3,b0,b1,b2,b3")
      ->delimiter(',')
      ->required();
  geodesic->add_option("--p", geodesic_args.prob, "Error probability")->required();
  geodesic->add_option("--count", geodesic_args.count, "Sample count")->required();
  geodesic->add_option("--out", geodesic_args.out_path, "Output CSV (default stdout)");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "Run the property checks");
  verify->add_option("--seed", verify_args.seed, "Sampling seed");
  verify->add_option("--count", verify_args.count, "Samples per check")
      ->check(CLI::PositiveNumber);
  verify->add_option("--p-grid", verify_args.p_grid,
                     "Probability grid (default 21 uniform points)")
      ->delimiter(',');
  verify->add_option("--cap", verify_args.cap, "Sampled Bloch radius cap");
  verify->add_option("--check", verify_args.check, "Which check to run")
      ->check(CLI::IsMember({"all", "monotonicity", "bures_monotonicity",
                             "chart_consistency", "fubini_relation",
                             "geodesic_closure"}));
  verify->add_option("--workers", verify_args.workers, "Sampling threads")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (channel->parsed()) return run_channel(channel_args);
    if (metric->parsed()) return run_metric(metric_args);
    if (geodesic->parsed()) return run_geodesic(geodesic_args);
    return run_verify(verify_args);
  } catch (const qgeo::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const qgeo::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
