#include "cubeta/cli.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubeta/dist.hpp"
#include "cubeta/fit.hpp"
#include "cubeta/sampling.hpp"

namespace cubeta::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- CSV ingestion ---------------------------------------------------------

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  fields.push_back(cur);
  for (std::string& f : fields) {
    const auto b = f.find_first_not_of(" \t");
    const auto e = f.find_last_not_of(" \t");
    f = b == std::string::npos ? std::string() : f.substr(b, e - b + 1);
  }
  return fields;
}

std::optional<double> parse_number(const std::string& s) {
  if (s.empty()) return std::nullopt;
  double value = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return value;
}

// Read one numeric column from a comma-separated file. The column is
// selected by 0-based index or by header name; a header row is consumed
// when the name form is used or when the first row's selected field is
// not numeric. Any later non-numeric field is a hard error.
std::vector<double> read_csv_column(const std::string& path,
                                    const std::string& column) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open input file: " + path);

  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);

  std::size_t first_data = 0;
  std::size_t col = 0;
  const std::optional<double> as_index = parse_number(column);
  if (as_index && *as_index == std::floor(*as_index) && *as_index >= 0) {
    col = static_cast<std::size_t>(*as_index);
    if (!lines.empty()) {
      const auto fields = split_csv_line(lines[0]);
      if (col < fields.size() && !parse_number(fields[col])) {
        first_data = 1;  // header row
      }
    }
  } else {
    if (lines.empty()) throw DataError(path + ": empty file");
    const auto header = split_csv_line(lines[0]);
    const auto it = std::find(header.begin(), header.end(), column);
    if (it == header.end()) {
      throw DataError(path + ": no column named '" + column + "' in header");
    }
    col = static_cast<std::size_t>(it - header.begin());
    first_data = 1;
  }

  std::vector<double> values;
  for (std::size_t i = first_data; i < lines.size(); ++i) {
    if (lines[i].find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto fields = split_csv_line(lines[i]);
    if (col >= fields.size()) {
      throw DataError(path + ": line " + std::to_string(i + 1) +
                      " has no column " + std::to_string(col));
    }
    const auto v = parse_number(fields[col]);
    if (!v) {
      throw DataError(path + ": line " + std::to_string(i + 1) +
                      ": cannot parse '" + fields[col] + "' as a number");
    }
    values.push_back(*v);
  }
  if (values.empty()) throw DataError(path + ": no data rows");
  return values;
}

// ---- distribution construction from flags ----------------------------------

using AnyDist = std::variant<BetaDist, QBetaDist, SQBetaDist, CBetaDist,
                             SCBetaDist, CBeta11Dist, GenQuadDist>;

struct DistFlags {
  std::string family;
  double alpha = std::numeric_limits<double>::quiet_NaN();
  double beta = std::numeric_limits<double>::quiet_NaN();
  double gamma = 0.5;
  double delta = 1.0 / 3.0;
};

AnyDist make_dist(const DistFlags& f) {
  const bool needs_core = f.family != "cbeta11" && f.family != "genquad";
  if (needs_core && (std::isnan(f.alpha) || std::isnan(f.beta))) {
    throw UsageError("family '" + f.family + "' requires --alpha and --beta");
  }
  if (f.family == "beta") return BetaDist(f.alpha, f.beta);
  if (f.family == "qbeta") return QBetaDist(f.alpha, f.beta, f.gamma);
  if (f.family == "sqbeta") return SQBetaDist(f.alpha, f.beta, f.gamma);
  if (f.family == "cbeta") return CBetaDist(f.alpha, f.beta, {f.gamma, f.delta});
  if (f.family == "scbeta")
    return SCBetaDist(f.alpha, f.beta, {f.gamma, f.delta});
  if (f.family == "cbeta11") return CBeta11Dist({f.gamma, f.delta});
  if (f.family == "genquad") return GenQuadDist(ShapeParams{f.gamma, f.delta});
  throw UsageError("unknown family '" + f.family + "'");
}

// ---- fit command -----------------------------------------------------------

struct FitOptions {
  std::string input;
  std::string column = "0";
  std::pair<double, double> interval{0.0, 1.0};
  std::vector<std::string> families{"beta", "qbeta", "sqbeta", "cbeta",
                                    "scbeta"};
  std::string format = "text";
  bool nudge = false;
};

std::string dataset_name(const std::string& path) {
  const auto slash = path.find_last_of("/\\");
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  const auto dot = base.find_last_of('.');
  return dot == std::string::npos ? base : base.substr(0, dot);
}

int cmd_fit(const FitOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.families.empty()) throw UsageError("fit: no families requested");
  // ladder order, independent of the order given on the command line
  const std::vector<Family> ladder{Family::beta, Family::qbeta, Family::sqbeta,
                                   Family::cbeta, Family::scbeta};
  std::vector<Family> requested;
  for (Family f : ladder) {
    const bool want =
        std::find(opt.families.begin(), opt.families.end(), family_name(f)) !=
        opt.families.end();
    if (want) requested.push_back(f);
  }
  if (requested.size() != opt.families.size()) {
    for (const std::string& name : opt.families) {
      if (!family_from_name(name)) {
        throw UsageError("fit: unknown family '" + name + "'");
      }
    }
    throw UsageError("fit: duplicate families requested");
  }

  const std::vector<double> raw = read_csv_column(opt.input, opt.column);
  const Dataset data(raw, opt.interval.first, opt.interval.second,
                     dataset_name(opt.input), opt.nudge);
  if (data.nudged() > 0) {
    err << "warning: " << data.nudged()
        << " boundary value(s) nudged inward by 1/(2n)\n";
  }

  const FitResult beta_fit = fit_mle(Family::beta, data);
  std::vector<FitResult> fits;
  std::vector<std::optional<LrResult>> lrs;
  bool all_converged = true;
  for (Family f : requested) {
    FitResult r = f == Family::beta ? beta_fit : fit_mle(f, data);
    all_converged = all_converged && r.converged;
    if (f == Family::beta) {
      lrs.emplace_back(std::nullopt);
    } else {
      lrs.emplace_back(lr_test(beta_fit, r, family_param_count(f) - 2));
    }
    fits.push_back(std::move(r));
  }

  if (opt.format == "json") {
    json doc;
    doc["dataset"] = {{"name", data.name()},
                      {"n", data.size()},
                      {"interval", {data.lo(), data.hi()}},
                      {"nudged", data.nudged()},
                      {"log_jacobian", data.log_jacobian()}};
    doc["fits"] = json::array();
    for (std::size_t i = 0; i < fits.size(); ++i) {
      const FitResult& r = fits[i];
      const int np = family_param_count(r.family);
      json jf = {{"family", family_name(r.family)},
                 {"neg_loglik", r.neg_loglik},
                 {"alpha", r.core.alpha},
                 {"beta", r.core.beta},
                 {"converged", r.converged},
                 {"iterations", r.iterations}};
      jf["gamma"] = np >= 3 ? json(r.shape.gamma) : json(nullptr);
      jf["delta"] = np >= 4 ? json(r.shape.delta) : json(nullptr);
      jf["stage_trace"] = json::array();
      for (const auto& [stage, nll] : r.stage_trace) {
        jf["stage_trace"].push_back({{"stage", stage}, {"neg_loglik", nll}});
      }
      if (lrs[i]) {
        jf["lr_vs_beta"] = {{"statistic", lrs[i]->statistic},
                            {"df", lrs[i]->df},
                            {"p_value", lrs[i]->p_value}};
      } else {
        jf["lr_vs_beta"] = nullptr;
      }
      doc["fits"].push_back(std::move(jf));
    }
    out << doc.dump(2) << "\n";
  } else {
    const char sep = opt.format == "tsv" ? '\t' : ' ';
    out << "dataset: " << data.name() << "  n=" << data.size()
        << "  interval=[" << data.lo() << ", " << data.hi() << "]\n";
    out << "unit-interval -loglik reported; raw-scale -loglik = reported + "
           "n*log(hi-lo) = reported + "
        << std::setprecision(10) << data.log_jacobian() << "\n";
    out << std::left << std::setw(8) << "family" << sep << std::right
        << std::setw(12) << "-loglik" << sep << std::setw(10) << "alpha" << sep
        << std::setw(10) << "beta" << sep << std::setw(8) << "gamma" << sep
        << std::setw(8) << "delta" << sep << std::setw(9) << "lr_stat" << sep
        << std::setw(3) << "df" << sep << std::setw(10) << "p" << sep
        << "converged\n";
    for (std::size_t i = 0; i < fits.size(); ++i) {
      const FitResult& r = fits[i];
      const int np = family_param_count(r.family);
      out << std::left << std::setw(8) << family_name(r.family) << sep
          << std::right << std::fixed << std::setprecision(2) << std::setw(12)
          << r.neg_loglik << sep << std::setw(10) << std::setprecision(3)
          << r.core.alpha << sep << std::setw(10) << r.core.beta << sep;
      out << std::setw(8);
      if (np >= 3) {
        out << r.shape.gamma;
      } else {
        out << "-";
      }
      out << sep << std::setw(8);
      if (np >= 4) {
        out << r.shape.delta;
      } else {
        out << "-";
      }
      out << sep << std::setw(9);
      if (lrs[i]) {
        out << std::setprecision(2) << lrs[i]->statistic << sep << std::setw(3)
            << lrs[i]->df << sep << std::setw(10) << std::setprecision(5)
            << lrs[i]->p_value;
      } else {
        out << "-" << sep << std::setw(3) << "-" << sep << std::setw(10)
            << "-";
      }
      out << sep << (r.converged ? "yes" : "NO") << "\n";
      out.unsetf(std::ios::fixed);
    }
    for (const FitResult& r : fits) {
      out << "stages " << family_name(r.family) << ":";
      for (const auto& [stage, nll] : r.stage_trace) {
        out << " " << stage << "=" << std::setprecision(6) << std::fixed << nll;
        out.unsetf(std::ios::fixed);
      }
      out << "\n";
    }
  }
  if (!all_converged) {
    err << "error: at least one fit did not converge\n";
    return 3;
  }
  return 0;
}

// ---- sample command --------------------------------------------------------

struct SampleOptions {
  DistFlags dist;
  long long n = 0;
  std::uint64_t seed = 0;
  std::string method = "inversion";
};

int cmd_sample(const SampleOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.n < 1) throw UsageError("sample: --n must be at least 1");
  const AnyDist dist = make_dist(opt.dist);
  RandomSource rng(opt.seed);
  RejectionStats stats;
  out << std::setprecision(17);

  for (long long i = 0; i < opt.n; ++i) {
    const double x = std::visit(
        [&](const auto& d) -> double {
          using D = std::decay_t<decltype(d)>;
          if constexpr (std::is_same_v<D, SQBetaDist> ||
                        std::is_same_v<D, SCBetaDist>) {
            return sample(d, rng, &stats);
          } else if constexpr (std::is_same_v<D, GenQuadDist>) {
            return sample(d, rng,
                          opt.method == "rejection" ? GenQuadMethod::rejection
                                                    : GenQuadMethod::inversion);
          } else {
            return sample(d, rng);
          }
        },
        dist);
    out << x << "\n";
  }

  if (stats.proposed > 0) {
    const double expected = std::visit(
        [](const auto& d) -> double {
          using D = std::decay_t<decltype(d)>;
          if constexpr (std::is_same_v<D, SQBetaDist> ||
                        std::is_same_v<D, SCBetaDist>) {
            return rejection_efficiency(d);
          } else {
            return 0.0;
          }
        },
        dist);
    err << "rejection sampler: accepted " << stats.accepted << "/"
        << stats.proposed << ", efficiency " << std::setprecision(4)
        << stats.efficiency() << " (expected " << expected << ")\n";
  }
  return 0;
}

// ---- grid command ----------------------------------------------------------

struct GridOptions {
  DistFlags dist;
  int grid_points = 101;
  std::string format = "tsv";
};

int cmd_grid(const GridOptions& opt, std::ostream& out) {
  if (opt.grid_points < 2) {
    throw UsageError("grid: --grid-points must be at least 2");
  }
  const AnyDist dist = make_dist(opt.dist);
  const auto log_pdf_at = [&](double x) {
    return std::visit([x](const auto& d) { return d.log_pdf(x); }, dist);
  };
  const bool diverges_lo = std::isinf(log_pdf_at(0.0)) && log_pdf_at(0.0) > 0;
  const bool diverges_hi = std::isinf(log_pdf_at(1.0)) && log_pdf_at(1.0) > 0;

  std::vector<double> xs(opt.grid_points);
  for (int i = 0; i < opt.grid_points; ++i) {
    xs[i] = static_cast<double>(i) / (opt.grid_points - 1);
  }
  if (diverges_lo) xs.front() = 1e-9;
  if (diverges_hi) xs.back() = 1.0 - 1e-9;

  std::vector<double> pdfs(xs.size());
  std::vector<double> cdfs(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    pdfs[i] = std::visit([&](const auto& d) { return d.pdf(xs[i]); }, dist);
    cdfs[i] = std::visit([&](const auto& d) { return d.cdf(xs[i]); }, dist);
  }

  if (opt.format == "json") {
    json doc = {{"family", opt.dist.family},
                {"x", xs},
                {"pdf", pdfs},
                {"cdf", cdfs}};
    out << doc.dump(2) << "\n";
  } else {
    out << "x\tpdf\tcdf\n" << std::setprecision(12);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      out << xs[i] << "\t" << pdfs[i] << "\t" << cdfs[i] << "\n";
    }
  }
  return 0;
}

void add_dist_flags(CLI::App* cmd, DistFlags* flags) {
  cmd->add_option("--family", flags->family, "distribution family")
      ->required()
      ->check(CLI::IsMember({"beta", "qbeta", "sqbeta", "cbeta", "scbeta",
                             "cbeta11", "genquad"}));
  cmd->add_option("--alpha", flags->alpha, "parent beta alpha");
  cmd->add_option("--beta", flags->beta, "parent beta beta");
  cmd->add_option("--gamma", flags->gamma, "shape gamma in [0,1]");
  cmd->add_option("--delta", flags->delta, "shape delta in [0,1]");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "cubeta: cubic-transformed beta distributions (fit, sample, grids)"};
  app.name("cubeta");
  app.require_subcommand(1);

  FitOptions fit_opt;
  CLI::App* fit_cmd = app.add_subcommand(
      "fit", "maximum-likelihood fits of the model ladder to a CSV column");
  fit_cmd->add_option("--input", fit_opt.input, "CSV file")->required();
  fit_cmd->add_option("--column", fit_opt.column,
                      "column name or 0-based index (default 0)");
  fit_cmd->add_option("--interval", fit_opt.interval,
                      "observation interval lo hi (default 0 1)");
  fit_cmd
      ->add_option("--families", fit_opt.families,
                   "comma-separated subset of beta,qbeta,sqbeta,cbeta,scbeta")
      ->delimiter(',');
  fit_cmd->add_option("--format", fit_opt.format, "text, tsv or json")
      ->check(CLI::IsMember({"text", "tsv", "json"}));
  fit_cmd->add_flag("--nudge-boundaries", fit_opt.nudge,
                    "move boundary observations inward by 1/(2n)");

  SampleOptions sample_opt;
  CLI::App* sample_cmd =
      app.add_subcommand("sample", "draw random variates, one per line");
  add_dist_flags(sample_cmd, &sample_opt.dist);
  sample_cmd->add_option("--n", sample_opt.n, "number of draws")->required();
  sample_cmd->add_option("--seed", sample_opt.seed, "RNG seed (default 0)");
  sample_cmd
      ->add_option("--method", sample_opt.method,
                   "genquad only: inversion or rejection")
      ->check(CLI::IsMember({"inversion", "rejection"}));

  GridOptions pdf_opt;
  CLI::App* pdf_cmd = app.add_subcommand(
      "pdf-grid", "tabulate (x, pdf, cdf) on an equally spaced grid");
  add_dist_flags(pdf_cmd, &pdf_opt.dist);
  pdf_cmd->add_option("--grid-points", pdf_opt.grid_points,
                      "number of grid points (default 101)");
  pdf_cmd->add_option("--format", pdf_opt.format, "tsv or json")
      ->check(CLI::IsMember({"tsv", "json"}));

  GridOptions cdf_opt;
  CLI::App* cdf_cmd = app.add_subcommand(
      "cdf-grid", "tabulate (x, pdf, cdf) on an equally spaced grid");
  add_dist_flags(cdf_cmd, &cdf_opt.dist);
  cdf_cmd->add_option("--grid-points", cdf_opt.grid_points,
                      "number of grid points (default 101)");
  cdf_cmd->add_option("--format", cdf_opt.format, "tsv or json")
      ->check(CLI::IsMember({"tsv", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
    if (fit_cmd->parsed()) return cmd_fit(fit_opt, out, err);
    if (sample_cmd->parsed()) return cmd_sample(sample_opt, out, err);
    if (pdf_cmd->parsed()) return cmd_grid(pdf_opt, out);
    if (cdf_cmd->parsed()) return cmd_grid(cdf_opt, out);
    throw UsageError("no subcommand given");
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);  // --help and friends
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << "\n";
    return 2;
  } catch (const ConvergenceError& e) {
    err << "convergence failure: " << e.what() << "\n";
    return 3;
  } catch (const NonConvergence& e) {
    err << "convergence failure: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace cubeta::cli
