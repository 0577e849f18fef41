#include "efpm/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "efpm/dataset.hpp"
#include "efpm/error.hpp"
#include "efpm/estimator.hpp"
#include "efpm/format.hpp"
#include "efpm/fpa.hpp"
#include "efpm/regress.hpp"
#include "efpm/report.hpp"
#include "efpm/spec_ingest.hpp"

namespace efpm::cli {

namespace {

// Raised inside command handlers; caught once in run().
struct Failure {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{"cannot read '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Failure{"cannot write '" + path + "'"};
}

void report_errors(std::ostream& err, const std::string& path,
                   const std::vector<ParseError>& errors) {
  for (const auto& e : errors) err << path << ':' << to_string(e) << '\n';
}

Dataset dataset_from(const std::string& path, std::ostream& err) {
  if (path.empty()) return embedded_dataset();
  auto parsed = load_csv(read_file(path));
  if (!parsed) {
    report_errors(err, path, parsed.errors());
    throw Failure{"invalid dataset '" + path + "'"};
  }
  return std::move(parsed).value();
}

Predictor predictor_from(const std::string& text) {
  // Already restricted by the option's IsMember check.
  return *parse_predictor(text);
}

void count_command(const std::string& path, std::ostream& out, std::ostream& err) {
  auto parsed = parse_spec(read_file(path));
  if (!parsed) {
    report_errors(err, path, parsed.errors());
    throw Failure{"invalid project specification '" + path + "'"};
  }
  const Project& project = parsed.value();
  const FunctionPointCount count = count_project(project);

  out << "project\t" << project.name() << '\n';
  for (const auto& f : project.data_functions()) {
    const auto level = classify(f);
    out << "function\t" << f.name() << '\t' << to_string(f.kind()) << '\t' << to_string(level)
        << '\t' << weight_of(f.kind(), level) << '\n';
  }
  for (const auto& f : project.transactional_functions()) {
    const auto level = classify(f);
    out << "function\t" << f.name() << '\t' << to_string(f.kind()) << '\t' << to_string(level)
        << '\t' << weight_of(f.kind(), level) << '\n';
  }
  for (FunctionKind k : kAllKinds) {
    const KindTally& t = count.tally(k);
    out << "kind\t" << to_string(k) << '\t' << t.functions << '\t' << t.ufp << '\n';
  }
  out << "total_ufp\t" << count.total_ufp << '\n';
  out << "cilf\t" << count.counters.cilf << '\n';
  out << "cilfeif\t" << count.counters.cilfeif << '\n';
  out << "ceieoeq\t" << count.counters.ceieoeq << '\n';
}

struct EstimateOptions {
  std::optional<int> cilf;
  std::optional<int> cilfeif;
  std::optional<int> ceieoeq;
  std::optional<double> interval;
  std::string models = "paper";
};

void estimate_command(const EstimateOptions& opt, std::ostream& out, std::ostream& err) {
  CalibratedModelSet models;
  if (opt.models == "paper") {
    models = paper_models();
  } else {
    models = fit_models(dataset_from(opt.models.substr(4), err));
  }
  const EstimationInput input{opt.cilf, opt.cilfeif, opt.ceieoeq};
  const auto estimates = estimate(input, models, opt.interval);

  auto counter_of = [&](Predictor p) {
    switch (p) {
      case Predictor::CILF: return *input.cilf;
      case Predictor::CILFEIF: return *input.cilfeif;
      case Predictor::CEIEOEQ: return *input.ceieoeq;
    }
    return 0;
  };
  out << "model\tcounter\tpredicted_fp\tr2";
  if (opt.interval) out << "\tlevel\tlow\thigh";
  out << '\n';
  for (const auto& e : estimates) {
    out << to_string(e.model_used) << '\t' << counter_of(e.model_used) << '\t'
        << format_fixed(e.predicted_fp, 3) << '\t' << format_fixed(e.r2, 3);
    if (e.interval) {
      out << '\t' << format_shortest(e.interval->level) << '\t'
          << format_fixed(e.interval->low, 3) << '\t' << format_fixed(e.interval->high, 3);
    }
    out << '\n';
  }
  out << "best\t" << to_string(best_estimate(estimates).model_used) << '\n';
}

void fit_command(const std::string& x, const std::string& dataset, std::ostream& out,
                 std::ostream& err) {
  const Dataset ds = dataset_from(dataset, err);
  const Predictor p = predictor_from(x);
  const auto points = ds.points(p);
  out << model_summary(fit_simple_ols(points, std::string(to_string(p)), "FP"));
}

void consistency_command(const std::string& dataset, std::ostream& out, std::ostream& err) {
  const ConsistencyReport report = consistency_stats(dataset_from(dataset, err));
  out << "project\tfp_low\tfp_high\trel_diff\n";
  for (const auto& s : report.projects) {
    out << s.project_id << '\t' << format_fixed(s.fp_low, 1) << '\t' << format_fixed(s.fp_high, 1)
        << '\t' << format_fixed(s.rel_diff, 5) << '\n';
  }
  out << "mean_rel_diff\t" << format_fixed(report.mean_rel_diff, 5) << '\n';
}

struct PlotOptions {
  std::string x;
  std::string out;
  std::string table;
  std::string dataset;
};

void plot_command(const PlotOptions& opt, std::ostream& out, std::ostream& err) {
  const Dataset ds = dataset_from(opt.dataset, err);
  const Predictor p = predictor_from(opt.x);
  const std::string name(to_string(p));
  PlotSpec spec;
  spec.points = ds.points(p);
  spec.model = fit_simple_ols(spec.points, name, "FP");
  spec.x_label = name;
  spec.y_label = "FP";
  spec.title = "Regression line FP - " + name;
  write_file(opt.out, scatter_svg(spec));
  out << "wrote\t" << opt.out << '\n';
  if (!opt.table.empty()) {
    write_file(opt.table, data_table(spec.points, spec.model));
    out << "wrote\t" << opt.table << '\n';
  }
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Function point counting and early estimation workbench", "efpm"};
  app.require_subcommand(1);
  const std::vector<std::string> predictors{"cilf", "cilfeif", "ceieoeq"};

  std::string count_path;
  auto* count = app.add_subcommand("count", "Count unadjusted function points of a .fps file");
  count->add_option("file", count_path, "Project specification")->required();

  EstimateOptions est;
  auto* estimate_cmd =
      app.add_subcommand("estimate", "Estimate function points from early counters");
  estimate_cmd->add_option("--cilf", est.cilf, "Number of ILFs");
  estimate_cmd->add_option("--cilfeif", est.cilfeif, "Number of ILFs plus EIFs");
  estimate_cmd->add_option("--ceieoeq", est.ceieoeq, "Number of EIs, EOs and EQs");
  estimate_cmd->add_option("--interval", est.interval, "Prediction interval confidence level");
  estimate_cmd
      ->add_option("--models", est.models, "'paper' or 'fit:<dataset.csv>'")
      ->check(CLI::Validator(
          [](std::string& v) -> std::string {
            if (v == "paper" || (v.rfind("fit:", 0) == 0 && v.size() > 4)) return {};
            return "expected 'paper' or 'fit:<csv>'";
          },
          "MODELS"));

  std::string fit_x, fit_dataset;
  auto* fit = app.add_subcommand("fit", "Fit FP against one counter and print the model tables");
  fit->add_option("--x", fit_x, "Predictor")->required()->check(CLI::IsMember(predictors));
  fit->add_option("--dataset", fit_dataset, "CSV dataset (default: embedded)");

  auto* dataset = app.add_subcommand("dataset", "Embedded dataset operations");
  dataset->require_subcommand(1);
  auto* dataset_export = dataset->add_subcommand("export", "Print the embedded dataset as CSV");

  std::string consistency_dataset;
  auto* consistency =
      app.add_subcommand("consistency", "Relative difference between paired measurements");
  consistency->add_option("--dataset", consistency_dataset, "CSV dataset (default: embedded)");

  PlotOptions plot_opt;
  auto* plot = app.add_subcommand("plot", "Write a scatter plot with its regression line");
  plot->add_option("--x", plot_opt.x, "Predictor")->required()->check(CLI::IsMember(predictors));
  plot->add_option("--out", plot_opt.out, "SVG output path")->required();
  plot->add_option("--table", plot_opt.table, "Optional TSV of x, y, fitted, residual");
  plot->add_option("--dataset", plot_opt.dataset, "CSV dataset (default: embedded)");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "efpm: " << e.what() << '\n' << app.help();
    return kUsage;
  }

  try {
    if (count->parsed()) {
      count_command(count_path, out, err);
    } else if (estimate_cmd->parsed()) {
      estimate_command(est, out, err);
    } else if (fit->parsed()) {
      fit_command(fit_x, fit_dataset, out, err);
    } else if (dataset_export->parsed()) {
      out << save_csv(embedded_dataset());
    } else if (consistency->parsed()) {
      consistency_command(consistency_dataset, out, err);
    } else if (plot->parsed()) {
      plot_command(plot_opt, out, err);
    }
  } catch (const Failure& f) {
    err << "efpm: error: " << f.message << '\n';
    return kFailure;
  } catch (const std::exception& e) {
    err << "efpm: error: " << e.what() << '\n';
    return kFailure;
  }
  return kSuccess;
}

}  // namespace efpm::cli
