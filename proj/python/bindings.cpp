#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <sstream>

#include "efpm/cli.hpp"
#include "efpm/dataset.hpp"
#include "efpm/error.hpp"
#include "efpm/estimator.hpp"
#include "efpm/fpa.hpp"
#include "efpm/regress.hpp"
#include "efpm/report.hpp"
#include "efpm/spec_ingest.hpp"
#include "efpm/student_t.hpp"

namespace py = pybind11;
using namespace efpm;

namespace {

std::vector<Point> to_points(const std::vector<std::pair<double, double>>& xy) {
  std::vector<Point> pts;
  pts.reserve(xy.size());
  for (auto [x, y] : xy) pts.push_back({x, y});
  return pts;
}

template <typename T>
T value_or_raise(Parsed<T> parsed, const py::object& exc) {
  if (parsed) return std::move(parsed).value();
  std::string msg;
  for (const auto& e : parsed.errors()) msg += (msg.empty() ? "" : "\n") + to_string(e);
  PyErr_SetString(exc.ptr(), msg.c_str());
  throw py::error_already_set();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Function point counting, regression and early estimation";
  m.attr("__version__") = "0.1.0";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  static py::exception<ParseError> parse_failure(m, "ParseFailure", PyExc_ValueError);

  py::enum_<FunctionKind>(m, "FunctionKind")
      .value("ILF", FunctionKind::ILF)
      .value("EIF", FunctionKind::EIF)
      .value("EI", FunctionKind::EI)
      .value("EO", FunctionKind::EO)
      .value("EQ", FunctionKind::EQ);
  py::enum_<ComplexityLevel>(m, "ComplexityLevel")
      .value("Low", ComplexityLevel::Low)
      .value("Average", ComplexityLevel::Average)
      .value("High", ComplexityLevel::High);
  py::enum_<Predictor>(m, "Predictor")
      .value("CILF", Predictor::CILF)
      .value("CILFEIF", Predictor::CILFEIF)
      .value("CEIEOEQ", Predictor::CEIEOEQ);

  py::class_<ParseError>(m, "ParseError")
      .def_readonly("line", &ParseError::line)
      .def_readonly("column", &ParseError::column)
      .def_readonly("message", &ParseError::message)
      .def_readonly("offending_text", &ParseError::offending_text)
      .def("__repr__", [](const ParseError& e) { return "<ParseError " + to_string(e) + ">"; });

  // fpa-core
  py::class_<DataFunction>(m, "DataFunction")
      .def(py::init<std::string, FunctionKind, int, int>(), py::arg("name"), py::arg("kind"),
           py::arg("rets"), py::arg("dets"))
      .def_property_readonly("name", &DataFunction::name)
      .def_property_readonly("kind", &DataFunction::kind)
      .def_property_readonly("rets", &DataFunction::rets)
      .def_property_readonly("dets", &DataFunction::dets);
  py::class_<TransactionalFunction>(m, "TransactionalFunction")
      .def(py::init<std::string, FunctionKind, int, int>(), py::arg("name"), py::arg("kind"),
           py::arg("ftrs"), py::arg("dets"))
      .def_property_readonly("name", &TransactionalFunction::name)
      .def_property_readonly("kind", &TransactionalFunction::kind)
      .def_property_readonly("ftrs", &TransactionalFunction::ftrs)
      .def_property_readonly("dets", &TransactionalFunction::dets);
  py::class_<Project>(m, "Project")
      .def(py::init<std::string>(), py::arg("name") = "")
      .def("add", py::overload_cast<DataFunction>(&Project::add))
      .def("add", py::overload_cast<TransactionalFunction>(&Project::add))
      .def_property_readonly("name", &Project::name)
      .def_property_readonly("data_functions", &Project::data_functions)
      .def_property_readonly("transactional_functions", &Project::transactional_functions)
      .def("__len__", &Project::size)
      .def(py::self == py::self);
  py::class_<Counters>(m, "Counters")
      .def_readonly("cilf", &Counters::cilf)
      .def_readonly("cilfeif", &Counters::cilfeif)
      .def_readonly("ceieoeq", &Counters::ceieoeq)
      .def("as_tuple", [](const Counters& c) { return py::make_tuple(c.cilf, c.cilfeif, c.ceieoeq); });
  py::class_<FunctionPointCount>(m, "FunctionPointCount")
      .def_readonly("total_ufp", &FunctionPointCount::total_ufp)
      .def_readonly("counters", &FunctionPointCount::counters)
      .def("tally", [](const FunctionPointCount& c, FunctionKind k) {
        const auto& t = c.tally(k);
        return py::make_tuple(t.functions, t.ufp);
      });

  m.def("classify_data_function", &classify_data_function, py::arg("kind"), py::arg("rets"),
        py::arg("dets"));
  m.def("classify_transactional_function", &classify_transactional_function, py::arg("kind"),
        py::arg("ftrs"), py::arg("dets"));
  m.def("weight_of", &weight_of, py::arg("kind"), py::arg("level"));
  m.def("count_project", &count_project);
  m.def("derive_counters", &derive_counters);

  // spec-ingest
  m.def("parse_spec", [](std::string_view src) {
    return value_or_raise(parse_spec(src), parse_failure);
  });
  m.def("spec_errors", [](std::string_view src) {
    auto parsed = parse_spec(src);
    return parsed ? std::vector<ParseError>{} : parsed.errors();
  });
  m.def("render_spec", &render_spec);

  // dataset
  py::class_<MeasurementRecord>(m, "MeasurementRecord")
      .def(py::init([](int p, double fp, int a, int b, int c) {
             return MeasurementRecord{p, fp, a, b, c};
           }),
           py::arg("project_id"), py::arg("fp"), py::arg("cilf"), py::arg("cilfeif"),
           py::arg("ceieoeq"))
      .def_readonly("project_id", &MeasurementRecord::project_id)
      .def_readonly("fp", &MeasurementRecord::fp)
      .def_readonly("cilf", &MeasurementRecord::cilf)
      .def_readonly("cilfeif", &MeasurementRecord::cilfeif)
      .def_readonly("ceieoeq", &MeasurementRecord::ceieoeq);
  py::class_<Dataset>(m, "Dataset")
      .def(py::init<std::vector<MeasurementRecord>>())
      .def_property_readonly("records", &Dataset::records)
      .def("__len__", &Dataset::size)
      .def("points",
           [](const Dataset& ds, Predictor p) {
             std::vector<std::pair<double, double>> out;
             for (auto pt : ds.points(p)) out.emplace_back(pt.x, pt.y);
             return out;
           })
      .def(py::self == py::self);
  m.def("embedded_dataset", &embedded_dataset, py::return_value_policy::copy);
  m.def("load_csv", [](std::string_view src) {
    return value_or_raise(load_csv(src), parse_failure);
  });
  m.def("save_csv", &save_csv);
  py::class_<ConsistencyStat>(m, "ConsistencyStat")
      .def_readonly("project_id", &ConsistencyStat::project_id)
      .def_readonly("fp_low", &ConsistencyStat::fp_low)
      .def_readonly("fp_high", &ConsistencyStat::fp_high)
      .def_readonly("rel_diff", &ConsistencyStat::rel_diff);
  py::class_<ConsistencyReport>(m, "ConsistencyReport")
      .def_readonly("projects", &ConsistencyReport::projects)
      .def_readonly("mean_rel_diff", &ConsistencyReport::mean_rel_diff);
  m.def("consistency_stats", &consistency_stats);

  // regress
  py::class_<LinearModel>(m, "LinearModel")
      .def(py::init<>())
      .def_readwrite("predictor_name", &LinearModel::predictor_name)
      .def_readwrite("response_name", &LinearModel::response_name)
      .def_readwrite("n", &LinearModel::n)
      .def_readwrite("intercept", &LinearModel::intercept)
      .def_readwrite("slope", &LinearModel::slope)
      .def_readwrite("se_intercept", &LinearModel::se_intercept)
      .def_readwrite("se_slope", &LinearModel::se_slope)
      .def_readwrite("r", &LinearModel::r)
      .def_readwrite("r2", &LinearModel::r2)
      .def_readwrite("r2_adj", &LinearModel::r2_adj)
      .def_readwrite("se_est", &LinearModel::se_est)
      .def_readwrite("beta_std", &LinearModel::beta_std)
      .def_readwrite("t_intercept", &LinearModel::t_intercept)
      .def_readwrite("t_slope", &LinearModel::t_slope)
      .def_readwrite("p_intercept", &LinearModel::p_intercept)
      .def_readwrite("p_slope", &LinearModel::p_slope)
      .def_readwrite("x_mean", &LinearModel::x_mean)
      .def_readwrite("y_mean", &LinearModel::y_mean)
      .def_readwrite("sxx", &LinearModel::sxx)
      .def_readwrite("degenerate", &LinearModel::degenerate);
  m.def(
      "fit_simple_ols",
      [](const std::vector<std::pair<double, double>>& xy, std::string x_name,
         std::string y_name) { return fit_simple_ols(to_points(xy), x_name, y_name); },
      py::arg("points"), py::arg("predictor_name") = "x", py::arg("response_name") = "y");
  m.def("predict", &predict, py::arg("model"), py::arg("x"));
  m.def("residuals", [](const LinearModel& model, const std::vector<std::pair<double, double>>& xy) {
    return residuals(model, to_points(xy));
  });
  m.def("model_summary", &model_summary);
  m.def("student_t_two_tailed_p", &student_t_two_tailed_p, py::arg("t"), py::arg("df"));
  m.def("student_t_quantile", &student_t_quantile, py::arg("prob"), py::arg("df"));

  // efpm
  py::class_<CalibratedModelSet>(m, "CalibratedModelSet")
      .def_readonly("cilf", &CalibratedModelSet::cilf)
      .def_readonly("cilfeif", &CalibratedModelSet::cilfeif)
      .def_readonly("ceieoeq", &CalibratedModelSet::ceieoeq)
      .def("model", &CalibratedModelSet::model, py::return_value_policy::copy);
  py::class_<PredictionInterval>(m, "PredictionInterval")
      .def_readonly("low", &PredictionInterval::low)
      .def_readonly("high", &PredictionInterval::high)
      .def_readonly("level", &PredictionInterval::level);
  py::class_<Estimate>(m, "Estimate")
      .def_readonly("predicted_fp", &Estimate::predicted_fp)
      .def_readonly("model_used", &Estimate::model_used)
      .def_readonly("r2", &Estimate::r2)
      .def_readonly("interval", &Estimate::interval);
  m.def("paper_models", &paper_models, py::return_value_policy::copy);
  m.def("fit_models", &fit_models);
  m.def(
      "estimate",
      [](std::optional<int> cilf, std::optional<int> cilfeif, std::optional<int> ceieoeq,
         std::optional<CalibratedModelSet> models, std::optional<double> level) {
        return estimate({cilf, cilfeif, ceieoeq}, models ? *models : paper_models(), level);
      },
      py::kw_only(), py::arg("cilf") = py::none(), py::arg("cilfeif") = py::none(),
      py::arg("ceieoeq") = py::none(), py::arg("models") = py::none(),
      py::arg("level") = py::none());
  m.def("best_estimate",
        [](const std::vector<Estimate>& estimates) { return best_estimate(estimates); });
  m.def("prediction_interval", &prediction_interval, py::arg("model"), py::arg("x"),
        py::arg("level"));

  // report
  m.def(
      "scatter_svg",
      [](const std::vector<std::pair<double, double>>& xy, const LinearModel& model,
         std::string x_label, std::string y_label, std::string title, int width, int height) {
        return scatter_svg(
            {to_points(xy), model, std::move(x_label), std::move(y_label), std::move(title), width,
             height});
      },
      py::arg("points"), py::arg("model"), py::arg("x_label"), py::arg("y_label"),
      py::arg("title"), py::arg("width") = 640, py::arg("height") = 480);
  m.def("data_table", [](const std::vector<std::pair<double, double>>& xy, const LinearModel& model) {
    return data_table(to_points(xy), model);
  });

  // cli
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
