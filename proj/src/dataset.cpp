#include "efpm/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>

#include "efpm/format.hpp"

namespace efpm {

namespace {

// P, FP, CILF, CILFEIF, CEIEOEQ
const MeasurementRecord kReferenceRows[] = {
    {1, 203.0, 8, 8, 32},
    {1, 379.0, 10, 37, 31},
    {2, 266.0, 8, 11, 36},
    {2, 284.0, 8, 13, 46},
    {3, 175.0, 2, 7, 27},
    {3, 171.0, 2, 10, 22},
    {4, 218.0, 5, 15, 24},
    {4, 218.0, 5, 11, 36},
    {5, 160.0, 0, 23, 7},
    {5, 119.0, 0, 14, 8},
    {6, 219.0, 10, 14, 38},
    {6, 240.0, 10, 14, 38},
    {7, 236.0, 9, 10, 29},
    {7, 268.0, 10, 11, 37},
    {8, 402.0, 15, 20, 48},
    {8, 346.0, 15, 18, 47},
    {9, 216.0, 2, 16, 20},
    {9, 227.0, 2, 16, 20},
    {10, 298.0, 16, 20, 30},
    {10, 246.0, 9, 15, 27},
    {11, 221.0, 4, 7, 33},
    {11, 155.0, 4, 7, 17},
    {12, 385.0, 20, 22, 60},
    {12, 487.0, 16, 22, 67},
    {13, 262.0, 9, 12, 38},
    {13, 292.0, 10, 13, 47},
    {14, 441.0, 15, 26, 51},
    {14, 462.0, 15, 22, 67},
    {15, 519.0, 16, 26, 78},
    {15, 577.0, 18, 30, 65},
    {16, 247.0, 5, 15, 33},
    {16, 265.0, 5, 12, 43},
    {17, 370.0, 19, 19, 54},
    {17, 335.0, 17, 21, 45},
    {18, 438.0, 11, 24, 71},
    {18, 445.0, 12, 23, 65},
    {19, 349.0, 13, 18, 50},
    {19, 341.0, 13, 17, 55},
    {20, 256.0, 10, 15, 32},
    {20, 281.0, 10, 15, 42},
    {21, 127.0, 1, 9, 14},
    {21, 94.0, 1, 7, 10},
    {22, 118.0, 3, 9, 16},
    {22, 152.0, 5, 11, 17},
    {23, 244.0, 7, 18, 26},
    {23, 268.0, 7, 19, 24},
    {24, 208.0, 9, 15, 23},
    {24, 166.0, 5, 10, 18},
    {25, 258.0, 13, 13, 42},
    {25, 269.0, 13, 13, 44},
    {26, 403.0, 9, 17, 53},
    {26, 414.0, 9, 17, 54},
    {27, 609.0, 34, 43, 84},
    {27, 719.0, 34, 47, 88},
    {28, 277.0, 17, 21, 34},
    {28, 235.0, 15, 17, 29},
    {29, 120.0, 3, 8, 15},
    {29, 113.0, 3, 7, 16},
    {30, 234.0, 10, 24, 21},
    {30, 250.0, 10, 25, 22},
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

template <typename T>
bool parse_number(std::string_view text, T& out) {
  if (text.empty()) return false;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc{} && end == text.data() + text.size();
}

// One decimal place unless that would lose information.
std::string format_fp(double fp) {
  std::string fixed = format_fixed(fp, 1);
  double back = 0.0;
  std::from_chars(fixed.data(), fixed.data() + fixed.size(), back);
  return back == fp ? fixed : format_shortest(fp);
}

}  // namespace

std::string_view to_string(Predictor p) noexcept {
  switch (p) {
    case Predictor::CILF: return "CILF";
    case Predictor::CILFEIF: return "CILFEIF";
    case Predictor::CEIEOEQ: return "CEIEOEQ";
  }
  return "?";
}

std::optional<Predictor> parse_predictor(std::string_view text) noexcept {
  std::string up(text);
  for (char& c : up) c = static_cast<char>(c >= 'a' && c <= 'z' ? c - 'a' + 'A' : c);
  for (Predictor p : {Predictor::CILF, Predictor::CILFEIF, Predictor::CEIEOEQ}) {
    if (up == to_string(p)) return p;
  }
  return std::nullopt;
}

double counter_value(const MeasurementRecord& r, Predictor p) noexcept {
  switch (p) {
    case Predictor::CILF: return r.cilf;
    case Predictor::CILFEIF: return r.cilfeif;
    case Predictor::CEIEOEQ: return r.ceieoeq;
  }
  return 0.0;
}

void validate(const MeasurementRecord& r) {
  if (r.project_id < 1) throw ValidationError("project", "project id must be at least 1");
  if (!std::isfinite(r.fp) || r.fp < 0) throw ValidationError("fp", "fp must be a non-negative number");
  if (r.cilf < 0) throw ValidationError("cilf", "cilf must be non-negative");
  if (r.cilfeif < 0) throw ValidationError("cilfeif", "cilfeif must be non-negative");
  if (r.ceieoeq < 0) throw ValidationError("ceieoeq", "ceieoeq must be non-negative");
  if (r.cilfeif < r.cilf) throw ValidationError("cilfeif", "cilfeif < cilf");
}

Dataset::Dataset(std::vector<MeasurementRecord> records) : records_(std::move(records)) {
  for (const auto& r : records_) validate(r);
}

void Dataset::add(const MeasurementRecord& r) {
  validate(r);
  records_.push_back(r);
}

std::vector<Point> Dataset::points(Predictor predictor) const {
  std::vector<Point> out;
  out.reserve(records_.size());
  for (const auto& r : records_) out.push_back({counter_value(r, predictor), r.fp});
  return out;
}

const Dataset& embedded_dataset() {
  static const Dataset ds(std::vector<MeasurementRecord>(std::begin(kReferenceRows),
                                                         std::end(kReferenceRows)));
  return ds;
}

Parsed<Dataset> load_csv(std::string_view source) {
  std::vector<ParseError> errors;
  Dataset ds;
  if (source.substr(0, 3) == "\xEF\xBB\xBF") source.remove_prefix(3);

  static constexpr const char* kColumns[] = {"project", "fp", "cilf", "cilfeif", "ceieoeq"};
  int line_no = 0;
  bool saw_header = false;
  std::size_t pos = 0;
  while (pos < source.size()) {
    const std::size_t nl = source.find('\n', pos);
    std::string_view line = source.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
    pos = nl == std::string_view::npos ? source.size() : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (!saw_header) {
      saw_header = true;
      if (trim(line) != kCsvHeader) {
        errors.push_back({line_no, 1, "bad header, expected '" + std::string(kCsvHeader) + "'",
                          std::string(line)});
        break;
      }
      continue;
    }
    if (trim(line).empty()) continue;

    std::vector<std::pair<std::string_view, int>> cells;  // text, column
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      const auto raw = line.substr(start, comma == std::string_view::npos ? comma : comma - start);
      cells.emplace_back(trim(raw), static_cast<int>(start) + 1);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (cells.size() != 5) {
      errors.push_back({line_no, 1,
                        "expected 5 cells, found " + std::to_string(cells.size()),
                        std::string(line)});
      continue;
    }

    MeasurementRecord r;
    int* ints[] = {&r.project_id, nullptr, &r.cilf, &r.cilfeif, &r.ceieoeq};
    bool ok = true;
    for (std::size_t i = 0; i < 5; ++i) {
      const auto [text, col] = cells[i];
      const bool parsed = ints[i] ? parse_number(text, *ints[i]) : parse_number(text, r.fp);
      if (!parsed) {
        errors.push_back({line_no, col,
                          std::string("non-numeric value in column '") + kColumns[i] + "'",
                          std::string(text)});
        ok = false;
      }
    }
    if (!ok) continue;
    try {
      ds.add(r);
    } catch (const ValidationError& e) {
      int col = 1;
      for (std::size_t i = 0; i < 5; ++i) {
        if (e.field() == kColumns[i]) col = cells[i].second;
      }
      errors.push_back({line_no, col, e.what(), std::string(line)});
    }
  }
  if (!saw_header) errors.push_back({1, 1, "missing header", ""});
  if (!errors.empty()) return errors;
  return ds;
}

std::string save_csv(const Dataset& ds) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : ds.records()) {
    out += std::to_string(r.project_id) + ',' + format_fp(r.fp) + ',' + std::to_string(r.cilf) +
           ',' + std::to_string(r.cilfeif) + ',' + std::to_string(r.ceieoeq) + '\n';
  }
  return out;
}

ConsistencyReport consistency_stats(const Dataset& ds) {
  if (ds.empty()) throw ValidationError("dataset", "dataset is empty");
  std::map<int, std::vector<double>> by_project;
  for (const auto& r : ds.records()) by_project[r.project_id].push_back(r.fp);

  ConsistencyReport report;
  double sum = 0.0;
  for (const auto& [id, fps] : by_project) {
    if (fps.size() != 2) {
      throw ValidationError("project", "project " + std::to_string(id) + " has " +
                                           std::to_string(fps.size()) +
                                           " measurements, expected exactly 2");
    }
    const double lo = std::min(fps[0], fps[1]);
    const double hi = std::max(fps[0], fps[1]);
    const double mean = (lo + hi) / 2.0;
    const double rel = hi == lo ? 0.0 : (hi - lo) / mean;
    report.projects.push_back({id, lo, hi, rel});
    sum += rel;
  }
  report.mean_rel_diff = sum / static_cast<double>(report.projects.size());
  return report;
}

}  // namespace efpm
