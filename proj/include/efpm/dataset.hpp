#pragma once

// Measurement datasets: the embedded 60-measurement reference table, CSV
// exchange, and the paired-rater consistency summary.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "efpm/error.hpp"
#include "efpm/point.hpp"

namespace efpm {

/// One measurement of one project: unadjusted FP plus its three counters.
struct MeasurementRecord {
  int project_id = 0;
  double fp = 0.0;
  int cilf = 0;
  int cilfeif = 0;
  int ceieoeq = 0;

  friend bool operator==(const MeasurementRecord&, const MeasurementRecord&) = default;
};

/// Which counter column serves as the regression predictor.
enum class Predictor { CILF, CILFEIF, CEIEOEQ };

std::string_view to_string(Predictor p) noexcept;
/// Accepts "cilf", "cilfeif", "ceieoeq" in any case.
std::optional<Predictor> parse_predictor(std::string_view text) noexcept;
double counter_value(const MeasurementRecord& r, Predictor p) noexcept;

/// Throws ValidationError naming the first violated field.
void validate(const MeasurementRecord& r);

class Dataset {
public:
  Dataset() = default;
  /// Validates every record.
  explicit Dataset(std::vector<MeasurementRecord> records);

  void add(const MeasurementRecord& r);

  const std::vector<MeasurementRecord>& records() const noexcept { return records_; }
  std::size_t size() const noexcept { return records_.size(); }
  bool empty() const noexcept { return records_.empty(); }

  /// (counter, fp) pairs in record order.
  std::vector<Point> points(Predictor predictor) const;

  friend bool operator==(const Dataset&, const Dataset&) = default;

private:
  std::vector<MeasurementRecord> records_;
};

/// The 60 published measurements: 30 projects, each measured by two raters.
const Dataset& embedded_dataset();

inline constexpr std::string_view kCsvHeader = "project,fp,cilf,cilfeif,ceieoeq";

Parsed<Dataset> load_csv(std::string_view source);
std::string save_csv(const Dataset& ds);

struct ConsistencyStat {
  int project_id = 0;
  double fp_low = 0.0;   // smaller of the two measurements
  double fp_high = 0.0;  // larger of the two measurements
  double rel_diff = 0.0; // |a - b| / mean(a, b)
};

struct ConsistencyReport {
  std::vector<ConsistencyStat> projects;  // ascending project_id
  double mean_rel_diff = 0.0;
};

/// Requires every project to appear exactly twice; throws ValidationError
/// naming the first project that does not.
ConsistencyReport consistency_stats(const Dataset& ds);

}  // namespace efpm
