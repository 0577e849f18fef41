#include "efpm/fpa.hpp"

#include <algorithm>
#include <cctype>

#include "efpm/error.hpp"

namespace efpm {

namespace {

using Level = ComplexityLevel;

// Rows: the three count bands of the first dimension; columns: DET bands.
using Matrix = std::array<std::array<Level, 3>, 3>;

constexpr Matrix kComplexityMatrix{{
    {Level::Low, Level::Low, Level::Average},
    {Level::Low, Level::Average, Level::High},
    {Level::Average, Level::High, Level::High},
}};

// Lower bounds of the second and third band along one axis.
struct Bands {
  int second;
  int third;

  constexpr std::size_t index(int value) const noexcept {
    return value >= third ? 2 : value >= second ? 1 : 0;
  }
};

constexpr Bands kDataRets{2, 6};
constexpr Bands kDataDets{20, 51};
constexpr Bands kInputFtrs{2, 3};
constexpr Bands kInputDets{5, 16};
constexpr Bands kOutputFtrs{2, 4};
constexpr Bands kOutputDets{6, 20};

constexpr std::array<std::array<int, 3>, 5> kWeights{{
    {7, 10, 15},  // ILF
    {5, 7, 10},   // EIF
    {3, 4, 6},    // EI
    {4, 5, 7},    // EO
    {3, 4, 6},    // EQ
}};

void require_name(const std::string& name) {
  if (name.empty()) throw ValidationError("name", "function name must not be empty");
  if (name.find_first_of("\"\r\n") != std::string::npos) {
    throw ValidationError("name", "function name must not contain quotes or line breaks: " + name);
  }
}

}  // namespace

std::string_view to_string(FunctionKind kind) noexcept {
  switch (kind) {
    case FunctionKind::ILF: return "ILF";
    case FunctionKind::EIF: return "EIF";
    case FunctionKind::EI: return "EI";
    case FunctionKind::EO: return "EO";
    case FunctionKind::EQ: return "EQ";
  }
  return "?";
}

std::string_view to_string(ComplexityLevel level) noexcept {
  switch (level) {
    case Level::Low: return "Low";
    case Level::Average: return "Average";
    case Level::High: return "High";
  }
  return "?";
}

std::optional<FunctionKind> parse_kind(std::string_view text) noexcept {
  for (FunctionKind k : kAllKinds) {
    auto name = to_string(k);
    if (name.size() == text.size() &&
        std::equal(name.begin(), name.end(), text.begin(), [](char a, char b) {
          return a == std::toupper(static_cast<unsigned char>(b));
        })) {
      return k;
    }
  }
  return std::nullopt;
}

DataFunction::DataFunction(std::string name, FunctionKind kind, int rets, int dets)
    : name_(std::move(name)), kind_(kind), rets_(rets), dets_(dets) {
  require_name(name_);
  classify_data_function(kind_, rets_, dets_);
}

TransactionalFunction::TransactionalFunction(std::string name, FunctionKind kind, int ftrs,
                                             int dets)
    : name_(std::move(name)), kind_(kind), ftrs_(ftrs), dets_(dets) {
  require_name(name_);
  classify_transactional_function(kind_, ftrs_, dets_);
}

Project::Project(std::string name) : name_(std::move(name)) {
  if (name_.find_first_of("\"\r\n") != std::string::npos) {
    throw ValidationError("name", "project name must not contain quotes or line breaks");
  }
}

bool Project::contains(std::string_view function_name) const noexcept {
  return std::any_of(data_.begin(), data_.end(),
                     [&](const auto& f) { return f.name() == function_name; }) ||
         std::any_of(transactions_.begin(), transactions_.end(),
                     [&](const auto& f) { return f.name() == function_name; });
}

void Project::add(DataFunction f) {
  if (contains(f.name())) throw ValidationError("name", "duplicate function name: " + f.name());
  data_.push_back(std::move(f));
}

void Project::add(TransactionalFunction f) {
  if (contains(f.name())) throw ValidationError("name", "duplicate function name: " + f.name());
  transactions_.push_back(std::move(f));
}

ComplexityLevel classify_data_function(FunctionKind kind, int rets, int dets) {
  if (!is_data_kind(kind)) {
    throw ValidationError("kind", std::string(to_string(kind)) + " is not a data function kind");
  }
  if (rets < 1) throw ValidationError("rets", "rets must be at least 1, got " + std::to_string(rets));
  if (dets < 1) throw ValidationError("dets", "dets must be at least 1, got " + std::to_string(dets));
  return kComplexityMatrix[kDataRets.index(rets)][kDataDets.index(dets)];
}

ComplexityLevel classify_transactional_function(FunctionKind kind, int ftrs, int dets) {
  if (!is_transactional_kind(kind)) {
    throw ValidationError("kind",
                          std::string(to_string(kind)) + " is not a transactional function kind");
  }
  if (ftrs < 0) throw ValidationError("ftrs", "ftrs must be at least 0, got " + std::to_string(ftrs));
  if (dets < 1) throw ValidationError("dets", "dets must be at least 1, got " + std::to_string(dets));
  const bool input = kind == FunctionKind::EI;
  const Bands& ftr_bands = input ? kInputFtrs : kOutputFtrs;
  const Bands& det_bands = input ? kInputDets : kOutputDets;
  return kComplexityMatrix[ftr_bands.index(ftrs)][det_bands.index(dets)];
}

int weight_of(FunctionKind kind, ComplexityLevel level) noexcept {
  return kWeights[static_cast<std::size_t>(kind)][static_cast<std::size_t>(level)];
}

ComplexityLevel classify(const DataFunction& f) {
  return classify_data_function(f.kind(), f.rets(), f.dets());
}

ComplexityLevel classify(const TransactionalFunction& f) {
  return classify_transactional_function(f.kind(), f.ftrs(), f.dets());
}

FunctionPointCount count_project(const Project& project) {
  FunctionPointCount count;
  auto tally = [&](FunctionKind kind, ComplexityLevel level) {
    auto& t = count.per_kind[static_cast<std::size_t>(kind)];
    const int w = weight_of(kind, level);
    ++t.functions;
    t.ufp += w;
    count.total_ufp += w;
  };
  for (const auto& f : project.data_functions()) tally(f.kind(), classify(f));
  for (const auto& f : project.transactional_functions()) tally(f.kind(), classify(f));
  count.counters = derive_counters(project);
  return count;
}

Counters derive_counters(const Project& project) noexcept {
  Counters c;
  for (const auto& f : project.data_functions()) {
    if (f.kind() == FunctionKind::ILF) ++c.cilf;
    ++c.cilfeif;
  }
  c.ceieoeq = static_cast<int>(project.transactional_functions().size());
  return c;
}

}  // namespace efpm
