#pragma once

// IFPUG 4.1 function classification, weighting and unadjusted counting.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace efpm {

enum class FunctionKind { ILF, EIF, EI, EO, EQ };

inline constexpr std::array<FunctionKind, 5> kAllKinds{
    FunctionKind::ILF, FunctionKind::EIF, FunctionKind::EI, FunctionKind::EO, FunctionKind::EQ};

/// Ordered: Low < Average < High.
enum class ComplexityLevel { Low, Average, High };

constexpr bool is_data_kind(FunctionKind k) noexcept {
  return k == FunctionKind::ILF || k == FunctionKind::EIF;
}
constexpr bool is_transactional_kind(FunctionKind k) noexcept { return !is_data_kind(k); }

/// "ILF", "EIF", ...
std::string_view to_string(FunctionKind kind) noexcept;
/// "Low", "Average", "High"
std::string_view to_string(ComplexityLevel level) noexcept;
/// Case-insensitive inverse of to_string(FunctionKind).
std::optional<FunctionKind> parse_kind(std::string_view text) noexcept;

/// An ILF or EIF with its record and data element type counts.
class DataFunction {
public:
  /// Throws ValidationError on an empty name, a transactional kind, or
  /// rets/dets below 1.
  DataFunction(std::string name, FunctionKind kind, int rets, int dets);

  const std::string& name() const noexcept { return name_; }
  FunctionKind kind() const noexcept { return kind_; }
  int rets() const noexcept { return rets_; }
  int dets() const noexcept { return dets_; }

  friend bool operator==(const DataFunction&, const DataFunction&) = default;

private:
  std::string name_;
  FunctionKind kind_;
  int rets_;
  int dets_;
};

/// An EI, EO or EQ with its file-types-referenced and data element counts.
class TransactionalFunction {
public:
  /// Throws ValidationError on an empty name, a data kind, ftrs below 0 or
  /// dets below 1.
  TransactionalFunction(std::string name, FunctionKind kind, int ftrs, int dets);

  const std::string& name() const noexcept { return name_; }
  FunctionKind kind() const noexcept { return kind_; }
  int ftrs() const noexcept { return ftrs_; }
  int dets() const noexcept { return dets_; }

  friend bool operator==(const TransactionalFunction&, const TransactionalFunction&) = default;

private:
  std::string name_;
  FunctionKind kind_;
  int ftrs_;
  int dets_;
};

/// A named set of counted functions. Function names are unique across both
/// lists; `add` rejects duplicates.
class Project {
public:
  explicit Project(std::string name = {});

  void add(DataFunction f);
  void add(TransactionalFunction f);
  bool contains(std::string_view function_name) const noexcept;

  const std::string& name() const noexcept { return name_; }
  const std::vector<DataFunction>& data_functions() const noexcept { return data_; }
  const std::vector<TransactionalFunction>& transactional_functions() const noexcept {
    return transactions_;
  }
  std::size_t size() const noexcept { return data_.size() + transactions_.size(); }

  friend bool operator==(const Project&, const Project&) = default;

private:
  std::string name_;
  std::vector<DataFunction> data_;
  std::vector<TransactionalFunction> transactions_;
};

/// The three early-estimation counters.
struct Counters {
  int cilf = 0;     // ILFs
  int cilfeif = 0;  // ILFs + EIFs
  int ceieoeq = 0;  // EIs + EOs + EQs

  friend bool operator==(const Counters&, const Counters&) = default;
};

struct KindTally {
  int functions = 0;
  int ufp = 0;

  friend bool operator==(const KindTally&, const KindTally&) = default;
};

struct FunctionPointCount {
  int total_ufp = 0;
  std::array<KindTally, 5> per_kind{};  // indexed by FunctionKind
  Counters counters;

  const KindTally& tally(FunctionKind kind) const noexcept {
    return per_kind[static_cast<std::size_t>(kind)];
  }

  friend bool operator==(const FunctionPointCount&, const FunctionPointCount&) = default;
};

/// Complexity of an ILF/EIF from its RET and DET counts.
ComplexityLevel classify_data_function(FunctionKind kind, int rets, int dets);

/// Complexity of an EI (EI table) or EO/EQ (shared EO/EQ table).
ComplexityLevel classify_transactional_function(FunctionKind kind, int ftrs, int dets);

/// Unadjusted function points for a kind at a complexity level.
int weight_of(FunctionKind kind, ComplexityLevel level) noexcept;

ComplexityLevel classify(const DataFunction& f);
ComplexityLevel classify(const TransactionalFunction& f);

FunctionPointCount count_project(const Project& project);
Counters derive_counters(const Project& project) noexcept;

}  // namespace efpm
