#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wgen/error.hpp"

namespace wgen {

enum class CostMetric { plan_cost, cardinality };

const char* to_string(CostMetric metric);
CostMetric cost_metric_from_string(const std::string& name);

/// A single per-query cost observation in the run's configured metric.
struct CostValue {
  CostMetric metric = CostMetric::plan_cost;
  double value = 0.0;  // non-negative; optimizer units or rows
};

/// A literal bound to a placeholder. Integers and reals render in shortest
/// round-trip decimal form; text renders single-quoted with internal quotes
/// doubled (dates travel as ISO-8601 text).
struct Literal {
  enum class Kind { integer, real, text };

  Kind kind = Kind::integer;
  long long int_value = 0;
  double real_value = 0.0;
  std::string text_value;

  static Literal of_int(long long v) { return {Kind::integer, v, 0.0, {}}; }
  static Literal of_real(double v) { return {Kind::real, 0, v, {}}; }
  static Literal of_text(std::string v) { return {Kind::text, 0, 0.0, std::move(v)}; }

  /// SQL rendering, e.g. 500, 0.25, 'O''Brien'.
  std::string render_sql() const;
  /// Stable key for dedup maps (kind-tagged).
  std::string key() const;
  double as_number() const;  // integer/real only

  bool operator==(const Literal& other) const;
  bool operator<(const Literal& other) const;
};

using Bindings = std::map<std::string, Literal>;

/// Set of admissible values for one placeholder.
struct ValueDomain {
  enum class Kind { numeric_range, categorical };

  static constexpr std::size_t kCategoricalCap = 1000;

  Kind kind = Kind::numeric_range;
  // numeric_range
  double min = 0.0;
  double max = 0.0;
  bool integral = true;
  // categorical: ordered, deduplicated, capped at kCategoricalCap
  std::vector<std::string> values;
  // distinct values the underlying column holds (estimate); drives search
  // space accounting for real-valued ranges
  std::uint64_t distinct_count = 0;

  static ValueDomain numeric(double min, double max, bool integral, std::uint64_t distinct = 0);
  static ValueDomain categorical(std::vector<std::string> values);

  bool contains(const Literal& v) const;
  Literal midpoint() const;
  /// Number of distinct bindings this domain can produce (saturating).
  std::uint64_t cardinality() const;
  void validate() const;  // throws BadSpec
};

struct Placeholder {
  std::string name;  // matches [A-Za-z_][A-Za-z0-9_]*, unique per template
  std::string table;
  std::string column;
  ValueDomain domain;
};

/// Parameterized SQL statement; `{name}` markers mark predicate slots.
struct SqlTemplate {
  std::string id;
  std::string sql_text;
  std::vector<Placeholder> placeholders;
  std::string spec_id;   // empty when none
  std::string lineage;   // parent template id when produced by refinement

  const Placeholder* placeholder(const std::string& name) const;
  void validate() const;  // marker/placeholder bijection, name syntax
};

struct SqlQuery {
  std::string template_id;
  Bindings bindings;
  std::string sql_text;
  std::optional<CostValue> cost;
};

/// Structural constraints a template must satisfy.
struct TemplateSpec {
  std::string id;
  std::optional<int> num_tables_accessed;
  std::optional<int> num_joins;
  std::optional<int> num_aggregations;
  std::vector<std::string> instructions;  // free-text constraints

  bool has_any_constraint() const {
    return num_tables_accessed || num_joins || num_aggregations || !instructions.empty();
  }
  void validate() const;  // throws BadSpec when no constraint present
};

/// Placeholder markers in order of first appearance (deduplicated).
std::vector<std::string> find_markers(const std::string& sql_text);

/// Replace every `{name}` marker with the SQL literal for its binding.
/// Throws MissingBinding / OutOfDomain.
SqlQuery instantiate(const SqlTemplate& tpl, const Bindings& bindings);

bool valid_placeholder_name(const std::string& name);

}  // namespace wgen
