#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "wgen/core.hpp"
#include "wgen/db.hpp"
#include "wgen/rng.hpp"

namespace wgen {

enum class DataType { integer, real, text, date, other };

const char* to_string(DataType type);
DataType data_type_from_string(const std::string& name);

struct ColumnMeta {
  std::string name;
  DataType data_type = DataType::other;
  std::uint64_t distinct_count = 0;
  std::optional<double> min;  // numeric/date columns
  std::optional<double> max;
  std::vector<std::string> sample_values;  // for categorical domains
};

struct TableMeta {
  std::string name;
  std::uint64_t row_count = 0;
  std::uint64_t size_bytes = 0;
  std::vector<ColumnMeta> columns;

  const ColumnMeta* column(const std::string& name) const;
};

struct JoinEdge {
  std::string from_table, from_column;
  std::string to_table, to_column;

  bool operator==(const JoinEdge& other) const = default;
  std::string describe() const;
};

struct IndexMeta {
  std::string table;
  std::vector<std::string> columns;
};

struct SchemaCatalog {
  std::vector<TableMeta> tables;
  std::vector<JoinEdge> join_edges;  // derived from declared PK/FK constraints
  std::vector<IndexMeta> indexes;

  const TableMeta* table(const std::string& name) const;
  const ColumnMeta* column(const std::string& table, const std::string& column) const;
  void validate() const;

  std::string to_json_text() const;
  static SchemaCatalog from_json_text(const std::string& text);
  static SchemaCatalog load(const std::string& path);
  void save(const std::string& path) const;
};

/// Chain of join edges; consecutive edges share a table. A zero-join path is
/// a single table.
struct JoinPath {
  std::vector<std::string> tables;  // ordered chain, size = joins + 1
  std::vector<JoinEdge> edges;      // edges[i] connects tables[i] and tables[i+1]

  std::size_t joins() const { return edges.size(); }
};

/// Statements issued by introspect(); the fixture client recognizes them
/// verbatim and the live client runs them against PostgreSQL catalogs.
namespace introspect_sql {
extern const char* const kTables;
extern const char* const kColumns;
extern const char* const kColumnStats;
extern const char* const kForeignKeys;
extern const char* const kIndexes;
}  // namespace introspect_sql

/// Read-only schema introspection: tables, columns, optimizer statistics,
/// declared FK join edges and indexes.
SchemaCatalog introspect(DbClient& db);

/// In-memory database stand-in: serves the introspection statements from a
/// schema document and rejects everything else. Keeps pipelines testable
/// without a server.
class FixtureDb final : public DbClient {
 public:
  explicit FixtureDb(SchemaCatalog schema) : schema_(std::move(schema)) {}
  static FixtureDb load(const std::string& path) { return FixtureDb(SchemaCatalog::load(path)); }

  const SchemaCatalog& schema() const { return schema_; }

 protected:
  DbResult run(const std::string& sql) override;

 private:
  SchemaCatalog schema_;
};

/// All simple chain paths with exactly `joins` edges, deduplicated under
/// reversal; joins == 0 yields one pseudo-path per table. Enumeration is
/// capped (reservoir-sampled) to bound memory on dense graphs.
std::vector<JoinPath> enumerate_join_paths(const SchemaCatalog& catalog, std::size_t joins,
                                           std::size_t cap = 50000);

/// Uniform pick under the caller's seeded RNG. Throws NoPathForJoinCount on
/// an empty candidate list.
const JoinPath& sample_join_path(std::span<const JoinPath> paths, Rng& rng, std::size_t joins = 0);

/// Deterministic text block describing only the given tables: stats, columns,
/// indexes, plus any join edges between them.
std::string summarize_tables(const SchemaCatalog& catalog, std::span<const std::string> tables);

/// Prompt-ready summary restricted to the path's tables and edges.
std::string summarize_for_prompt(const SchemaCatalog& catalog, const JoinPath& path);

/// Placeholder value domain for a column; nullopt when the column cannot
/// back a placeholder (no stats, no sampled values).
std::optional<ValueDomain> column_domain(const ColumnMeta& column);

}  // namespace wgen
