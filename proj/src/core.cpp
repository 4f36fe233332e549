#include "wgen/core.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>

#include "wgen/util.hpp"

namespace wgen {

const char* to_string(CostMetric metric) {
  return metric == CostMetric::plan_cost ? "plan_cost" : "cardinality";
}

CostMetric cost_metric_from_string(const std::string& name) {
  if (name == "plan_cost") return CostMetric::plan_cost;
  if (name == "cardinality") return CostMetric::cardinality;
  raise(ErrorCode::bad_spec, "unknown cost metric '" + name + "'");
}

namespace {

std::string render_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string quote_text(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  out.push_back('\'');
  for (char c : s) {
    out.push_back(c);
    if (c == '\'') out.push_back('\'');
  }
  out.push_back('\'');
  return out;
}

}  // namespace

std::string Literal::render_sql() const {
  switch (kind) {
    case Kind::integer: return std::to_string(int_value);
    case Kind::real: return render_double(real_value);
    case Kind::text: return quote_text(text_value);
  }
  return {};
}

std::string Literal::key() const {
  switch (kind) {
    case Kind::integer: return "i:" + std::to_string(int_value);
    case Kind::real: return "r:" + render_double(real_value);
    case Kind::text: return "t:" + text_value;
  }
  return {};
}

double Literal::as_number() const {
  if (kind == Kind::integer) return static_cast<double>(int_value);
  if (kind == Kind::real) return real_value;
  raise(ErrorCode::internal, "text literal has no numeric value");
}

bool Literal::operator==(const Literal& other) const {
  if (kind != other.kind) return false;
  switch (kind) {
    case Kind::integer: return int_value == other.int_value;
    case Kind::real: return real_value == other.real_value;
    case Kind::text: return text_value == other.text_value;
  }
  return false;
}

bool Literal::operator<(const Literal& other) const {
  if (kind != other.kind) return kind < other.kind;
  switch (kind) {
    case Kind::integer: return int_value < other.int_value;
    case Kind::real: return real_value < other.real_value;
    case Kind::text: return text_value < other.text_value;
  }
  return false;
}

ValueDomain ValueDomain::numeric(double min, double max, bool integral, std::uint64_t distinct) {
  ValueDomain d;
  d.kind = Kind::numeric_range;
  d.min = min;
  d.max = max;
  d.integral = integral;
  d.distinct_count = distinct;
  d.validate();
  return d;
}

ValueDomain ValueDomain::categorical(std::vector<std::string> values) {
  ValueDomain d;
  d.kind = Kind::categorical;
  // Deduplicate preserving order, then cap.
  std::set<std::string> seen;
  for (auto& v : values) {
    if (seen.insert(v).second) d.values.push_back(std::move(v));
    if (d.values.size() >= kCategoricalCap) break;
  }
  d.distinct_count = d.values.size();
  d.validate();
  return d;
}

bool ValueDomain::contains(const Literal& v) const {
  if (kind == Kind::numeric_range) {
    if (v.kind == Literal::Kind::text) return false;
    const double x = v.as_number();
    if (x < min || x > max) return false;
    if (integral && v.kind == Literal::Kind::real &&
        v.real_value != std::floor(v.real_value)) {
      return false;
    }
    return true;
  }
  if (v.kind != Literal::Kind::text) return false;
  return std::find(values.begin(), values.end(), v.text_value) != values.end();
}

Literal ValueDomain::midpoint() const {
  if (kind == Kind::numeric_range) {
    const double mid = min + (max - min) / 2.0;
    if (integral) return Literal::of_int(static_cast<long long>(std::floor(mid)));
    return Literal::of_real(mid);
  }
  return Literal::of_text(values.front());
}

std::uint64_t ValueDomain::cardinality() const {
  if (kind == Kind::categorical) return values.size();
  if (integral) {
    const double span = std::floor(max) - std::ceil(min) + 1.0;
    if (span <= 0) return 0;
    if (span >= 1e18) return static_cast<std::uint64_t>(1e18);
    return static_cast<std::uint64_t>(span);
  }
  // Real-valued range: only the column's distinct values can change cost.
  return distinct_count > 0 ? distinct_count : 1;
}

void ValueDomain::validate() const {
  if (kind == Kind::numeric_range) {
    if (!(min <= max)) raise(ErrorCode::bad_spec, "numeric domain has min > max");
  } else {
    if (values.empty()) raise(ErrorCode::bad_spec, "categorical domain has no values");
  }
}

const Placeholder* SqlTemplate::placeholder(const std::string& name) const {
  for (const auto& p : placeholders) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

bool valid_placeholder_name(const std::string& name) {
  if (name.empty()) return false;
  auto word_start = [](char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  };
  auto word_char = [&](char c) {
    return word_start(c) || std::isdigit(static_cast<unsigned char>(c));
  };
  if (!word_start(name.front())) return false;
  return std::all_of(name.begin() + 1, name.end(), word_char);
}

std::vector<std::string> find_markers(const std::string& sql_text) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < sql_text.size(); ++i) {
    if (sql_text[i] != '{') continue;
    const std::size_t close = sql_text.find('}', i + 1);
    if (close == std::string::npos) break;
    std::string name = sql_text.substr(i + 1, close - i - 1);
    if (valid_placeholder_name(name)) {
      if (seen.insert(name).second) out.push_back(std::move(name));
      i = close;
    }
  }
  return out;
}

void SqlTemplate::validate() const {
  std::set<std::string> names;
  for (const auto& p : placeholders) {
    if (!valid_placeholder_name(p.name)) {
      raise(ErrorCode::bad_spec, "template " + id + ": bad placeholder name '" + p.name + "'");
    }
    if (!names.insert(p.name).second) {
      raise(ErrorCode::bad_spec, "template " + id + ": duplicate placeholder '" + p.name + "'");
    }
    p.domain.validate();
  }
  const auto markers = find_markers(sql_text);
  if (markers.size() != placeholders.size()) {
    raise(ErrorCode::bad_spec, "template " + id + ": marker/placeholder count mismatch");
  }
  for (const auto& m : markers) {
    if (!names.count(m)) {
      raise(ErrorCode::bad_spec, "template " + id + ": marker '{" + m + "}' has no placeholder");
    }
  }
}

void TemplateSpec::validate() const {
  if (!has_any_constraint()) {
    raise(ErrorCode::bad_spec, "spec " + id + " has no constraints");
  }
  for (const auto& field : {num_tables_accessed, num_joins, num_aggregations}) {
    if (field && *field < 0) raise(ErrorCode::bad_spec, "spec " + id + ": negative constraint");
  }
}

SqlQuery instantiate(const SqlTemplate& tpl, const Bindings& bindings) {
  for (const auto& p : tpl.placeholders) {
    auto it = bindings.find(p.name);
    if (it == bindings.end()) {
      raise(ErrorCode::missing_binding, "placeholder '" + p.name + "' of template " + tpl.id);
    }
    if (!p.domain.contains(it->second)) {
      raise(ErrorCode::out_of_domain,
            "value " + it->second.render_sql() + " for placeholder '" + p.name + "'");
    }
  }

  std::string out;
  out.reserve(tpl.sql_text.size() + 16 * tpl.placeholders.size());
  const std::string& text = tpl.sql_text;
  for (std::size_t i = 0; i < text.size();) {
    if (text[i] == '{') {
      const std::size_t close = text.find('}', i + 1);
      if (close != std::string::npos) {
        std::string name = text.substr(i + 1, close - i - 1);
        auto it = bindings.find(name);
        if (valid_placeholder_name(name) && it != bindings.end()) {
          out += it->second.render_sql();
          i = close + 1;
          continue;
        }
      }
    }
    out.push_back(text[i]);
    ++i;
  }

  SqlQuery q;
  q.template_id = tpl.id;
  q.bindings = bindings;
  q.sql_text = std::move(out);
  return q;
}

}  // namespace wgen
