#include "w1/instance.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <unordered_map>
#include <utility>

#include <nlohmann/json.hpp>

#include "w1/error.hpp"

namespace w1 {

using nlohmann::json;

BigInt parse_decimal(std::string_view text) {
  if (text.empty()) throw UsageError("empty decimal string");
  for (char ch : text) {
    if (ch < '0' || ch > '9') throw UsageError("not a nonnegative decimal integer: '" + std::string(text) + "'");
  }
  return BigInt(std::string(text));
}

// ---------------------------------------------------------------------------
// Assignment

Assignment::Assignment(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  for (std::size_t i = 1; i < pairs_.size(); ++i) {
    if (pairs_[i].var == pairs_[i - 1].var) throw UsageError("assignment maps a variable twice");
  }
}

std::optional<ValueId> Assignment::value_of(VarId var) const noexcept {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), var,
                             [](const Pair& p, VarId v) { return p.var < v; });
  if (it == pairs_.end() || it->var != var) return std::nullopt;
  return it->value;
}

bool Assignment::subset_of(const Assignment& other) const noexcept {
  if (size() > other.size()) return false;
  return std::includes(other.pairs_.begin(), other.pairs_.end(), pairs_.begin(), pairs_.end());
}

Assignment Assignment::with(Pair p) const {
  std::vector<Pair> out = pairs_;
  out.push_back(p);
  return Assignment(std::move(out));
}

Assignment restrict(const Assignment& a, const VarSet& vars) {
  std::vector<Pair> out;
  for (const Pair& p : a.pairs()) {
    if (std::binary_search(vars.begin(), vars.end(), p.var)) out.push_back(p);
  }
  return Assignment(std::move(out));
}

// ---------------------------------------------------------------------------
// Relation

Relation::Relation(std::string name, std::size_t arity, std::vector<std::vector<ValueId>> tuples)
    : name_(std::move(name)), arity_(arity) {
  for (auto& t : tuples) {
    if (index_.insert(t).second) tuples_.push_back(std::move(t));
  }
}

bool Relation::contains(std::span<const ValueId> tuple) const {
  return index_.count(std::vector<ValueId>(tuple.begin(), tuple.end())) != 0;
}

// ---------------------------------------------------------------------------
// CspInstance

namespace {

[[noreturn]] void invariant(const std::string& msg) { throw ParseError(ParseError::Kind::Invariant, msg); }
[[noreturn]] void schema(const std::string& msg) { throw ParseError(ParseError::Kind::Schema, msg); }

std::unordered_map<std::string, std::uint32_t> index_labels(const std::vector<std::string>& labels,
                                                            const char* what) {
  std::unordered_map<std::string, std::uint32_t> out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!out.emplace(labels[i], static_cast<std::uint32_t>(i)).second) {
      invariant(std::string("duplicate ") + what + " '" + labels[i] + "'");
    }
  }
  return out;
}

}  // namespace

CspInstance CspInstance::from_spec(const InstanceSpec& spec) {
  CspInstance inst;
  auto value_index = index_labels(spec.domain, "domain label");
  auto var_index = index_labels(spec.variables, "variable name");

  auto free_it = value_index.find(spec.free_value);
  if (free_it == value_index.end()) invariant("free_value '" + spec.free_value + "' is not in domain");
  if (spec.k < 0) invariant("k must be nonnegative");
  if (spec.k > std::numeric_limits<unsigned>::max()) invariant("k too large");

  inst.domain_ = spec.domain;
  inst.free_value_ = free_it->second;
  for (ValueId v = 0; v < spec.domain.size(); ++v) {
    if (v != inst.free_value_) inst.nonzero_values_.push_back(v);
  }
  inst.variables_ = spec.variables;
  inst.k_ = static_cast<unsigned>(spec.k);

  std::unordered_map<std::string, std::size_t> relation_index;
  for (const auto& [name, rel] : spec.relations) {
    if (rel.arity < 1) invariant("relation '" + name + "' has arity < 1");
    std::vector<std::vector<ValueId>> tuples;
    std::set<std::vector<ValueId>> seen;
    for (const auto& tuple : rel.tuples) {
      if (tuple.size() != rel.arity) {
        invariant("relation '" + name + "' has a tuple of length " + std::to_string(tuple.size()) +
                  ", arity is " + std::to_string(rel.arity));
      }
      std::vector<ValueId> row;
      row.reserve(tuple.size());
      for (const auto& label : tuple) {
        auto it = value_index.find(label);
        if (it == value_index.end()) {
          invariant("relation '" + name + "' uses value '" + label + "' outside the domain");
        }
        row.push_back(it->second);
      }
      if (!seen.insert(row).second) {
        inst.warnings_.push_back("relation '" + name + "': duplicate tuple dropped");
      }
      tuples.push_back(std::move(row));
    }
    relation_index.emplace(name, inst.relations_.size());
    inst.relations_.emplace_back(name, rel.arity, std::move(tuples));
  }

  for (std::size_t ci = 0; ci < spec.constraints.size(); ++ci) {
    const auto& cs = spec.constraints[ci];
    auto rit = relation_index.find(cs.relation);
    if (rit == relation_index.end()) {
      schema("constraint " + std::to_string(ci) + " references undeclared relation '" + cs.relation + "'");
    }
    Constraint c;
    c.relation = rit->second;
    for (const auto& v : cs.vars) {
      auto vit = var_index.find(v);
      if (vit == var_index.end()) {
        schema("constraint " + std::to_string(ci) + " references undeclared variable '" + v + "'");
      }
      c.vars.push_back(vit->second);
    }
    if (c.vars.size() != inst.relations_[c.relation].arity()) {
      invariant("constraint " + std::to_string(ci) + " has " + std::to_string(c.vars.size()) +
                " arguments, relation '" + cs.relation + "' has arity " +
                std::to_string(inst.relations_[c.relation].arity()));
    }
    inst.constraints_.push_back(std::move(c));
  }

  if (spec.weights) {
    std::map<VarId, BigInt> weights;
    for (const auto& [name, text] : *spec.weights) {
      auto vit = var_index.find(name);
      if (vit == var_index.end()) schema("weights names undeclared variable '" + name + "'");
      try {
        weights.emplace(vit->second, parse_decimal(text));
      } catch (const UsageError& e) {
        invariant("weight of '" + name + "': " + e.what());
      }
    }
    inst.weights_ = std::move(weights);
  }
  if (spec.target) {
    try {
      inst.target_ = parse_decimal(*spec.target);
    } catch (const UsageError& e) {
      invariant(std::string("target: ") + e.what());
    }
  }
  if (spec.f_of_k) {
    if (*spec.f_of_k < 0 || *spec.f_of_k > 4096) invariant("f_of_k must be in [0, 4096]");
    inst.f_of_k_ = static_cast<unsigned>(*spec.f_of_k);
  }
  return inst;
}

std::optional<VarId> CspInstance::find_variable(std::string_view name) const {
  auto it = std::find(variables_.begin(), variables_.end(), name);
  if (it == variables_.end()) return std::nullopt;
  return static_cast<VarId>(it - variables_.begin());
}

std::optional<ValueId> CspInstance::find_value(std::string_view label) const {
  auto it = std::find(domain_.begin(), domain_.end(), label);
  if (it == domain_.end()) return std::nullopt;
  return static_cast<ValueId>(it - domain_.begin());
}

VarSet CspInstance::scope(const Constraint& c) const {
  VarSet s = c.vars;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::size_t CspInstance::input_size() const noexcept {
  std::size_t n = domain_.size() + variables_.size();
  for (const auto& r : relations_) n += r.tuples().size() * r.arity();
  for (const auto& c : constraints_) n += c.vars.size() + 1;
  return n;
}

CspInstance CspInstance::with_k(unsigned k) const {
  CspInstance copy = *this;
  copy.k_ = k;
  return copy;
}

InstanceSpec CspInstance::to_spec() const {
  InstanceSpec spec;
  spec.domain = domain_;
  spec.free_value = domain_[free_value_];
  spec.variables = variables_;
  for (const auto& r : relations_) {
    RelationSpec rs;
    rs.arity = r.arity();
    for (const auto& t : r.tuples()) {
      std::vector<std::string> row;
      for (ValueId v : t) row.push_back(domain_[v]);
      rs.tuples.push_back(std::move(row));
    }
    spec.relations.emplace(r.name(), std::move(rs));
  }
  for (const auto& c : constraints_) {
    ConstraintSpec cs;
    cs.relation = relations_[c.relation].name();
    for (VarId v : c.vars) cs.vars.push_back(variables_[v]);
    spec.constraints.push_back(std::move(cs));
  }
  spec.k = k_;
  if (weights_) {
    std::map<std::string, std::string> w;
    for (const auto& [var, value] : *weights_) w.emplace(variables_[var], to_decimal(value));
    spec.weights = std::move(w);
  }
  if (target_) spec.target = to_decimal(*target_);
  if (f_of_k_) spec.f_of_k = *f_of_k_;
  return spec;
}

// ---------------------------------------------------------------------------
// Document I/O

namespace {

void reject_unknown(const json& obj, std::initializer_list<std::string_view> allowed, const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end()) {
      schema("unknown field '" + it.key() + "' in " + where);
    }
  }
}

const json& require(const json& obj, const char* field, const std::string& where) {
  auto it = obj.find(field);
  if (it == obj.end()) schema("missing field '" + std::string(field) + "' in " + where);
  return *it;
}

std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) schema(where + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> as_string_list(const json& j, const std::string& where) {
  if (!j.is_array()) schema(where + " must be a list of strings");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(as_string(e, where + " entry"));
  return out;
}

std::int64_t as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) schema(where + " must be an integer");
  return j.get<std::int64_t>();
}

}  // namespace

CspInstance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(ParseError::Kind::Syntax, e.what(), e.byte);
  }
  if (!doc.is_object()) schema("instance document must be an object");
  reject_unknown(doc,
                 {"domain", "free_value", "variables", "relations", "constraints", "k", "weights", "target", "f_of_k"},
                 "instance");

  InstanceSpec spec;
  spec.domain = as_string_list(require(doc, "domain", "instance"), "domain");
  spec.free_value = as_string(require(doc, "free_value", "instance"), "free_value");
  spec.variables = as_string_list(require(doc, "variables", "instance"), "variables");

  const json& rels = require(doc, "relations", "instance");
  if (!rels.is_object()) schema("relations must be an object");
  for (auto it = rels.begin(); it != rels.end(); ++it) {
    const std::string where = "relation '" + it.key() + "'";
    if (!it->is_object()) schema(where + " must be an object");
    reject_unknown(*it, {"arity", "tuples"}, where);
    RelationSpec rs;
    std::int64_t arity = as_int(require(*it, "arity", where), where + " arity");
    if (arity < 0) invariant(where + " has negative arity");
    rs.arity = static_cast<std::size_t>(arity);
    const json& tuples = require(*it, "tuples", where);
    if (!tuples.is_array()) schema(where + " tuples must be a list");
    for (const auto& t : tuples) rs.tuples.push_back(as_string_list(t, where + " tuple"));
    spec.relations.emplace(it.key(), std::move(rs));
  }

  const json& cons = require(doc, "constraints", "instance");
  if (!cons.is_array()) schema("constraints must be a list");
  for (std::size_t i = 0; i < cons.size(); ++i) {
    const std::string where = "constraint " + std::to_string(i);
    if (!cons[i].is_object()) schema(where + " must be an object");
    reject_unknown(cons[i], {"relation", "vars"}, where);
    ConstraintSpec cs;
    cs.relation = as_string(require(cons[i], "relation", where), where + " relation");
    cs.vars = as_string_list(require(cons[i], "vars", where), where + " vars");
    spec.constraints.push_back(std::move(cs));
  }

  spec.k = as_int(require(doc, "k", "instance"), "k");

  if (auto it = doc.find("weights"); it != doc.end()) {
    if (!it->is_object()) schema("weights must be an object");
    std::map<std::string, std::string> w;
    for (auto wit = it->begin(); wit != it->end(); ++wit) {
      w.emplace(wit.key(), as_string(*wit, "weight of '" + wit.key() + "'"));
    }
    spec.weights = std::move(w);
  }
  if (auto it = doc.find("target"); it != doc.end()) spec.target = as_string(*it, "target");
  if (auto it = doc.find("f_of_k"); it != doc.end()) spec.f_of_k = as_int(*it, "f_of_k");

  return CspInstance::from_spec(spec);
}

std::string serialize_instance(const CspInstance& inst) {
  InstanceSpec spec = inst.to_spec();
  json doc;
  doc["domain"] = spec.domain;
  doc["free_value"] = spec.free_value;
  doc["variables"] = spec.variables;
  doc["relations"] = json::object();
  for (const auto& [name, rs] : spec.relations) {
    doc["relations"][name] = {{"arity", rs.arity}, {"tuples", rs.tuples}};
  }
  doc["constraints"] = json::array();
  for (const auto& cs : spec.constraints) {
    doc["constraints"].push_back({{"relation", cs.relation}, {"vars", cs.vars}});
  }
  doc["k"] = spec.k;
  if (spec.weights) doc["weights"] = *spec.weights;
  if (spec.target) doc["target"] = *spec.target;
  if (spec.f_of_k) doc["f_of_k"] = *spec.f_of_k;
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Semantics

void validate_assignment(const Assignment& a, const CspInstance& inst) {
  for (const Pair& p : a.pairs()) {
    if (p.var >= inst.variables().size()) throw UsageError("assignment names an undeclared variable");
    if (p.value >= inst.domain().size()) throw UsageError("assignment uses a value outside the domain");
    if (p.value == inst.free_value()) throw UsageError("support pairs must not carry the free value");
  }
}

bool satisfies(const Assignment& a, const Constraint& c, const CspInstance& inst) {
  validate_assignment(a, inst);
  std::vector<ValueId> tuple;
  tuple.reserve(c.vars.size());
  for (VarId v : c.vars) tuple.push_back(a.value_of(v).value_or(inst.free_value()));
  return inst.relation_of(c).contains(tuple);
}

bool satisfies_all(const Assignment& a, const CspInstance& inst) {
  validate_assignment(a, inst);
  for (const auto& c : inst.constraints()) {
    if (!satisfies(a, c, inst)) return false;
  }
  return true;
}

std::string format_assignment(const Assignment& a, const CspInstance& inst) {
  if (a.empty()) return "{}";
  std::string out;
  for (const Pair& p : a.pairs()) {
    if (!out.empty()) out += ',';
    out += inst.variables().at(p.var);
    out += '=';
    out += inst.domain().at(p.value);
  }
  return out;
}

Assignment parse_assignment(std::string_view text, const CspInstance& inst) {
  if (text.empty() || text == "{}") return Assignment();
  std::vector<Pair> pairs;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw UsageError("certificate entry '" + std::string(item) + "' lacks '='");
    auto var = inst.find_variable(item.substr(0, eq));
    if (!var) throw UsageError("certificate names unknown variable '" + std::string(item.substr(0, eq)) + "'");
    auto val = inst.find_value(item.substr(eq + 1));
    if (!val) throw UsageError("certificate uses unknown value '" + std::string(item.substr(eq + 1)) + "'");
    if (*val != inst.free_value()) pairs.push_back({*var, *val});
    start = end + 1;
  }
  return Assignment(std::move(pairs));
}

}  // namespace w1
