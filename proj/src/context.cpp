#include "lifter/context.hpp"

#include <json.hpp>

#include <utility>

namespace lifter {

namespace {

using nlohmann::json;

struct EquationParts {
  const Sexpr* lhs = nullptr;
  const Sexpr* rhs = nullptr;
};

// An equation must be (eq lhs rhs) with lhs headed by the constant.
EquationParts check_equation_shape(const Sexpr& sexpr,
                                   const std::string& const_name,
                                   const std::string& origin) {
  const std::string where = "equation for '" + const_name + "'";
  if (sexpr.leaf || sexpr.items.size() != 3 || !sexpr.items[0].leaf ||
      sexpr.items[0].symbol != kEqualityConst) {
    throw Error(where + ": head must be '" + std::string(kEqualityConst) +
                "' with exactly 2 arguments" +
                (origin.empty() ? "" : " (" + origin + ")"));
  }
  const Sexpr& lhs = sexpr.items[1];
  const std::string lhs_head =
      lhs.leaf ? lhs.symbol
               : (lhs.items[0].leaf ? lhs.items[0].symbol : std::string());
  if (lhs_head != const_name) {
    throw Error(where + ": left-hand side must be headed by '" + const_name +
                "'" + (origin.empty() ? "" : " (" + origin + ")"));
  }
  return {&lhs, &sexpr.items[2]};
}

void collect_leaves(const Sexpr& sexpr, std::vector<const Sexpr*>& out) {
  if (sexpr.leaf) {
    out.push_back(&sexpr);
    return;
  }
  for (const auto& item : sexpr.items) collect_leaves(item, out);
}

// Equation variables get their types positionally from the defined constant's
// parameter list; nested pattern variables need the "vars" override.
TypeTable infer_equation_vars(const Sexpr& eq, const EquationParts& parts,
                              const std::string& const_name,
                              const SimpleType& const_type,
                              const TypeTable& constants,
                              const TypeTable& overrides,
                              const std::string& origin) {
  TypeTable vars = overrides;
  auto flat = const_type.flatten();
  if (!parts.lhs->leaf) {
    const auto& items = parts.lhs->items;
    for (std::size_t i = 1; i < items.size(); ++i) {
      const Sexpr& arg = items[i];
      if (!arg.leaf || constants.count(arg.symbol) || vars.count(arg.symbol)) {
        continue;
      }
      if (i - 1 < flat.params.size()) {
        vars.emplace(arg.symbol, flat.params[i - 1]);
      }
    }
  }
  std::vector<const Sexpr*> leaves;
  collect_leaves(eq, leaves);
  for (const Sexpr* leaf : leaves) {
    if (constants.count(leaf->symbol) || vars.count(leaf->symbol)) continue;
    throw Error("cannot infer the type of variable '" + leaf->symbol +
                "' in an equation for '" + const_name +
                "'; add it to the equation's \"vars\" map" +
                (origin.empty() ? "" : " (" + origin + ")"));
  }
  return vars;
}

}  // namespace

bool recursion_from_equations(const std::string& name,
                              std::span<const TermPtr> equations) {
  // Only right-hand sides count as self-reference.
  std::function<bool(const TermPtr&)> mentions = [&](const TermPtr& t) {
    if (const auto* c = t->as_const()) return c->name == name;
    if (const auto* abs = t->as_abs()) return mentions(abs->body);
    if (const auto* app = t->as_app()) {
      return mentions(app->fun) || mentions(app->arg);
    }
    return false;
  };
  for (const auto& eq : equations) {
    auto flat = flatten_app(eq);
    if (flat.args.size() == 2 && mentions(flat.args[1])) return true;
  }
  return false;
}

ProofContext ProofContext::from_defs(std::vector<ConstDef> defs) {
  ProofContext ctx;
  for (auto& def : defs) {
    if (ctx.constants_.count(def.name)) {
      throw Error("duplicate constant '" + def.name + "'");
    }
    for (const auto& eq : def.equations) {
      auto flat = flatten_app(eq);
      const auto* head = flat.head->as_const();
      if (!head || head->name != kEqualityConst || flat.args.size() != 2) {
        throw Error("equation for '" + def.name + "': head must be '" +
                    std::string(kEqualityConst) + "' with exactly 2 arguments");
      }
      const auto* lhs_head = flatten_app(flat.args[0]).head->as_const();
      if (!lhs_head || lhs_head->name != def.name) {
        throw Error("equation for '" + def.name +
                    "': left-hand side must be headed by '" + def.name + "'");
      }
    }
    def.recursive = recursion_from_equations(def.name, def.equations);
    for (const auto& rule : def.derived_rules) {
      if (ctx.rule_index_.count(rule)) {
        throw Error("duplicate rule '" + rule + "'");
      }
      ctx.rule_index_.emplace(rule, def.name);
    }
    ctx.constants_.emplace(def.name, std::move(def));
  }
  return ctx;
}

ProofContext ProofContext::parse(std::string_view text,
                                 const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid context document: ") + e.what(), {},
                     origin);
  }
  if (!doc.is_object() || !doc.contains("constants") ||
      !doc["constants"].is_array()) {
    throw ParseError("context document must be an object with a 'constants' "
                     "array",
                     {}, origin);
  }

  // First pass: declared names and types, so equations can reference any
  // constant of the document.
  TypeTable types;
  for (const auto& entry : doc["constants"]) {
    if (!entry.is_object() || !entry.contains("name") ||
        !entry["name"].is_string() || !entry.contains("type") ||
        !entry["type"].is_string()) {
      throw ParseError("each constant needs string fields 'name' and 'type'",
                       {}, origin);
    }
    std::string name = entry["name"].get<std::string>();
    if (types.count(name)) {
      throw ParseError("duplicate constant '" + name + "'", {}, origin);
    }
    types.emplace(name,
                  parse_type(entry["type"].get<std::string>(), {1, 1}, origin));
  }

  std::vector<ConstDef> defs;
  for (const auto& entry : doc["constants"]) {
    std::string name = entry["name"].get<std::string>();
    ConstDef def{std::move(name), types.at(entry["name"].get<std::string>()),
                 {}, {}, false};
    if (entry.contains("equations")) {
      if (!entry["equations"].is_array()) {
        throw ParseError("'equations' of '" + def.name + "' must be an array",
                         {}, origin);
      }
      for (const auto& eq_entry : entry["equations"]) {
        std::string eq_text;
        TypeTable overrides;
        if (eq_entry.is_string()) {
          eq_text = eq_entry.get<std::string>();
        } else if (eq_entry.is_object() && eq_entry.contains("term") &&
                   eq_entry["term"].is_string()) {
          eq_text = eq_entry["term"].get<std::string>();
          if (eq_entry.contains("vars")) {
            for (const auto& [var, type] : eq_entry["vars"].items()) {
              overrides.emplace(var, parse_type(type.get<std::string>(), {1, 1},
                                                origin));
            }
          }
        } else {
          throw ParseError("equation entries of '" + def.name +
                               "' must be strings or {term, vars} objects",
                           {}, origin);
        }
        Sexpr sexpr = read_sexpr(eq_text, {1, 1}, origin);
        auto parts = check_equation_shape(sexpr, def.name, origin);
        TypeTable vars = infer_equation_vars(sexpr, parts, def.name, def.type,
                                             types, overrides, origin);
        def.equations.push_back(elaborate_term(sexpr, types, vars, origin));
      }
    }
    if (entry.contains("derived_rules")) {
      if (!entry["derived_rules"].is_array()) {
        throw ParseError("'derived_rules' of '" + def.name +
                             "' must be an array",
                         {}, origin);
      }
      for (const auto& rule : entry["derived_rules"]) {
        if (!rule.is_string()) {
          throw ParseError("rule names of '" + def.name + "' must be strings",
                           {}, origin);
        }
        def.derived_rules.push_back(rule.get<std::string>());
      }
    }
    defs.push_back(std::move(def));
  }
  try {
    return from_defs(std::move(defs));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), {}, origin);
  }
}

ProofContext ProofContext::load_file(const std::string& path) {
  return parse(read_text_file(path), path);
}

bool ProofContext::is_recursive(const std::string& name) const {
  const ConstDef* def = find(name);
  return def && def->recursive;
}

std::vector<std::string> ProofContext::rules_derived_from(
    const std::string& name) const {
  const ConstDef* def = find(name);
  return def ? def->derived_rules : std::vector<std::string>{};
}

std::optional<std::string> ProofContext::rule_owner(
    const std::string& rule) const {
  auto it = rule_index_.find(rule);
  if (it == rule_index_.end()) return std::nullopt;
  return it->second;
}

const ConstDef* ProofContext::find(const std::string& name) const {
  auto it = constants_.find(name);
  return it == constants_.end() ? nullptr : &it->second;
}

TypeTable ProofContext::constant_types() const {
  TypeTable types;
  for (const auto& [name, def] : constants_) types.emplace(name, def.type);
  return types;
}

}  // namespace lifter
