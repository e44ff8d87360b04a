#include "lifter/term.hpp"

#include <algorithm>
#include <functional>

#include "lifter/error.hpp"

namespace lifter {

TermPtr Term::make_const(std::string name, SimpleType type) {
  return std::make_shared<Term>(Const{std::move(name), std::move(type)});
}

TermPtr Term::make_free(std::string name, SimpleType type) {
  return std::make_shared<Term>(Free{std::move(name), std::move(type)});
}

TermPtr Term::make_bound(std::size_t index) {
  return std::make_shared<Term>(Bound{index});
}

TermPtr Term::make_abs(std::string name_hint, SimpleType var_type,
                       TermPtr body) {
  return std::make_shared<Term>(
      Abs{std::move(name_hint), std::move(var_type), std::move(body)});
}

TermPtr Term::make_app(TermPtr fun, TermPtr arg) {
  return std::make_shared<Term>(App{std::move(fun), std::move(arg)});
}

TermPtr Term::make_app(TermPtr head, const std::vector<TermPtr>& args) {
  TermPtr t = std::move(head);
  for (const auto& arg : args) t = make_app(std::move(t), arg);
  return t;
}

bool operator==(const Term& a, const Term& b) {
  if (&a == &b) return true;
  if (a.node().index() != b.node().index()) return false;
  if (const auto* x = a.as_const()) {
    const auto* y = b.as_const();
    return x->name == y->name && x->type == y->type;
  }
  if (const auto* x = a.as_free()) {
    const auto* y = b.as_free();
    return x->name == y->name && x->type == y->type;
  }
  if (const auto* x = a.as_bound()) {
    return x->index == b.as_bound()->index;
  }
  if (const auto* x = a.as_abs()) {
    const auto* y = b.as_abs();
    // Name hints are display-only.
    return x->var_type == y->var_type && *x->body == *y->body;
  }
  const auto* x = a.as_app();
  const auto* y = b.as_app();
  return *x->fun == *y->fun && *x->arg == *y->arg;
}

FlatApp flatten_app(const TermPtr& t) {
  FlatApp flat;
  flat.head = t;
  std::vector<TermPtr> rev_args;
  while (const auto* app = flat.head->as_app()) {
    rev_args.push_back(app->arg);
    flat.head = app->fun;
  }
  flat.args.assign(rev_args.rbegin(), rev_args.rend());
  return flat;
}

Occurrence Occurrence::child(std::size_t step) const {
  auto steps = steps_;
  steps.push_back(step);
  return Occurrence(std::move(steps));
}

std::optional<std::pair<Occurrence, std::size_t>> Occurrence::split_last()
    const {
  if (steps_.empty()) return std::nullopt;
  auto parent = steps_;
  std::size_t last = parent.back();
  parent.pop_back();
  return std::make_pair(Occurrence(std::move(parent)), last);
}

std::string Occurrence::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(steps_[i]);
  }
  return out + "]";
}

Goal Goal::make(TermPtr statement, std::map<std::string, SimpleType> frees) {
  Goal goal{std::move(statement), std::move(frees)};
  for (const auto& [name, type] : free_vars(goal.statement)) {
    auto it = goal.frees.find(name);
    if (it == goal.frees.end()) {
      throw Error("free variable '" + name + "' is not declared in the goal");
    }
    if (it->second != type) {
      throw Error("free variable '" + name +
                  "' occurs with a type different from its declaration");
    }
  }
  return goal;
}

std::vector<TermPtr> flat_children(const TermPtr& t) {
  if (t->as_app()) {
    auto flat = flatten_app(t);
    std::vector<TermPtr> children;
    children.reserve(flat.args.size() + 1);
    children.push_back(flat.head);
    children.insert(children.end(), flat.args.begin(), flat.args.end());
    return children;
  }
  if (const auto* abs = t->as_abs()) return {abs->body};
  return {};
}

namespace {

// Pre-order walk of the flattened tree; visit order is lexicographic path
// order.
void walk(const TermPtr& t, std::vector<std::size_t>& path,
          const std::function<void(const Occurrence&, const TermPtr&)>& fn) {
  fn(Occurrence(path), t);
  auto children = flat_children(t);
  for (std::size_t i = 0; i < children.size(); ++i) {
    path.push_back(i);
    walk(children[i], path, fn);
    path.pop_back();
  }
}

}  // namespace

std::vector<TermPtr> subterms(const Goal& goal) {
  std::vector<TermPtr> out;
  std::vector<std::size_t> path;
  walk(goal.statement, path, [&](const Occurrence&, const TermPtr& t) {
    for (const auto& seen : out) {
      if (*seen == *t) return;
    }
    out.push_back(t);
  });
  return out;
}

std::vector<Occurrence> occurrences_of(const Goal& goal, const Term& t) {
  std::vector<Occurrence> out;
  std::vector<std::size_t> path;
  walk(goal.statement, path, [&](const Occurrence& occ, const TermPtr& sub) {
    if (*sub == t) out.push_back(occ);
  });
  return out;
}

TermPtr resolve(const Goal& goal, const Occurrence& occ) {
  TermPtr cur = goal.statement;
  for (std::size_t step : occ.steps()) {
    auto children = flat_children(cur);
    if (step >= children.size()) {
      throw Error("invalid occurrence " + occ.to_string() +
                  ": step out of range");
    }
    cur = children[step];
  }
  return cur;
}

std::optional<Occurrence> nth_arg(const Goal& goal, const Occurrence& head_occ,
                                  std::size_t n) {
  if (n < 1) return std::nullopt;
  auto split = head_occ.split_last();
  if (!split || split->second != 0) return std::nullopt;
  TermPtr parent = resolve(goal, split->first);
  if (!parent->as_app()) return std::nullopt;  // step 0 under Abs is the body
  auto flat = flatten_app(parent);
  if (n > flat.args.size()) return std::nullopt;
  return split->first.child(n);
}

std::optional<std::string> head_constant(const Goal& goal,
                                         const Occurrence& occ) {
  TermPtr t = resolve(goal, occ);
  if (const auto* c = t->as_const()) return c->name;
  return std::nullopt;
}

std::vector<std::pair<std::string, SimpleType>> free_vars(const TermPtr& t) {
  std::vector<std::pair<std::string, SimpleType>> out;
  std::function<void(const TermPtr&)> go = [&](const TermPtr& u) {
    if (const auto* f = u->as_free()) {
      for (const auto& [name, type] : out) {
        if (name == f->name) return;
      }
      out.emplace_back(f->name, f->type);
    } else if (const auto* abs = u->as_abs()) {
      go(abs->body);
    } else if (const auto* app = u->as_app()) {
      go(app->fun);
      go(app->arg);
    }
  };
  go(t);
  return out;
}

std::size_t flat_node_count(const TermPtr& t) {
  std::size_t count = 0;
  std::vector<std::size_t> path;
  walk(t, path, [&](const Occurrence&, const TermPtr&) { ++count; });
  return count;
}

namespace {

void print_rec(const TermPtr& t, std::vector<std::string>& binders,
               std::string& out) {
  if (const auto* c = t->as_const()) {
    out += c->name;
    return;
  }
  if (const auto* f = t->as_free()) {
    out += f->name;
    return;
  }
  if (const auto* b = t->as_bound()) {
    if (b->index < binders.size()) {
      out += binders[binders.size() - 1 - b->index];
    } else {
      out += "_" + std::to_string(b->index);  // dangling index
    }
    return;
  }
  if (const auto* abs = t->as_abs()) {
    std::string name = abs->name_hint.empty() ? "_" : abs->name_hint;
    out += "(\\" + name + ". ";
    binders.push_back(name);
    print_rec(abs->body, binders, out);
    binders.pop_back();
    out += ")";
    return;
  }
  auto flat = flatten_app(t);
  out += "(";
  print_rec(flat.head, binders, out);
  for (const auto& arg : flat.args) {
    out += " ";
    print_rec(arg, binders, out);
  }
  out += ")";
}

}  // namespace

std::string print_term(const TermPtr& t) {
  std::string out;
  std::vector<std::string> binders;
  print_rec(t, binders, out);
  return out;
}

}  // namespace lifter
