#include "lifter/pretty.hpp"

#include <variant>

namespace lifter {

namespace {

// Binding strength: Imply < Or < And < Not < primaries.
constexpr int kImplyPrec = 1;
constexpr int kOrPrec = 2;
constexpr int kAndPrec = 3;
constexpr int kNotPrec = 4;
constexpr int kAtomPrec = 5;

int conn_prec(Assertion::ConnKind kind) {
  switch (kind) {
    case Assertion::ConnKind::Imply: return kImplyPrec;
    case Assertion::ConnKind::Or: return kOrPrec;
    case Assertion::ConnKind::And: return kAndPrec;
  }
  return kImplyPrec;
}

std::string_view conn_name(Assertion::ConnKind kind) {
  switch (kind) {
    case Assertion::ConnKind::Imply: return "Imply";
    case Assertion::ConnKind::Or: return "Or";
    case Assertion::ConnKind::And: return "And";
  }
  return "";
}

int node_prec(const Assertion& a) {
  if (const auto* c = std::get_if<Assertion::Conn>(&a.node())) {
    return conn_prec(c->kind);
  }
  if (std::get_if<Assertion::Not>(&a.node())) return kNotPrec;
  return kAtomPrec;
}

void print_rec(const Assertion& a, int min_prec, std::string& out) {
  int prec = node_prec(a);
  bool parens = prec < min_prec;
  if (parens) out += "(";

  if (const auto* lit = std::get_if<Assertion::BoolLit>(&a.node())) {
    out += lit->value ? "True" : "False";
  } else if (const auto* n = std::get_if<Assertion::Not>(&a.node())) {
    out += "Not ";
    print_rec(*n->body, kNotPrec, out);
  } else if (const auto* c = std::get_if<Assertion::Conn>(&a.node())) {
    // Imply is right-associative, And/Or left-associative.
    bool right_assoc = c->kind == Assertion::ConnKind::Imply;
    print_rec(*c->lhs, right_assoc ? prec + 1 : prec, out);
    out += " ";
    out += conn_name(c->kind);
    out += " ";
    print_rec(*c->rhs, right_assoc ? prec : prec + 1, out);
  } else if (const auto* q = std::get_if<Assertion::Quant>(&a.node())) {
    out += quant_name(q->pol, q->domain) + " (" + to_string(q->var) + ", ";
    print_rec(*q->body, kImplyPrec, out);
    out += ")";
  } else if (const auto* q = std::get_if<Assertion::QuantOcc>(&a.node())) {
    out += q->pol == Polarity::Some ? "Some_Trm_Occ_Of (" : "All_Trm_Occ_Of (";
    out += to_string(q->occ_var) + ", " + to_string(q->term_var) + ", ";
    print_rec(*q->body, kImplyPrec, out);
    out += ")";
  } else {
    const auto& atom = std::get<Assertion::Atom>(a.node());
    if (atom_is_infix(atom.kind) && atom.args.size() == 2) {
      out += to_string(atom.args[0]) + " " + std::string(atom_name(atom.kind)) +
             " " + to_string(atom.args[1]);
    } else {
      out += std::string(atom_name(atom.kind)) + " (";
      for (std::size_t i = 0; i < atom.args.size(); ++i) {
        if (i > 0) out += ", ";
        out += to_string(atom.args[i]);
      }
      out += ")";
    }
  }

  if (parens) out += ")";
}

void tree_rec(const Assertion& a, int depth, std::string& out) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  if (const auto* lit = std::get_if<Assertion::BoolLit>(&a.node())) {
    out += lit->value ? "True" : "False";
    out += "\n";
  } else if (const auto* n = std::get_if<Assertion::Not>(&a.node())) {
    out += "Not\n";
    tree_rec(*n->body, depth + 1, out);
  } else if (const auto* c = std::get_if<Assertion::Conn>(&a.node())) {
    out += std::string(conn_name(c->kind)) + "\n";
    tree_rec(*c->lhs, depth + 1, out);
    tree_rec(*c->rhs, depth + 1, out);
  } else if (const auto* q = std::get_if<Assertion::Quant>(&a.node())) {
    out += quant_name(q->pol, q->domain) + " " + to_string(q->var) + "\n";
    tree_rec(*q->body, depth + 1, out);
  } else if (const auto* q = std::get_if<Assertion::QuantOcc>(&a.node())) {
    out += (q->pol == Polarity::Some ? std::string("Some_Trm_Occ_Of ")
                                     : std::string("All_Trm_Occ_Of ")) +
           to_string(q->occ_var) + " " + to_string(q->term_var) + "\n";
    tree_rec(*q->body, depth + 1, out);
  } else {
    const auto& atom = std::get<Assertion::Atom>(a.node());
    out += std::string(atom_name(atom.kind));
    for (const auto& arg : atom.args) out += " " + to_string(arg);
    out += "\n";
  }
}

}  // namespace

std::string pretty_print(const Assertion& assertion) {
  std::string out;
  print_rec(assertion, kImplyPrec, out);
  out += ";";
  return out;
}

std::string ast_tree(const Assertion& assertion) {
  std::string out;
  tree_rec(assertion, 0, out);
  return out;
}

}  // namespace lifter
