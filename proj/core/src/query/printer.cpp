#include "donormatch/query/parser.hpp"

namespace donormatch::query {
namespace {

std::string quote(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void print(const Condition& c, std::string& out);

void print_wrapped(const Condition& c, bool wrap, std::string& out) {
  if (wrap) out.push_back('(');
  print(c, out);
  if (wrap) out.push_back(')');
}

void print(const Condition& c, std::string& out) {
  using K = Condition::Kind;
  switch (c.kind()) {
    case K::Predicate:
      out += "(" + c.attribute() + " = " + quote(c.label()) + ")";
      return;
    case K::Not:
      out += "NOT ";
      print_wrapped(c.child(), c.child().is(K::And) || c.child().is(K::Or), out);
      return;
    case K::And:
      print_wrapped(c.left(), c.left().is(K::Or), out);
      out += " AND ";
      print_wrapped(c.right(), c.right().is(K::Or) || c.right().is(K::And), out);
      return;
    case K::Or:
      print(c.left(), out);
      out += " OR ";
      print_wrapped(c.right(), c.right().is(K::Or), out);
      return;
  }
}

}  // namespace

std::string pretty_print(const Condition& condition) {
  std::string out;
  print(condition, out);
  return out;
}

std::string pretty_print(const QueryAst& ast) {
  return "SELECT * FROM " + ast.table + " WHERE " + pretty_print(ast.condition);
}

}  // namespace donormatch::query
