#include "bloch/symbol_io.hpp"

#include <fstream>
#include <sstream>

#include "bloch/mobius.hpp"

namespace bloch {

using nlohmann::json;

namespace {

double require_number(const json& node, const char* key, const std::string& path) {
  if (!node.contains(key) || !node[key].is_number())
    throw ParseError("symbol document: expected number '" + std::string(key) + "' at " + path);
  return node[key].get<double>();
}

const json& require_args(const json& node, size_t count, const std::string& path) {
  if (!node.contains("args") || !node["args"].is_array() || node["args"].size() != count) {
    std::ostringstream msg;
    msg << "symbol document: expected " << count << " args at " << path;
    throw ParseError(msg.str());
  }
  return node["args"];
}

}  // namespace

ExprPtr parse_expr_node(const json& node, const std::string& path) {
  if (!node.is_object() || !node.contains("op") || !node["op"].is_string())
    throw ParseError("symbol document: expected node object with 'op' at " + path);
  const std::string op = node["op"].get<std::string>();

  if (op == "z") return Expr::var();
  if (op == "const")
    return Expr::constant(Complex(require_number(node, "re", path), require_number(node, "im", path)));
  if (op == "mobius")
    return make_mobius(Complex(require_number(node, "re", path), require_number(node, "im", path)));

  if (op == "add" || op == "sub" || op == "mul" || op == "div" || op == "compose") {
    const json& args = require_args(node, 2, path);
    ExprPtr a = parse_expr_node(args[0], path + "." + op + "[0]");
    ExprPtr b = parse_expr_node(args[1], path + "." + op + "[1]");
    if (op == "add") return Expr::add(std::move(a), std::move(b));
    if (op == "sub") return Expr::sub(std::move(a), std::move(b));
    if (op == "mul") return Expr::mul(std::move(a), std::move(b));
    if (op == "div") return Expr::div(std::move(a), std::move(b));
    return Expr::compose(std::move(a), std::move(b));
  }

  if (op == "neg" || op == "log" || op == "exp") {
    const json& args = require_args(node, 1, path);
    ExprPtr a = parse_expr_node(args[0], path + "." + op + "[0]");
    if (op == "neg") return Expr::neg(std::move(a));
    if (op == "log") return Expr::log(std::move(a));
    return Expr::exp(std::move(a));
  }

  if (op == "powint") {
    if (!node.contains("n") || !node["n"].is_number_integer())
      throw ParseError("symbol document: powint needs integer 'n' at " + path);
    const int n = node["n"].get<int>();
    if (n < 0) throw ParseError("symbol document: powint needs n >= 0 at " + path);
    const json& args = require_args(node, 1, path);
    return Expr::pow_int(parse_expr_node(args[0], path + ".powint[0]"), n);
  }

  throw ParseError("symbol document: unknown op '" + op + "' at " + path);
}

json serialize_expr(const Expr& e) {
  json node;
  switch (e.kind()) {
    case ExprKind::Var:
      node["op"] = "z";
      return node;
    case ExprKind::Const:
      node["op"] = "const";
      node["re"] = e.param().real();
      node["im"] = e.param().imag();
      return node;
    case ExprKind::Mobius:
      node["op"] = "mobius";
      node["re"] = e.param().real();
      node["im"] = e.param().imag();
      return node;
    case ExprKind::Add:
    case ExprKind::Sub:
    case ExprKind::Mul:
    case ExprKind::Div:
    case ExprKind::Compose: {
      const char* names[] = {"add", "sub", "mul", "div", "compose"};
      const int idx = static_cast<int>(e.kind()) - static_cast<int>(ExprKind::Add);
      node["op"] = (e.kind() == ExprKind::Compose) ? "compose" : names[idx];
      node["args"] = json::array({serialize_expr(*e.child(0)), serialize_expr(*e.child(1))});
      return node;
    }
    case ExprKind::Neg:
    case ExprKind::Log:
    case ExprKind::Exp:
      node["op"] = (e.kind() == ExprKind::Neg) ? "neg" : (e.kind() == ExprKind::Log) ? "log" : "exp";
      node["args"] = json::array({serialize_expr(*e.child(0))});
      return node;
    case ExprKind::PowInt:
      node["op"] = "powint";
      node["n"] = e.exponent();
      node["args"] = json::array({serialize_expr(*e.child(0))});
      return node;
  }
  throw Error("serialize_expr: malformed node");
}

SymbolPair parse_symbol_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("u") || !doc.contains("phi"))
    throw ParseError("symbol document: top level must carry 'u' and 'phi'");
  std::string label;
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) throw ParseError("symbol document: 'label' must be a string");
    label = doc["label"].get<std::string>();
  }
  ExprPtr u = parse_expr_node(doc["u"], "$.u");
  ExprPtr phi = parse_expr_node(doc["phi"], "$.phi");
  return make_symbol_pair(std::move(u), std::move(phi), std::move(label));
}

SymbolPair parse_symbol_text(const std::string& text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    std::ostringstream msg;
    msg << origin << ": " << e.what();
    throw ParseError(msg.str());
  }
  return parse_symbol_json(doc);
}

SymbolPair parse_symbol_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open symbol file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  SymbolPair pair = parse_symbol_text(buffer.str(), path);
  if (pair.label.empty()) pair.label = path;
  return pair;
}

json serialize_symbol_pair(const SymbolPair& pair) {
  json doc;
  doc["label"] = pair.label;
  doc["u"] = serialize_expr(*pair.u);
  doc["phi"] = serialize_expr(*pair.phi);
  return doc;
}

}  // namespace bloch
