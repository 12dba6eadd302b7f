#include "namelint/estree.hpp"

#include "namelint/error.hpp"
#include "namelint/operators.hpp"
#include "namelint/support.hpp"

#include <algorithm>
#include <cctype>

namespace namelint {

using Json = nlohmann::ordered_json;

namespace {

// --- ingestion --------------------------------------------------------------

class Ingest {
public:
  Node node(const Json &j, const std::string &path, Position inherited) {
    if (!j.is_object())
      throw SchemaError(path, "expected a node object");
    const auto type_it = j.find("type");
    if (type_it == j.end())
      throw SchemaError(path + "/type", "missing field");
    if (!type_it->is_string())
      throw SchemaError(path + "/type", "expected a string");
    const std::string type = type_it->get<std::string>();
    const Position start = location(j, path, inherited);

    Node out = convert(j, type, path, start);
    out.span.start = start;
    out.span.end = start;
    for (const Node &child : out.children)
      out.span.end = std::max(out.span.end, child.span.end);
    return out;
  }

private:
  Position location(const Json &j, const std::string &path,
                    Position inherited) const {
    const auto it = j.find("loc");
    if (it == j.end() || it->is_null())
      return inherited;
    const Json *loc = &*it;
    if (!loc->is_object())
      throw SchemaError(path + "/loc", "expected an object");
    if (loc->contains("start"))
      loc = &(*loc)["start"];
    const auto line = loc->find("line");
    const auto column = loc->find("column");
    if (line == loc->end() || !line->is_number_integer() ||
        line->get<int>() < 1)
      throw SchemaError(path + "/loc/line", "expected a positive integer");
    if (column == loc->end() || !column->is_number_integer() ||
        column->get<int>() < 0)
      throw SchemaError(path + "/loc/column",
                        "expected a non-negative integer");
    return {line->get<int>(), column->get<int>()};
  }

  static const Json &field(const Json &j, const char *name,
                           const std::string &path) {
    const auto it = j.find(name);
    if (it == j.end())
      throw SchemaError(path + "/" + name, "missing field");
    return *it;
  }

  static std::string string_field(const Json &j, const char *name,
                                  const std::string &path) {
    const Json &value = field(j, name, path);
    if (!value.is_string())
      throw SchemaError(path + "/" + name, "expected a string");
    return value.get<std::string>();
  }

  static const Json &array_field(const Json &j, const char *name,
                                 const std::string &path) {
    const Json &value = field(j, name, path);
    if (!value.is_array())
      throw SchemaError(path + "/" + name, "expected an array");
    return value;
  }

  static bool bool_field(const Json &j, const char *name,
                         const std::string &path) {
    const Json &value = field(j, name, path);
    if (!value.is_boolean())
      throw SchemaError(path + "/" + name, "expected a boolean");
    return value.get<bool>();
  }

  Node child(const Json &j, const char *name, const std::string &path,
             Position start) {
    return node(field(j, name, path), path + "/" + name, start);
  }

  Node optional_child(const Json &j, const char *name, const std::string &path,
                      Position start) {
    const auto it = j.find(name);
    if (it == j.end() || it->is_null()) {
      Node empty(NodeKind::Empty);
      empty.span.start = empty.span.end = start;
      return empty;
    }
    return node(*it, path + "/" + name, start);
  }

  void children_of(Node &out, const Json &j, const char *name,
                   const std::string &path, Position start) {
    const Json &items = array_field(j, name, path);
    for (std::size_t i = 0; i < items.size(); ++i)
      out.children.push_back(node(items[i], path + "/" + name + "/" +
                                                std::to_string(i),
                                  start));
  }

  static bool is_identifier_node(const Json &j) {
    return j.is_object() && j.value("type", "") == "Identifier";
  }

  Node opaque(const Json &j, const std::string &type, const std::string &path,
              Position start) {
    Node out(NodeKind::Opaque);
    out.name = type;
    for (const auto &[key, value] : j.items()) {
      if (key == "loc" || key == "type")
        continue;
      const std::string sub = path + "/" + key;
      if (value.is_object() && value.contains("type")) {
        out.children.push_back(node(value, sub, start));
      } else if (value.is_array()) {
        for (std::size_t i = 0; i < value.size(); ++i)
          if (value[i].is_object() && value[i].contains("type"))
            out.children.push_back(
                node(value[i], sub + "/" + std::to_string(i), start));
      }
    }
    return out;
  }

  Node function(const Json &j, NodeKind kind, const std::string &type,
                const std::string &path, Position start) {
    const Json &params = array_field(j, "params", path);
    for (const Json &p : params)
      if (!is_identifier_node(p))
        return opaque(j, type, path, start);
    Node out(kind);
    const auto id = j.find("id");
    if (id != j.end() && !id->is_null()) {
      if (!is_identifier_node(*id))
        return opaque(j, type, path, start);
      out.name = string_field(*id, "name", path + "/id");
    } else if (kind == NodeKind::FunctionDecl) {
      throw SchemaError(path + "/id", "missing field");
    }
    for (std::size_t i = 0; i < params.size(); ++i)
      out.params.push_back(string_field(
          params[i], "name", path + "/params/" + std::to_string(i)));
    Node body = child(j, "body", path, start);
    if (body.kind != NodeKind::Block)
      return opaque(j, type, path, start);
    out.children.push_back(std::move(body));
    return out;
  }

  Node literal(const Json &j, const std::string &path, Position start) {
    if (j.contains("regex") || j.contains("bigint"))
      return opaque(j, "Literal", path, start);
    const Json &value = field(j, "value", path);
    Node out(NodeKind::Literal);
    if (value.is_number()) {
      out.literal_type = LiteralType::Number;
      out.value = shortest_real(value.get<double>());
    } else if (value.is_string()) {
      out.literal_type = LiteralType::String;
      out.value = value.get<std::string>();
    } else if (value.is_boolean()) {
      out.literal_type = LiteralType::Boolean;
      out.value = value.get<bool>() ? "true" : "false";
    } else if (value.is_null()) {
      out.literal_type = LiteralType::Null;
      out.value = "null";
    } else {
      throw SchemaError(path + "/value", "unsupported literal value");
    }
    return out;
  }

  Node convert(const Json &j, const std::string &type, const std::string &path,
               Position start) {
    if (type == "Program") {
      Node out(NodeKind::Program);
      children_of(out, j, "body", path, start);
      return out;
    }
    if (type == "FunctionDeclaration")
      return function(j, NodeKind::FunctionDecl, type, path, start);
    if (type == "FunctionExpression")
      return function(j, NodeKind::FunctionExpr, type, path, start);
    if (type == "BlockStatement") {
      Node out(NodeKind::Block);
      children_of(out, j, "body", path, start);
      return out;
    }
    if (type == "VariableDeclaration") {
      Node out(NodeKind::VarDecl);
      out.op = string_field(j, "kind", path);
      const Json &decls = array_field(j, "declarations", path);
      for (std::size_t i = 0; i < decls.size(); ++i) {
        const std::string sub = path + "/declarations/" + std::to_string(i);
        const Json &d = decls[i];
        if (!d.is_object() || !is_identifier_node(field(d, "id", sub)))
          return opaque(j, type, path, start);
        const Position decl_start = location(d, sub, start);
        Node id = child(d, "id", sub, decl_start);
        const auto init = d.find("init");
        if (init == d.end() || init->is_null()) {
          out.children.push_back(std::move(id));
          continue;
        }
        Node assign(NodeKind::Assign);
        assign.op = "=";
        assign.children.push_back(std::move(id));
        assign.children.push_back(node(*init, sub + "/init", decl_start));
        assign.span.start = decl_start;
        assign.span.end =
            std::max(decl_start, assign.children.back().span.end);
        out.children.push_back(std::move(assign));
      }
      return out;
    }
    if (type == "ExpressionStatement") {
      Node out(NodeKind::ExprStmt);
      out.children.push_back(child(j, "expression", path, start));
      return out;
    }
    if (type == "IfStatement") {
      Node out(NodeKind::If);
      out.children.push_back(child(j, "test", path, start));
      out.children.push_back(child(j, "consequent", path, start));
      const auto alt = j.find("alternate");
      if (alt != j.end() && !alt->is_null())
        out.children.push_back(node(*alt, path + "/alternate", start));
      return out;
    }
    if (type == "ForStatement") {
      Node out(NodeKind::For);
      out.children.push_back(optional_child(j, "init", path, start));
      out.children.push_back(optional_child(j, "test", path, start));
      out.children.push_back(optional_child(j, "update", path, start));
      out.children.push_back(child(j, "body", path, start));
      return out;
    }
    if (type == "WhileStatement") {
      Node out(NodeKind::While);
      out.children.push_back(child(j, "test", path, start));
      out.children.push_back(child(j, "body", path, start));
      return out;
    }
    if (type == "ReturnStatement") {
      Node out(NodeKind::Return);
      const auto arg = j.find("argument");
      if (arg != j.end() && !arg->is_null())
        out.children.push_back(node(*arg, path + "/argument", start));
      return out;
    }
    if (type == "AssignmentExpression") {
      Node out(NodeKind::Assign);
      out.op = string_field(j, "operator", path);
      out.children.push_back(child(j, "left", path, start));
      out.children.push_back(child(j, "right", path, start));
      return out;
    }
    if (type == "CallExpression" || type == "NewExpression") {
      Node out(type == "CallExpression" ? NodeKind::Call : NodeKind::New);
      out.children.push_back(child(j, "callee", path, start));
      children_of(out, j, "arguments", path, start);
      return out;
    }
    if (type == "MemberExpression") {
      Node out(NodeKind::Member);
      out.computed = bool_field(j, "computed", path);
      out.children.push_back(child(j, "object", path, start));
      const Json &property = field(j, "property", path);
      if (out.computed) {
        out.children.push_back(node(property, path + "/property", start));
      } else {
        if (!is_identifier_node(property))
          return opaque(j, type, path, start);
        out.name = string_field(property, "name", path + "/property");
      }
      return out;
    }
    if (type == "BinaryExpression" || type == "LogicalExpression") {
      const std::string op = string_field(j, "operator", path);
      const bool logical = type == "LogicalExpression";
      if (!OperatorAlphabet::contains(op) ||
          OperatorAlphabet::is_logical(op) != logical)
        return opaque(j, type, path, start);
      Node out(logical ? NodeKind::Logical : NodeKind::Binary);
      out.op = op;
      out.children.push_back(child(j, "left", path, start));
      out.children.push_back(child(j, "right", path, start));
      return out;
    }
    if (type == "UnaryExpression") {
      Node out(NodeKind::Unary);
      out.op = string_field(j, "operator", path);
      out.prefix = true;
      out.children.push_back(child(j, "argument", path, start));
      return out;
    }
    if (type == "UpdateExpression") {
      Node out(NodeKind::Update);
      out.op = string_field(j, "operator", path);
      out.prefix = bool_field(j, "prefix", path);
      out.children.push_back(child(j, "argument", path, start));
      return out;
    }
    if (type == "ConditionalExpression") {
      Node out(NodeKind::Conditional);
      out.children.push_back(child(j, "test", path, start));
      out.children.push_back(child(j, "consequent", path, start));
      out.children.push_back(child(j, "alternate", path, start));
      return out;
    }
    if (type == "Identifier") {
      Node out(NodeKind::Identifier);
      out.name = string_field(j, "name", path);
      return out;
    }
    if (type == "Literal")
      return literal(j, path, start);
    if (type == "ThisExpression")
      return Node(NodeKind::This);
    if (type == "ArrayExpression") {
      const Json &elements = array_field(j, "elements", path);
      for (const Json &e : elements)
        if (e.is_null())
          return opaque(j, type, path, start);
      Node out(NodeKind::Array);
      children_of(out, j, "elements", path, start);
      return out;
    }
    if (type == "ObjectExpression") {
      Node out(NodeKind::Object);
      const Json &props = array_field(j, "properties", path);
      for (std::size_t i = 0; i < props.size(); ++i) {
        const std::string sub = path + "/properties/" + std::to_string(i);
        const Json &p = props[i];
        if (!p.is_object() || p.value("type", "") != "Property" ||
            p.value("computed", false) || p.value("kind", "init") != "init")
          return opaque(j, type, path, start);
        const Json &key = field(p, "key", sub);
        if (is_identifier_node(key)) {
          out.params.push_back(string_field(key, "name", sub + "/key"));
        } else if (key.is_object() && key.value("type", "") == "Literal" &&
                   key.contains("value")) {
          const Json &v = key["value"];
          out.params.push_back(v.is_number() ? shortest_real(v.get<double>())
                               : v.is_string() ? v.get<std::string>()
                                               : v.dump());
        } else {
          return opaque(j, type, path, start);
        }
        out.children.push_back(
            child(p, "value", sub, location(p, sub, start)));
      }
      return out;
    }
    if (type == "EmptyStatement")
      return Node(NodeKind::Empty);
    return opaque(j, type, path, start);
  }
};

// --- export -----------------------------------------------------------------

bool identifier_like(std::string_view text) {
  if (text.empty())
    return false;
  auto start_ok = [](unsigned char c) {
    return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80;
  };
  if (!start_ok(static_cast<unsigned char>(text[0])))
    return false;
  return std::all_of(text.begin() + 1, text.end(), [&](char c) {
    return start_ok(static_cast<unsigned char>(c)) ||
           std::isdigit(static_cast<unsigned char>(c));
  });
}

Json loc_of(Position p) { return Json{{"line", p.line}, {"column", p.column}}; }

Json identifier(const std::string &name, Position at) {
  Json j;
  j["type"] = "Identifier";
  j["loc"] = loc_of(at);
  j["name"] = name;
  return j;
}

Json literal_value(const Node &n) {
  switch (n.literal_type) {
  case LiteralType::Number:
    return parse_real(n.value);
  case LiteralType::String:
    return n.value;
  case LiteralType::Boolean:
    return n.value == "true";
  default:
    return nullptr;
  }
}

Json export_node(const Node &n) {
  Json j;
  const Position at = n.span.start;
  auto begin = [&](const char *type) {
    j["type"] = type;
    j["loc"] = loc_of(at);
  };
  auto list = [](auto first, auto last) {
    Json arr = Json::array();
    for (auto it = first; it != last; ++it)
      arr.push_back(export_node(*it));
    return arr;
  };
  auto nullable = [](const Node &c) -> Json {
    return c.kind == NodeKind::Empty ? Json(nullptr) : export_node(c);
  };

  switch (n.kind) {
  case NodeKind::Program:
    begin("Program");
    j["body"] = list(n.children.begin(), n.children.end());
    break;
  case NodeKind::FunctionDecl:
  case NodeKind::FunctionExpr: {
    begin(n.kind == NodeKind::FunctionDecl ? "FunctionDeclaration"
                                           : "FunctionExpression");
    j["id"] = n.name.empty() ? Json(nullptr) : identifier(n.name, at);
    Json params = Json::array();
    for (const auto &p : n.params)
      params.push_back(identifier(p, at));
    j["params"] = params;
    j["body"] = export_node(n.child(0));
    break;
  }
  case NodeKind::Block:
    begin("BlockStatement");
    j["body"] = list(n.children.begin(), n.children.end());
    break;
  case NodeKind::VarDecl: {
    begin("VariableDeclaration");
    j["kind"] = n.op;
    Json decls = Json::array();
    for (const Node &d : n.children) {
      Json decl;
      decl["type"] = "VariableDeclarator";
      decl["loc"] = loc_of(d.span.start);
      if (d.kind == NodeKind::Assign) {
        decl["id"] = export_node(d.child(0));
        decl["init"] = export_node(d.child(1));
      } else {
        decl["id"] = export_node(d);
        decl["init"] = nullptr;
      }
      decls.push_back(decl);
    }
    j["declarations"] = decls;
    break;
  }
  case NodeKind::ExprStmt:
    begin("ExpressionStatement");
    j["expression"] = export_node(n.child(0));
    break;
  case NodeKind::If:
    begin("IfStatement");
    j["test"] = export_node(n.child(0));
    j["consequent"] = export_node(n.child(1));
    j["alternate"] =
        n.children.size() > 2 ? export_node(n.child(2)) : Json(nullptr);
    break;
  case NodeKind::For:
    begin("ForStatement");
    j["init"] = nullable(n.child(0));
    j["test"] = nullable(n.child(1));
    j["update"] = nullable(n.child(2));
    j["body"] = export_node(n.child(3));
    break;
  case NodeKind::While:
    begin("WhileStatement");
    j["test"] = export_node(n.child(0));
    j["body"] = export_node(n.child(1));
    break;
  case NodeKind::Return:
    begin("ReturnStatement");
    j["argument"] = n.children.empty() ? Json(nullptr) : export_node(n.child(0));
    break;
  case NodeKind::Assign:
    begin("AssignmentExpression");
    j["operator"] = n.op;
    j["left"] = export_node(n.child(0));
    j["right"] = export_node(n.child(1));
    break;
  case NodeKind::Call:
  case NodeKind::New:
    begin(n.kind == NodeKind::Call ? "CallExpression" : "NewExpression");
    j["callee"] = export_node(n.child(0));
    j["arguments"] = list(n.children.begin() + 1, n.children.end());
    break;
  case NodeKind::Member:
    begin("MemberExpression");
    j["object"] = export_node(n.child(0));
    j["property"] =
        n.computed ? export_node(n.child(1)) : identifier(n.name, at);
    j["computed"] = n.computed;
    break;
  case NodeKind::Binary:
  case NodeKind::Logical:
    begin(n.kind == NodeKind::Binary ? "BinaryExpression"
                                     : "LogicalExpression");
    j["operator"] = n.op;
    j["left"] = export_node(n.child(0));
    j["right"] = export_node(n.child(1));
    break;
  case NodeKind::Unary:
  case NodeKind::Update:
    begin(n.kind == NodeKind::Unary ? "UnaryExpression" : "UpdateExpression");
    j["operator"] = n.op;
    j["prefix"] = n.prefix;
    j["argument"] = export_node(n.child(0));
    break;
  case NodeKind::Conditional:
    begin("ConditionalExpression");
    j["test"] = export_node(n.child(0));
    j["consequent"] = export_node(n.child(1));
    j["alternate"] = export_node(n.child(2));
    break;
  case NodeKind::Identifier:
    begin("Identifier");
    j["name"] = n.name;
    break;
  case NodeKind::Literal:
    begin("Literal");
    j["value"] = literal_value(n);
    break;
  case NodeKind::This:
    begin("ThisExpression");
    break;
  case NodeKind::Array:
    begin("ArrayExpression");
    j["elements"] = list(n.children.begin(), n.children.end());
    break;
  case NodeKind::Object: {
    begin("ObjectExpression");
    Json props = Json::array();
    for (std::size_t i = 0; i < n.children.size(); ++i) {
      Json p;
      p["type"] = "Property";
      p["loc"] = loc_of(n.children[i].span.start);
      const std::string &key = n.params[i];
      if (identifier_like(key)) {
        p["key"] = identifier(key, n.children[i].span.start);
      } else {
        Json k;
        k["type"] = "Literal";
        k["loc"] = loc_of(n.children[i].span.start);
        k["value"] = key;
        p["key"] = k;
      }
      p["value"] = export_node(n.children[i]);
      p["kind"] = "init";
      p["computed"] = false;
      props.push_back(p);
    }
    j["properties"] = props;
    break;
  }
  case NodeKind::Empty:
    begin("EmptyStatement");
    break;
  case NodeKind::Opaque:
    begin(n.name.empty() ? "Opaque" : n.name.c_str());
    j["children"] = list(n.children.begin(), n.children.end());
    break;
  }
  return j;
}

// --- printing ---------------------------------------------------------------

std::string quote(const std::string &value) {
  std::string out = "\"";
  for (unsigned char c : value) {
    switch (c) {
    case '"':
      out += "\\\"";
      break;
    case '\\':
      out += "\\\\";
      break;
    case '\n':
      out += "\\n";
      break;
    case '\t':
      out += "\\t";
      break;
    case '\r':
      out += "\\r";
      break;
    default:
      if (c < 0x20) {
        static constexpr char hex[] = "0123456789abcdef";
        out += "\\x";
        out += hex[c >> 4];
        out += hex[c & 0xf];
      } else {
        out += static_cast<char>(c);
      }
    }
  }
  return out + "\"";
}

class Printer {
public:
  std::string statement(const Node &n, int depth) {
    const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    switch (n.kind) {
    case NodeKind::Program: {
      std::string out;
      for (const Node &c : n.children)
        out += statement(c, depth) + "\n";
      return out;
    }
    case NodeKind::FunctionDecl:
      return pad + function(n, depth);
    case NodeKind::Block:
      return pad + block(n, depth);
    case NodeKind::VarDecl:
      return pad + declaration(n) + ";";
    case NodeKind::ExprStmt: {
      std::string e = expression(n.child(0));
      if (e.starts_with("{") || e.starts_with("function"))
        e = "(" + e + ")";
      return pad + e + ";";
    }
    case NodeKind::If: {
      std::string out = pad + "if (" + expression(n.child(0)) + ") " +
                        trim_pad(statement(n.child(1), depth));
      if (n.children.size() > 2)
        out += " else " + trim_pad(statement(n.child(2), depth));
      return out;
    }
    case NodeKind::For: {
      const Node &init = n.child(0);
      std::string head = init.kind == NodeKind::Empty     ? ""
                         : init.kind == NodeKind::VarDecl ? declaration(init)
                                                          : expression(init);
      return pad + "for (" + head + "; " + optional(n.child(1)) + "; " +
             optional(n.child(2)) + ") " +
             trim_pad(statement(n.child(3), depth));
    }
    case NodeKind::While:
      return pad + "while (" + expression(n.child(0)) + ") " +
             trim_pad(statement(n.child(1), depth));
    case NodeKind::Return:
      return pad + "return" +
             (n.children.empty() ? "" : " " + expression(n.child(0))) + ";";
    case NodeKind::Empty:
      return pad + ";";
    case NodeKind::Opaque: {
      std::string out;
      for (const Node &c : n.children)
        out += statement(c, depth) + "\n";
      return out;
    }
    default:
      return pad + wrapped(n) + ";";
    }
  }

  std::string expression(const Node &n) {
    switch (n.kind) {
    case NodeKind::Identifier:
      return n.name;
    case NodeKind::Literal:
      switch (n.literal_type) {
      case LiteralType::String:
        return quote(n.value);
      default:
        return n.value;
      }
    case NodeKind::This:
      return "this";
    case NodeKind::FunctionExpr:
      return function(n, 0);
    case NodeKind::Assign:
      return expression(n.child(0)) + " " + n.op + " " + wrapped(n.child(1));
    case NodeKind::Call:
    case NodeKind::New: {
      std::string out = n.kind == NodeKind::New
                            ? "new " + constructor(n.child(0)) + "("
                            : base(n.child(0)) + "(";
      for (std::size_t i = 1; i < n.children.size(); ++i)
        out += (i > 1 ? ", " : "") + expression(n.children[i]);
      return out + ")";
    }
    case NodeKind::Member:
      return n.computed
                 ? base(n.child(0)) + "[" + expression(n.child(1)) + "]"
                 : base(n.child(0)) + "." + n.name;
    case NodeKind::Binary:
    case NodeKind::Logical:
      return wrapped(n.child(0)) + " " + n.op + " " + wrapped(n.child(1));
    case NodeKind::Unary: {
      const bool word = std::isalpha(static_cast<unsigned char>(n.op[0]));
      return n.op + (word ? " " : "") + wrapped(n.child(0));
    }
    case NodeKind::Update:
      return n.prefix ? n.op + wrapped(n.child(0))
                      : wrapped(n.child(0)) + n.op;
    case NodeKind::Conditional:
      return wrapped(n.child(0)) + " ? " + wrapped(n.child(1)) + " : " +
             wrapped(n.child(2));
    case NodeKind::Array: {
      std::string out = "[";
      for (std::size_t i = 0; i < n.children.size(); ++i)
        out += (i ? ", " : "") + expression(n.children[i]);
      return out + "]";
    }
    case NodeKind::Object: {
      std::string out = "{";
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        const std::string &key = n.params[i];
        out += (i ? ", " : "") +
               (identifier_like(key) ? key : quote(key)) + ": " +
               expression(n.children[i]);
      }
      return out + "}";
    }
    case NodeKind::Opaque: {
      std::string out;
      for (const Node &c : n.children)
        out += (out.empty() ? "" : " ") + wrapped(c);
      return out;
    }
    default:
      return statement(n, 0);
    }
  }

private:
  static std::string trim_pad(std::string s) {
    const auto first = s.find_first_not_of(' ');
    return first == std::string::npos ? s : s.substr(first);
  }

  std::string optional(const Node &n) {
    return n.kind == NodeKind::Empty ? "" : expression(n);
  }

  std::string wrapped(const Node &n) {
    switch (n.kind) {
    case NodeKind::Identifier:
    case NodeKind::Literal:
    case NodeKind::This:
    case NodeKind::Array:
    case NodeKind::Call:
    case NodeKind::Member:
      return expression(n);
    default:
      return "(" + expression(n) + ")";
    }
  }

  std::string base(const Node &n) {
    switch (n.kind) {
    case NodeKind::Identifier:
    case NodeKind::This:
    case NodeKind::Call:
    case NodeKind::Member:
      return expression(n);
    default:
      return "(" + expression(n) + ")";
    }
  }

  // A call inside the callee would otherwise bind as new's argument list.
  std::string constructor(const Node &n) {
    const Node *p = &n;
    while (p->kind == NodeKind::Member)
      p = &p->child(0);
    const bool plain =
        p->kind == NodeKind::Identifier || p->kind == NodeKind::This;
    return plain ? expression(n) : "(" + expression(n) + ")";
  }

  std::string declaration(const Node &n) {
    std::string out = n.op + " ";
    for (std::size_t i = 0; i < n.children.size(); ++i) {
      const Node &d = n.children[i];
      out += i ? ", " : "";
      out += d.kind == NodeKind::Assign
                 ? expression(d.child(0)) + " = " + expression(d.child(1))
                 : expression(d);
    }
    return out;
  }

  std::string function(const Node &n, int depth) {
    std::string out = "function";
    if (!n.name.empty())
      out += " " + n.name;
    out += "(";
    for (std::size_t i = 0; i < n.params.size(); ++i)
      out += (i ? ", " : "") + n.params[i];
    return out + ") " + block(n.child(0), depth);
  }

  std::string block(const Node &n, int depth) {
    std::string out = "{\n";
    for (const Node &c : n.children)
      out += statement(c, depth + 1) + "\n";
    return out + std::string(static_cast<std::size_t>(depth) * 2, ' ') + "}";
  }
};

} // namespace

Node ingest_ast(const Json &document) {
  return Ingest().node(document, "", Position{1, 0});
}

Node ingest_ast(std::string_view document_text) {
  Json document;
  try {
    document = Json::parse(document_text);
  } catch (const nlohmann::json::parse_error &e) {
    throw SchemaError("", std::string("malformed JSON: ") + e.what());
  }
  return ingest_ast(document);
}

Json export_ast(const Node &node) { return export_node(node); }

std::string print_source(const Node &node) {
  Printer printer;
  if (node.kind == NodeKind::Program)
    return printer.statement(node, 0);
  return printer.expression(node);
}

} // namespace namelint
