#include "namelint/synthcorpus.hpp"

#include "namelint/error.hpp"
#include "namelint/lexer.hpp"
#include "namelint/operators.hpp"
#include "namelint/support.hpp"

#include <algorithm>
#include <cstdio>
#include <json.hpp>
#include <map>

namespace namelint {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void spec_error(const std::string &message) {
  throw Error(ErrorCode::Spec, message);
}

bool is_literal_member(std::string_view member) {
  return !member.empty() &&
         (std::isdigit(static_cast<unsigned char>(member[0])) ||
          member[0] == '"' || member[0] == '\'');
}

bool lexes_as(std::string_view text, bool literal) {
  try {
    const auto tokens = tokenize(text);
    if (tokens.size() != 1)
      return false;
    return literal ? tokens[0].is_literal()
                   : tokens[0].kind == TokenKind::Identifier;
  } catch (const Error &) {
    return false;
  }
}

bool valid_callee(std::string_view callee) {
  if (callee.empty())
    return false;
  for (auto part : split(callee, '.'))
    if (!lexes_as(part, false))
      return false;
  return true;
}

} // namespace

void ConventionSpec::validate() const {
  std::map<std::string, const NameCluster *> by_name;
  for (const auto &c : clusters) {
    if (!lexes_as(c.name, false))
      spec_error("cluster name '" + c.name + "' is not an identifier");
    if (!by_name.emplace(c.name, &c).second)
      spec_error("duplicate cluster '" + c.name + "'");
    if (c.members.empty())
      spec_error("cluster '" + c.name + "' has no members");
    for (const auto *list : {&c.members, &c.held_out})
      for (const auto &m : *list)
        if (!lexes_as(m, is_literal_member(m)))
          spec_error("member '" + m + "' of cluster '" + c.name +
                     "' is neither an identifier nor a literal");
  }
  auto known = [&](const std::string &name) {
    if (!by_name.count(name))
      spec_error("template references undefined cluster '" + name + "'");
  };
  for (const auto &t : call_templates) {
    if (!valid_callee(t.callee))
      spec_error("bad callee '" + t.callee + "'");
    if (t.arg_classes.size() < 2)
      spec_error("call template '" + t.callee + "' needs two arguments");
    for (const auto &a : t.arg_classes)
      known(a);
  }
  for (const auto &t : binop_templates) {
    known(t.left);
    known(t.right);
    if (!OperatorAlphabet::contains(t.op))
      spec_error("operator '" + t.op + "' is not in the alphabet");
  }
  if (call_templates.empty() && binop_templates.empty() && file_count > 0 &&
      sites_per_file > 0)
    spec_error("spec has no templates");
  if (!(bug_rate >= 0 && bug_rate <= 0.5))
    spec_error("bugRate must be in [0, 0.5]");
  if (!(held_out_rate >= 0 && held_out_rate <= 1))
    spec_error("heldOutRate must be in [0, 1]");
}

ConventionSpec parse_convention_spec(std::string_view json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const nlohmann::json::parse_error &e) {
    spec_error(std::string("malformed spec JSON: ") + e.what());
  }
  ConventionSpec spec;
  try {
    for (const auto &c : j.at("clusters")) {
      NameCluster cluster;
      cluster.name = c.at("name").get<std::string>();
      cluster.members = c.at("members").get<std::vector<std::string>>();
      if (c.contains("heldOut"))
        cluster.held_out = c["heldOut"].get<std::vector<std::string>>();
      spec.clusters.push_back(std::move(cluster));
    }
    for (const auto &t : j.value("callTemplates", Json::array()))
      spec.call_templates.push_back(
          {t.at("callee").get<std::string>(),
           t.at("argClasses").get<std::vector<std::string>>()});
    for (const auto &t : j.value("binopTemplates", Json::array()))
      spec.binop_templates.push_back({t.at("left").get<std::string>(),
                                      t.at("op").get<std::string>(),
                                      t.at("right").get<std::string>()});
    spec.file_count = j.at("fileCount").get<std::size_t>();
    spec.sites_per_file = j.value("sitesPerFile", spec.sites_per_file);
    spec.bug_rate = j.value("bugRate", spec.bug_rate);
    spec.held_out_rate = j.value("heldOutRate", spec.held_out_rate);
    spec.seed = j.value("seed", spec.seed);
  } catch (const nlohmann::json::exception &e) {
    spec_error(std::string("invalid spec: ") + e.what());
  }
  spec.validate();
  return spec;
}

std::string format_convention_spec(const ConventionSpec &spec) {
  Json j;
  j["clusters"] = Json::array();
  for (const auto &c : spec.clusters)
    j["clusters"].push_back(
        {{"name", c.name}, {"members", c.members}, {"heldOut", c.held_out}});
  j["callTemplates"] = Json::array();
  for (const auto &t : spec.call_templates)
    j["callTemplates"].push_back(
        {{"callee", t.callee}, {"argClasses", t.arg_classes}});
  j["binopTemplates"] = Json::array();
  for (const auto &t : spec.binop_templates)
    j["binopTemplates"].push_back(
        {{"left", t.left}, {"op", t.op}, {"right", t.right}});
  j["fileCount"] = spec.file_count;
  j["sitesPerFile"] = spec.sites_per_file;
  j["bugRate"] = spec.bug_rate;
  j["heldOutRate"] = spec.held_out_rate;
  j["seed"] = spec.seed;
  return j.dump(2) + '\n';
}

namespace {

/// Accumulates source lines and knows the current line number, so sites can
/// record their origin as they are emitted.
class Writer {
public:
  int next_line() const { return static_cast<int>(lines_.size()) + 1; }
  void line(std::string text) { lines_.push_back(std::move(text)); }
  std::string str() const {
    std::string out;
    for (const auto &l : lines_)
      out += l + '\n';
    return out;
  }

private:
  std::vector<std::string> lines_;
};

struct FileBuilder {
  const ConventionSpec &spec;
  Rng rng;
  std::string id;
  std::map<std::string, std::string> chosen;
  Writer out;
  std::vector<PlantedBug> bugs;
  std::size_t sites = 0;

  const NameCluster &cluster(const std::string &name) const {
    for (const auto &c : spec.clusters)
      if (c.name == name)
        return c;
    spec_error("undefined cluster " + name);
  }

  void choose_members() {
    const bool held = rng.bernoulli(spec.held_out_rate);
    for (const auto &c : spec.clusters) {
      const auto &pool = held && !c.held_out.empty() ? c.held_out : c.members;
      chosen[c.name] = pool[rng.below(pool.size())];
    }
  }

  void plant(int line, int column, const char *pattern, const char *kind) {
    bugs.push_back({id, line, column, pattern, kind});
  }

  void call_site(const CallTemplate &t, const std::string &pad) {
    std::vector<std::string> args;
    for (const auto &a : t.arg_classes)
      args.push_back(chosen.at(a));
    const int line = out.next_line();
    const int column = static_cast<int>(pad.size());
    if (rng.bernoulli(spec.bug_rate) && args[0] != args[1]) {
      std::swap(args[0], args[1]);
      plant(line, column, "swapped-args", "args-swapped");
    }
    std::string text = pad + t.callee + "(";
    for (std::size_t i = 0; i < args.size(); ++i)
      text += (i ? ", " : "") + args[i];
    out.line(text + ");");
  }

  void binop_site(const BinopTemplate &t, const std::string &pad) {
    std::string left = chosen.at(t.left);
    std::string right = chosen.at(t.right);
    std::string op = t.op;
    const bool in_if = rng.bernoulli(0.5);
    const std::string head = in_if ? "if (" : "var result = ";
    const int line = out.next_line();
    const int column = static_cast<int>(pad.size() + head.size());
    if (rng.bernoulli(spec.bug_rate)) {
      if (rng.bernoulli(0.5)) {
        std::vector<std::string_view> others;
        for (auto candidate : OperatorAlphabet::symbols)
          if (candidate != op)
            others.push_back(candidate);
        op = std::string(others[rng.below(others.size())]);
        plant(line, column, "wrong-operator", "operator-replaced");
      } else {
        const bool replace_left = rng.bernoulli(0.5);
        std::string &slot = replace_left ? left : right;
        std::vector<std::string> others;
        for (const auto &[name, member] : chosen)
          if (member != slot &&
              std::find(others.begin(), others.end(), member) == others.end())
            others.push_back(member);
        if (!others.empty()) {
          slot = others[rng.below(others.size())];
          plant(line, column, "wrong-operand", "operand-replaced");
        }
      }
    }
    const std::string expr = left + " " + op + " " + right;
    out.line(in_if ? pad + head + expr + ") {" : pad + head + expr + ";");
    if (in_if) {
      out.line(pad + "  flag = true;");
      out.line(pad + "}");
    }
  }

  /// Declarations and uses that give every identifier member CBOW context
  /// without creating extra sites.
  void declare(const NameCluster &c, const std::string &member) {
    out.line("  var " + member + " = source.get_" + c.name + "();");
  }
  void use(const NameCluster &c, const std::string &member) {
    out.line("  target." + c.name + "_axis = " + member + ";");
  }

  void build() {
    choose_members();
    out.line("function update(source, target) {");
    for (const auto &c : spec.clusters)
      if (!is_literal_member(chosen[c.name]))
        declare(c, chosen[c.name]);
    const std::size_t templates =
        spec.call_templates.size() + spec.binop_templates.size();
    for (std::size_t s = 0; s < spec.sites_per_file; ++s) {
      const std::size_t pick = rng.below(templates);
      if (pick < spec.call_templates.size())
        call_site(spec.call_templates[pick], "  ");
      else
        binop_site(spec.binop_templates[pick - spec.call_templates.size()],
                   "  ");
      ++sites;
    }
    for (const auto &c : spec.clusters)
      if (!is_literal_member(chosen[c.name]))
        use(c, chosen[c.name]);
    out.line("}");
    inspect();
  }

  void inspect() {
    std::vector<const NameCluster *> named;
    for (const auto &c : spec.clusters)
      if (!is_literal_member(c.members.front()))
        named.push_back(&c);
    if (named.empty())
      return;
    const NameCluster &c = *named[rng.below(named.size())];
    std::vector<std::string> all = c.members;
    all.insert(all.end(), c.held_out.begin(), c.held_out.end());
    const std::string &member = all[rng.below(all.size())];
    out.line("");
    out.line("function inspect(source, target) {");
    declare(c, member);
    use(c, member);
    out.line("}");
  }
};

} // namespace

SyntheticCorpus generate_corpus(const ConventionSpec &spec) {
  spec.validate();
  SyntheticCorpus corpus;
  const int width = std::max<int>(
      4, static_cast<int>(std::to_string(spec.file_count).size()));
  for (std::size_t i = 0; i < spec.file_count; ++i) {
    std::string number = std::to_string(i);
    number.insert(0, static_cast<std::size_t>(width) -
                         std::min<std::size_t>(number.size(), width),
                  '0');
    FileBuilder builder{spec, Rng(derive_seed(spec.seed, i)),
                        "f" + number + ".js", {}, {}, {}, 0};
    builder.build();
    corpus.site_count += builder.sites;
    corpus.files.push_back({builder.id, builder.out.str()});
    std::move(builder.bugs.begin(), builder.bugs.end(),
              std::back_inserter(corpus.ground_truth));
  }
  return corpus;
}

std::string format_ground_truth(const std::vector<PlantedBug> &bugs) {
  std::string out;
  for (const auto &b : bugs)
    out += b.file + '\t' + std::to_string(b.line) + '\t' +
           std::to_string(b.column) + '\t' + b.pattern + '\t' + b.violation +
           '\n';
  return out;
}

void write_corpus(const SyntheticCorpus &corpus,
                  const std::filesystem::path &dir) {
  std::filesystem::create_directories(dir);
  for (const auto &f : corpus.files)
    write_file(dir / f.id, f.source);
  write_file(dir / "ground_truth.tsv", format_ground_truth(corpus.ground_truth));
}

} // namespace namelint
