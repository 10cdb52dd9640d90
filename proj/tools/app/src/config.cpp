#include "feq_app/config.hpp"

#include <algorithm>
#include <fstream>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

namespace feq::app {

namespace {

using json = nlohmann::json;

/// A JSON value together with its JSON-pointer path, for diagnostics.
class Node {
 public:
  Node(const json& j, std::string path) : j_(&j), path_(std::move(path)) {}

  const json& raw() const { return *j_; }
  const std::string& path() const { return path_; }

  [[noreturn]] void fail(const std::string& what) const { throw ConfigError((path_.empty() ? "/" : path_) + ": " + what); }

  bool has(const std::string& key) const { return j_->is_object() && j_->contains(key); }

  Node at(const std::string& key) const {
    require_object();
    if (!j_->contains(key)) fail("missing required field '" + key + "'");
    return Node(j_->at(key), path_ + "/" + key);
  }

  std::optional<Node> get(const std::string& key) const {
    require_object();
    if (!j_->contains(key)) return std::nullopt;
    return Node(j_->at(key), path_ + "/" + key);
  }

  std::vector<Node> items() const {
    if (!j_->is_array()) fail("expected an array");
    std::vector<Node> out;
    for (std::size_t i = 0; i < j_->size(); ++i) out.emplace_back((*j_)[i], path_ + "/" + std::to_string(i));
    return out;
  }

  std::vector<std::pair<std::string, Node>> members() const {
    require_object();
    std::vector<std::pair<std::string, Node>> out;
    for (auto it = j_->begin(); it != j_->end(); ++it) out.emplace_back(it.key(), Node(it.value(), path_ + "/" + it.key()));
    return out;
  }

  void allow_only(std::initializer_list<const char*> keys) const {
    require_object();
    const std::set<std::string> ok(keys.begin(), keys.end());
    for (auto it = j_->begin(); it != j_->end(); ++it) {
      if (!ok.contains(it.key())) fail("unknown field '" + it.key() + "'");
    }
  }

  void require_object() const {
    if (!j_->is_object()) fail("expected an object");
  }

  std::string str() const {
    if (!j_->is_string()) fail("expected a string");
    return j_->get<std::string>();
  }

  std::int64_t integer() const {
    if (!j_->is_number_integer()) fail("expected an integer");
    return j_->get<std::int64_t>();
  }

  double number() const {
    if (!j_->is_number()) fail("expected a number");
    return j_->get<double>();
  }

 private:
  const json* j_;
  std::string path_;
};

/// Runs f, turning library errors into ConfigErrors located at n.
template <typename F>
auto located(const Node& n, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    n.fail(e.what());
  }
}

Complex read_complex(const Node& n) {
  if (n.raw().is_number()) return {n.number(), 0.0};
  const auto parts = n.items();
  if (parts.size() != 2) n.fail("expected a number or [re, im]");
  return {parts[0].number(), parts[1].number()};
}

std::vector<Complex> read_complex_list(const Node& n) {
  std::vector<Complex> out;
  for (const auto& item : n.items()) out.push_back(read_complex(item));
  return out;
}

GroupSpec read_group(const Node& n) {
  n.allow_only({"free_rank", "torsion"});
  int rank = 0;
  if (auto r = n.get("free_rank")) rank = static_cast<int>(r->integer());
  std::vector<std::int64_t> torsion;
  if (auto t = n.get("torsion")) {
    for (const auto& item : t->items()) torsion.push_back(item.integer());
  }
  return located(n, [&] { return GroupSpec(rank, torsion); });
}

GroupElement read_element(const Node& n, const GroupSpec& g) {
  std::vector<std::int64_t> coords;
  for (const auto& item : n.items()) coords.push_back(item.integer());
  if (coords.size() != g.dimension()) {
    n.fail("element has " + std::to_string(coords.size()) + " coordinates, group " + to_string(g) + " needs " +
           std::to_string(g.dimension()));
  }
  const auto& orders = g.torsion_orders();
  for (std::size_t j = 0; j < orders.size(); ++j) {
    const auto c = coords[static_cast<std::size_t>(g.free_rank()) + j];
    if (c < 0 || c >= orders[j]) {
      n.fail("torsion coordinate " + std::to_string(c) + " is not reduced mod " + std::to_string(orders[j]));
    }
  }
  return g.element(coords);
}

Measure read_measure(const Node& n, const GroupSpec& g) {
  n.allow_only({"atoms"});
  std::vector<Atom> atoms;
  for (const auto& item : n.at("atoms").items()) {
    item.allow_only({"point", "weight"});
    atoms.push_back({read_element(item.at("point"), g), read_complex(item.at("weight"))});
  }
  return Measure(g, atoms);
}

Exponential read_exponential(const Node& n, const GroupSpec& g) {
  n.allow_only({"torsion_roots", "free_multipliers"});
  std::vector<std::int64_t> roots;
  if (auto r = n.get("torsion_roots")) {
    for (const auto& item : r->items()) roots.push_back(item.integer());
  }
  std::vector<Complex> mult;
  if (auto m = n.get("free_multipliers")) mult = read_complex_list(*m);
  return located(n, [&] { return Exponential(g, roots, mult); });
}

AdditiveFunction read_additive(const Node& n, const GroupSpec& g) {
  n.allow_only({"free_coeffs"});
  std::vector<Complex> c;
  if (auto f = n.get("free_coeffs")) c = read_complex_list(*f);
  return located(n, [&] { return AdditiveFunction(g, c); });
}

CosetIndex2G read_coset_key(const Node& n, const std::string& key, const GroupSpec& g) {
  CosetIndex2G c;
  for (char ch : key) {
    if (ch != '0' && ch != '1') n.fail("coset key '" + key + "' must be a string of 0/1 bits");
    c.bits.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  if (c.bits.size() != g.coset_bit_count()) {
    n.fail("coset key '" + key + "' needs " + std::to_string(g.coset_bit_count()) + " bits");
  }
  return c;
}

TwoGPeriodic read_periodic_table(const Node& n, const GroupSpec& g) {
  std::map<CosetIndex2G, Complex> table;
  for (const auto& [key, value] : n.members()) table[read_coset_key(value, key, g)] = read_complex(value);
  return TwoGPeriodic(g, table);
}

TwoGPeriodic read_periodic(const Node& n, const GroupSpec& g) {
  n.allow_only({"table"});
  return read_periodic_table(n.at("table"), g);
}

Function read_function(const Node& n, const GroupSpec& g) {
  n.allow_only({"values", "terms", "periodic", "constant"});
  if (auto v = n.get("values")) {
    if (n.has("terms") || n.has("periodic") || n.has("constant")) n.fail("'values' cannot be combined with a closed form");
    return located(*v, [&] { return Function(TableFunction(g, read_complex_list(*v))); });
  }
  std::vector<ExpPolyTerm> terms;
  if (auto t = n.get("terms")) {
    for (const auto& item : t->items()) {
      item.allow_only({"exponential", "additive", "constant"});
      const auto m = read_exponential(item.at("exponential"), g);
      const auto a = item.has("additive") ? read_additive(item.at("additive"), g) : AdditiveFunction::zero(g);
      const Complex b = item.has("constant") ? read_complex(item.at("constant")) : Complex{};
      terms.push_back({m, a, b});
    }
  }
  if (auto c = n.get("constant")) terms.push_back({Exponential::trivial(g), AdditiveFunction::zero(g), read_complex(*c)});
  std::optional<PeriodicPart> periodic;
  if (auto p = n.get("periodic")) {
    p->allow_only({"table", "sign"});
    int sign = 1;
    if (auto s = p->get("sign")) {
      sign = static_cast<int>(s->integer());
      if (sign != 1 && sign != -1) s->fail("sign must be 1 or -1");
    }
    periodic = PeriodicPart{sign, read_periodic_table(p->at("table"), g)};
  }
  return ExpPolyFunction(g, terms, periodic);
}

SolutionParams read_params(const Node& n, const GroupSpec& g) {
  n.allow_only({"alpha", "beta", "gamma", "delta", "b", "m", "m0", "a", "T", "g", "h"});
  SolutionParams p;
  if (auto v = n.get("alpha")) p.alpha = read_complex(*v);
  if (auto v = n.get("beta")) p.beta = read_complex(*v);
  if (auto v = n.get("gamma")) p.gamma = read_complex(*v);
  if (auto v = n.get("delta")) p.delta = read_complex(*v);
  if (auto v = n.get("b")) p.b = read_complex(*v);
  if (auto v = n.get("m")) p.m = read_exponential(*v, g);
  if (auto v = n.get("m0")) p.m0 = read_exponential(*v, g);
  if (auto v = n.get("a")) p.a = read_additive(*v, g);
  if (auto v = n.get("T")) p.T = read_periodic(*v, g);
  if (auto v = n.get("g")) p.arbitrary_g = read_function(*v, g);
  if (auto v = n.get("h")) p.arbitrary_h = read_function(*v, g);
  return p;
}

Equation read_equation(const Node& n) {
  const auto s = n.str();
  static const std::map<std::string, Equation> names = {
      {"sincos", Equation::Sincos},   {"dalem1", Equation::Dalem1},   {"fech", Equation::Fech},
      {"wilson_modified", Equation::WilsonModified}, {"gajda", Equation::Gajda}, {"dalembert", Equation::Dalembert}};
  const auto it = names.find(s);
  if (it == names.end()) n.fail("unknown equation '" + s + "'");
  return it->second;
}

Task read_task(const Node& n) {
  const auto s = n.str();
  if (s == "enumerate") return Task::Enumerate;
  if (s == "solve") return Task::Solve;
  if (s == "verify") return Task::Verify;
  if (s == "factorize") return Task::Factorize;
  n.fail("unknown task '" + s + "'");
}

std::vector<std::string> slots_for(Equation e) {
  switch (e) {
    case Equation::Sincos:
      return {"f1", "f2", "g", "h"};
    case Equation::Dalem1:
      return {"F1", "F2", "g", "h"};
    case Equation::Fech:
    case Equation::WilsonModified:
      return {"f", "k"};
    case Equation::Gajda:
    case Equation::Dalembert:
      return {"f"};
  }
  return {};
}

ExplicitFamily read_family(const Node& n, const Config& cfg, std::size_t index) {
  n.allow_only({"name", "theorem", "case", "params", "functions"});
  ExplicitFamily fam;
  fam.name = n.has("name") ? n.at("name").str() : "family " + std::to_string(index);
  if (n.has("theorem")) {
    if (cfg.equation != Equation::Dalem1) n.fail("theorem families are only available for equation dalem1");
    const auto t = n.at("theorem");
    const auto name = t.str();
    if (name == "even") {
      fam.theorem = Theorem::Even;
    } else if (name == "odd") {
      fam.theorem = Theorem::Odd;
    } else if (name == "combined") {
      fam.theorem = Theorem::Combined;
    } else {
      t.fail("theorem must be even, odd or combined");
    }
    const auto c = n.at("case");
    fam.case_number = parse_roman(c.str());
    const int max_case = *fam.theorem == Theorem::Even ? 4 : *fam.theorem == Theorem::Odd ? 6 : 5;
    if (fam.case_number < 1 || fam.case_number > max_case) c.fail("no case '" + c.str() + "' in theorem " + name);
    if (auto p = n.get("params")) fam.params = read_params(*p, cfg.group);
    if (n.has("functions")) n.fail("give either theorem/case/params or functions, not both");
    return fam;
  }
  const auto fns = n.at("functions");
  const auto needed = slots_for(cfg.equation);
  for (const auto& [key, value] : fns.members()) {
    if (std::find(needed.begin(), needed.end(), key) == needed.end()) {
      value.fail("equation " + to_string(cfg.equation) + " has no function slot '" + key + "'");
    }
    fam.functions.emplace(key, read_function(value, cfg.group));
  }
  for (const auto& s : needed) {
    if (!fam.functions.contains(s)) fns.fail("missing function '" + s + "'");
  }
  return fam;
}

std::string locate(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

std::string to_string(Equation e) {
  switch (e) {
    case Equation::Sincos:
      return "sincos";
    case Equation::Dalem1:
      return "dalem1";
    case Equation::Fech:
      return "fech";
    case Equation::WilsonModified:
      return "wilson_modified";
    case Equation::Gajda:
      return "gajda";
    case Equation::Dalembert:
      return "dalembert";
  }
  return "?";
}

std::string to_string(Task t) {
  switch (t) {
    case Task::Enumerate:
      return "enumerate";
    case Task::Solve:
      return "solve";
    case Task::Verify:
      return "verify";
    case Task::Factorize:
      return "factorize";
  }
  return "?";
}

bool Config::has_task(Task t) const { return std::find(tasks.begin(), tasks.end(), t) != tasks.end(); }

Config parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("malformed JSON at " + locate(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
  const Node root(j, "");
  root.allow_only({"group", "measure", "equation", "tasks", "exponentials", "params", "families", "tolerance", "window"});

  Config cfg;
  cfg.group = read_group(root.at("group"));
  cfg.equation = read_equation(root.at("equation"));
  if (auto m = root.get("measure")) cfg.measure = read_measure(*m, cfg.group);

  if (auto t = root.get("tasks")) {
    for (const auto& item : t->items()) cfg.tasks.push_back(read_task(item));
  } else {
    cfg.tasks = {Task::Solve, Task::Verify};
  }

  if (auto e = root.get("exponentials")) {
    if (e->raw().is_string()) {
      if (e->str() != "all") e->fail("expected \"all\" or a list of exponentials");
    } else {
      std::vector<Exponential> list;
      for (const auto& item : e->items()) list.push_back(read_exponential(item, cfg.group));
      cfg.exponentials = std::move(list);
    }
  }

  if (auto p = root.get("params")) {
    p->allow_only({"alpha", "beta", "gamma", "delta", "a"});
    if (auto v = p->get("alpha")) cfg.alpha = read_complex(*v);
    if (auto v = p->get("beta")) cfg.fech.beta = read_complex(*v);
    if (auto v = p->get("gamma")) cfg.fech.gamma = read_complex(*v);
    if (auto v = p->get("delta")) cfg.fech.delta = read_complex(*v);
    if (auto v = p->get("a")) cfg.fech.a = read_additive(*v, cfg.group);
  }

  if (auto f = root.get("families")) {
    std::size_t i = 0;
    for (const auto& item : f->items()) cfg.families.push_back(read_family(item, cfg, i++));
  }

  if (auto t = root.get("tolerance")) {
    cfg.tolerance = t->number();
    if (!(cfg.tolerance > 0.0)) t->fail("tolerance must be positive");
  }
  if (auto w = root.get("window")) {
    const auto v = w->integer();
    if (v < 0 || v > 1000) w->fail("window must be in [0, 1000]");
    cfg.window = static_cast<int>(v);
  }

  const bool sincos_type = cfg.equation != Equation::Dalem1 && cfg.equation != Equation::Dalembert;
  if (sincos_type && !cfg.measure) root.fail("equation " + to_string(cfg.equation) + " needs a measure");
  if (cfg.equation == Equation::Dalem1 && cfg.measure) root.fail("equation dalem1 takes no measure");
  if (cfg.equation == Equation::Dalembert && cfg.measure &&
      !(cfg.measure->pruned() == dalembert_measure(cfg.group))) {
    root.at("measure").fail("equation dalembert fixes the measure to (1/2) delta_0");
  }
  return cfg;
}

Config load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace feq::app
