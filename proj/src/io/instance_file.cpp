#include "bvkit/io/instance_file.hpp"

#include "bvkit/equivariant/gysin.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace bvkit {

using nlohmann::ordered_json;

namespace {

std::string join(const std::vector<std::string>& lines) {
  std::string out = "invalid instance:";
  for (const auto& l : lines) out += "\n  - " + l;
  return out;
}

class Loader {
 public:
  Loader(const ordered_json& doc, bool allow_two) : doc_(doc), allow_two_(allow_two) {}

  Instance load() {
    static const std::set<std::string> known = {"name", "field", "lambda_degree", "basis", "mu",
                                                "lambda", "Delta", "eta", "epsilon", "gysin"};
    if (!doc_.is_object()) throw ValidationError({"document must be a JSON object"});
    for (const auto& [key, _] : doc_.items()) {
      if (!known.count(key)) problem("unknown key '" + key + "'");
    }

    std::string name = "instance";
    if (doc_.contains("name")) {
      if (doc_["name"].is_string()) name = doc_["name"].get<std::string>();
      else problem("name must be a string");
    }

    Field field = Field::rationals();
    if (doc_.contains("field")) {
      try {
        field = Field::parse(doc_["field"].get<std::string>(), allow_two_);
      } catch (const std::exception& ex) {
        problem(std::string("field: ") + ex.what());
      }
    }

    Degree lambda_degree = -1;
    if (!doc_.contains("lambda_degree") || !doc_["lambda_degree"].is_number_integer()) {
      problem("lambda_degree must be an integer");
    } else {
      lambda_degree = doc_["lambda_degree"].get<int>();
      if (lambda_degree % 2 == 0) {
        problem("lambda_degree " + std::to_string(lambda_degree) + " is even; lambda must have odd degree");
      }
    }

    std::vector<Generator> basis = read_basis(doc_.value("basis", ordered_json()), "basis", SpaceTag::primal);
    auto find = [&basis](const std::string& n) -> std::optional<Generator> {
      for (auto g : basis) {
        if (g.name() == n) return g;
      }
      return std::nullopt;
    };

    auto mu = read_map("mu", 2, 1, 0, find, find);
    auto lambda = read_map("lambda", 1, 2, lambda_degree, find, find);
    auto delta = read_map("Delta", 1, 1, 1, find, find);

    Element eta(1);
    if (!doc_.contains("eta")) {
      problem("eta is required");
    } else {
      eta = read_element(doc_["eta"], "eta", 1, find);
      auto d = eta.degree();
      if (eta.is_zero()) problem("eta must be nonzero");
      else if (!d || *d != 0) problem("eta must be homogeneous of degree 0");
    }

    std::optional<GradedMap> epsilon;
    if (doc_.contains("epsilon")) epsilon = read_map("epsilon", 1, 0, -lambda_degree, find, find);

    std::shared_ptr<const GysinData> gysin;
    if (doc_.contains("gysin")) {
      const auto& g = doc_["gysin"];
      if (!g.is_object()) {
        problem("gysin must be an object with basis, E and M");
      } else {
        std::vector<Generator> b = read_basis(g.value("basis", ordered_json()), "gysin.basis", SpaceTag::quotient);
        auto find_b = [&b](const std::string& n) -> std::optional<Generator> {
          for (auto x : b) {
            if (x.name() == n) return x;
          }
          return std::nullopt;
        };
        auto e = read_map_from(g, "E", "gysin.E", 1, 1, 0, find, find_b);
        auto m = read_map_from(g, "M", "gysin.M", 1, 1, 1, find_b, find);
        gysin = std::make_shared<const GysinData>(GysinData{GradedBasis::finite(b), e, m});
      }
    }

    if (!problems_.empty()) throw ValidationError(problems_);
    Instance inst{
        .name = name,
        .field = Field::rationals(),
        .lambda_degree = lambda_degree,
        .basis = GradedBasis::finite(basis),
        .mu = mu,
        .lambda = lambda,
        .Delta = delta,
        .eta = eta,
        .epsilon = epsilon,
        .gysin = gysin,
    };
    return inst.over_field(field);
  }

 private:
  using Finder = std::function<std::optional<Generator>(const std::string&)>;

  void problem(std::string p) { problems_.push_back(std::move(p)); }

  std::vector<Generator> read_basis(const ordered_json& node, const std::string& where, SpaceTag tag) {
    std::vector<Generator> out;
    if (!node.is_array()) {
      problem(where + " must be a list of {name, degree}");
      return out;
    }
    std::set<std::string> seen;
    for (std::size_t i = 0; i < node.size(); ++i) {
      const auto& e = node[i];
      const std::string at = where + "[" + std::to_string(i) + "]";
      if (!e.is_object() || !e.contains("name") || !e["name"].is_string() || !e.contains("degree") ||
          !e["degree"].is_number_integer()) {
        problem(at + " must be {\"name\": string, \"degree\": integer}");
        continue;
      }
      std::string n = e["name"].get<std::string>();
      if (n.empty() || n.find_first_of(" \t\n+-()") != std::string::npos) {
        problem(at + ": name '" + n + "' may not be empty or contain spaces, '+', '-', '(' or ')'");
        continue;
      }
      if (!seen.insert(n).second) {
        problem(at + ": duplicate basis name '" + n + "'");
        continue;
      }
      out.push_back(Generator::make(n, e["degree"].get<int>(), static_cast<int>(i), tag));
    }
    return out;
  }

  std::optional<Scalar> read_scalar(const ordered_json& node, const std::string& at) {
    try {
      if (node.is_number_integer()) return Scalar(node.get<long>());
      if (node.is_string()) return Scalar::parse(node.get<std::string>());
    } catch (const std::exception& ex) {
      problem(at + ": " + ex.what());
      return std::nullopt;
    }
    problem(at + ": coefficient must be an integer or a string \"n/d\"");
    return std::nullopt;
  }

  std::optional<Key> read_names(const ordered_json& node, const std::string& at, int arity, const Finder& find) {
    std::vector<std::string> names;
    if (node.is_string()) {
      std::string s = node.get<std::string>();
      std::size_t start = 0;
      while (true) {
        std::size_t end = s.find("(x)", start);
        names.push_back(s.substr(start, end == std::string::npos ? std::string::npos : end - start));
        if (end == std::string::npos) break;
        start = end + 3;
      }
      if (arity == 0 && s.empty()) names.clear();
    } else if (node.is_array()) {
      for (const auto& n : node) {
        if (!n.is_string()) {
          problem(at + ": names must be strings");
          return std::nullopt;
        }
        names.push_back(n.get<std::string>());
      }
    } else {
      problem(at + ": expected a name or a list of names");
      return std::nullopt;
    }
    if (static_cast<int>(names.size()) != arity) {
      problem(at + ": expected " + std::to_string(arity) + " factor(s), got " + std::to_string(names.size()));
      return std::nullopt;
    }
    Key key;
    bool ok = true;
    for (const auto& n : names) {
      auto g = find(n);
      if (!g) {
        problem(at + ": undeclared basis name '" + n + "'");
        ok = false;
        continue;
      }
      key.push_back(*g);
    }
    if (!ok) return std::nullopt;
    return key;
  }

  Element read_element(const ordered_json& node, const std::string& at, int arity, const Finder& find) {
    Element out(arity);
    if (!node.is_array()) {
      problem(at + " must be a list of {name, coeff}");
      return out;
    }
    for (std::size_t i = 0; i < node.size(); ++i) {
      const auto& t = node[i];
      const std::string here = at + "[" + std::to_string(i) + "]";
      if (!t.is_object() || !t.contains("name")) {
        problem(here + " must be {\"name\": ..., \"coeff\": ...}");
        continue;
      }
      auto key = read_names(t["name"], here + ".name", arity, find);
      auto c = t.contains("coeff") ? read_scalar(t["coeff"], here + ".coeff") : std::optional<Scalar>(Scalar(1));
      if (key && c) out.add_term(*key, *c);
    }
    return out;
  }

  GradedMap read_map(const std::string& field, int source, int target, Degree degree, const Finder& in,
                     const Finder& out) {
    return read_map_from(doc_, field, field, source, target, degree, in, out);
  }

  GradedMap read_map_from(const ordered_json& parent, const std::string& field, const std::string& where, int source,
                          int target, Degree degree, const Finder& in, const Finder& out) {
    std::map<Key, Element, KeyLess> table;
    if (parent.contains(field)) {
      const auto& entries = parent[field];
      if (!entries.is_array()) {
        problem(where + " must be a list of entries");
      } else {
        for (std::size_t i = 0; i < entries.size(); ++i) {
          const auto& e = entries[i];
          const std::string at = where + "[" + std::to_string(i) + "]";
          if (!e.is_object() || !e.contains("inputs")) {
            problem(at + " must have \"inputs\"");
            continue;
          }
          auto key = read_names(e["inputs"], at + ".inputs", source, in);
          if (!key) continue;
          Element value(target);
          if (target == 0) {
            auto c = e.contains("coeff") ? read_scalar(e["coeff"], at + ".coeff") : std::optional<Scalar>(Scalar(1));
            if (c) value.add_term({}, *c);
          } else {
            value = read_element(e.value("output", ordered_json::array()), at + ".output", target, out);
          }
          const Degree expected = degree_of(*key) + degree;
          for (const auto& [k, c] : value.terms()) {
            if (degree_of(k) != expected) {
              problem(at + ": " + field + "(" + key_to_string(*key) + ") contains " + key_to_string(k) + " of degree " +
                      std::to_string(degree_of(k)) + ", expected degree " + std::to_string(expected));
            }
          }
          if (table.count(*key)) {
            problem(at + ": duplicate entry for " + key_to_string(*key));
            continue;
          }
          table.emplace(*key, std::move(value));
        }
      }
    }
    return GradedMap::from_table(field, source, target, degree, std::move(table));
  }

  const ordered_json& doc_;
  bool allow_two_;
  std::vector<std::string> problems_;
};

ordered_json element_json(const Element& x) {
  ordered_json out = ordered_json::array();
  for (const auto& [k, c] : x.terms()) {
    std::string n;
    for (std::size_t i = 0; i < k.size(); ++i) n += (i ? "(x)" : "") + k[i].name();
    out.push_back({{"name", n}, {"coeff", c.to_display_string()}});
  }
  return out;
}

ordered_json basis_json(const std::vector<Generator>& basis) {
  ordered_json out = ordered_json::array();
  for (auto g : basis) out.push_back({{"name", g.name()}, {"degree", g.degree()}});
  return out;
}

ordered_json map_json(const GradedMap& f, const std::vector<Generator>& basis) {
  ordered_json out = ordered_json::array();
  std::vector<std::vector<Generator>> slots(f.source_arity(), basis);
  for (const auto& key : enumerate_tuples(slots)) {
    Element y = f.apply(key);
    if (y.is_zero()) continue;
    ordered_json names = ordered_json::array();
    for (auto g : key) names.push_back(g.name());
    if (f.target_arity() == 0) {
      out.push_back({{"inputs", names}, {"coeff", y.coefficient({}).to_display_string()}});
    } else {
      out.push_back({{"inputs", names}, {"output", element_json(y)}});
    }
  }
  return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> problems)
    : std::runtime_error(join(problems)), problems_(std::move(problems)) {}

Instance parse_instance(const std::string& text, bool allow_characteristic_two) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    throw ValidationError({std::string("JSON parse error: ") + ex.what()});
  }
  Instance inst = Loader(doc, allow_characteristic_two).load();
  if (inst.gysin) {
    std::vector<std::string> problems;
    for (const auto& r : validate_gysin(inst, *inst.gysin, Window::all())) {
      if (!r.passed()) problems.push_back("gysin: " + r.summary());
    }
    if (!problems.empty()) throw ValidationError(problems);
  }
  return inst;
}

Instance load_instance(const std::filesystem::path& path, bool allow_characteristic_two) {
  std::ifstream in(path);
  if (!in) throw ValidationError({"cannot read " + path.string()});
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str(), allow_characteristic_two);
}

std::string serialize_instance(const Instance& inst) {
  const auto& basis = inst.basis.elements();
  ordered_json doc;
  doc["name"] = inst.name;
  doc["field"] = inst.field.to_string();
  doc["lambda_degree"] = inst.lambda_degree;
  doc["basis"] = basis_json(basis);
  doc["mu"] = map_json(inst.mu, basis);
  doc["lambda"] = map_json(inst.lambda, basis);
  doc["Delta"] = map_json(inst.Delta, basis);
  doc["eta"] = element_json(inst.eta);
  if (inst.epsilon) doc["epsilon"] = map_json(*inst.epsilon, basis);
  if (inst.gysin && inst.gysin->basis.is_finite()) {
    const auto& b = inst.gysin->basis.elements();
    doc["gysin"] = {{"basis", basis_json(b)}, {"E", map_json(inst.gysin->E, basis)}, {"M", map_json(inst.gysin->M, b)}};
  }
  return doc.dump(2) + "\n";
}

void save_instance(const Instance& inst, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << serialize_instance(inst);
}

}  // namespace bvkit
