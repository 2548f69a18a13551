#include "brauerlie/diagram/render.hpp"

#include <sstream>

#include "brauerlie/errors.hpp"

namespace brauerlie {
namespace {

struct Endpoint {
  bool top;
  int index;
};

Endpoint endpoint(int p, int k) { return p < k ? Endpoint{false, p} : Endpoint{true, p - k}; }

std::string point_label(int p, int k) {
  Endpoint e = endpoint(p, k);
  return (e.top ? "t" : "b") + std::to_string(e.index);
}

std::string coeff_text(const DeltaPoly& c) {
  std::string s = c.str();
  return s.find(" + ") != std::string::npos ? "(" + s + ")" : s;
}

std::string render_text(const DiagMorphism& f) {
  if (f.domain().empty() && f.codomain().empty()) return f.is_zero() ? "0" : f.terms().begin()->second.str();
  std::ostringstream os;
  int k = static_cast<int>(f.domain().size());
  os << "\"" << f.domain().str() << "\" -> \"" << f.codomain().str() << "\"";
  if (f.is_zero()) os << "\n0";
  for (const auto& [m, c] : f.terms()) {
    os << "\n" << coeff_text(c) << " * [";
    bool first = true;
    for (auto [p, q] : matching_pairs(m)) {
      os << (first ? "" : " ") << point_label(p, k) << "-" << point_label(q, k);
      first = false;
    }
    os << "]";
  }
  return os.str();
}

std::string render_tikz(const DiagMorphism& f) {
  std::ostringstream os;
  int k = static_cast<int>(f.domain().size());
  auto x = [&](Endpoint e) { return e.index; };
  auto arrow = [](Letter l) { return l == Letter::up ? "->" : l == Letter::down ? "<-" : "-"; };
  if (f.is_zero()) os << "% zero morphism\n";
  for (const auto& [m, c] : f.terms()) {
    os << "% coefficient " << c.str() << "\n";
    os << "\\begin{tikzpicture}[baseline=0.5cm]\n";
    for (auto [p, q] : matching_pairs(m)) {
      Endpoint a = endpoint(p, k), b = endpoint(q, k);
      if (!a.top && b.top) {
        os << "  \\draw[" << arrow(f.domain()[a.index]) << "] (" << x(a) << ",0) to[out=90,in=-90] (" << x(b) << ",1.5);\n";
      } else if (!a.top) {
        os << "  \\draw[" << arrow(f.domain()[a.index]) << "] (" << x(a) << ",0) to[out=90,in=90] (" << x(b) << ",0);\n";
      } else {
        os << "  \\draw[" << arrow(f.codomain()[a.index] == Letter::up ? Letter::down : f.codomain()[a.index] == Letter::down ? Letter::up : Letter::strand)
           << "] (" << x(a) << ",1.5) to[out=-90,in=-90] (" << x(b) << ",1.5);\n";
      }
    }
    os << "\\end{tikzpicture}\n";
  }
  return os.str();
}

}  // namespace

RenderFormat render_format_from_name(const std::string& name) {
  if (name == "text") return RenderFormat::text;
  if (name == "tikz") return RenderFormat::tikz;
  if (name == "json") return RenderFormat::json;
  throw Error(Errc::invalid_argument, "unknown format '" + name + "'");
}

Json to_json(const DiagMorphism& f) {
  Json j;
  auto fl = f.flavor();
  j["flavor"] = flavor_name(fl ? *fl : Flavor::oriented);
  j["domain"] = f.domain().str();
  j["codomain"] = f.codomain().str();
  Json terms = Json::array();
  int k = static_cast<int>(f.domain().size());
  for (const auto& [m, c] : f.terms()) {
    Json pairs = Json::array();
    for (auto [p, q] : matching_pairs(m)) {
      Endpoint a = endpoint(p, k), b = endpoint(q, k);
      pairs.push_back(Json::array({a.top ? "top" : "bot", a.index, b.top ? "top" : "bot", b.index}));
    }
    Json t;
    t["pairs"] = pairs;
    t["coeff"] = c.str();
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

DiagMorphism diag_from_json(const Json& j) {
  try {
    Word dom = Word::parse(j.at("domain").get<std::string>());
    Word cod = Word::parse(j.at("codomain").get<std::string>());
    if (j.contains("flavor")) {
      Flavor fl = flavor_from_name(j.at("flavor").get<std::string>());
      for (const Word* w : {&dom, &cod})
        if (w->flavor() && *w->flavor() != fl) throw Error(Errc::flavor, "declared flavor does not match words");
    }
    DiagMorphism f(dom, cod);
    int k = static_cast<int>(dom.size());
    std::size_t points = dom.size() + cod.size();
    for (const auto& t : j.at("terms")) {
      std::vector<std::pair<int, int>> pairs;
      for (const auto& pr : t.at("pairs")) {
        if (!pr.is_array() || pr.size() != 4) throw Error(Errc::validation, "pair must have four entries");
        auto idx = [&](const Json& side, const Json& index) {
          std::string s = side.get<std::string>();
          int i = index.get<int>();
          if (s != "bot" && s != "top") throw Error(Errc::validation, "side must be bot or top");
          int bound = s == "bot" ? k : static_cast<int>(cod.size());
          if (i < 0 || i >= bound) throw Error(Errc::validation, "endpoint index out of range");
          return s == "bot" ? i : k + i;
        };
        pairs.emplace_back(idx(pr[0], pr[1]), idx(pr[2], pr[3]));
      }
      Matching m = matching_from_pairs(points, pairs);
      validate_matching(m, dom, cod);
      f.accumulate(m, DeltaPoly::parse(t.at("coeff").get<std::string>()));
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::validation, std::string("malformed morphism JSON: ") + e.what());
  }
}

Json vector_to_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

std::string render(const DiagMorphism& f, RenderFormat format) {
  switch (format) {
    case RenderFormat::text: return render_text(f);
    case RenderFormat::tikz: return render_tikz(f);
    case RenderFormat::json: return to_json(f).dump(2);
  }
  return {};
}

}  // namespace brauerlie
