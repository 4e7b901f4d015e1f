#include "endolie/io.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace endolie {

namespace {

json mat_to_rowmajor(const Mat& m) {
  json a = json::array();
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) a.push_back(m.at(r, c));
  return a;
}

Mat mat_from_rowmajor(i64 p, int rows, int cols, const json& a) {
  if (static_cast<int>(a.size()) != rows * cols)
    throw std::invalid_argument("matrix entry count mismatch");
  Mat m(p, rows, cols);
  PrimeField f(p);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      m.set(r, c, f.reduce(a[r * cols + c].get<i64>()));
  return m;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

json algebra_to_json(const LiePresentation& pres) {
  json j;
  j["p"] = pres.p;
  j["basis"] = pres.names;
  json br = json::array();
  for (int i = 0; i < pres.d(); ++i)
    for (int k = i + 1; k < pres.d(); ++k) {
      bool nonzero = false;
      for (i64 c : pres.brackets[i][k]) nonzero |= (c != 0);
      if (nonzero) br.push_back(json::array({i, k, pres.brackets[i][k]}));
    }
  j["brackets"] = br;
  j["p_power"] = pres.p_power;
  if (pres.weights)
    j["weights"] = *pres.weights;
  else
    j["weights"] = nullptr;
  j["nilpotent"] = pres.nilpotent;
  return j;
}

LiePresentation algebra_from_json(const json& j) {
  LiePresentation pres;
  pres.p = j.at("p").get<i64>();
  pres.names = j.at("basis").get<std::vector<std::string>>();
  const int d = pres.d();
  PrimeField f(pres.p);
  pres.brackets.assign(
      d, std::vector<std::vector<i64>>(d, std::vector<i64>(d, 0)));
  for (const auto& e : j.at("brackets")) {
    int a = e.at(0).get<int>();
    int b = e.at(1).get<int>();
    auto coeffs = e.at(2).get<std::vector<i64>>();
    if (a < 0 || b < 0 || a >= d || b >= d ||
        static_cast<int>(coeffs.size()) != d)
      throw std::invalid_argument("bad bracket entry");
    for (int k = 0; k < d; ++k) {
      pres.brackets[a][b][k] = f.reduce(coeffs[k]);
      pres.brackets[b][a][k] = f.neg(f.reduce(coeffs[k]));
    }
  }
  pres.p_power = j.at("p_power").get<std::vector<std::vector<i64>>>();
  if (static_cast<int>(pres.p_power.size()) != d)
    throw std::invalid_argument("p_power size mismatch");
  for (auto& row : pres.p_power) {
    if (static_cast<int>(row.size()) != d)
      throw std::invalid_argument("p_power row size mismatch");
    for (auto& v : row) v = f.reduce(v);
  }
  if (!j.at("weights").is_null()) {
    pres.weights = j.at("weights").get<std::vector<Weight>>();
    if (!pres.weights->empty()) {
      pres.rank = static_cast<int>((*pres.weights)[0].size());
    }
  }
  pres.nilpotent = j.at("nilpotent").get<std::vector<bool>>();
  if (static_cast<int>(pres.nilpotent.size()) != d)
    throw std::invalid_argument("nilpotent flag count mismatch");
  pres.validate();
  return pres;
}

json module_to_json(const ModuleRep& m) {
  json j;
  const auto& tag = m.alg->pres.tag;
  if (tag.empty())
    throw std::invalid_argument(
        "only preset-backed modules are serializable directly; save the "
        "algebra file first");
  j["algebra"] = "preset:" + tag + ":" + std::to_string(m.alg->pres.p);
  j["dim"] = m.dim;
  json act = json::array();
  for (const auto& a : m.act) act.push_back(mat_to_rowmajor(a));
  j["action"] = act;
  if (m.grading)
    j["weights"] = *m.grading;
  else
    j["weights"] = nullptr;
  return j;
}

AlgebraPtr resolve_algebra(const std::string& ref,
                           const std::string& base_dir) {
  static std::map<std::string, AlgebraPtr> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(ref);
  if (it != cache.end()) return it->second;
  AlgebraPtr alg;
  if (ref.rfind("preset:", 0) == 0) {
    auto rest = ref.substr(7);
    auto colon = rest.rfind(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("preset tag must be preset:NAME:P");
    alg = build_algebra(
        preset(rest.substr(0, colon), std::stoll(rest.substr(colon + 1))));
  } else {
    std::filesystem::path path(ref);
    if (path.is_relative() && !base_dir.empty())
      path = std::filesystem::path(base_dir) / path;
    alg = build_algebra(algebra_from_json(json::parse(read_file(path.string()))));
  }
  cache[ref] = alg;
  return alg;
}

ModuleRep module_from_json(const json& j, const std::string& base_dir) {
  ModuleRep m;
  m.alg = resolve_algebra(j.at("algebra").get<std::string>(), base_dir);
  m.dim = j.at("dim").get<int>();
  const auto& act = j.at("action");
  if (static_cast<int>(act.size()) != m.alg->pres.d())
    throw std::invalid_argument("one action matrix per generator required");
  for (const auto& a : act)
    m.act.push_back(mat_from_rowmajor(m.alg->pres.p, m.dim, m.dim, a));
  if (!j.at("weights").is_null()) {
    m.grading = j.at("weights").get<std::vector<Weight>>();
    if (static_cast<int>(m.grading->size()) != m.dim)
      throw std::invalid_argument("one weight per basis vector required");
  }
  return m;
}

json census_to_json(const CensusReport& rep) {
  json j;
  j["algebra"] = rep.algebra;
  j["n"] = rep.n;
  j["p"] = rep.p;
  j["mode"] = rep.sampled ? "sampled" : "exhaustive";
  j["canonical_form_reduction"] = rep.reduced;
  j["points_scanned"] = rep.points_scanned;
  j["valid_points"] = rep.valid_points;
  j["endotrivial_points"] = rep.endotrivial_points;
  j["indeterminate_points"] = rep.indeterminate_points;
  j["classes"] = rep.representatives.size();
  json reps = json::array();
  for (size_t i = 0; i < rep.representatives.size(); ++i) {
    json r = module_to_json(rep.representatives[i]);
    r["orbit_count"] = rep.orbit_counts[i];
    reps.push_back(r);
  }
  j["representatives"] = reps;
  j["wall_seconds"] = rep.wall_seconds;
  return j;
}

ModuleRep load_module(const std::string& path) {
  auto dir = std::filesystem::path(path).parent_path().string();
  return module_from_json(json::parse(read_file(path)), dir);
}

void save_module(const ModuleRep& m, const std::string& path) {
  save_json(module_to_json(m), path);
}

LiePresentation load_algebra(const std::string& path) {
  return algebra_from_json(json::parse(read_file(path)));
}

void save_json(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

std::string diagram_to_dot(const WeightDiagram& d) {
  std::ostringstream os;
  os << "digraph weights {\n";
  for (size_t i = 0; i < d.nodes.size(); ++i)
    os << "  n" << i << " [label=\"" << weight_str(d.nodes[i]) << "\"];\n";
  for (const auto& a : d.arrows)
    os << "  n" << a[0] << " -> n" << a[1] << " [label=\"a"
       << (a[2] + 1) << "\"];\n";
  os << "}\n";
  return os.str();
}

WeightDiagram diagram_from_dot(const std::string& text) {
  WeightDiagram d;
  std::istringstream is(text);
  std::string line;
  auto parse_weight = [](const std::string& s) {
    Weight w;
    std::string cur;
    for (char ch : s) {
      if (ch == '(' || ch == ' ') continue;
      if (ch == ',' || ch == ')') {
        if (!cur.empty()) w.push_back(std::stoll(cur));
        cur.clear();
      } else {
        cur += ch;
      }
    }
    if (!cur.empty()) w.push_back(std::stoll(cur));
    return w;
  };
  while (std::getline(is, line)) {
    auto arrow = line.find("->");
    auto label = line.find("label=\"");
    if (label == std::string::npos) continue;
    std::string lab = line.substr(label + 7);
    lab = lab.substr(0, lab.find('"'));
    if (arrow == std::string::npos) {
      d.nodes.push_back(parse_weight(lab));
    } else {
      int from = std::stoi(line.substr(line.find('n') + 1));
      int to = std::stoi(line.substr(line.find('n', arrow) + 1));
      int root = std::stoi(lab.substr(1)) - 1;
      d.arrows.push_back({from, to, root});
    }
  }
  return d;
}

}  // namespace endolie
