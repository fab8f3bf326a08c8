#include "speclap/json_io.hpp"

#include <cmath>
#include <sstream>

namespace speclap {

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(errc::bad_input, "malformed JSON");
  return j;
}

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    fail(errc::bad_input, std::string("missing field: ") + name);
  return j.at(name);
}

double as_number(const json& j, const char* what) {
  if (!j.is_number()) fail(errc::bad_input, std::string(what) + " must be a number");
  return j.get<double>();
}

std::string as_string(const json& j, const char* what) {
  if (!j.is_string()) fail(errc::bad_input, std::string(what) + " must be a string");
  return j.get<std::string>();
}

} // namespace

Matrix parse_matrix(const json& j) {
  if (!j.is_array()) fail(errc::bad_input, "matrix must be an array of rows");
  Eigen::Index rows = j.size();
  Eigen::Index cols = rows > 0 ? Eigen::Index(j.at(0).size()) : 0;
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const json& row = j.at(r);
    if (!row.is_array() || Eigen::Index(row.size()) != cols)
      fail(errc::bad_input, "matrix rows must have equal length");
    for (Eigen::Index c = 0; c < cols; ++c) {
      const json& z = row.at(c);
      if (!z.is_array() || z.size() != 2)
        fail(errc::bad_input, "matrix entries must be [re, im] pairs");
      m(r, c) = cplx(as_number(z.at(0), "re"), as_number(z.at(1), "im"));
    }
  }
  return m;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

SystemDoc parse_system_doc(const json& j) {
  const json& jv = field(j, "vertices");
  const json& je = field(j, "edges");
  if (!jv.is_array() || !je.is_array())
    fail(errc::bad_input, "vertices and edges must be arrays");

  std::vector<Vertex> verts;
  verts.reserve(jv.size());
  for (const json& v : jv) {
    Vertex vert;
    vert.id = as_string(field(v, "id"), "vertex id");
    vert.rank = v.contains("rank") ? v.at("rank").get<int>() : 1;
    verts.push_back(std::move(vert));
  }

  std::vector<std::pair<int, int>> pairs;
  std::size_t with_mats = 0;
  for (const json& e : je) {
    if (e.contains("forward") != e.contains("backward"))
      fail(errc::bad_input, "edges need both forward and backward or neither");
    if (e.contains("forward")) ++with_mats;
  }
  if (with_mats != 0 && with_mats != je.size())
    fail(errc::bad_input, "either every edge carries matrices or none does");

  SystemDoc doc;
  std::vector<Matrix> fwd, bwd;
  {
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (!index.emplace(verts[i].id, int(i)).second)
        fail(errc::bad_input, "duplicate vertex id: " + verts[i].id);
    }
    for (const json& e : je) {
      auto look = [&](const char* name) {
        std::string id = as_string(field(e, name), name);
        auto it = index.find(id);
        if (it == index.end()) fail(errc::unknown_vertex, "unknown vertex: " + id);
        return it->second;
      };
      int from = look("from");
      int to = look("to");
      pairs.push_back({from, to});
      if (with_mats) {
        Matrix f = parse_matrix(e.at("forward"));
        Matrix b = parse_matrix(e.at("backward"));
        // Empty nested arrays cannot spell out a 0 x k shape; restore it.
        if (f.size() == 0) f = Matrix(verts[to].rank, verts[from].rank);
        if (b.size() == 0) b = Matrix(verts[from].rank, verts[to].rank);
        fwd.push_back(std::move(f));
        bwd.push_back(std::move(b));
      }
    }
  }
  doc.graph = Graph::make(std::move(verts), pairs);

  if (with_mats) {
    TransmissionSystem ts;
    ts.mats.resize(doc.graph.dedge_count());
    for (std::size_t k = 0; k < fwd.size(); ++k) {
      ts.mats[2 * k] = std::move(fwd[k]);
      ts.mats[2 * k + 1] = std::move(bwd[k]);
    }
    validate_shapes(doc.graph, ts);
    doc.system = std::move(ts);
  }

  if (j.contains("weights")) {
    const json& jw = j.at("weights");
    if (!jw.is_object()) fail(errc::bad_input, "weights must map vertex ids to arrays");
    DiagonalWeight w;
    w.entries.resize(doc.graph.vertex_count());
    for (int v = 0; v < doc.graph.vertex_count(); ++v) {
      const Vertex& vert = doc.graph.vertex(v);
      if (!jw.contains(vert.id)) {
        if (vert.rank == 0) {
          w.entries[v] = Eigen::VectorXd(0);
          continue;
        }
        fail(errc::bad_input, "weights missing vertex: " + vert.id);
      }
      const json& arr = jw.at(vert.id);
      if (!arr.is_array() || int(arr.size()) != vert.rank)
        fail(errc::bad_input, "weight arity must equal the vertex rank");
      Eigen::VectorXd e(vert.rank);
      for (int i = 0; i < vert.rank; ++i) e(i) = as_number(arr.at(i), "weight");
      w.entries[v] = std::move(e);
    }
    doc.weight = std::move(w);
  }
  return doc;
}

json system_doc_to_json(const Graph& g, const TransmissionSystem* ts,
                        const DiagonalWeight* w) {
  json jv = json::array();
  for (const Vertex& v : g.vertices()) jv.push_back({{"id", v.id}, {"rank", v.rank}});

  json je = json::array();
  for (int rep : g.undirected_reps()) {
    const DirectedEdge& d = g.dedge(rep);
    json e = {{"from", g.vertex(d.tail).id}, {"to", g.vertex(d.head).id}};
    if (ts) {
      e["forward"] = matrix_to_json(ts->mats[d.id]);
      e["backward"] = matrix_to_json(ts->mats[d.op]);
    }
    je.push_back(std::move(e));
  }

  json out = {{"vertices", std::move(jv)}, {"edges", std::move(je)}};
  if (w) {
    json jw = json::object();
    for (int v = 0; v < g.vertex_count(); ++v) {
      json arr = json::array();
      for (Eigen::Index i = 0; i < w->entries[v].size(); ++i)
        arr.push_back(w->entries[v](i));
      jw[g.vertex(v).id] = std::move(arr);
    }
    out["weights"] = std::move(jw);
  }
  return out;
}

std::map<std::string, std::string> parse_partition_doc(const json& j) {
  const json& jc = field(j, "classes");
  if (!jc.is_object()) fail(errc::bad_input, "classes must map vertex ids to class ids");
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : jc.items()) out[k] = as_string(v, "class id");
  return out;
}

Association parse_association_doc(const json& j, const Graph& g) {
  const json& ja = field(j, "assoc");
  if (!ja.is_object()) fail(errc::bad_input, "assoc must map vertex ids to id lists");
  std::map<std::string, std::vector<std::string>> m;
  for (const auto& [k, v] : ja.items()) {
    if (!v.is_array()) fail(errc::bad_input, "association sets must be arrays");
    std::vector<std::string> ids;
    for (const json& s : v) ids.push_back(as_string(s, "associated vertex"));
    m[k] = std::move(ids);
  }
  return Association::from_ids(g, m);
}

Eigen::MatrixXd parse_walk_doc(const json& j) {
  const json& jp = field(j, "probs");
  if (!jp.is_array() || jp.empty()) fail(errc::bad_input, "probs must be a nonempty array");
  Eigen::Index n = jp.size();
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const json& row = jp.at(r);
    if (!row.is_array() || Eigen::Index(row.size()) != n)
      fail(errc::bad_input, "probs must be a square array");
    for (Eigen::Index c = 0; c < n; ++c) m(r, c) = as_number(row.at(c), "probability");
  }
  return m;
}

CayleyDoc parse_cayley_doc(const json& j) {
  const json& jm = field(j, "moduli");
  if (!jm.is_array() || jm.empty()) fail(errc::bad_input, "moduli must be a nonempty array");
  std::vector<int> moduli;
  for (const json& x : jm) moduli.push_back(int(as_number(x, "modulus")));
  AbelianGroup group(moduli);

  const json& js = field(j, "S");
  if (!js.is_array()) fail(errc::bad_input, "S must be an array of tuples");
  std::vector<AbelianGroup::Elem> gens;
  for (const json& t : js) {
    if (!t.is_array() || t.size() != moduli.size())
      fail(errc::bad_input, "generators must match the moduli arity");
    AbelianGroup::Elem e;
    for (const json& x : t) e.push_back(int(as_number(x, "generator entry")));
    gens.push_back(std::move(e));
  }

  EdgeMatrixFamily family;
  if (j.contains("F")) {
    const json& jf = j.at("F");
    if (!jf.is_object()) fail(errc::bad_input, "F must map tuples to matrices");
    for (const auto& [key, mat] : jf.items()) {
      AbelianGroup::Elem e;
      std::stringstream ss(key);
      std::string part;
      while (std::getline(ss, part, ',')) {
        try {
          e.push_back(std::stoi(part));
        } catch (const std::exception&) {
          fail(errc::bad_input, "F keys must be comma-joined integers");
        }
      }
      if (e.size() != moduli.size()) fail(errc::bad_input, "F key arity mismatch");
      family[group.normalize(e)] = parse_matrix(mat);
    }
  }
  return {std::move(group), std::move(gens), std::move(family)};
}

std::optional<std::vector<Matrix>> parse_barrier_list(const json& j) {
  if (!j.contains("barriers")) return std::nullopt;
  const json& jb = j.at("barriers");
  if (!jb.is_array()) fail(errc::bad_input, "barriers must be an array of matrices");
  std::vector<Matrix> out;
  for (const json& m : jb) out.push_back(parse_matrix(m));
  return out;
}

json spectrum_to_json(const std::vector<cplx>& values) {
  json out = json::array();
  for (const cplx& z : values) out.push_back(json::array({z.real(), z.imag()}));
  return out;
}

json real_to_json(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

double real_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  fail(errc::bad_input, "expected a real number");
}

json bound_to_json(const BoundReport& r) {
  json ctx = json::object();
  for (const auto& [k, v] : r.context) ctx[k] = real_to_json(v);
  return {{"name", r.name},     {"bound", real_to_json(r.bound)},
          {"target", real_to_json(r.target)}, {"margin", real_to_json(r.margin)},
          {"pass", r.pass},     {"context", std::move(ctx)}};
}

VertexSubset parse_subset_csv(const Graph& g, const std::string& csv) {
  std::vector<std::string> ids;
  std::stringstream ss(csv);
  std::string part;
  while (std::getline(ss, part, ',')) ids.push_back(part);
  return VertexSubset::from_ids(g, ids);
}

} // namespace speclap
