// Copyright 2026 The pfcurv Authors
// SPDX-License-Identifier: Apache-2.0

#include "pfcurv/io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>

#include "pfcurv/errors.hpp"

namespace pfcurv {

using nlohmann::json;

namespace {

const json& require(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw InvalidMesh(std::string("missing key '") + key + "'");
  return *it;
}

template <typename T>
T get_as(const json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const json::exception& e) {
    throw InvalidMesh(std::string("bad ") + what + ": " + e.what());
  }
}

std::string labels(const MetricComplex& m, SimplexId s) {
  std::string out;
  for (int v : m.complex().vertices(s)) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

std::string opt(const std::optional<double>& x) { return x ? format_number(*x) : std::string(); }

json opt_json(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }

const std::vector<ElementRecord>& records(const CurvatureReport& r, ReportTarget t) {
  switch (t) {
    case ReportTarget::dual_edges:
      return r.dual_edges;
    case ReportTarget::edges:
      return r.edges;
    case ReportTarget::vertices:
      return r.vertices;
    case ReportTarget::dual_vertices:
      return r.dual_vertices;
    case ReportTarget::hinges:
      break;
  }
  throw UnsupportedRequest("hinge records are not element records");
}

void require_target(const CurvatureReport& r, ReportTarget t) {
  if ((t == ReportTarget::edges || t == ReportTarget::dual_edges) && r.dimension < 3) {
    throw UnsupportedRequest(std::string(to_string(t)) + " curvature needs d >= 3");
  }
}

}  // namespace

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

MeshData mesh_from_json(const json& j) {
  if (!j.is_object()) throw InvalidMesh("mesh JSON must be an object");
  MeshData mesh;
  mesh.dimension = get_as<int>(require(j, "dimension"), "dimension");
  mesh.cells = get_as<std::vector<std::vector<int>>>(require(j, "cells"), "cells");
  if (auto it = j.find("coordinates"); it != j.end() && !it->is_null()) {
    mesh.coordinates = get_as<std::vector<std::vector<double>>>(*it, "coordinates");
  }
  if (auto it = j.find("edge_lengths_sq"); it != j.end() && !it->is_null()) {
    if (!it->is_array()) throw InvalidMesh("edge_lengths_sq must be an array");
    for (const json& e : *it) {
      const auto v = get_as<std::vector<int>>(require(e, "v"), "edge vertices");
      if (v.size() != 2) throw InvalidMesh("edge entry needs exactly two vertices");
      mesh.edge_lengths_sq.push_back({v[0], v[1], get_as<double>(require(e, "L2"), "L2")});
    }
  }
  if (!mesh.coordinates && mesh.edge_lengths_sq.empty()) {
    throw InvalidMesh("mesh needs coordinates or edge_lengths_sq");
  }
  return mesh;
}

json mesh_to_json(const MeshData& mesh) {
  json j;
  j["dimension"] = mesh.dimension;
  if (mesh.coordinates) j["coordinates"] = *mesh.coordinates;
  j["cells"] = mesh.cells;
  if (!mesh.edge_lengths_sq.empty()) {
    json edges = json::array();
    for (const EdgeLengthSq& e : mesh.edge_lengths_sq) {
      edges.push_back({{"v", {e.a, e.b}}, {"L2", e.value}});
    }
    j["edge_lengths_sq"] = std::move(edges);
  }
  return j;
}

MeshData read_mesh(std::istream& in) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidMesh(std::string("malformed JSON: ") + e.what());
  }
  return mesh_from_json(j);
}

MeshData read_mesh_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidMesh("cannot open " + path.string());
  return read_mesh(in);
}

void write_mesh(std::ostream& out, const MeshData& mesh) { out << mesh_to_json(mesh).dump() << '\n'; }

void write_mesh_file(const std::filesystem::path& path, const MeshData& mesh) {
  std::ofstream out(path);
  if (!out) throw UnsupportedRequest("cannot write " + path.string());
  write_mesh(out, mesh);
}

Cochain cochain_from_json(const json& j) {
  Cochain w;
  const auto lattice = get_as<std::string>(require(j, "lattice"), "lattice");
  if (lattice == "simplicial") {
    w.lattice = Lattice::simplicial;
  } else if (lattice == "dual") {
    w.lattice = Lattice::dual;
  } else {
    throw UnsupportedRequest("lattice must be 'simplicial' or 'dual'");
  }
  w.degree = get_as<int>(require(j, "degree"), "degree");
  w.values = get_as<std::vector<double>>(require(j, "values"), "values");
  return w;
}

json cochain_to_json(const Cochain& w) {
  return {{"lattice", to_string(w.lattice)}, {"degree", w.degree}, {"values", w.values}};
}

ReportTarget parse_report_target(const std::string& name) {
  if (name == "hinges") return ReportTarget::hinges;
  if (name == "dual-edges") return ReportTarget::dual_edges;
  if (name == "edges") return ReportTarget::edges;
  if (name == "vertices") return ReportTarget::vertices;
  if (name == "dual-vertices") return ReportTarget::dual_vertices;
  throw UnsupportedRequest("unknown target '" + name + "'");
}

const char* to_string(ReportTarget t) {
  switch (t) {
    case ReportTarget::hinges:
      return "hinges";
    case ReportTarget::dual_edges:
      return "dual-edges";
    case ReportTarget::edges:
      return "edges";
    case ReportTarget::vertices:
      return "vertices";
    case ReportTarget::dual_vertices:
      return "dual-vertices";
  }
  return "?";
}

void write_report_csv(std::ostream& out, const MetricComplex& m, const CurvatureReport& r,
                      ReportTarget target, bool normalized) {
  require_target(r, target);
  if (target == ReportTarget::hinges) {
    out << "index,kind,vertices,boundary,volume,dual_volume,hybrid_volume,deficit,sectional,value\n";
    for (const HingeRecord& h : r.hinges) {
      out << h.id.index << ",hinge," << labels(m, h.id) << ',' << (h.boundary ? 1 : 0) << ','
          << format_number(h.volume) << ',' << format_number(h.dual_volume) << ','
          << format_number(h.hybrid_volume) << ',' << opt(h.deficit) << ',' << opt(h.sectional)
          << ',' << opt(normalized ? h.riemann_normalized : h.riemann) << '\n';
    }
    return;
  }
  out << "index,kind,vertices,boundary,volume,dual_volume,hybrid_volume,value\n";
  for (const ElementRecord& e : records(r, target)) {
    out << e.id.index << ',' << to_string(target) << ',' << labels(m, e.id) << ','
        << (e.boundary ? 1 : 0) << ',' << format_number(e.volume) << ','
        << format_number(e.dual_volume) << ',' << format_number(e.hybrid_volume) << ','
        << opt(normalized ? e.value_normalized : e.value) << '\n';
  }
}

json report_to_json(const MetricComplex& m, const CurvatureReport& r, ReportTarget target,
                    bool normalized) {
  require_target(r, target);
  json j;
  j["dimension"] = r.dimension;
  j["action"] = r.action;
  j["orientation_factor"] = r.orientation_factor;
  j["normalized"] = normalized;
  json rows = json::array();
  if (target == ReportTarget::hinges) {
    for (const HingeRecord& h : r.hinges) {
      rows.push_back({{"index", h.id.index},
                      {"vertices", std::vector<int>(m.complex().vertices(h.id).begin(),
                                                    m.complex().vertices(h.id).end())},
                      {"boundary", h.boundary},
                      {"volume", h.volume},
                      {"dual_volume", h.dual_volume},
                      {"hybrid_volume", h.hybrid_volume},
                      {"deficit", opt_json(h.deficit)},
                      {"sectional", opt_json(h.sectional)},
                      {"value", opt_json(normalized ? h.riemann_normalized : h.riemann)}});
    }
  } else {
    for (const ElementRecord& e : records(r, target)) {
      rows.push_back({{"index", e.id.index},
                      {"vertices", std::vector<int>(m.complex().vertices(e.id).begin(),
                                                    m.complex().vertices(e.id).end())},
                      {"boundary", e.boundary},
                      {"volume", e.volume},
                      {"dual_volume", e.dual_volume},
                      {"hybrid_volume", e.hybrid_volume},
                      {"value", opt_json(normalized ? e.value_normalized : e.value)}});
    }
  }
  j[to_string(target)] = std::move(rows);
  return j;
}

}  // namespace pfcurv
