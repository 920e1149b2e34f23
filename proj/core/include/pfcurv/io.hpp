// Copyright 2026 The pfcurv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "pfcurv/curvature.hpp"
#include "pfcurv/dec.hpp"
#include "pfcurv/geometry.hpp"

namespace pfcurv {

/// Mesh JSON:
///   {"dimension": d,
///    "coordinates": [[x, y, ...], ...],                  (optional)
///    "cells": [[i0, ..., id], ...],
///    "edge_lengths_sq": [{"v": [i, j], "L2": value}, ...]} (optional)
/// Numbers are written in the shortest form that reads back to the same
/// double, so write followed by read is bitwise lossless.
MeshData mesh_from_json(const nlohmann::json& j);
nlohmann::json mesh_to_json(const MeshData& mesh);

MeshData read_mesh(std::istream& in);
MeshData read_mesh_file(const std::filesystem::path& path);
void write_mesh(std::ostream& out, const MeshData& mesh);
void write_mesh_file(const std::filesystem::path& path, const MeshData& mesh);

/// Cochain JSON: {"lattice": "simplicial"|"dual", "degree": k, "values": [...]}.
Cochain cochain_from_json(const nlohmann::json& j);
nlohmann::json cochain_to_json(const Cochain& w);

enum class ReportTarget { hinges, dual_edges, edges, vertices, dual_vertices };

/// Parses hinges | dual-edges | edges | vertices | dual-vertices.
ReportTarget parse_report_target(const std::string& name);
const char* to_string(ReportTarget t);

/// CSV, one row per element, sorted by index. Columns:
///   hinges:  index,kind,vertices,boundary,volume,dual_volume,hybrid_volume,deficit,sectional,value
///   others:  index,kind,vertices,boundary,volume,dual_volume,hybrid_volume,value
/// `vertices` lists the labels of the simplicial partner separated by
/// spaces; volume/dual_volume are those of the element itself (so a dual
/// edge has volume |*f|). Undefined values are left empty. Numbers use 17
/// significant digits.
void write_report_csv(std::ostream& out, const MetricComplex& m, const CurvatureReport& r,
                      ReportTarget target, bool normalized);

/// JSON with the global fields (dimension, action, orientation_factor,
/// normalized) and one array for the requested skeleton.
nlohmann::json report_to_json(const MetricComplex& m, const CurvatureReport& r, ReportTarget target,
                              bool normalized);

/// printf("%.17g").
std::string format_number(double x);

}  // namespace pfcurv
