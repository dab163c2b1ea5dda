#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "isospectra/floquet.hpp"
#include "isospectra/invariants.hpp"
#include "isospectra/minors.hpp"
#include "isospectra/solver.hpp"

namespace isospectra::cli {

// Insertion-ordered so emitted reports read in the order they are built.
using Json = nlohmann::ordered_json;

// Whole-file JSON load with the path worked into parse errors.
Json load_json_file(const std::string& path);

// Matrix files. JSON shape: {"n": int, "a": [[entry, ...], ...]} row-major,
// entries as rational strings ("p/q", integer, or decimal literal) or JSON
// integers; non-integer JSON numbers are rejected to keep inputs exact.
// CSV shape: n lines of n comma-separated literals, parsed the same way.
Json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const Json& j);
RationalMatrix matrix_from_csv(const std::string& text);
// Dispatches on extension, falling back to a content sniff.
RationalMatrix load_matrix(const std::string& path);

// Witness files: {"D": [{"re":, "im":}...], "residual":, "seed":, "mode":}.
Json witness_to_json(const Witness& w);
Witness witness_from_json(const Json& j);

// Potential files: {"periods": [q1,...,qd],
//                   "values": [{"n": [n1,...,nd], "re":, "im":}...]}.
// Every fundamental-domain site must appear exactly once.
Json potential_to_json(const Potential& v);
Potential potential_from_json(const Json& j);
Potential load_potential(const std::string& path);

// Perturbation tables: {"n": int, "cells": [{"i":, "J": [...], "a": "p/q"}...]}
// with J a list of 1-based variable indices.
Json table_to_json(const PerturbationTable& t);
PerturbationTable table_from_json(const Json& j);

// One CSV row per grid point: z coordinates then eigenvalues, each complex
// value as a re/im column pair.
std::string band_samples_csv(const std::vector<BandSample>& rows);

// The one output shape every command emits. Verdicts use the vocabulary
// "rigid" / "witness" / "inconclusive" ("pass" / "fail" for the selftest).
struct Report {
  std::string command;
  Json inputs = Json::object();
  std::string verdict;
  Json certificates = Json::array();
  long long timing_ms = 0;
  std::uint64_t seed = 0;
};

Json report_to_json(const Report& r);

}  // namespace isospectra::cli
