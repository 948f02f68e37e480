#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qsd/circuit.hpp"
#include "qsd/nmr.hpp"
#include "qsd/synth.hpp"

// JSON and text formats for the CLI and golden-file tests. All schemas carry
// a "schema": 1 field; numbers are emitted in full double precision.

namespace qsd {

using Json = nlohmann::json;

Json state_to_json(const CVec& v);
CVec state_from_json(const Json& j);

// A state set is an array of states, each an array of [re, im] pairs.
Json states_to_json(const std::vector<CVec>& states);
std::vector<CVec> states_from_json(const Json& j);

Json matrix_to_json(const CMat& m);
CMat matrix_from_json(const Json& j);

Json arrays_to_json(const std::vector<std::vector<int>>& arrays);
std::vector<std::vector<int>> arrays_from_json(const Json& j);

Json spec_to_json(const DiscriminatorSpec& spec);
DiscriminatorSpec spec_from_json(const Json& j);

Json circuit_to_json(const Circuit& c);

Json record_to_json(const MeasurementRecord& r);
Json records_to_json(const std::vector<MeasurementRecord>& records);

// Basis labels "|00..0>", ..., "|11..1>" in index order (qubit 1 leftmost).
std::vector<std::string> basis_labels(int n_qubits);

// Flat row-major real/imag entry arrays plus basis labels.
Json density_dump(const CMat& rho, int n_qubits);

Json spin_system_to_json(const SpinSystem& sys);
SpinSystem spin_system_from_json(const Json& j);

// Built-in spin systems: "chfbr2-3spin" (the proton/fluorine/carbon system)
// and "crotonic-4spin" (the four-carbon chain). Backed by data/spin_presets.json,
// embedded at build time; an external config with the same layout can be
// loaded through spin_presets_from_json.
SpinSystem spin_system_preset(const std::string& name);
std::vector<std::string> spin_preset_names();
SpinSystem spin_preset_from_config(const Json& config, const std::string& name);

// Line-oriented pulse text: one element per line, e.g.
//   rf 1 pi/2 y
//   jdelay 1 3 pi/2
//   zrot 1 pi/2
// Blank lines and '#' comments are ignored. Angles accept k*pi/m forms
// ("pi", "-pi/2", "3pi/4", "2pi") and plain decimals.
PulseSeq parse_pulse_text(const std::string& text);
std::string format_pulse_text(const PulseSeq& seq);
double parse_angle(const std::string& token);
std::string format_angle(double angle);

// Expected readout tables bundled with the toolkit ("tableI", "tableII").
std::vector<std::vector<int>> expected_table(const std::string& name);
std::vector<std::string> expected_table_names();

Json error_to_json(const Error& e);

}  // namespace qsd
