#pragma once

#include <json.hpp>

#include <iosfwd>
#include <string>

#include "fracseries/irregular_singularity.hpp"
#include "fracseries/regular_singularity.hpp"

namespace fracseries::io {

inline constexpr const char* kSchemaTag = "frac-series/1";

nlohmann::json series_to_json(const series::AlphaSeries& s);
series::AlphaSeries series_from_json(const nlohmann::json& j);

/// CSV rows "n,re,im" with a header line.
void write_series_csv(std::ostream& os, const series::AlphaSeries& s);

/// {alpha, kind, A_mats: [[[re,im],...],...], ...} -> coefficient series.
/// `kind` parses to the solver kind ("rl" | "caputo", default rl).
regular::MatrixCoefficientSeries system_from_json(const nlohmann::json& j, cauchy::Kind* kind);

nlohmann::json frobenius_to_json(const regular::FrobeniusSolution& sol, double residual);
nlohmann::json spectrum_to_json(const regular::SpectrumReport& rep);
nlohmann::json diophantine_to_json(const irregular::DiophantineReport& rep);

/// Decimal with 17 significant digits (round-trips through text).
std::string format_double(double v);

/// Write via a temp file in the same directory, then rename.
void atomic_write(const std::string& path, const std::string& content);

const char* verdict_name(irregular::DiophantineVerdict v);

}  // namespace fracseries::io
