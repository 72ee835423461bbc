// Text and JSON renderings of tables, age listings and comparison results,
// shared by the library surface and the command-line tool.
#pragma once

#include "hkr.hpp"
#include "stringy.hpp"

#include <optional>
#include <string>

namespace orb {

std::string table_text(const StringySpace& sp, const ProductTable& t, Theory theory);
std::string table_json(const StringySpace& sp, const ProductTable& t, Theory theory);

std::string ages_text(const OrbifoldDatum& d);
std::string ages_json(const OrbifoldDatum& d);

std::string compare_text(const std::vector<CheckReport>& reports, const std::optional<ScalingResult>& scalings);
std::string compare_json(const std::vector<CheckReport>& reports, const std::optional<ScalingResult>& scalings);

} // namespace orb
