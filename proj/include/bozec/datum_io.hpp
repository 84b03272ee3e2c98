#pragma once
// Datum files: JSON documents carrying the index records, the Cartan matrix and
// an optional anchor weight.

#include "bozec/cartan.hpp"

#include <stdexcept>
#include <string>

namespace bozec {

struct DatumError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DatumFile {
  CartanDatum datum;
  std::optional<std::vector<long>> anchor_weight; // coroot values
};

DatumFile load_datum_file(const std::string& path);
DatumFile parse_datum_json(const std::string& text);

} // namespace bozec
