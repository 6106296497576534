#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "polmax/fields.hpp"
#include "polmax/spectrum_modes.hpp"

namespace polmax {

class FieldIoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// "PMF1", name, x3 layout tag, (n1, n2, n3_plus, n3_minus), (l1, l2, l3_plus, l3_minus),
// then interleaved (re, im) samples in (j1, j2, m3) order, lower block first; all little-endian
struct FieldFile {
  std::string name;
  X3Kind layout = X3Kind::Nodal;
  ScalarField field;
};

void write_field_file(const std::string& path, const FieldFile& f);
FieldFile read_field_file(const std::string& path);
std::vector<unsigned char> encode_field_file(const FieldFile& f);
FieldFile decode_field_file(const std::vector<unsigned char>& bytes, const std::string& origin = "<memory>");

struct NamedField {
  std::string name;
  const ScalarField* field;
};

// legacy ASCII STRUCTURED_POINTS with real and imaginary scalars per field
void write_vtk(const std::string& path, const std::vector<NamedField>& fields, const std::string& title);

void write_spectrum_csv(std::ostream& os, const std::vector<SpectrumEntry>& entries);

// JSON text with every double printed to 17 significant digits
std::string json_text(const nlohmann::ordered_json& j, int indent = 2);
void write_json(const std::string& path, const nlohmann::ordered_json& j);

}  // namespace polmax
