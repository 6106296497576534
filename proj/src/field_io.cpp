#include "polmax/field_io.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ostream.h>

namespace polmax {

namespace {

constexpr char kMagic[4] = {'P', 'M', 'F', '1'};

void put_u32(std::vector<unsigned char>& out, std::uint32_t v) {
  for (int b = 0; b < 4; ++b) out.push_back(static_cast<unsigned char>(v >> (8 * b)));
}

void put_f64(std::vector<unsigned char>& out, double d) {
  std::uint64_t v;
  std::memcpy(&v, &d, sizeof v);
  for (int b = 0; b < 8; ++b) out.push_back(static_cast<unsigned char>(v >> (8 * b)));
}

void put_str(std::vector<unsigned char>& out, const std::string& s) {
  put_u32(out, static_cast<std::uint32_t>(s.size()));
  out.insert(out.end(), s.begin(), s.end());
}

struct Reader {
  const std::vector<unsigned char>& buf;
  std::string origin;
  std::size_t pos = 0;

  void need(std::size_t n, const char* what) {
    if (buf.size() - pos < n) throw FieldIoError(fmt::format("{}: truncated field file while reading {}", origin, what));
  }
  std::uint32_t u32(const char* what) {
    need(4, what);
    std::uint32_t v = 0;
    for (int b = 0; b < 4; ++b) v |= static_cast<std::uint32_t>(buf[pos + b]) << (8 * b);
    pos += 4;
    return v;
  }
  double f64(const char* what) {
    need(8, what);
    std::uint64_t v = 0;
    for (int b = 0; b < 8; ++b) v |= static_cast<std::uint64_t>(buf[pos + b]) << (8 * b);
    pos += 8;
    double d;
    std::memcpy(&d, &v, sizeof d);
    return d;
  }
  std::string str(const char* what) {
    const std::uint32_t n = u32(what);
    if (n > 4096) throw FieldIoError(fmt::format("{}: implausible {} length {}", origin, what, n));
    need(n, what);
    std::string s(buf.begin() + static_cast<std::ptrdiff_t>(pos), buf.begin() + static_cast<std::ptrdiff_t>(pos + n));
    pos += n;
    return s;
  }
};

}  // namespace

std::vector<unsigned char> encode_field_file(const FieldFile& f) {
  const Grid& g = f.field.grid;
  if (f.field.block != Block::Both || f.field.samples.size() != g.size())
    throw FieldIoError("field files hold samples on both blocks");
  std::vector<unsigned char> out(kMagic, kMagic + 4);
  put_str(out, f.name);
  put_str(out, to_string(f.layout));
  for (int n : {g.n1, g.n2, g.n3_plus, g.n3_minus}) put_u32(out, static_cast<std::uint32_t>(n));
  for (double l : {g.domain.l1, g.domain.l2, g.domain.l3_plus, g.domain.l3_minus}) put_f64(out, l);
  out.reserve(out.size() + 16 * f.field.samples.size());
  for (const cplx& v : f.field.samples) {
    put_f64(out, v.real());
    put_f64(out, v.imag());
  }
  return out;
}

FieldFile decode_field_file(const std::vector<unsigned char>& bytes, const std::string& origin) {
  Reader r{bytes, origin};
  r.need(4, "magic");
  if (std::memcmp(bytes.data(), kMagic, 4) != 0) throw FieldIoError(origin + ": bad magic, expected PMF1");
  r.pos = 4;
  FieldFile f;
  f.name = r.str("component name");
  const std::string layout = r.str("block layout");
  try {
    f.layout = x3kind_from_string(layout);
  } catch (const std::exception&) {
    throw FieldIoError(fmt::format("{}: unknown block layout '{}'", origin, layout));
  }
  int n[4];
  for (int& v : n) v = static_cast<int>(r.u32("grid dims"));
  DomainSpec d;
  d.l1 = r.f64("l1");
  d.l2 = r.f64("l2");
  d.l3_plus = r.f64("l3_plus");
  d.l3_minus = r.f64("l3_minus");
  Grid g;
  try {
    g = build_grid(d, n[0], n[1], n[2]);
  } catch (const GeometryError& e) {
    throw FieldIoError(fmt::format("{}: invalid header: {}", origin, e.what()));
  }
  if (g.n3_minus != n[3])
    throw FieldIoError(fmt::format("{}: n3_minus {} inconsistent with the block lengths", origin, n[3]));
  const std::size_t count = g.size();
  if (bytes.size() - r.pos != 16 * count)
    throw FieldIoError(fmt::format("{}: payload is {} bytes, expected {}", origin, bytes.size() - r.pos, 16 * count));
  f.field = ScalarField::zeros(g);
  for (std::size_t q = 0; q < count; ++q) {
    const double re = r.f64("sample");
    const double im = r.f64("sample");
    f.field.samples[q] = {re, im};
  }
  return f;
}

void write_field_file(const std::string& path, const FieldFile& f) {
  const auto bytes = encode_field_file(f);
  std::ofstream os(path, std::ios::binary);
  if (!os) throw FieldIoError("cannot open " + path + " for writing");
  os.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!os) throw FieldIoError("write failed for " + path);
}

FieldFile read_field_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw FieldIoError("cannot open " + path);
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  return decode_field_file(bytes, path);
}

void write_vtk(const std::string& path, const std::vector<NamedField>& fields, const std::string& title) {
  if (fields.empty()) throw FieldIoError("nothing to export");
  const Grid& g = fields.front().field->grid;
  std::ofstream os(path);
  if (!os) throw FieldIoError("cannot open " + path + " for writing");
  fmt::print(os, "# vtk DataFile Version 3.0\n{}\nASCII\nDATASET STRUCTURED_POINTS\n", title);
  fmt::print(os, "DIMENSIONS {} {} {}\n", g.n1, g.n2, g.n3());
  fmt::print(os, "ORIGIN 0 0 {:.17g}\n", g.x3(0));
  fmt::print(os, "SPACING {:.17g} {:.17g} {:.17g}\n", g.dx1(), g.dx2(), g.h);
  fmt::print(os, "POINT_DATA {}\n", g.size());
  for (const NamedField& nf : fields)
    for (int part = 0; part < 2; ++part) {
      fmt::print(os, "SCALARS {}_{} double 1\nLOOKUP_TABLE default\n", nf.name, part == 0 ? "re" : "im");
      for (int m = 0; m < g.n3(); ++m)
        for (int j2 = 0; j2 < g.n2; ++j2)
          for (int j1 = 0; j1 < g.n1; ++j1) {
            const cplx v = nf.field->at(j1, j2, m);
            fmt::print(os, "{:.17g}\n", part == 0 ? v.real() : v.imag());
          }
    }
}

void write_spectrum_csv(std::ostream& os, const std::vector<SpectrumEntry>& entries) {
  os << "value,k1,k2,k3,provenance\n";
  for (const SpectrumEntry& e : entries)
    fmt::print(os, "{:.17g},{},{},{},{}\n", e.value, e.k1, e.k2, e.k3, to_string(e.provenance));
}

namespace {

void emit(std::string& out, const nlohmann::ordered_json& j, int indent, int depth) {
  const std::string pad = indent > 0 ? "\n" + std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
  const std::string close = indent > 0 ? "\n" + std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
  switch (j.type()) {
    case nlohmann::ordered_json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        if (!first) out += ',';
        first = false;
        out += pad;
        out += nlohmann::ordered_json(k).dump();
        out += indent > 0 ? ": " : ":";
        emit(out, v, indent, depth + 1);
      }
      out += close + '}';
      return;
    }
    case nlohmann::ordered_json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ',';
        first = false;
        out += pad;
        emit(out, v, indent, depth + 1);
      }
      out += close + ']';
      return;
    }
    case nlohmann::ordered_json::value_t::number_float: {
      const double d = j.get<double>();
      out += std::isfinite(d) ? fmt::format("{:.17g}", d) : "null";
      return;
    }
    default: out += j.dump();
  }
}

}  // namespace

std::string json_text(const nlohmann::ordered_json& j, int indent) {
  std::string out;
  emit(out, j, indent, 0);
  out += '\n';
  return out;
}

void write_json(const std::string& path, const nlohmann::ordered_json& j) {
  std::ofstream os(path);
  if (!os) throw FieldIoError("cannot open " + path + " for writing");
  os << json_text(j);
}

}  // namespace polmax
