#include <rankone/io.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace rankone::io {

std::string format_double(double v) {
  if (!std::isfinite(v)) {
    throw std::runtime_error("refusing to serialize a non-finite number");
  }
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_vector_csv(const std::string& path, const GridVector& v) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  const auto& g = *v.grid;
  out << "# rankone-vector v1\n";
  out << "# tmin=" << format_double(g.t_min()) << " tmax=" << format_double(g.t_max())
      << " n=" << g.size() << " version=" << kVersion << "\n";
  out << "t,x,re,im\n";
  for (int j = 0; j < g.size(); ++j) {
    out << format_double(g.t(j)) << ',' << format_double(g.x(j)) << ','
        << format_double(v[j].real()) << ',' << format_double(v[j].imag()) << "\n";
  }
}

GridVector read_vector_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  double tmin = 0, tmax = 0;
  int n = 0;
  bool have_grid = false;
  std::vector<Complex> values;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto pos = line.find("tmin=");
      if (pos != std::string::npos) {
        if (std::sscanf(line.c_str() + pos, "tmin=%lf tmax=%lf n=%d", &tmin, &tmax, &n) == 3) {
          have_grid = true;
        }
      }
      continue;
    }
    if (line.rfind("t,", 0) == 0) continue;  // column header
    std::istringstream row(line);
    std::string cell;
    double cols[4] = {0, 0, 0, 0};
    int c = 0;
    while (std::getline(row, cell, ',') && c < 4) cols[c++] = std::stod(cell);
    if (c != 4) throw std::runtime_error("malformed row in " + path + ": " + line);
    values.emplace_back(cols[2], cols[3]);
  }
  if (!have_grid) throw std::runtime_error("missing grid header in " + path);
  if (static_cast<int>(values.size()) != n) {
    throw std::runtime_error("row count does not match the grid header in " + path);
  }
  return GridVector(LogGrid::make(tmin, tmax, n), std::move(values));
}

void JsonWriter::item_prefix() {
  if (pending_value_) {
    pending_value_ = false;
    return;
  }
  if (!stack_.empty() && stack_.back().count++ > 0) out_ += ',';
}

JsonWriter& JsonWriter::begin_object() {
  item_prefix();
  out_ += '{';
  stack_.push_back({false, 0});
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  out_ += '}';
  stack_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::begin_array(const std::string& k) {
  if (!k.empty()) key(k);
  item_prefix();
  out_ += '[';
  stack_.push_back({true, 0});
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  out_ += ']';
  stack_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::key(const std::string& k) {
  if (!stack_.empty() && stack_.back().count++ > 0) out_ += ',';
  out_ += '"';
  out_ += k;
  out_ += "\":";
  pending_value_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(double v) {
  item_prefix();
  out_ += format_double(v);
  return *this;
}

JsonWriter& JsonWriter::value(int v) {
  item_prefix();
  out_ += std::to_string(v);
  return *this;
}

JsonWriter& JsonWriter::value(bool v) {
  item_prefix();
  out_ += v ? "true" : "false";
  return *this;
}

JsonWriter& JsonWriter::value(const std::string& v) {
  item_prefix();
  out_ += '"';
  for (char ch : v) {
    if (ch == '"' || ch == '\\') out_ += '\\';
    out_ += ch;
  }
  out_ += '"';
  return *this;
}

JsonWriter& JsonWriter::null_value() {
  item_prefix();
  out_ += "null";
  return *this;
}

JsonWriter& JsonWriter::complex_field(const std::string& k, Complex v) {
  key(k);
  begin_object();
  field("re", v.real());
  field("im", v.imag());
  end_object();
  return *this;
}

}  // namespace rankone::io
