#pragma once

#include <rankone/common.hpp>
#include <rankone/grid.hpp>

#include <string>
#include <vector>

namespace rankone::io {

/// "%.17g" with a guard against non-finite values; lowercase exponent.
std::string format_double(double v);

/// Vector files: comment header carrying the grid, then t,x,re,im rows.
void write_vector_csv(const std::string& path, const GridVector& v);
GridVector read_vector_csv(const std::string& path);

/// Minimal JSON emitter with caller-controlled field order and 17-significant
/// digit numbers, so identical inputs produce byte-identical output.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array(const std::string& key = {});
  JsonWriter& end_array();
  JsonWriter& key(const std::string& k);
  JsonWriter& value(double v);
  JsonWriter& value(int v);
  JsonWriter& value(bool v);
  JsonWriter& value(const std::string& v);
  JsonWriter& null_value();
  JsonWriter& field(const std::string& k, double v) { return key(k).value(v); }
  JsonWriter& field(const std::string& k, int v) { return key(k).value(v); }
  JsonWriter& field(const std::string& k, bool v) { return key(k).value(v); }
  JsonWriter& field(const std::string& k, const std::string& v) { return key(k).value(v); }
  JsonWriter& field(const std::string& k, const char* v) { return key(k).value(std::string(v)); }
  JsonWriter& complex_field(const std::string& k, Complex v);

  const std::string& str() const { return out_; }

 private:
  struct Frame {
    bool array;
    int count;
  };
  void item_prefix();
  std::string out_;
  std::vector<Frame> stack_;
  bool pending_value_ = false;
};

}  // namespace rankone::io
