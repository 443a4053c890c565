#include "cyclo/json_io.hpp"

#include <cstdio>
#include <sstream>

namespace cyclo {

Json complex_json(const Complex& z, int digits) {
  return Json{{"re", decimal_string(z.re, digits)}, {"im", decimal_string(z.im, digits)}};
}

std::string double_str(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

Json cval_json(const CVal& v, int digits) {
  Json j = complex_json(v.value, digits);
  j["err"] = double_str(v.err);
  j["certified"] = v.certified;
  return j;
}

namespace {

Json factors_json(const std::vector<RationalFactor>& v) {
  Json a = Json::array();
  for (const auto& f : v) a.push_back({{"point", f.point.str()}, {"mult", f.mult}});
  return a;
}

std::vector<RationalFactor> factors_from_json(const Json& j, const char* key) {
  std::vector<RationalFactor> out;
  if (!j.contains(key)) return out;
  if (!j[key].is_array()) fail(ErrorKind::Parse, std::string(key) + " must be an array");
  for (const auto& e : j[key]) {
    if (!e.is_object() || !e.contains("point") || !e["point"].is_string())
      fail(ErrorKind::Parse, std::string("each entry of ") + key + " needs a point string");
    RationalFactor f;
    f.point = GaussianRational::parse(e["point"].get<std::string>());
    if (e.contains("mult")) {
      if (!e["mult"].is_number_integer()) fail(ErrorKind::Parse, "mult must be an integer");
      f.mult = e["mult"].get<int>();
    }
    out.push_back(f);
  }
  return out;
}

}  // namespace

Json rational_json(const FactoredRational& r) {
  return Json{{"scale", r.scale.str()}, {"zeros", factors_json(r.zeros)},
              {"poles", factors_json(r.poles)}};
}

FactoredRational rational_from_json(const Json& j) {
  if (!j.is_object()) fail(ErrorKind::Parse, "rational function must be a JSON object");
  FactoredRational r;
  if (j.contains("scale")) {
    if (!j["scale"].is_string()) fail(ErrorKind::Parse, "scale must be a string");
    r.scale = GaussianRational::parse(j["scale"].get<std::string>());
  }
  r.zeros = factors_from_json(j, "zeros");
  r.poles = factors_from_json(j, "poles");
  r.validate();
  return r;
}

FactoredRational parse_rational_text(const std::string& text) {
  auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '{') {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(ErrorKind::Parse, "rational function JSON does not parse");
    return rational_from_json(j);
  }
  return FactoredRational::parse(text);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" []");
    auto e = item.find_last_not_of(" []");
    if (b == std::string::npos) continue;
    item = item.substr(b, e - b + 1);
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      fail(ErrorKind::Parse, "bad integer '" + item + "'");
    }
  }
  return out;
}

std::vector<RootOfUnity> parse_root_list(const std::string& text) {
  std::vector<RootOfUnity> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" []");
    if (b == std::string::npos) continue;
    auto e = item.find_last_not_of(" []");
    out.push_back(RootOfUnity::parse(item.substr(b, e - b + 1)));
  }
  return out;
}

}  // namespace cyclo
