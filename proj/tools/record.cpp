#include "record.hpp"

#include <sstream>
#include <stdexcept>

namespace cli {

namespace {

template <typename T>
void put_optional(nlohmann::json& j, const char* key,
                  const std::optional<T>& v) {
  if (v) j[key] = *v;
}

template <typename T>
void get_optional(const nlohmann::json& j, const char* key,
                  std::optional<T>& v) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) {
    v.reset();
  } else {
    v = it->get<T>();
  }
}

}  // namespace

void to_json(nlohmann::json& j, const ResultRecord& r) {
  j = nlohmann::json{{"a", r.a}, {"c", r.c}, {"d", r.d}, {"l", r.l},
                     {"n", r.n}};
  put_optional(j, "E", r.energy);
  put_optional(j, "N", r.depth);
  put_optional(j, "r0", r.r0);
  j["precision"] = r.precision;
  j["E_low"] = r.e_low;
  j["E_up"] = r.e_up;
  put_optional(j, "nu_low", r.nu_low);
  put_optional(j, "nu_up", r.nu_up);
  put_optional(j, "lambda", r.lambda);
  j["elapsed_ms"] = r.elapsed_ms;
}

void from_json(const nlohmann::json& j, ResultRecord& r) {
  j.at("a").get_to(r.a);
  j.at("c").get_to(r.c);
  j.at("d").get_to(r.d);
  j.at("l").get_to(r.l);
  j.at("n").get_to(r.n);
  get_optional(j, "E", r.energy);
  get_optional(j, "N", r.depth);
  get_optional(j, "r0", r.r0);
  j.at("precision").get_to(r.precision);
  j.at("E_low").get_to(r.e_low);
  j.at("E_up").get_to(r.e_up);
  get_optional(j, "nu_low", r.nu_low);
  get_optional(j, "nu_up", r.nu_up);
  get_optional(j, "lambda", r.lambda);
  j.at("elapsed_ms").get_to(r.elapsed_ms);
}

Format parse_format(const std::string& name) {
  if (name == "json") return Format::kJson;
  if (name == "csv") return Format::kCsv;
  if (name == "text") return Format::kText;
  throw std::invalid_argument("unknown format '" + name + "'");
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out += ',';
    out += csv_escape(fields[i]);
  }
  return out;
}

std::vector<std::string> csv_columns(const ResultRecord& r) {
  std::vector<std::string> cols{"a", "c", "d", "l", "n"};
  if (r.energy) cols.push_back("E");
  if (r.depth) cols.push_back("N");
  if (r.r0) cols.push_back("r0");
  cols.insert(cols.end(), {"precision", "E_low", "E_up"});
  if (r.nu_low) cols.push_back("nu_low");
  if (r.nu_up) cols.push_back("nu_up");
  if (r.lambda) cols.push_back("lambda");
  cols.push_back("elapsed_ms");
  return cols;
}

std::vector<std::string> csv_values(const ResultRecord& r) {
  std::vector<std::string> v{r.a, r.c, std::to_string(r.d),
                             std::to_string(r.l), std::to_string(r.n)};
  if (r.energy) v.push_back(*r.energy);
  if (r.depth) v.push_back(std::to_string(*r.depth));
  if (r.r0) v.push_back(*r.r0);
  v.insert(v.end(), {std::to_string(r.precision), r.e_low, r.e_up});
  if (r.nu_low) v.push_back(*r.nu_low);
  if (r.nu_up) v.push_back(*r.nu_up);
  if (r.lambda) v.push_back(*r.lambda);
  v.push_back(std::to_string(r.elapsed_ms));
  return v;
}

std::string text_block(const ResultRecord& r) {
  std::ostringstream os;
  os << "state      a=" << r.a << " c=" << r.c << " d=" << r.d << " l=" << r.l
     << " n=" << r.n << " (k=" << r.d + 2 * r.l << ")\n";
  if (r.energy) os << "E          " << *r.energy << "\n";
  if (r.depth) os << "N          " << *r.depth << "\n";
  if (r.r0) os << "r0         " << *r.r0 << "\n";
  os << "bounds     [" << r.e_low << ", " << r.e_up << "]\n";
  if (r.nu_low) os << "nu_low     " << *r.nu_low << "\n";
  if (r.nu_up) os << "nu_up      " << *r.nu_up << "\n";
  if (r.lambda) os << "lambda     " << *r.lambda << "\n";
  os << "precision  " << r.precision << " digits\n";
  os << "elapsed    " << r.elapsed_ms << " ms\n";
  return os.str();
}

std::string render(const ResultRecord& r, Format format) {
  switch (format) {
    case Format::kJson:
      return nlohmann::json(r).dump() + "\n";
    case Format::kCsv:
      return csv_line(csv_columns(r)) + "\n" + csv_line(csv_values(r)) + "\n";
    case Format::kText:
      return text_block(r);
  }
  return {};
}

}  // namespace cli
