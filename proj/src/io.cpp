#include "fracalc/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace fracalc {
namespace io {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

nlohmann::json tail_to_json(const TailModel& t) {
  return {{"kind", to_string(t.kind)},
          {"rate", t.rate},
          {"coeff", t.coeff},
          {"valid_from", t.valid_from}};
}

TailModel tail_from_json(const nlohmann::json& j) {
  TailModel t;
  t.kind = tail_kind_from_string(j.at("kind").get<std::string>());
  t.rate = j.at("rate").get<double>();
  t.coeff = j.at("coeff").get<double>();
  t.valid_from = j.at("valid_from").get<double>();
  return t;
}

void write_sidecar(const std::string& csv_path, const nlohmann::json& j) {
  std::ofstream out(csv_path + ".json");
  if (!out) throw std::runtime_error("cannot write " + csv_path + ".json");
  out << j.dump(2) << "\n";
}

}  // namespace

std::string to_string(TailKind k) {
  switch (k) {
    case TailKind::Zero: return "zero";
    case TailKind::Constant: return "constant";
    case TailKind::ExpDecay: return "exp_decay";
    case TailKind::PowerDecay: return "power_decay";
  }
  return "zero";
}

TailKind tail_kind_from_string(const std::string& name) {
  for (TailKind k : {TailKind::Zero, TailKind::Constant, TailKind::ExpDecay,
                     TailKind::PowerDecay})
    if (to_string(k) == name) return k;
  throw std::invalid_argument("unknown tail kind: " + name);
}

void write_grid(const std::string& csv_path, const GridFunction& f) {
  std::ofstream out(csv_path);
  if (!out) throw std::runtime_error("cannot write " + csv_path);
  out << "x,value\n";
  for (std::size_t i = 0; i < f.size(); ++i)
    out << fmt(f.node_x(i)) << "," << fmt(f.value(i)) << "\n";
  write_sidecar(csv_path,
                {{"schema", 1},
                 {"kind", "grid_function"},
                 {"x0", f.x0()},
                 {"h", f.h()},
                 {"n", f.size()},
                 {"right_tail", tail_to_json(f.tail())},
                 {"left_tail", tail_to_json(f.left_tail())}});
}

GridFunction read_grid(const std::string& csv_path) {
  std::ifstream meta_in(csv_path + ".json");
  if (!meta_in)
    throw std::runtime_error("cannot read " + csv_path + ".json");
  nlohmann::json meta = nlohmann::json::parse(meta_in);
  if (meta.at("schema").get<int>() != 1)
    throw std::runtime_error("unsupported schema in " + csv_path + ".json");

  std::ifstream in(csv_path);
  if (!in) throw std::runtime_error("cannot read " + csv_path);
  std::string line;
  std::getline(in, line);  // header
  std::vector<double> values;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw std::runtime_error("malformed row in " + csv_path);
    values.push_back(std::stod(line.substr(comma + 1)));
  }
  if (values.size() != meta.at("n").get<std::size_t>())
    throw std::runtime_error("row count mismatch in " + csv_path);
  return GridFunction(meta.at("x0").get<double>(), meta.at("h").get<double>(),
                      std::move(values), tail_from_json(meta.at("right_tail")),
                      tail_from_json(meta.at("left_tail")));
}

void write_field(const std::string& csv_path, const ExtensionField& field) {
  std::ofstream out(csv_path);
  if (!out) throw std::runtime_error("cannot write " + csv_path);
  out << "x,t,value\n";
  for (std::size_t j = 0; j < field.nt; ++j)
    for (std::size_t i = 0; i < field.nx; ++i)
      out << fmt(field.x(i)) << "," << fmt(field.t(j)) << ","
          << fmt(field.at(i, j)) << "\n";
  write_sidecar(csv_path, {{"schema", 1},
                           {"kind", "extension_field"},
                           {"alpha", field.alpha},
                           {"x0", field.x0},
                           {"hx", field.hx},
                           {"t0", field.t0},
                           {"ht", field.ht},
                           {"nx", field.nx},
                           {"nt", field.nt}});
}

void write_weight(const std::string& csv_path, const GridFunction& w,
                  double p, double q) {
  std::ofstream out(csv_path);
  if (!out) throw std::runtime_error("cannot write " + csv_path);
  out << "x,weight\n";
  for (std::size_t i = 0; i < w.size(); ++i)
    out << fmt(w.node_x(i)) << "," << fmt(w.value(i)) << "\n";
  write_sidecar(csv_path, {{"schema", 1},
                           {"kind", "weight"},
                           {"p", p},
                           {"q", q},
                           {"x0", w.x0()},
                           {"h", w.h()},
                           {"n", w.size()}});
}

}  // namespace io
}  // namespace fracalc
