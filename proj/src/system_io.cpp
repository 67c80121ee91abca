#include "zca/system_io.hpp"

#include <fstream>
#include <sstream>

namespace zca {

using nlohmann::json;

namespace {

Real number(const json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_number()) {
    throw InvalidArgument(where + ": missing numeric field \"" + key + "\"");
  }
  return it->get<Real>();
}

}  // namespace

DiagonalSystem system_from_json(const json& doc) {
  if (!doc.is_object()) throw InvalidArgument("system description must be a JSON object");
  if (doc.contains("builtin")) {
    const auto& b = doc.at("builtin");
    if (!b.is_string()) throw InvalidArgument("\"builtin\" must be a string");
    if (!doc.contains("modes") || !doc.at("modes").is_number_integer()) {
      throw InvalidArgument("builtin systems need an integer \"modes\" count");
    }
    const int n = doc.at("modes").get<int>();
    const std::string name = b.get<std::string>();
    if (name == "heat") return make_heat_system(n);
    if (name == "wave") return make_wave_system(n);
    throw InvalidArgument("unknown builtin system \"" + name + "\" (expected heat or wave)");
  }
  if (!doc.contains("modes") || !doc.at("modes").is_array()) {
    throw InvalidArgument("system description needs a \"modes\" array or a \"builtin\" name");
  }
  std::vector<SpectralMode> modes;
  const auto& arr = doc.at("modes");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = "mode " + std::to_string(i);
    if (!arr[i].is_object()) throw InvalidArgument(where + ": expected an object");
    const Complex lambda(number(arr[i], "lambda_re", where), number(arr[i], "lambda_im", where));
    const Complex c(number(arr[i], "c_re", where), number(arr[i], "c_im", where));
    if (lambda.real() > 0.0) {
      std::ostringstream msg;
      msg << where << ": Re(lambda) = " << lambda.real() << " > 0 is not allowed";
      throw InvalidArgument(msg.str());
    }
    modes.push_back({lambda, c});
  }
  if (modes.empty()) throw InvalidArgument("system has no modes");
  return DiagonalSystem(modes, doc.value("label", std::string{}),
                        doc.value("truncation_note", std::string{}));
}

json system_to_json(const DiagonalSystem& system) {
  json modes = json::array();
  for (Eigen::Index i = 0; i < system.size(); ++i) {
    const Complex l = system.eigenvalues()[i];
    const Complex c = system.coefficients()[i];
    modes.push_back(
        {{"lambda_re", l.real()}, {"lambda_im", l.imag()}, {"c_re", c.real()}, {"c_im", c.imag()}});
  }
  return {{"label", system.label()}, {"truncation_note", system.truncation_note()},
          {"modes", std::move(modes)}};
}

PointMeasure measure_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("atoms") || !doc.at("atoms").is_array()) {
    throw InvalidArgument("measure description needs an \"atoms\" array");
  }
  PointMeasure mu;
  const auto& arr = doc.at("atoms");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = "atom " + std::to_string(i);
    if (!arr[i].is_object()) throw InvalidArgument(where + ": expected an object");
    mu.atoms.push_back({Complex(number(arr[i], "re", where), number(arr[i], "im", where)),
                        number(arr[i], "mass", where)});
  }
  mu.validate();
  return mu;
}

json measure_to_json(const PointMeasure& measure) {
  json atoms = json::array();
  for (const auto& a : measure.atoms) {
    atoms.push_back({{"re", a.location.real()}, {"im", a.location.imag()}, {"mass", a.mass}});
  }
  return {{"atoms", std::move(atoms)}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidArgument(path.string() + ": " + e.what());
  }
}

DiagonalSystem load_system(const std::filesystem::path& path) {
  return system_from_json(read_json_file(path));
}

PointMeasure load_measure(const std::filesystem::path& path) {
  return measure_from_json(read_json_file(path));
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidArgument("cannot write " + tmp.string());
    out << contents;
    if (!out) throw InvalidArgument("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace zca
