// kgnc: Klein-Gordon Coulomb spectrum with non-commutative level splitting.
//
// Exit codes: 0 success, 1 configuration error, 2 I/O error, 3 numeric failure.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "kgnc/config.hpp"
#include "kgnc/emit.hpp"
#include "kgnc/errors.hpp"
#include "kgnc/report.hpp"

namespace {

std::string kebab(std::string_view key) {
  std::string flag(key);
  for (char& c : flag) {
    if (c == '_') c = '-';
  }
  return flag;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw kgnc::IoError(path, "cannot open config file");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Klein-Gordon Coulomb spectrum, non-commutative energy shifts and splitting diagrams"};
  std::string config_path;
  app.add_option("--config", config_path, "flat 'key = value' config file, loaded before flags");

  // every config key doubles as a --kebab-case flag; flags win over the file
  std::map<std::string, std::string> flag_values;
  std::map<std::string, CLI::Option*> flag_options;
  for (const auto key : kgnc::kConfigKeys) {
    const std::string name(key);
    flag_options[name] = app.add_option("--" + kebab(key), flag_values[name], "overrides '" + name + "'");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  kgnc::RunConfig config;
  try {
    if (!config_path.empty()) kgnc::merge_config(config, read_file(config_path));
    for (const auto key : kgnc::kConfigKeys) {
      const std::string name(key);
      if (flag_options[name]->count() > 0) kgnc::apply_setting(config, name, flag_values[name], 0);
    }
    kgnc::validate(config);
  } catch (const kgnc::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 1;
  } catch (const kgnc::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return 2;
  }

  kgnc::SpectrumTable table;
  try {
    table = kgnc::run_spectrum(config);
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return 3;
  }

  try {
    kgnc::emit(table, config.format, config.out);
  } catch (const kgnc::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
