#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "flrw/cli/commands.hpp"
#include "flrw/error.hpp"

using namespace flrw::cli;

namespace {

struct Parsed {
  std::string config_path;
  std::vector<std::string> sets;
  std::map<std::string, std::string> flags;
};

int execute(const Command& cmd, const Parsed& parsed) {
  RunConfig config(cmd.keys);
  if (!parsed.config_path.empty()) config.load_file(parsed.config_path);
  for (const auto& [key, value] : parsed.flags) config.set(key, value, "--" + key);
  for (const std::string& s : parsed.sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) {
      throw flrw::Error(flrw::ErrorKind::Config, "--set " + s + ": expected key=value");
    }
    config.set(s.substr(0, eq), s.substr(eq + 1), "--set " + s);
  }
  std::ostringstream out;
  const int code = cmd.run(config, out, std::cerr);
  const std::string path = config.text("output");
  if (path.empty()) {
    std::cout << out.str() << std::flush;
  } else {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw flrw::Error(flrw::ErrorKind::Config, "cannot write '" + path + "'");
    file << out.str();
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed-form Dirac and EPD solutions in power-law FLRW spacetimes.\n"
               "Thread count: FLRW_THREADS."};
  app.require_subcommand(1);
  std::map<std::string, Parsed> parsed;
  for (const Command& cmd : commands()) {
    CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
    Parsed& p = parsed[cmd.name];
    sub->add_option("-c,--config", p.config_path, "key = value config file");
    sub->add_option("--set", p.sets, "override, key=value (repeatable)");
    for (const KeySpec& key : cmd.keys) {
      std::string help = key.help;
      if (!key.default_value.empty()) help += (help.empty() ? "" : " ") + ("[" + key.default_value + "]");
      sub->add_option_function<std::string>(
          "--" + key.name, [&p, name = key.name](const std::string& v) { p.flags[name] = v; },
          help);
    }
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfigError;
  }
  for (const Command& cmd : commands()) {
    if (!app.got_subcommand(cmd.name)) continue;
    try {
      return execute(cmd, parsed[cmd.name]);
    } catch (const flrw::Error& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kExitConfigError;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kExitConfigError;
    }
  }
  return kExitConfigError;
}
