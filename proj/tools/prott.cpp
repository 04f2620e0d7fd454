// prott: command-line front end.
//
//   prott <verb> <descriptor> [flags]
//
// Exit status: 0 ok, 1 error, 2 when the answer is mathematically open
// (an undetermined inclusion, a blueshift window, an unknown verdict).

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "prott/cli.hpp"

int main(int argc, char** argv) {
  using namespace prott;
  cli::Command cmd;
  std::string primes, out;
  std::optional<std::size_t> level;
  std::optional<std::uint64_t> p;
  std::optional<std::string> n;

  CLI::App app{"Profinite groups, their subgroup spaces and equivariant tt-spectra"};
  app.add_option("verb", cmd.verb, "subgroups | prism | blueshift | burnside | rational-spc | cb | verdict")
      ->required()
      ->check(CLI::IsMember(cli::verbs()));
  app.add_option("descriptor", cmd.descriptor, "group descriptor, e.g. \"Zp(2) x Z/3\"")->required();
  app.add_option("--depth", cmd.depth, "tower depth")->capture_default_str();
  app.add_option("--primes", primes, "comma separated primes (default: primes dividing the order)");
  app.add_option("--nmax", cmd.nmax, "largest finite height in prisms")->capture_default_str();
  app.add_option("--level", level, "level used for subgroup data (default: depth)");
  app.add_option("--format", cmd.format, "json or dot")->capture_default_str()->check(CLI::IsMember({"json", "dot"}));
  app.add_option("--out", out, "write output here instead of stdout; with dot, JSON goes next to it as .json");
  app.add_option("--from", cmd.from, "source subgroup thread K")->capture_default_str();
  app.add_option("--to", cmd.to, "target subgroup thread H")->capture_default_str();
  app.add_option("--p", p, "prime");
  app.add_option("--m", cmd.m, "height of the target prime")->capture_default_str();
  app.add_option("--n", n, "height of the source prime; turns blueshift into an inclusion query");
  app.add_option("--cap", cmd.cap, "largest level order")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  cmd.level = level;
  cmd.p = p;
  cmd.n = n;
  if (!primes.empty()) {
    try {
      cmd.primes = cli::parse_primes(primes);
    } catch (const Error& e) {
      std::cerr << dump(cli::detail::error_json(e));
      return cli::kError;
    }
  }

  cli::Result r = cli::run(cmd);
  if (!r.error.empty()) std::cerr << r.error;
  if (r.exit_code == cli::kError) return r.exit_code;
  auto write = [](const std::filesystem::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    f << text;
    if (!f) std::cerr << "cannot write " << path.string() << "\n";
    return bool(f);
  };
  if (out.empty()) {
    std::cout << r.output;
  } else {
    if (!write(out, r.output)) return cli::kError;
    if (cmd.format == "dot") {
      std::filesystem::path json = out;
      json.replace_extension(".json");
      if (json == std::filesystem::path(out)) json += ".json";
      if (!write(json, r.json)) return cli::kError;
    }
  }
  return r.exit_code;
}
