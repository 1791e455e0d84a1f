// Command-line front end over the C API.
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fiberfull/fiberfull.h"

int main(int argc, char** argv) {
  CLI::App app{"Groebner degenerations, free resolutions and local cohomology"};
  app.set_version_flag("--version", std::string(ffl_version()));
  app.allow_extras();
  app.prefix_command();
  std::string file;
  app.add_option("file", file, "program file; '-' or omitted reads standard input");
  app.footer(
      "After the file, name at most one command with its flags, e.g.\n"
      "  fiberfull j5.ff compare betti --format json\n"
      "Commands: gb initial homogenize betti localcoh decompose truncate saturate\n"
      "          fiberfull compare thm35\n"
      "Flags: --format text|json --field q|fp:<p> --i a..b --j a..b --ideal NAME --h N\n"
      "       --N P|Kt --definition --mmax N --w w1,..,wn --no-timings\n"
      "Exit codes: 0 ok, 1 negative verdict, 2 input error, 3 internal error.");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  std::vector<std::string> rest = app.remaining();
  if (file.rfind("--", 0) == 0) {
    rest.insert(rest.begin(), file);
    file.clear();
  }
  std::string source;
  if (file.empty() || file == "-") {
    source.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(file);
    if (!in) {
      std::cerr << "input error: cannot read " << file << "\n";
      return 2;
    }
    source.assign(std::istreambuf_iterator<char>(in), {});
  }
  std::string command, format = "text";
  for (std::size_t k = 0; k < rest.size(); ++k) {
    command += (k ? " " : "") + rest[k];
    if (rest[k] == "--format" && k + 1 < rest.size()) format = rest[k + 1];
    if (rest[k].rfind("--format=", 0) == 0) format = rest[k].substr(9);
  }
  if (rest.empty()) {
    // The command may sit in the source; pick up a format flag from there.
    auto at = source.find("--format");
    if (at != std::string::npos) {
      std::istringstream ss(source.substr(at + 8));
      std::string v;
      ss >> v;
      if (!v.empty() && v[0] == '=') v = v.substr(1);
      while (!v.empty() && v.back() == ';') v.pop_back();
      format = v;
    }
  }
  ffl_report* report = nullptr;
  ffl_run(source.c_str(), rest.empty() ? nullptr : command.c_str(), &report);
  if (!report) {
    std::cerr << "internal error: " << ffl_last_error() << "\n";
    return 3;
  }
  int code = ffl_report_exit_code(report);
  if (format == "json") {
    std::cout << ffl_report_json(report) << "\n";
  } else {
    (code == 2 || code == 3 ? std::cerr : std::cout) << ffl_report_text(report);
  }
  ffl_report_free(report);
  return code;
}
