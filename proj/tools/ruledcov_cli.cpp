#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ruledcov.h"

namespace {

struct CommonOpts {
  std::string input_path;
  std::string x, y, z, implicit;
  std::optional<long> seed;
  std::optional<int> max_attempts;
  std::string format = "json";
};

void add_common(CLI::App* sub, CommonOpts& o) {
  sub->add_option("input", o.input_path,
                  "input document file, or - for stdin");
  sub->add_option("--x", o.x, "first component expression");
  sub->add_option("--y", o.y, "second component expression");
  sub->add_option("--z", o.z, "third component expression");
  sub->add_option("--implicit", o.implicit, "implicit equation in x,y,z");
  sub->add_option("--seed", o.seed, "seed for randomized choices");
  sub->add_option("--max-attempts", o.max_attempts, "retry budget");
  sub->add_option("--format", o.format, "output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
}

// Assembles the input-document text from a file, stdin, or flags. Flag lines
// are appended after file content; the parser keeps the last assignment, so
// flags override the document.
std::string build_input(const CommonOpts& o) {
  std::string text;
  if (!o.input_path.empty()) {
    if (o.input_path == "-") {
      std::ostringstream ss;
      ss << std::cin.rdbuf();
      text = ss.str();
    } else {
      std::ifstream in(o.input_path);
      if (!in) throw std::runtime_error("cannot open " + o.input_path);
      std::ostringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    }
  }
  if (!text.empty() && text.back() != '\n') text += '\n';
  if (!o.x.empty()) text += "x = " + o.x + "\n";
  if (!o.y.empty()) text += "y = " + o.y + "\n";
  if (!o.z.empty()) text += "z = " + o.z + "\n";
  if (!o.implicit.empty()) text += "F = " + o.implicit + "\n";
  if (o.seed) text += "seed = " + std::to_string(*o.seed) + "\n";
  if (o.max_attempts)
    text += "max_attempts = " + std::to_string(*o.max_attempts) + "\n";
  return text;
}

void render_text(const nlohmann::json& j, std::ostream& os,
                 const std::string& indent = "") {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      os << indent << key << ":\n";
      render_text(value, os, indent + "  ");
    } else if (value.is_array()) {
      os << indent << key << ":\n";
      for (const auto& el : value) {
        if (el.is_object()) {
          render_text(el, os, indent + "  ");
          os << indent << "  --\n";
        } else if (el.is_string()) {
          os << indent << "  " << el.get<std::string>() << "\n";
        } else {
          os << indent << "  " << el.dump() << "\n";
        }
      }
    } else if (value.is_string()) {
      os << indent << key << " = " << value.get<std::string>() << "\n";
    } else {
      os << indent << key << " = " << value.dump() << "\n";
    }
  }
}

int run(rc_result* (*fn)(const char*), const CommonOpts& o) {
  std::string input;
  try {
    input = build_input(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return RC_ERROR;
  }
  std::unique_ptr<rc_result, void (*)(rc_result*)> res(fn(input.c_str()),
                                                       rc_free);
  int status = rc_status(res.get());
  const char* json = rc_json(res.get());
  if (json[0] != '\0') {
    if (o.format == "text") {
      render_text(nlohmann::json::parse(json), std::cout);
    } else {
      std::cout << json;
    }
  }
  const char* err = rc_error_message(res.get());
  if (err[0] != '\0') std::cerr << "error: " << err << "\n";
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact two-chart covering and base-point removal for rational "
               "ruled surfaces"};
  app.set_version_flag("--version", rc_version());
  app.require_subcommand(1);

  struct Cmd {
    const char* name;
    const char* help;
    rc_result* (*fn)(const char*);
  };
  const Cmd cmds[] = {
      {"cover", "cover a ruled surface with at most two charts", rc_run_cover},
      {"debase", "remove affine base points", rc_run_debase},
      {"check", "verify membership and covering claims", rc_run_check},
      {"standardize", "standardize a ruled-form parametrization",
       rc_run_standardize},
  };

  CommonOpts opts[4];
  for (int i = 0; i < 4; ++i) {
    CLI::App* sub = app.add_subcommand(cmds[i].name, cmds[i].help);
    add_common(sub, opts[i]);
    sub->parse_complete_callback(
        [&, i] { std::exit(run(cmds[i].fn, opts[i])); });
  }

  CLI11_PARSE(app, argc, argv);
  return 0;
}
