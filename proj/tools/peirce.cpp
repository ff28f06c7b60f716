#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "peirce/cli.hpp"

int main(int argc, char** argv) {
  peirce::CliOptions opt;
  bool as_json = false;
  std::uint32_t p = 0;

  CLI::App app{"Structure of finite-dimensional algebras over GF(p) and their corners aAa"};
  app.require_subcommand(1);
  auto common = [&](CLI::App* sub) {
    sub->add_option("--p", p, "prime; must match the file for file commands");
    sub->add_option("--seed", opt.seed, "seed for randomized steps");
    sub->add_flag("--json", as_json, "print the report as JSON");
    sub->add_flag("--full", opt.full, "include basis listings");
    sub->add_option("--brute-cap", opt.brute_cap, "largest enumeration the fallbacks may attempt");
    sub->add_option("--out", opt.out, "write the report (or the generated file) here");
  };
  const std::pair<const char*, const char*> file_commands[] = {
      {"info", "dimensions, unity, radical and socles"},
      {"radical", "Jacobson radical"},
      {"structure", "blocks M_n(GF(p^e)) of A/J(A)"},
      {"rank", "right and left rank of an element"},
      {"regular", "inner inverse and unit-regular factorization"},
      {"corner", "radical and structure of aAa"},
      {"decompose", "direct decomposition of aAa"},
      {"shapes", "block shapes behind the rank of a"},
  };
  for (auto [name, help] : file_commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", opt.input, "algebra file")->required();
    sub->add_option("--element", opt.element, "label of a named element");
    common(sub);
    sub->callback([&opt, name = std::string(name)] { opt.command = name; });
  }
  auto* verify = app.add_subcommand("verify", "run the property suites");
  verify->add_option("--suite", opt.suite, "suite name or 'all'");
  verify->add_option("--cases", opt.cases, "checked cases per randomized suite");
  common(verify);
  verify->callback([&] { opt.command = "verify"; });
  auto* gen = app.add_subcommand("gen", "write a built-in example as an algebra file");
  gen->add_option("name", opt.input, "t2 | m3 | paper10 | remark | random")->required();
  gen->add_option("--d-block", opt.d_block, "block size for paper10");
  common(gen);
  gen->callback([&] { opt.command = "gen"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (p != 0) opt.p = p;

  peirce::Report rep = peirce::run_command(opt);
  std::string text;
  if (opt.command == "gen" && !as_json && rep.doc.contains("payload") && rep.doc["payload"].contains("text"))
    text = rep.doc["payload"]["text"].get<std::string>();
  else
    text = as_json ? rep.doc.dump(2) + "\n" : peirce::render_text(rep.doc);

  if (!opt.out.empty() && opt.command != "gen") {
    std::ofstream out(opt.out, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << opt.out << "\n";
      return 2;
    }
    out << text;
  } else {
    std::cout << text;
  }
  if (rep.exit_code != 0 && rep.doc.contains("error"))
    std::cerr << "error: " << rep.doc["error"]["message"].get<std::string>() << "\n";
  return rep.exit_code;
}
