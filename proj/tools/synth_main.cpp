// mser-synth: writes a LUBM-style ontology, its TypeOfProfessor extension,
// the query suites and a bench configuration into a directory.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "mser/lubm.hpp"

namespace fs = std::filesystem;

namespace {

void write(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + p.string());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generate a synthetic university benchmark"};
  mser::LubmOptions opts;
  std::string dir = "lubm";
  double timeout = 60;
  int repeat = 3;
  app.add_option("-d,--out-dir", dir, "Output directory");
  app.add_option("-u,--universities", opts.universities, "Universities")->check(CLI::PositiveNumber);
  app.add_option("--departments", opts.departments, "Departments per university")->check(CLI::PositiveNumber);
  app.add_option("--seed", opts.seed, "Random seed");
  app.add_option("--timeout", timeout, "Timeout written to bench.conf");
  app.add_option("--repeat", repeat, "Repeat count written to bench.conf");
  CLI11_PARSE(app, argc, argv);

  try {
    auto b = mser::generate_lubm(opts);
    fs::create_directories(fs::path(dir) / "queries");
    write(fs::path(dir) / "lubm.ofn", b.ontology);
    write(fs::path(dir) / "type-of-professor.ofn", b.extension);
    std::string conf = "# generated by mser-synth\nontology = lubm.ofn\n";
    for (const auto* suite : {&b.standard, &b.meta, &b.special})
      for (const auto& q : *suite) write(fs::path(dir) / "queries" / (q.name + ".rq"), q.text);
    for (const auto* suite : {&b.standard, &b.meta})
      for (const auto& q : *suite) conf += "query = queries/" + q.name + ".rq\n";
    conf += "timeout = " + std::to_string(timeout) + "\nrepeat = " + std::to_string(repeat) + "\noutput = results.csv\n";
    write(fs::path(dir) / "bench.conf", conf);
    std::cout << "wrote " << dir << "\n";
  } catch (const std::exception& e) {
    std::cerr << "mser-synth: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
