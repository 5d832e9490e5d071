// Writes the built-in chain models as JSON model files.
#include "qfloer/chain/fixtures.hpp"
#include "qfloer/io/json_io.hpp"

#include "CLI11.hpp"

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Dump a truncated-polynomial chain model as JSON", "qfloer_fixture"};
  long long n = 3, k = 1;
  bool acyclic = false;
  app.add_option("-n", n, "Ambient dimension");
  app.add_option("-k", k, "Truncation degree (1 gives the sphere)");
  app.add_flag("--acyclic-pair", acyclic, "Add an acyclic pair to CF(V, V)");
  CLI11_PARSE(app, argc, argv);
  try {
    std::cout << qfloer::io::dump(qfloer::io::to_json(qfloer::truncated_polynomial_model(n, k, acyclic)));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
