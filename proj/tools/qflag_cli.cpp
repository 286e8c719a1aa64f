#include "qflag/commands.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <functional>
#include <iostream>

namespace {

struct Options {
  std::string format = "text";
  int max_rank = 8;
  int n = 0;
  int k = 0;
  int i = 0;
  int node = 1;
  std::string series = "A";
};

void add_format(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format: json, markdown or text")
      ->check(CLI::IsMember({"json", "markdown", "md", "text"}, CLI::ignore_case));
}

void add_flag_manifold(CLI::App* sub, Options& o) {
  sub->add_option("--series", o.series, "Dynkin series: A, B, C, D, E6, E7")->required();
  sub->add_option("--n,--rank", o.n, "Rank of the root system")->required();
  sub->add_option("--node", o.node, "Crossed (cominuscule) node, 1-based")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification toolkit for irreducible quantum flag manifolds"};
  app.require_subcommand(1);
  Options o;
  std::function<qflag::Report()> run;

  auto* tables = app.add_subcommand("tables", "Flag manifold invariants and canonical bundle table");
  add_format(tables, o);
  tables->add_option("--max-rank", o.max_rank, "Largest classical rank (>= 2)");
  tables->callback([&] { run = [&] { return qflag::cmd_tables(qflag::effective_max_rank(o.max_rank)); }; });

  auto* curvature = app.add_subcommand("curvature", "Curvature coefficients on quantum projective space");
  add_format(curvature, o);
  curvature->add_option("--n", o.n, "Dimension n of CP^n")->required();
  curvature->add_option("--k", o.k, "Largest bundle degree k")->required();
  curvature->callback([&] { run = [&] { return qflag::cmd_curvature(o.n, o.k); }; });

  auto* sl2 = app.add_subcommand("sl2", "sl2 relations of L, Lambda, H on exterior models up to dimension n");
  add_format(sl2, o);
  o.n = 3;
  sl2->add_option("--n", o.n, "Largest model dimension");
  sl2->callback([&] { run = [&] { return qflag::cmd_sl2(o.n); }; });

  auto* hodge = app.add_subcommand("hodge", "Hodge map and metric checks on the n-dimensional model");
  add_format(hodge, o);
  hodge->add_option("--n", o.n, "Model dimension (1..4)")->required();
  hodge->callback([&] { run = [&] { return qflag::cmd_hodge(o.n); }; });

  auto* classify = app.add_subcommand("classify", "Classify the line bundle E_k by its cohomology");
  add_format(classify, o);
  add_flag_manifold(classify, o);
  classify->add_option("--k", o.k, "Bundle degree")->required();
  classify->callback([&] {
    run = [&] { return qflag::cmd_classify(qflag::parse_series(o.series), o.n, o.node, o.k); };
  });

  auto* bw = app.add_subcommand("bw", "Cohomology dimensions of E_k");
  add_format(bw, o);
  add_flag_manifold(bw, o);
  bw->add_option("--k", o.k, "Bundle degree")->required();
  bw->add_option("--i", o.i, "Cohomological degree (0 for holomorphic sections)");
  bw->callback([&] { run = [&] { return qflag::cmd_bw(qflag::parse_series(o.series), o.n, o.node, o.k, o.i); }; });

  auto* verify = app.add_subcommand("verify-all", "Run every verification suite");
  add_format(verify, o);
  verify->add_option("--max-rank", o.max_rank, "Largest classical rank (>= 2)");
  verify->callback([&] { run = [&] { return qflag::cmd_verify_all(qflag::effective_max_rank(o.max_rank)); }; });

  CLI11_PARSE(app, argc, argv);

  try {
    const auto start = std::chrono::steady_clock::now();
    qflag::Report report = run();
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::cout << report.render(qflag::parse_format(o.format));
    return report.pass ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
