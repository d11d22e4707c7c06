#include <iostream>

#include <CLI11.hpp>

#include "cb/error.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace cbtool;
  CLI::App app{"exact computations in the word and permutation bialgebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "emit a JSON report");
  app.add_flag("--force", o.force, "ignore the size caps");

  std::string a, b, c;
  Report report;
  std::function<Report()> run;

  auto* rw = app.add_subcommand("reduced-words", "list the reduced words of a permutation");
  rw->add_option("group", a, "A, B or D")->required();
  rw->add_option("perm", b, "one-line notation, e.g. 231645 or -1,2")->required();
  rw->add_flag("--count", o.count_only, "only count the words");
  rw->callback([&] { run = [&] { return cmd_reduced_words(a, b, o); }; });

  auto* pr = app.add_subcommand("product", "multiply two elements");
  pr->add_option("kind", a, "pi, word, qsymM, Bmod or Dmod")->required();
  pr->add_option("lhs", b)->required();
  pr->add_option("rhs", c)->required();
  pr->add_flag("--oracle", o.oracle, "also run the brute-force check");
  pr->callback([&] { run = [&] { return cmd_product(a, b, c, o); }; });

  auto* co = app.add_subcommand("coproduct", "apply the coproduct");
  co->add_option("kind", a, "pi, word, qsymM, B or D")->required();
  co->add_option("x", b)->required();
  co->add_flag("--oracle", o.oracle, "also run the brute-force check");
  co->callback([&] { run = [&] { return cmd_coproduct(a, b, o); }; });

  auto* st = app.add_subcommand("stanley", "Stanley symmetric function of type A, B, C or D");
  st->add_option("type", a)->required();
  st->add_option("perm", b)->required();
  st->add_option("--basis", o.basis, "M, L, K, schur, P or Q")->capture_default_str();
  st->add_flag("--oracle", o.oracle, "recompute through the zeta-functional definition");
  st->callback([&] { run = [&] { return cmd_stanley(a, b, o); }; });

  auto* ve = app.add_subcommand("verify", "run an identity suite (`verify list` shows them)");
  ve->add_option("suite", a)->required();
  ve->add_option("--max-n", o.max_n, "size bound for the suite");
  ve->callback([&] { run = [&] { return cmd_verify(a, o); }; });

  auto* ex = app.add_subcommand("export", "JSON tables of actions or product index sets");
  ex->add_option("dataset", a, "bmod-table, dmod-table or sshuffle-table")->required();
  ex->add_option("--left", o.left, "rank of the left factor")->required();
  ex->add_option("--right", o.right, "size of the right symmetric group")->required();
  ex->callback([&] { run = [&] { return cmd_export(a, o); }; });

  int fa = 0;
  std::optional<int> fb;
  auto* fam = app.add_subcommand("families", "the families A(n) and B(m,n) with their word counts");
  fam->add_option("family", a, "A or B")->required();
  fam->add_option("first", fa, "n for A, m for B")->required();
  fam->add_option("second", fb, "n for B");
  fam->callback([&] { run = [&] { return cmd_families(a, fa, fb, o); }; });

  CLI11_PARSE(app, argc, argv);
  try {
    return emit(run(), o.json);
  } catch (const Refusal& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 2;
  } catch (const cb::InternalInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
