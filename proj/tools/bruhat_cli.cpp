#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bruhat/bwgraph.hpp"
#include "bruhat/classify.hpp"
#include "bruhat/errors.hpp"
#include "bruhat/invariants.hpp"
#include "bruhat/isomorphism.hpp"
#include "bruhat/pairspec.hpp"
#include "bruhat/poset.hpp"
#include "bruhat/quotient.hpp"
#include "bruhat/suites.hpp"

namespace {

void write_out(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

bruhat::PointedPoset load_poset(const std::string& spec, const std::string& poset_file) {
  if (!poset_file.empty()) return bruhat::poset_from_json(read_file(poset_file));
  bruhat::PairSpec p = bruhat::parse_pair_spec(spec);
  return bruhat::bruhat_order(bruhat::enumerate_quotient(p.matrix(), p.j));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bruhat order engine for parabolic quotients of finite Weyl groups"};
  app.require_subcommand(1);

  std::string spec, spec_b, out, poset_file, suite_name;
  bool as_dot = false, as_table = false, do_expand = false, do_invert = false;
  bool do_triple = false, run_all = false;
  int max_rank = 5;
  int jobs = 1;
  std::uint64_t max_size = 10000;

  auto* cmd_quotient =
      app.add_subcommand("quotient", "Enumerate a parabolic quotient, export its Bruhat poset");
  cmd_quotient->add_option("spec", spec, "pair descriptor, e.g. A3/A2 or E6/A3xA1@{1,2,3,5}")
      ->required();
  cmd_quotient->add_flag("--dot", as_dot, "emit DOT instead of JSON");
  cmd_quotient->add_flag("--table", as_table, "emit the element table instead of the poset");
  cmd_quotient->add_option("-o,--out", out, "output file (default stdout)");

  auto* cmd_compare = app.add_subcommand("compare", "Poset isomorphism verdict for two pairs");
  cmd_compare->add_option("first", spec, "first pair descriptor")->required();
  cmd_compare->add_option("second", spec_b, "second pair descriptor")->required();

  auto* cmd_classify =
      app.add_subcommand("classify", "Sweep pairs and report coincidence classes");
  cmd_classify->add_option("--max-rank", max_rank, "rank bound (default 5)");
  cmd_classify->add_option("--max-size", max_size, "quotient size bound (default 10000)");
  cmd_classify->add_option("--jobs", jobs, "worker threads (default 1)");
  cmd_classify->add_option("-o,--out", out, "output file (default stdout)");

  auto* cmd_bwgraph = app.add_subcommand("bwgraph", "Emit the bw-Coxeter graph of a pair");
  cmd_bwgraph->add_option("spec", spec, "pair descriptor")->required();
  cmd_bwgraph->add_flag("--expand", do_expand, "apply the component expansion");
  cmd_bwgraph->add_flag("--dot", as_dot, "emit DOT instead of JSON");
  cmd_bwgraph->add_option("-o,--out", out, "output file (default stdout)");

  auto* cmd_reconstruct = app.add_subcommand(
      "reconstruct", "Rebuild the bw-Coxeter graph from the abstract Bruhat poset");
  cmd_reconstruct->add_option("spec", spec, "pair descriptor");
  cmd_reconstruct->add_option("--poset", poset_file, "read a poset JSON file instead");
  cmd_reconstruct->add_flag("--invert", do_invert, "also invert the expansion");
  cmd_reconstruct->add_flag("--triple", do_triple, "emit the (X1, mu, nu) triple instead");
  cmd_reconstruct->add_flag("--dot", as_dot, "emit DOT instead of JSON");
  cmd_reconstruct->add_option("-o,--out", out, "output file (default stdout)");

  auto* cmd_verify = app.add_subcommand("verify", "Run a verification suite");
  cmd_verify
      ->add_option("--suite", suite_name, "one of thm1, thmnew, propirr, lemnew, lemunique");
  cmd_verify->add_flag("--all", run_all, "run every suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_quotient->parsed()) {
      bruhat::PairSpec p = bruhat::parse_pair_spec(spec);
      bruhat::QuotientTable q = bruhat::enumerate_quotient(p.matrix(), p.j);
      if (as_table) {
        write_out(out, bruhat::quotient_to_json(q));
      } else {
        bruhat::PointedPoset poset = bruhat::bruhat_order(q);
        write_out(out, as_dot ? bruhat::poset_to_dot(poset) : bruhat::poset_to_json(poset));
      }
      return 0;
    }

    if (cmd_compare->parsed()) {
      bruhat::PairSpec a = bruhat::parse_pair_spec(spec);
      bruhat::PairSpec b = bruhat::parse_pair_spec(spec_b);
      bruhat::PointedPoset pa = bruhat::bruhat_order(bruhat::enumerate_quotient(a.matrix(), a.j));
      bruhat::PointedPoset pb = bruhat::bruhat_order(bruhat::enumerate_quotient(b.matrix(), b.j));
      auto witness = bruhat::poset_isomorphic(pa, pb);
      if (witness) {
        std::cout << "ISOMORPHIC " << bruhat::pair_name(a.factors, a.j) << " = "
                  << bruhat::pair_name(b.factors, b.j) << "\n";
        std::ostringstream os;
        for (std::size_t v = 0; v < witness->size(); ++v) {
          os << v << " -> " << (*witness)[v]
             << (v + 1 == witness->size() ? "\n" : v % 8 == 7 ? "\n" : "  ");
        }
        std::cout << os.str();
        return 0;
      }
      std::cout << "NOT ISOMORPHIC: sizes " << pa.size() << " vs " << pb.size() << ", lengths "
                << pa.length() << " vs " << pb.length() << "\n";
      return 1;
    }

    if (cmd_classify->parsed()) {
      bruhat::CoincidenceReport rep = bruhat::classify(max_rank, max_size, jobs);
      write_out(out, bruhat::report_to_json(rep));
      return rep.matches_expected ? 0 : 1;
    }

    if (cmd_bwgraph->parsed()) {
      bruhat::PairSpec p = bruhat::parse_pair_spec(spec);
      bruhat::BWGraph g = bruhat::bw_graph(p.matrix(), p.j);
      if (do_expand) g = bruhat::bu_expand(g);
      write_out(out, as_dot ? bruhat::bwgraph_to_dot(g) : bruhat::bwgraph_to_json(g));
      return 0;
    }

    if (cmd_reconstruct->parsed()) {
      if (spec.empty() && poset_file.empty())
        throw bruhat::ParseError("reconstruct needs a pair descriptor or --poset file");
      bruhat::PointedPoset poset = load_poset(spec, poset_file);
      if (do_triple) {
        write_out(out, bruhat::triple_to_json(bruhat::triple_of(poset)));
        return 0;
      }
      bruhat::BWGraph g = bruhat::g_of(poset);
      if (do_invert) {
        auto inv = bruhat::invert_bu(g);
        if (!inv) {
          std::cout << "NotInImage\n";
          return 0;
        }
        g = *inv;
      }
      write_out(out, as_dot ? bruhat::bwgraph_to_dot(g) : bruhat::bwgraph_to_json(g));
      return 0;
    }

    if (cmd_verify->parsed()) {
      std::vector<std::string> wanted;
      if (run_all || suite_name.empty())
        wanted = {"thm1", "thmnew", "propirr", "lemnew", "lemunique"};
      else
        wanted = {suite_name};
      bool all_ok = true;
      for (const std::string& s : wanted) {
        bruhat::SuiteResult res;
        if (s == "thm1")
          res = bruhat::run_thm1_suite();
        else if (s == "thmnew")
          res = bruhat::run_thmnew_suite();
        else if (s == "propirr")
          res = bruhat::run_propirr_suite();
        else if (s == "lemnew")
          res = bruhat::run_lemnew_suite();
        else if (s == "lemunique")
          res = bruhat::run_lemunique_suite();
        else
          throw bruhat::ParseError("unknown suite: " + s);
        std::cout << "== suite " << res.suite << " ==\n" << res.summary();
        all_ok = all_ok && res.pass();
      }
      return all_ok ? 0 : 1;
    }
  } catch (const bruhat::ParseError& e) {
    std::cerr << "parse error: " << e.what();
    if (e.pos() != bruhat::ParseError::npos) std::cerr << " (at position " << e.pos() << ")";
    std::cerr << "\n";
    return 2;
  } catch (const bruhat::CapExceeded& e) {
    std::cerr << "resource cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const bruhat::NotGradable& e) {
    std::cerr << "invalid poset input: " << e.what() << "\n";
    return 2;
  } catch (const bruhat::Discrepancy& e) {
    std::cerr << "discrepancy: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
