// scd: command-line front end for the supercharacter library.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "scd/io.hpp"
#include "scd/render.hpp"
#include "scd/verify.hpp"

using namespace scd;

namespace {

struct Options {
  std::string family = "D";
  int n = 2;
  unsigned q = 3;
  std::string modulus;
  std::string format = "json";
  std::uint64_t budget = 0;
  std::uint64_t seed = 1;
  std::string in, in2, out, report;
  bool count = false;
  std::string op;
  int n_max = 2;
};

std::vector<unsigned> parse_modulus(const std::string& text) {
  std::vector<unsigned> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(static_cast<unsigned>(v));
    } catch (const std::exception&) {
      throw Error(ErrorKind::malformed_input, "modulus coefficient '" + item + "' is not a nonnegative integer");
    }
  }
  return out;
}

FieldPtr field_of(const Options& o) { return Field::of_order(o.q, parse_modulus(o.modulus)); }

std::uint64_t budget_of(const Options& o) { return o.budget ? o.budget : budget_from_env(); }

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw Error(ErrorKind::malformed_input, "cannot write " + o.out);
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int run_enumerate(const Options& o) {
  const Family family = family_from_string(o.family);
  const FieldPtr field = field_of(o);
  if (o.n < 0) throw Error(ErrorKind::malformed_input, "--n must be nonnegative");
  if (o.count) {
    emit(o, std::to_string(count_partitions(family, o.n, field)) + "\n");
    return 0;
  }
  const std::uint64_t total = count_partitions(family, o.n, field);
  if (total > budget_of(o))
    throw Error(ErrorKind::budget_exceeded, std::to_string(total) + " partitions exceed the budget; use --count");
  std::ostringstream text;
  text << "[\n";
  bool first = true;
  enumerate_partitions(family, o.n, field, [&](const LabelledPartition& l) {
    text << (first ? "  " : ",\n  ") << to_json(l).dump();
    first = false;
  });
  text << (first ? "]\n" : "\n]\n");
  emit(o, text.str());
  return 0;
}

int run_reduce(const Options& o) {
  if (o.in.empty()) throw Error(ErrorKind::malformed_input, "reduce needs --in");
  const UTMatrix m = matrix_from_json(read_json_file(o.in));
  Json j;
  UTMatrix nilpotent = m;
  if (membership(m, MatrixSet::group_D) && m.size() > 0) {
    nilpotent = x_to_y(m);
    j["input"] = "group element of U^D; reduced through its partner y";
  } else if (!membership(m, MatrixSet::algebra_A)) {
    throw Error(ErrorKind::membership, "input is neither strictly upper triangular nor an element of U^D");
  }
  const UTMatrix r = verge_reduce(nilpotent);
  j["reduced"] = to_json(r);
  j["arc_form"] = r.is_arc_form();
  if (r.is_arc_form() && r.size() % 2 == 0) {
    const Family family = family_from_string(o.family);
    std::vector<Arc> arcs;
    const SignedOrder ord(family, r.size() / 2);
    for (int a = 0; a < r.size(); ++a)
      for (int b = 0; b < r.size(); ++b)
        if (r(a, b) != 0) arcs.push_back(Arc{ord.value_at(a + 1), ord.value_at(b + 1), r(a, b)});
    const auto v = LabelledPartition::validate(family, r.size() / 2, r.field(), arcs);
    if (v.ok())
      j["partition"] = to_json(v.value());
    else
      j["partition_error"] = v.violations.front().message;
  }
  emit(o, dump(j));
  return 0;
}

int run_table(const Options& o) {
  const Family family = family_from_string(o.family);
  const FieldPtr field = field_of(o);
  const std::uint64_t budget = budget_of(o);
  CharTable table = char_table(family, o.n, field, budget);
  try {
    GroupTable group = enumerate_group(o.n, field, budget);
    superclass_partition(group);
    attach_class_sizes(table, group);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::budget_exceeded) throw;
  }
  if (o.format == "json")
    emit(o, dump(to_json(table)));
  else if (o.format == "csv")
    emit(o, to_csv(table));
  else
    throw Error(ErrorKind::malformed_input, "table supports --format json or csv");
  return 0;
}

int run_hopf(const Options& o) {
  if (o.in.empty()) throw Error(ErrorKind::malformed_input, "hopf needs --in");
  const SCElement x = element_from_json(read_json_file(o.in));
  HopfAlgebra H(x.family(), x.field());
  if (o.op == "product") {
    if (o.in2.empty()) throw Error(ErrorKind::malformed_input, "product needs --in2");
    const SCElement y = element_from_json(read_json_file(o.in2));
    emit(o, dump(to_json(H.product(x, y))));
  } else if (o.op == "coproduct") {
    emit(o, dump(to_json(H.coproduct(x))));
  } else if (o.op == "antipode") {
    emit(o, dump(to_json(H.antipode(x))));
  } else {
    throw Error(ErrorKind::malformed_input, "--op must be product, coproduct or antipode");
  }
  return 0;
}

int run_oracle(const Options& o) {
  if (family_from_string(o.family) != Family::D)
    throw Error(ErrorKind::unsupported_family, "the oracle enumerates U^D only");
  GroupTable group = enumerate_group(o.n, field_of(o), budget_of(o));
  superclass_partition(group);
  emit(o, dump(census_to_json(group)));
  return 0;
}

int run_verify(const Options& o) {
  if (o.n_max < 0) throw Error(ErrorKind::malformed_input, "--n-max must be nonnegative");
  const Report report = verify_bundle(o.n_max, field_of(o), o.seed, budget_of(o));
  for (const auto& c : report.checks) {
    const char* tag = c.informational ? (c.passed ? "INFO" : "NOTE") : (c.passed ? "PASS" : "FAIL");
    std::cout << tag << "  " << c.name << "  (" << c.cases << " cases)";
    if (!c.note.empty()) std::cout << "  " << c.note;
    std::cout << "\n";
    for (const auto& f : c.failures) std::cout << "      " << f << (f.ends_with('\n') ? "" : "\n");
  }
  std::cout << (report.passed() ? "all checks passed\n" : "some checks failed\n");
  if (!o.report.empty()) {
    std::ofstream f(o.report);
    if (!f) throw Error(ErrorKind::malformed_input, "cannot write " + o.report);
    f << dump(to_json(report));
  }
  return report.passed() ? 0 : 1;
}

int run_render(const Options& o) {
  if (o.in.empty()) throw Error(ErrorKind::malformed_input, "render needs --in");
  emit(o, render_svg(partition_from_json(read_json_file(o.in))));
  return 0;
}

int fail(ErrorKind kind, const std::string& message) {
  std::cerr << error_json(kind, message).dump() << "\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Supercharacters of unipotent groups of type D: enumeration, tables, Hopf operations"};
  app.require_subcommand(1);
  Options o;

  auto ctx = [&](CLI::App* s) {
    s->add_option("--family", o.family, "D, C or B")->capture_default_str();
    s->add_option("--n", o.n, "rank n (ground set of size 2n)")->capture_default_str();
    s->add_option("--q", o.q, "field order, an odd prime power")->capture_default_str();
    s->add_option("--modulus", o.modulus, "irreducible modulus for q = p^r, r > 1 (comma list, low degree first)");
    s->add_option("--budget", o.budget, "enumeration ceiling (default $SCD_BUDGET or 1000000)");
    s->add_option("--out", o.out, "output file (default stdout)");
  };

  auto* enumerate = app.add_subcommand("enumerate", "list or count labelled partitions");
  ctx(enumerate);
  enumerate->add_flag("--count", o.count, "print only the number of partitions");

  auto* reduce = app.add_subcommand("reduce", "canonical form of a matrix under two-sided unitriangular action");
  ctx(reduce);
  reduce->add_option("--in", o.in, "matrix JSON")->required();

  auto* table = app.add_subcommand("table", "supercharacter table");
  ctx(table);
  table->add_option("--format", o.format, "json or csv")->capture_default_str();

  auto* hopf = app.add_subcommand("hopf", "product, coproduct or antipode of superclass functions");
  ctx(hopf);
  hopf->add_option("--op", o.op, "product, coproduct or antipode")->required();
  hopf->add_option("--in", o.in, "element JSON")->required();
  hopf->add_option("--in2", o.in2, "second factor for product");

  auto* oracle = app.add_subcommand("oracle", "brute-force superclass census of U^D_{2n}(q)");
  ctx(oracle);

  auto* verify = app.add_subcommand("verify", "run the verification suites");
  ctx(verify);
  verify->add_option("--n-max", o.n_max, "largest grade checked")->capture_default_str();
  verify->add_option("--seed", o.seed, "seed for the sampled checks")->capture_default_str();
  verify->add_option("--report", o.report, "write the JSON report here");

  auto* render = app.add_subcommand("render", "SVG arc diagram of a partition");
  ctx(render);
  render->add_option("--in", o.in, "partition JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(ErrorKind::malformed_input, e.what());
  }

  try {
    if (*enumerate) return run_enumerate(o);
    if (*reduce) return run_reduce(o);
    if (*table) return run_table(o);
    if (*hopf) return run_hopf(o);
    if (*oracle) return run_oracle(o);
    if (*verify) return run_verify(o);
    if (*render) return run_render(o);
  } catch (const Error& e) {
    return fail(e.kind(), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(ErrorKind::malformed_input, e.what());
  }
  return fail(ErrorKind::malformed_input, "unknown command");
}
