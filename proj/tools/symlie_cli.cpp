// symlie command-line frontend. Talks to the library only through the C API.
//
// Exit codes: 0 success, 1 malformed input or usage, 2 domain error
// (NotAnEigenvector, EigenvaluesNotInField, Singular), 3 budget exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "symlie/symlie.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitDomain = 2;
constexpr int kExitBudget = 3;

struct Failure {
  int exit_code;
};

int exit_code_for(symlie_status s) {
  switch (s) {
    case SYMLIE_OK: return kExitOk;
    case SYMLIE_E_NOT_AN_EIGENVECTOR:
    case SYMLIE_E_EIGENVALUES_NOT_IN_FIELD:
    case SYMLIE_E_SINGULAR: return kExitDomain;
    case SYMLIE_E_BUDGET_EXCEEDED: return kExitBudget;
    default: return kExitInput;
  }
}

void check(symlie_status s) {
  if (s == SYMLIE_OK) return;
  std::cerr << "error: " << symlie_status_name(s) << ": " << symlie_last_error() << "\n";
  throw Failure{exit_code_for(s)};
}

[[noreturn]] void usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  throw Failure{kExitInput};
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using FieldPtr = std::unique_ptr<symlie_field, Deleter<symlie_field, symlie_field_free>>;
using MatrixPtr = std::unique_ptr<symlie_matrix, Deleter<symlie_matrix, symlie_matrix_free>>;
using SeedPtr = std::unique_ptr<symlie_seed, Deleter<symlie_seed, symlie_seed_free>>;
using TablePtr = std::unique_ptr<symlie_table, Deleter<symlie_table, symlie_table_free>>;

std::string take(char* s) {
  std::string out(s);
  symlie_string_free(s);
  return out;
}

// Inline text, or the contents of the file it names.
std::string inline_or_file(const std::string& arg) {
  std::error_code ec;
  if (!arg.empty() && arg.front() != '[' && arg.front() != '{' && std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  return arg;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) usage_error("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Options {
  std::string field;
  std::optional<std::uint64_t> p;
  std::string matrix;
  std::string w;
  unsigned degree = 0;
  unsigned max_degree = 0;
  unsigned n = 2;
  bool include_zero_w = false;
  std::uint64_t budget = 0;
  std::uint64_t iso_budget = 0;
  std::string out;
  std::string csv;
  std::vector<std::string> tables;
};

FieldPtr make_field(const Options& o) {
  std::string tag = o.field.empty() ? (o.p ? "Fp" : "Q") : o.field;
  if ((tag == "Fp" || tag == "F") && o.p) tag = "Fp(" + std::to_string(*o.p) + ")";
  symlie_field* f = nullptr;
  check(symlie_field_parse(tag.c_str(), &f));
  return FieldPtr(f);
}

MatrixPtr make_matrix(const symlie_field* field, const std::string& text, const char* flag) {
  if (text.empty()) usage_error(std::string(flag) + " is required");
  symlie_matrix* m = nullptr;
  check(symlie_matrix_parse(field, inline_or_file(text).c_str(), &m));
  return MatrixPtr(m);
}

SeedPtr make_seed(const Options& o, const symlie_field* field) {
  MatrixPtr a = make_matrix(field, o.matrix, "--matrix");
  if (o.w.empty()) usage_error("--w is required");
  symlie_matrix* w = nullptr;
  check(symlie_vector_parse(field, inline_or_file(o.w).c_str(), &w));
  MatrixPtr wp(w);
  symlie_seed* seed = nullptr;
  check(symlie_seed_create(a.get(), wp.get(), &seed));
  return SeedPtr(seed);
}

TablePtr load_table(const std::string& path) {
  symlie_table* t = nullptr;
  check(symlie_table_from_json(read_file(path).c_str(), &t));
  return TablePtr(t);
}

void write_output(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(o.out);
  if (!f) usage_error("cannot write '" + o.out + "'");
  f << text << "\n";
}

std::string csv_quote(const std::string& field) {
  std::string q = "\"";
  for (char c : field) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void write_csv(const std::string& path, const std::string& report_json) {
  auto report = nlohmann::ordered_json::parse(report_json);
  const auto& orbits = report.contains("orbits") && report["orbits"].is_object() ? report["orbits"]["orbits"] : report["orbits"];
  std::ofstream f(path);
  if (!f) usage_error("cannot write '" + path + "'");
  f << "index,A,w,size\n";
  std::size_t k = 0;
  for (const auto& orbit : orbits) f << k++ << "," << csv_quote(orbit["A"].dump()) << "," << csv_quote(orbit["w"].dump()) << "," << orbit["size"] << "\n";
}

int run_construct(const Options& o) {
  FieldPtr field = make_field(o);
  SeedPtr seed = make_seed(o, field.get());
  symlie_table* t = nullptr;
  check(symlie_table_construct(seed.get(), o.degree, &t));
  TablePtr table(t);
  char* json = nullptr;
  check(symlie_table_to_json(table.get(), &json));
  write_output(o, take(json));
  return kExitOk;
}

int run_graded(const Options& o) {
  FieldPtr field = make_field(o);
  SeedPtr seed = make_seed(o, field.get());
  symlie_table* t = nullptr;
  check(symlie_table_graded(seed.get(), o.max_degree, &t));
  TablePtr table(t);
  char* json = nullptr;
  check(symlie_table_to_json(table.get(), &json));
  write_output(o, take(json));
  return kExitOk;
}

int run_analyze(const Options& o) {
  TablePtr table;
  if (!o.tables.empty()) {
    table = load_table(o.tables.front());
  } else {
    FieldPtr field = make_field(o);
    SeedPtr seed = make_seed(o, field.get());
    symlie_table* t = nullptr;
    check(symlie_table_construct(seed.get(), o.degree, &t));
    table.reset(t);
  }
  char* json = nullptr;
  check(symlie_table_analyze(table.get(), &json));
  write_output(o, take(json));
  return kExitOk;
}

int run_classify(const Options& o) {
  FieldPtr field = make_field(o);
  SeedPtr seed = make_seed(o, field.get());
  char* json = nullptr;
  check(symlie_classify(seed.get(), o.degree, &json));
  write_output(o, take(json));
  return kExitOk;
}

int run_enumerate(const Options& o) {
  char* json = nullptr;
  if (!o.matrix.empty()) {
    FieldPtr field = make_field(o);
    MatrixPtr a = make_matrix(field.get(), o.matrix, "--matrix");
    check(symlie_eigendirections(a.get(), &json));
    write_output(o, take(json));
    return kExitOk;
  }
  if (!o.p) usage_error("enumerate needs --p (or --matrix for eigendirections)");
  if (o.degree > 0)
    check(symlie_iso_class_count(o.n, *o.p, o.degree, o.include_zero_w, o.budget, o.iso_budget, &json));
  else
    check(symlie_orbits(o.n, *o.p, o.include_zero_w, o.budget, &json));
  std::string report = take(json);
  if (!o.csv.empty()) write_csv(o.csv, report);
  write_output(o, report);
  return kExitOk;
}

int run_verify_iso(const Options& o) {
  if (o.tables.size() != 2) usage_error("verify-iso needs two table files");
  TablePtr src = load_table(o.tables[0]);
  TablePtr dst = load_table(o.tables[1]);
  char* json = nullptr;
  if (!o.matrix.empty()) {
    char* src_json = nullptr;
    check(symlie_table_to_json(src.get(), &src_json));
    std::string field_tag = nlohmann::json::parse(take(src_json))["field"].get<std::string>();
    symlie_field* f = nullptr;
    check(symlie_field_parse(field_tag.c_str(), &f));
    FieldPtr field(f);
    MatrixPtr map = make_matrix(field.get(), o.matrix, "--matrix");
    check(symlie_verify_hom(src.get(), dst.get(), map.get(), &json));
  } else {
    check(symlie_brute_force_iso(src.get(), dst.get(), o.budget, &json));
  }
  write_output(o, take(json));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solvable Lie algebras on symmetric powers"};
  app.require_subcommand(1);
  Options o;

  auto add_field = [&](CLI::App* cmd) {
    cmd->add_option("--field", o.field, "Q (default), Qi or Fp(p); --p alone means Fp(p)");
    cmd->add_option("--p", o.p, "prime characteristic");
  };
  auto add_seed = [&](CLI::App* cmd) {
    add_field(cmd);
    cmd->add_option("--matrix", o.matrix, "matrix A, inline or a JSON file");
    cmd->add_option("--w", o.w, "eigenvector w, inline or a JSON file");
  };
  auto add_out = [&](CLI::App* cmd) { cmd->add_option("--out", o.out, "write the JSON report here instead of stdout"); };

  auto* construct = app.add_subcommand("construct", "structure constants of the degree-d algebra");
  add_seed(construct);
  construct->add_option("--degree", o.degree, "degree d >= 1")->required();
  add_out(construct);

  auto* graded = app.add_subcommand("graded", "truncated graded algebra on degrees 0..D");
  add_seed(graded);
  graded->add_option("--max-degree", o.max_degree, "largest degree D")->required();
  add_out(graded);

  auto* analyze = app.add_subcommand("analyze", "Jacobi, series, center and fingerprint of a table");
  analyze->add_option("table", o.tables, "table JSON file");
  add_seed(analyze);
  analyze->add_option("--degree", o.degree, "degree when building from a seed");
  add_out(analyze);

  auto* classify = app.add_subcommand("classify", "two-variable classification over Q or Q(i)");
  add_seed(classify);
  classify->add_option("--degree", o.degree, "degree d >= 1")->required();
  add_out(classify);

  auto* enumerate = app.add_subcommand("enumerate", "finite-field orbits, iso classes or eigendirections");
  add_field(enumerate);
  enumerate->add_option("--n", o.n, "matrix size (default 2)");
  enumerate->add_option("--degree", o.degree, "also group orbits into isomorphism classes at this degree");
  enumerate->add_flag("--include-zero-w", o.include_zero_w, "include pairs with w = 0");
  enumerate->add_option("--budget", o.budget, "max number of (A, w) candidates");
  enumerate->add_option("--iso-budget", o.iso_budget, "max |GL_N(F_p)| for isomorphism search");
  enumerate->add_option("--matrix", o.matrix, "list eigendirections of this matrix instead");
  enumerate->add_option("--csv", o.csv, "write orbit sizes as CSV");
  add_out(enumerate);

  auto* verify = app.add_subcommand("verify-iso", "check a given map, or search one over F_p");
  verify->add_option("tables", o.tables, "source and target table JSON files")->expected(2);
  verify->add_option("--matrix", o.matrix, "candidate map (omit to search exhaustively)");
  verify->add_option("--budget", o.budget, "max |GL_N(F_p)| for the search");
  add_out(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (construct->parsed()) return run_construct(o);
    if (graded->parsed()) return run_graded(o);
    if (analyze->parsed()) return run_analyze(o);
    if (classify->parsed()) return run_classify(o);
    if (enumerate->parsed()) return run_enumerate(o);
    if (verify->parsed()) return run_verify_iso(o);
  } catch (const Failure& f) {
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
