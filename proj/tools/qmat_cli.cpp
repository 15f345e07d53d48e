// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qmat: command-line front end over the C interface.
//
// Exit status is 0 on success, 1 when the library reports a domain error and
// 2 for usage errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "qmat/qmat.h"

namespace {

struct DomainError : std::runtime_error {
  DomainError(qmat_status s, const std::string& msg)
      : std::runtime_error(std::string(qmat_status_name(s)) + ": " + msg) {}
};

void Check(qmat_status s) {
  if (s != QMAT_OK) throw DomainError(s, qmat_last_error());
}

struct TableDeleter {
  void operator()(qmat_rank_table* t) const { qmat_rank_table_free(t); }
};
struct GeneratorDeleter {
  void operator()(qmat_generator* g) const { qmat_generator_free(g); }
};
struct CdcDeleter {
  void operator()(qmat_cdc* c) const { qmat_cdc_free(c); }
};
struct StringDeleter {
  void operator()(char* s) const { qmat_string_free(s); }
};
using Table = std::unique_ptr<qmat_rank_table, TableDeleter>;
using Generator = std::unique_ptr<qmat_generator, GeneratorDeleter>;
using Cdc = std::unique_ptr<qmat_cdc, CdcDeleter>;
using Text = std::unique_ptr<char, StringDeleter>;

// Options shared by the verbs; each verb registers the subset it reads.
struct Options {
  int q = 2;
  int n = 0;
  int k = -1;
  int m = 1;
  int d = 0;
  int m_max = 1;
  int threads = 1;
  int n_from = 4;
  int n_to = 40;
  std::uint64_t seed = 0;
  std::string in;
  std::string out;
  std::string format = "json";
  bool random = false;
  bool list_patterns = false;
  bool corrected_uniform = false;
  bool sum_over_k = false;
};

std::string ReadInput(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError(QMAT_ERR_PARSE, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteOutput(const Options& o, const std::string& text) {
  if (o.out.empty() || o.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(o.out, std::ios::binary);
  if (!out) throw DomainError(QMAT_ERR_INVALID_ARGUMENT, "cannot write " + o.out);
  out << text;
}

void WriteOwned(const Options& o, char* raw) {
  Text text(raw);
  WriteOutput(o, text.get());
}

Table LoadTable(const Options& o) {
  qmat_rank_table* t = nullptr;
  Check(qmat_rank_table_from_json(ReadInput(o.in).c_str(), &t));
  return Table(t);
}

Cdc LoadCdc(const Options& o) {
  qmat_cdc* c = nullptr;
  Check(qmat_cdc_from_json(ReadInput(o.in).c_str(), &c));
  return Cdc(c);
}

void EmitTable(const Options& o, qmat_rank_table* raw) {
  Table t(raw);
  char* s = nullptr;
  Check(qmat_rank_table_to_json(t.get(), &s));
  WriteOwned(o, s);
}

CLI::App* Verb(CLI::App& app, const char* name, const char* help,
               Options& o) {
  CLI::App* sub = app.add_subcommand(name, help);
  sub->add_option("--out", o.out, "Output file (default standard output)");
  return sub;
}

void AddQnk(CLI::App* sub, Options& o) {
  sub->add_option("-q", o.q, "Field size")->required();
  sub->add_option("-n", o.n, "Ambient dimension")->required();
  sub->add_option("-k", o.k, "Dimension or rank")->required();
}

void AddIn(CLI::App* sub, Options& o) {
  sub->add_option("--in", o.in, "Input JSON file ('-' for standard input)");
}

int Run(int argc, char** argv) {
  CLI::App app{"q-matroids over finite fields"};
  app.require_subcommand(1);
  Options o;

  auto* qbinom = Verb(app, "qbinom", "Gaussian binomial coefficient", o);
  AddQnk(qbinom, o);
  qbinom->callback([&] {
    char* s = nullptr;
    Check(qmat_qbinom(o.n, o.k, o.q, &s));
    Text text(s);
    WriteOutput(o, std::string(text.get()) + "\n");
  });

  auto* subspaces =
      Verb(app, "enumerate-subspaces", "All k-subspaces in canonical order", o);
  AddQnk(subspaces, o);
  subspaces->callback([&] {
    char* s = nullptr;
    Check(qmat_enumerate_subspaces_json(o.q, o.n, o.k, &s));
    WriteOwned(o, s);
  });

  auto* uniform = Verb(app, "uniform", "Uniform q-matroid U_{k,n}", o);
  AddQnk(uniform, o);
  uniform->callback([&] {
    qmat_rank_table* t = nullptr;
    Check(qmat_uniform(o.q, o.n, o.k, &t));
    EmitTable(o, t);
  });

  auto* paving = Verb(app, "paving", "Paving q-matroid from a collection", o);
  AddIn(paving, o);
  paving->add_option("-k", o.k, "Rank (default: member dimension)");
  paving->callback([&] {
    qmat_rank_table* t = nullptr;
    Check(qmat_paving(ReadInput(o.in).c_str(), o.k, &t));
    EmitTable(o, t);
  });

  auto* check = Verb(app, "check", "Check the rank axioms", o);
  AddIn(check, o);
  check->callback([&] {
    Table t = LoadTable(o);
    char* s = nullptr;
    Check(qmat_check_axioms(t.get(), nullptr, &s));
    WriteOwned(o, s);
  });

  auto* dual = Verb(app, "dual", "Dual q-matroid", o);
  AddIn(dual, o);
  dual->callback([&] {
    Table t = LoadTable(o);
    qmat_rank_table* d = nullptr;
    Check(qmat_dualize(t.get(), &d));
    EmitTable(o, d);
  });

  auto* structure =
      Verb(app, "structure", "Independents, bases, circuits and loops", o);
  AddIn(structure, o);
  structure->callback([&] {
    Table t = LoadTable(o);
    char* s = nullptr;
    Check(qmat_structure_json(t.get(), &s));
    WriteOwned(o, s);
  });

  auto* from_gen =
      Verb(app, "from-generator", "q-matroid of a generator matrix", o);
  AddIn(from_gen, o);
  from_gen->add_flag("--random", o.random, "Draw a random full-rank generator");
  from_gen->add_option("-q", o.q, "Ground field size (with --random)");
  from_gen->add_option("-n", o.n, "Length (with --random)");
  from_gen->add_option("-k", o.k, "Dimension (with --random)");
  from_gen->add_option("-m", o.m, "Extension degree (with --random)");
  from_gen->add_option("--seed", o.seed, "Seed (with --random)");
  from_gen->callback([&] {
    qmat_generator* raw = nullptr;
    if (o.random) {
      Check(qmat_generator_random(o.q, o.m, o.n, o.k, o.seed, &raw));
    } else {
      Check(qmat_generator_from_json(ReadInput(o.in).c_str(), &raw));
    }
    Generator g(raw);
    qmat_rank_table* t = nullptr;
    Check(qmat_from_generator(g.get(), &t));
    EmitTable(o, t);
  });

  auto* search = Verb(app, "search-rep", "Search for a representation", o);
  AddIn(search, o);
  search->add_option("--m-max", o.m_max, "Largest extension degree")
      ->required();
  search->add_option("--threads", o.threads, "Worker threads");
  search->callback([&] {
    Table t = LoadTable(o);
    char* s = nullptr;
    Check(qmat_search_representation_json(t.get(), o.m_max, o.threads, &s));
    WriteOwned(o, s);
  });

  auto* lifted = Verb(app, "lifted-mrd", "Lifted Gabidulin subspace code", o);
  AddQnk(lifted, o);
  lifted->add_option("--d", o.d, "Minimum subspace distance (even)")
      ->required();
  lifted->callback([&] {
    qmat_cdc* raw = nullptr;
    Check(qmat_lifted_mrd(o.q, o.n, o.k, o.d, &raw));
    Cdc c(raw);
    char* s = nullptr;
    Check(qmat_cdc_to_json(c.get(), &s));
    WriteOwned(o, s);
  });

  auto* cdc_distance =
      Verb(app, "cdc-distance", "Minimum subspace distance of a code", o);
  AddIn(cdc_distance, o);
  cdc_distance->callback([&] {
    Cdc c = LoadCdc(o);
    int size = 0, d = 0;
    Check(qmat_cdc_size(c.get(), &size));
    Check(qmat_cdc_min_distance(c.get(), &d));
    WriteOutput(o, "{\"codewords\":" + std::to_string(size) +
                       ",\"min_distance\":" + std::to_string(d) + "}\n");
  });

  auto* cdc_paving =
      Verb(app, "cdc-to-paving", "Paving q-matroid of a subspace code", o);
  AddIn(cdc_paving, o);
  cdc_paving->callback([&] {
    Cdc c = LoadCdc(o);
    qmat_rank_table* t = nullptr;
    Check(qmat_cdc_to_paving(c.get(), &t));
    EmitTable(o, t);
  });

  auto* sweep = Verb(app, "zero-sweep", "Zero patterns of the determinant system", o);
  AddQnk(sweep, o);
  sweep->add_option("-m", o.m, "Extension degree")->required();
  sweep->add_option("--threads", o.threads, "Worker threads");
  sweep->add_flag("--list-patterns", o.list_patterns, "Include every pattern");
  sweep->callback([&] {
    char* s = nullptr;
    Check(qmat_zero_sweep_json(o.q, o.n, o.k, o.m, o.threads,
                               o.list_patterns ? 1 : 0, &s));
    WriteOwned(o, s);
  });

  auto* pattern = Verb(app, "pattern-of", "Zero pattern of a q-matroid", o);
  AddIn(pattern, o);
  pattern->callback([&] {
    Table t = LoadTable(o);
    char* s = nullptr;
    Check(qmat_pattern_of(t.get(), &s));
    Text text(s);
    WriteOutput(o, "{\"pattern\":\"" + std::string(text.get()) + "\"}\n");
  });

  auto* bounds = Verb(app, "bounds-table", "Asymptotic bound table", o);
  bounds->add_option("-q", o.q, "Field size")->required();
  bounds->add_option("--n-from", o.n_from, "First n");
  bounds->add_option("--n-to", o.n_to, "Last n");
  bounds->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  bounds->add_flag("--corrected-uniform", o.corrected_uniform,
                   "Use the uniform bound derived from the rank-k bound");
  bounds->add_flag("--sum-over-k", o.sum_over_k,
                   "Sum the rank-k bounds instead of the closed form");
  bounds->callback([&] {
    char* s = nullptr;
    Check(qmat_bounds_table(o.q, o.n_from, o.n_to, o.format == "csv" ? 1 : 0,
                            o.corrected_uniform ? 1 : 0, o.sum_over_k ? 1 : 0,
                            &s));
    WriteOwned(o, s);
  });

  auto* census = Verb(app, "rank1-census", "Count rank-1 q-matroids", o);
  census->add_option("-q", o.q, "Field size")->required();
  census->add_option("-n", o.n, "Ambient dimension")->required();
  census->add_option("--m-max", o.m_max, "Largest extension degree")
      ->required();
  census->add_option("--threads", o.threads, "Worker threads");
  census->callback([&] {
    char* s = nullptr;
    Check(qmat_rank1_census_json(o.q, o.n, o.m_max, o.threads, &s));
    WriteOwned(o, s);
  });

  auto* enumerate =
      Verb(app, "enumerate-qmatroids", "All q-matroids of rank at most k", o);
  AddQnk(enumerate, o);
  enumerate->callback([&] {
    char* s = nullptr;
    Check(qmat_enumerate_qmatroids_json(o.q, o.n, o.k, &s));
    WriteOwned(o, s);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << "\n" << app.help();
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return Run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
