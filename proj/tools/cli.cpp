#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gwq/class_syntax.hpp"
#include "gwq/errors.hpp"
#include "gwq/gwengine.hpp"
#include "gwq/quotientcmp.hpp"
#include "gwq/schubert.hpp"

namespace gwq::cli {

using json = nlohmann::ordered_json;

namespace {

QuotientFamily parse_family(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw ParameterError("family must look like torus:m,n or grass:m,n, got '" + std::string(text) + "'");
  std::string kind(text.substr(0, colon));
  std::string rest(text.substr(colon + 1));
  int m = 0, n = 0;
  char comma = 0, extra = 0;
  std::istringstream is(rest);
  if (!(is >> m >> comma >> n) || comma != ',' || (is >> extra))
    throw ParameterError("bad family parameters '" + rest + "'");
  if (kind == "torus") return make_family(FamilyKind::TorusPair, m, n);
  if (kind == "grass") return make_family(FamilyKind::GrassmannQuot, m, n);
  throw ParameterError("unknown family kind '" + kind + "'");
}

Partition parse_partition(std::string_view text) {
  std::string s(text);
  std::erase_if(s, [](char c) { return c == '(' || c == ')' || c == ' '; });
  std::vector<int> parts;
  if (!s.empty()) {
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        parts.push_back(v);
      } catch (const std::logic_error&) {
        throw ParameterError("bad partition '" + std::string(text) + "'");
      }
    }
  }
  return Partition(parts);
}

std::string partition_text(const Partition& p) {
  std::string s;
  for (int x : p.parts()) {
    if (!s.empty()) s += ',';
    s += std::to_string(x);
  }
  return s;
}

long parse_degree(std::string_view text) {
  try {
    std::size_t used = 0;
    long d = std::stol(std::string(text), &used);
    if (used == text.size()) return d;
  } catch (const std::logic_error&) {
  }
  throw ParameterError("bad degree '" + std::string(text) + "'");
}

const char* format_name(Format f) { return f == Format::Json ? "json" : "csv"; }

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

}  // namespace

const char* command_name(Command c) {
  switch (c) {
    case Command::Compute: return "compute";
    case Command::Compare: return "compare";
    case Command::Dlambda: return "dlambda";
    case Command::Table: return "table";
    case Command::Ledger: return "ledger";
  }
  return "?";
}

JobSpec parse_job(const std::vector<std::string>& args) {
  CLI::App app{"Genus-0 Gromov-Witten invariants and GIT quotient comparisons", "gwq"};
  app.require_subcommand(1);

  JobSpec job;
  std::string format;
  std::size_t slot = 0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--output,-o", job.output, "write the report here instead of stdout");
    sub->add_flag("--timing", job.timing, "report wall time in timing_ms");
  };

  auto* compute = app.add_subcommand("compute", "GW_{X,A}(insertions), genus 0");
  compute->add_option("--model", job.model, "P2, P1xP1, Gr(2,4)")->required();
  compute->add_option("--degree", job.degree, "curve class: 3 or 1,1")->required();
  compute->add_option("--insert", job.insertions, "class list, e.g. pt*8 or H^2,s[1]")->required();
  common(compute);

  auto* compare = app.add_subcommand("compare", "both sides of the quotient comparison");
  compare->add_option("--family", job.family, "torus:m,n or grass:m,n")->required();
  compare->add_option("--degree", job.degree, "degree d upstairs")->required();
  compare->add_option("--insert", job.insertions, "downstairs class list")->required();
  compare->add_option("--slot", slot, "1-based insertion that carries the slice class")
      ->check(CLI::PositiveNumber);
  compare->add_flag("--probe-slots", job.probe_slots, "also evaluate with zeta in every slot");
  common(compare);

  auto* dl = app.add_subcommand("dlambda", "d(lambda) for Gr(m-n, m) -> P^{mn-1}");
  dl->add_option("--m", job.m)->required();
  dl->add_option("--n", job.n)->required();
  dl->add_option("--lambda", job.lambda, "partition, e.g. 2,1")->required();
  common(dl);

  auto* table = app.add_subcommand("table", "comparison sweep over degrees 1..max");
  table->add_option("--family", job.family)->required();
  table->add_option("--max-degree", job.max_degree)->required()->check(CLI::PositiveNumber);
  table->add_flag("--all", job.all, "every balanced insertion multiset, not only points");
  table->add_option("--max-points", job.max_points, "largest k swept by --all")
      ->check(CLI::Range(1, 12));
  common(table);

  auto* ledger = app.add_subcommand("ledger", "expected-dimension ledger");
  ledger->add_option("--family", job.family)->required();
  ledger->add_option("--genus", job.genus)->required()->check(CLI::NonNegativeNumber);
  ledger->add_option("--points", job.points)->required()->check(CLI::NonNegativeNumber);
  ledger->add_option("--degree", job.degree)->required();
  common(ledger);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::ParseError& e) {
    throw ParameterError(e.what());
  }

  if (compute->parsed()) job.command = Command::Compute;
  else if (compare->parsed()) job.command = Command::Compare;
  else if (dl->parsed()) job.command = Command::Dlambda;
  else if (table->parsed()) job.command = Command::Table;
  else job.command = Command::Ledger;

  if (format.empty()) job.format = job.command == Command::Table ? Format::Csv : Format::Json;
  else job.format = format == "csv" ? Format::Csv : Format::Json;

  switch (job.command) {
    case Command::Compute: {
      RingModel model = parse_model(job.model);
      job.model = model.id();
      job.degree = parse_curve_class(model, job.degree).to_string();
      job.insertions = format_class_list(model, parse_class_list(model, job.insertions));
      break;
    }
    case Command::Compare: {
      QuotientFamily fam = parse_family(job.family);
      job.family = fam.id();
      job.degree = std::to_string(parse_degree(job.degree));
      job.insertions =
          format_class_list(fam.downstairs, parse_class_list(fam.downstairs, job.insertions));
      if (slot > 0) job.slot = slot;
      break;
    }
    case Command::Dlambda:
      job.lambda = partition_text(parse_partition(job.lambda));
      break;
    case Command::Table:
      job.family = parse_family(job.family).id();
      if (!job.all) job.max_points = JobSpec{}.max_points;
      break;
    case Command::Ledger:
      job.family = parse_family(job.family).id();
      job.degree = std::to_string(parse_degree(job.degree));
      break;
  }
  return job;
}

std::vector<std::string> serialize(const JobSpec& job) {
  std::vector<std::string> a{command_name(job.command)};
  auto opt = [&](const char* flag, const std::string& v) {
    a.push_back(flag);
    a.push_back(v);
  };
  switch (job.command) {
    case Command::Compute:
      opt("--model", job.model);
      opt("--degree", job.degree);
      opt("--insert", job.insertions);
      break;
    case Command::Compare:
      opt("--family", job.family);
      opt("--degree", job.degree);
      opt("--insert", job.insertions);
      if (job.slot) opt("--slot", std::to_string(*job.slot));
      if (job.probe_slots) a.push_back("--probe-slots");
      break;
    case Command::Dlambda:
      opt("--m", std::to_string(job.m));
      opt("--n", std::to_string(job.n));
      opt("--lambda", job.lambda);
      break;
    case Command::Table:
      opt("--family", job.family);
      opt("--max-degree", std::to_string(job.max_degree));
      if (job.all) {
        a.push_back("--all");
        opt("--max-points", std::to_string(job.max_points));
      }
      break;
    case Command::Ledger:
      opt("--family", job.family);
      opt("--genus", std::to_string(job.genus));
      opt("--points", std::to_string(job.points));
      opt("--degree", job.degree);
      break;
  }
  opt("--format", format_name(job.format));
  if (!job.output.empty()) opt("--output", job.output);
  if (job.timing) a.push_back("--timing");
  return a;
}

namespace {

// Memo files live at $GW_CACHE_DIR/<model id>.tsv.
class CacheDir {
 public:
  CacheDir(EnginePool& pool, std::ostream& err) : pool_(pool), err_(err) {
    if (const char* d = std::getenv("GW_CACHE_DIR"); d && *d) dir_ = d;
  }

  void preload(const RingModel& model) {
    if (dir_.empty() || !model.divisor_generated()) return;
    auto path = file_for(model);
    std::ifstream in(path);
    if (!in) return;
    auto res = pool_.get(model).load_memo(in);
    if (!res.accepted)
      err_ << "gwq: warning: ignoring cache " << path.string() << ": " << one_line(res.warning) << '\n';
  }

  void save() {
    if (dir_.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    for (GwEngine* e : pool_.engines()) {
      if (e->memo().size() == 0) continue;
      auto path = file_for(e->model());
      auto tmp = path;
      tmp += ".tmp";
      {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) {
          err_ << "gwq: warning: cannot write cache " << path.string() << '\n';
          continue;
        }
        e->save_memo(out);
      }
      std::filesystem::rename(tmp, path, ec);
      if (ec) err_ << "gwq: warning: cannot write cache " << path.string() << '\n';
    }
  }

 private:
  std::filesystem::path file_for(const RingModel& model) const {
    return std::filesystem::path(dir_) / (model.id() + ".tsv");
  }

  EnginePool& pool_;
  std::ostream& err_;
  std::string dir_;
};

void preload_family(CacheDir& cache, const QuotientFamily& fam) {
  cache.preload(fam.upstairs);
  cache.preload(fam.downstairs);
  if (fam.kind == FamilyKind::GrassmannQuot) cache.preload(RingModel::projective(fam.m - 1));
}

json inputs_of(const JobSpec& job) {
  json in;
  switch (job.command) {
    case Command::Compute:
      in["model"] = job.model;
      in["degree"] = job.degree;
      in["insertions"] = job.insertions;
      break;
    case Command::Compare:
      in["family"] = job.family;
      in["degree"] = job.degree;
      in["insertions"] = job.insertions;
      in["slot"] = job.slot ? *job.slot : 1;
      in["probe_slots"] = job.probe_slots;
      break;
    case Command::Dlambda:
      in["m"] = job.m;
      in["n"] = job.n;
      in["lambda"] = job.lambda;
      break;
    case Command::Table:
      in["family"] = job.family;
      in["max_degree"] = job.max_degree;
      in["all"] = job.all;
      if (job.all) in["max_points"] = job.max_points;
      break;
    case Command::Ledger:
      in["family"] = job.family;
      in["genus"] = job.genus;
      in["points"] = job.points;
      in["degree"] = job.degree;
      break;
  }
  return in;
}

json ledger_json(const DimensionLedger& l) {
  json j;
  j["D_hat"] = l.D_hat;
  j["D_minus_dimG"] = l.D_minus_dimG;
  j["gap"] = l.gap;
  j["real_dim_2D"] = l.real_dim_2D ? json(*l.real_dim_2D) : json(nullptr);
  return j;
}

json report_json(const ComparisonReport& r) {
  json j;
  j["lhs"] = to_string(r.lhs);
  j["rhs"] = to_string(r.rhs);
  j["equal"] = r.equal;
  j["lhs_dim_ok"] = r.lhs_dim_ok;
  j["rhs_dim_ok"] = r.rhs_dim_ok;
  j["slot"] = r.slice_slot + 1;
  j["ledger"] = ledger_json(r.ledger);
  if (!r.rhs_by_slot.empty()) {
    json by = json::array();
    for (const auto& v : r.rhs_by_slot) by.push_back(to_string(v));
    j["rhs_by_slot"] = by;
    j["slots_agree"] = r.slots_agree.value_or(true);
  }
  j["warnings"] = r.warnings;
  return j;
}

struct TableRow {
  std::string family;
  long d;
  std::size_t k;
  std::string insertions;
  ComparisonReport report;
};

// Balanced insertion lists for degree d, highest codimension first so that
// slot 1 carries the largest class.
std::vector<std::vector<BasisClass>> sweep_lists(const QuotientFamily& fam, long d, bool all,
                                                 int max_points) {
  const RingModel& X = fam.downstairs;
  const CurveClass A = pushforward_class(fam, d);
  std::vector<std::vector<BasisClass>> lists;
  if (!all) {
    long dim = X.complex_dimension();
    long num = dim + X.c1_dot(A) - 3;
    if (dim > 1 && num >= 0 && num % (dim - 1) == 0)
      lists.emplace_back(static_cast<std::size_t>(num / (dim - 1)), X.point());
    return lists;
  }
  std::vector<BasisClass> classes;
  for (const auto& b : X.basis())
    if (b.codim() >= 2) classes.push_back(b);
  std::sort(classes.begin(), classes.end(), [](const BasisClass& a, const BasisClass& b) {
    return a.codim() != b.codim() ? a.codim() > b.codim() : a < b;
  });
  std::vector<BasisClass> cur;
  std::function<void(std::size_t, long)> rec = [&](std::size_t from, long codim) {
    if (!cur.empty() && codim == X.expected_dim(0, static_cast<int>(cur.size()), A))
      lists.push_back(cur);
    if (static_cast<int>(cur.size()) == max_points) return;
    for (std::size_t i = from; i < classes.size(); ++i) {
      cur.push_back(classes[i]);
      rec(i, codim + classes[i].codim());
      cur.pop_back();
    }
  };
  rec(0, 0);
  std::stable_sort(lists.begin(), lists.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return lists;
}

std::vector<TableRow> run_table(const JobSpec& job, EnginePool& pool) {
  QuotientFamily fam = parse_family(job.family);
  std::vector<TableRow> rows;
  ComparisonOptions opt;
  opt.pool = &pool;
  for (long d = 1; d <= job.max_degree; ++d) {
    for (const auto& list : sweep_lists(fam, d, job.all, job.max_points)) {
      try {
        rows.push_back({fam.id(), d, list.size(), format_class_list(fam.downstairs, list),
                        verify_comparison(fam, d, list, opt)});
      } catch (const UnsupportedError&) {
        // k != 3 on a genuine Grassmannian: not computable, not a row.
      }
    }
  }
  return rows;
}

Rational run_compute(const JobSpec& job, EnginePool& pool) {
  RingModel model = parse_model(job.model);
  CurveClass A = parse_curve_class(model, job.degree);
  auto ins = parse_class_list(model, job.insertions);
  if (model.kind() == ModelKind::Grassmannian) {
    if (ins.size() != 3)
      throw UnsupportedError("Grassmannian invariants are available for three insertions only");
    return gw0_grassmannian_3pt(model.params()[0], model.params()[1], ins[0].partition(),
                                ins[1].partition(), ins[2].partition(),
                                static_cast<int>(A.components[0]));
  }
  return pool.get(model).gw0(A, ins);
}

void emit(const JobSpec& job, std::ostream& out, EnginePool& pool, CacheDir& cache,
          bool& inequality, std::ostream& err) {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  json body;         // "value" or "report" member
  std::string key = "value";
  std::ostringstream csv;

  switch (job.command) {
    case Command::Compute: {
      cache.preload(parse_model(job.model));
      Rational v = run_compute(job, pool);
      body = to_string(v);
      csv << "model,degree,insertions,value\n"
          << csv_field(job.model) << ',' << csv_field(job.degree) << ','
          << csv_field(job.insertions) << ',' << to_string(v) << '\n';
      break;
    }
    case Command::Compare: {
      QuotientFamily fam = parse_family(job.family);
      preload_family(cache, fam);
      ComparisonOptions opt;
      opt.pool = &pool;
      opt.probe_all_slots = job.probe_slots;
      if (job.slot) opt.slice_slot = *job.slot - 1;
      long d = parse_degree(job.degree);
      auto ins = parse_class_list(fam.downstairs, job.insertions);
      if (opt.slice_slot >= ins.size()) throw ParameterError("--slot exceeds the number of insertions");
      ComparisonReport r = verify_comparison(fam, d, ins, opt);
      key = "report";
      body = report_json(r);
      csv << "family,d,k,insertions,lhs,rhs,equal\n"
          << csv_field(job.family) << ',' << d << ',' << ins.size() << ','
          << csv_field(job.insertions) << ',' << to_string(r.lhs) << ',' << to_string(r.rhs)
          << ',' << (r.equal ? "true" : "false") << '\n';
      if (!r.equal) {
        inequality = true;
        err << "gwq: error: comparison-inequality: lhs=" << to_string(r.lhs)
            << " rhs=" << to_string(r.rhs) << '\n';
      }
      break;
    }
    case Command::Dlambda: {
      DegCoefficient c = dlambda(parse_partition(job.lambda), job.m, job.n);
      body = to_string(c.value);
      csv << "m,n,lambda,value\n"
          << job.m << ',' << job.n << ',' << csv_field(job.lambda) << ',' << to_string(c.value)
          << '\n';
      break;
    }
    case Command::Table: {
      preload_family(cache, parse_family(job.family));
      auto rows = run_table(job, pool);
      body = json::array();
      csv << "family,d,k,insertions,lhs,rhs,equal\n";
      for (const auto& row : rows) {
        json j;
        j["family"] = row.family;
        j["d"] = row.d;
        j["k"] = row.k;
        j["insertions"] = row.insertions;
        j["lhs"] = to_string(row.report.lhs);
        j["rhs"] = to_string(row.report.rhs);
        j["equal"] = row.report.equal;
        body.push_back(j);
        csv << csv_field(row.family) << ',' << row.d << ',' << row.k << ','
            << csv_field(row.insertions) << ',' << to_string(row.report.lhs) << ','
            << to_string(row.report.rhs) << ',' << (row.report.equal ? "true" : "false") << '\n';
      }
      break;
    }
    case Command::Ledger: {
      QuotientFamily fam = parse_family(job.family);
      long d = parse_degree(job.degree);
      if (d < 0) throw ParameterError("degree must be non-negative");
      DimensionLedger l = dimension_ledger(fam, job.genus, job.points, d);
      key = "report";
      body = ledger_json(l);
      csv << "family,g,k,d,D_hat,D_minus_dimG,gap,real_dim_2D\n"
          << csv_field(job.family) << ',' << job.genus << ',' << job.points << ',' << d << ','
          << l.D_hat << ',' << l.D_minus_dimG << ',' << l.gap << ','
          << (l.real_dim_2D ? std::to_string(*l.real_dim_2D) : std::string()) << '\n';
      break;
    }
  }

  const double ms =
      std::chrono::duration<double, std::milli>(clock::now() - t0).count();
  if (job.format == Format::Csv) {
    out << csv.str();
    return;
  }
  json doc;
  doc["command"] = command_name(job.command);
  doc["inputs"] = inputs_of(job);
  doc[key] = body;
  doc["timing_ms"] = job.timing ? json(ms) : json(nullptr);
  out << doc.dump(2) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    JobSpec job = parse_job(args);
    EnginePool pool;
    CacheDir cache(pool, err);
    bool inequality = false;

    std::ostringstream buffer;
    emit(job, buffer, pool, cache, inequality, err);
    cache.save();

    if (job.output.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(job.output, std::ios::trunc);
      if (!file) throw ParameterError("cannot open output file '" + job.output + "'");
      file << buffer.str();
    }
    return inequality ? 1 : 0;
  } catch (const HelpRequested& h) {
    out << h.text;
    return 0;
  } catch (const ParameterError& e) {
    err << "gwq: error: parameter: " << one_line(e.what()) << '\n';
    return 2;
  } catch (const UnsupportedError& e) {
    err << "gwq: error: unsupported: " << one_line(e.what()) << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "gwq: error: internal: " << one_line(e.what()) << '\n';
    return 1;
  }
}

}  // namespace gwq::cli
