#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sigmaq/coherent.hpp"
#include "sigmaq/expr.hpp"
#include "sigmaq/fock.hpp"
#include "sigmaq/grassmann.hpp"
#include "sigmaq/limits.hpp"

using nlohmann::json;
using namespace sigmaq;

namespace {

constexpr const char* kSchemaVersion = "1.0.0";
constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRange = 3;

struct Output {
  std::string format = "text";  // text | json | csv
  std::string path;             // empty = stdout

  void emit(const std::string& body) const {
    if (path.empty()) {
      std::cout << body;
      return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << body;
  }
};

// "2..8" or "4" -> [lo, hi]; throws std::invalid_argument.
std::pair<int, int> parse_k_range(const std::string& text) {
  auto dots = text.find("..");
  auto to_int = [](const std::string& s) {
    size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad k value: " + s);
    return v;
  };
  int lo, hi;
  if (dots == std::string::npos) {
    lo = hi = to_int(text);
  } else {
    lo = to_int(text.substr(0, dots));
    hi = to_int(text.substr(dots + 2));
  }
  if (lo < 2 || hi < lo)
    throw std::invalid_argument("k range must satisfy 2 <= lo <= hi");
  return {lo, hi};
}

std::vector<double> parse_eps_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    double v = std::stod(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad eps: " + item);
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty eps schedule");
  for (size_t i = 0; i < out.size(); ++i) {
    if (out[i] <= 0.0)
      throw std::invalid_argument("eps values must be positive");
    if (i > 0 && out[i] >= out[i - 1])
      throw std::invalid_argument("eps schedule must be strictly decreasing");
  }
  return out;
}

json check_to_json(const CheckResult& c) {
  json j{{"label", c.label}, {"pass", c.pass}};
  if (!c.pass) {
    j["witness"] = {{"row", c.row}, {"col", c.col}, {"lhs", c.lhs},
                    {"rhs", c.rhs}};
  }
  return j;
}

json report_to_json(const std::string& name, const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(check_to_json(c));
  return json{{"name", name}, {"pass", r.all_pass()}, {"checks", checks}};
}

void print_report_text(std::ostream& os, const std::string& name,
                       const Report& r) {
  os << "  " << name << ": " << (r.all_pass() ? "PASS" : "FAIL") << "\n";
  for (const auto& c : r.checks) {
    os << "    [" << (c.pass ? "ok" : "FAIL") << "] " << c.label << "\n";
    if (!c.pass)
      os << "      at (" << c.row << "," << c.col << "): " << c.lhs
         << " != " << c.rhs << "\n";
  }
}

int cmd_verify(const std::string& krange, const Output& out) {
  auto [lo, hi] = parse_k_range(krange);
  bool all = true;
  json results = json::array();
  std::ostringstream text;
  for (int k = lo; k <= hi; ++k) {
    Report rel = verify_relations(k);
    Report adj = adjoint_check(k);
    Report real = realization_check(k);
    Report eig = eigenstate_check(k);
    bool pass = rel.all_pass() && adj.all_pass() && real.all_pass() &&
                eig.all_pass();
    all = all && pass;
    if (out.format == "json") {
      results.push_back(json{{"k", k},
                             {"pass", pass},
                             {"suites",
                              {report_to_json("relations", rel),
                               report_to_json("adjoint", adj),
                               report_to_json("realization", real),
                               report_to_json("eigenstate", eig)}}});
    } else {
      text << "k=" << k << ": " << (pass ? "PASS" : "FAIL") << "\n";
      print_report_text(text, "relations", rel);
      print_report_text(text, "adjoint", adj);
      print_report_text(text, "realization", real);
      print_report_text(text, "eigenstate", eig);
    }
  }
  if (out.format == "json") {
    json j{{"schema_version", kSchemaVersion},
           {"command", "verify"},
           {"pass", all},
           {"results", results}};
    out.emit(j.dump(2) + "\n");
  } else {
    text << (all ? "all checks passed" : "some checks FAILED") << "\n";
    out.emit(text.str());
  }
  return all ? kExitOk : kExitVerificationFailed;
}

int cmd_identity(int k, const std::string& convention, const Output& out) {
  if (k < 2 || k > 6)
    throw CLI::ValidationError("identity", "supported orders are 2..6");
  std::vector<ResolveResult> results;
  if (convention.empty()) {
    results = resolve_identity_sweep(k);
  } else {
    auto conv = parse_convention(convention);
    if (!conv)
      throw CLI::ValidationError("identity",
                                 "unknown convention id: " + convention);
    results.push_back(resolve_identity(k, *conv));
  }
  Measure mu = measure_mu(k);
  std::vector<std::string> passing;
  for (const auto& r : results)
    if (r.pass) passing.push_back(r.id);

  if (out.format == "json") {
    json per = json::array();
    for (const auto& r : results)
      per.push_back(json{{"convention", r.id}, {"pass", r.pass}});
    json coeffs = json::array();
    for (const auto& c : mu.coeffs) coeffs.push_back(c.str());
    json j{{"schema_version", kSchemaVersion},
           {"command", "identity"},
           {"k", k},
           {"passing_conventions", passing},
           {"mu_coefficients", coeffs},
           {"results", per}};
    out.emit(j.dump(2) + "\n");
  } else {
    std::ostringstream text;
    text << "k=" << k << " overcompleteness sweep\n";
    for (const auto& r : results)
      text << "  [" << (r.pass ? "ok" : "no") << "] " << r.id << "\n";
    text << "passing: " << passing.size() << "/" << results.size() << "\n";
    out.emit(text.str());
  }
  return passing.empty() ? kExitVerificationFailed : kExitOk;
}

int cmd_limit(int k, int r, int s, const std::string& eps_text,
              const Output& out) {
  if (k < 2) throw CLI::ValidationError("limit", "k must be >= 2");
  if (r < 0) throw CLI::ValidationError("limit", "r must be >= 0");
  if (s < 0 || s > k - 1)
    throw CLI::ValidationError("limit", "s must be in 0..k-1");
  std::vector<double> eps;
  try {
    eps = parse_eps_list(eps_text);
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError("limit", e.what());
  }
  std::vector<ConvergenceTable> tables = limit_suite(k, r, s, eps);
  bool pass = true;
  for (const auto& t : tables) pass = pass && t.slope_in(0.8, 1.2);

  if (out.format == "json") {
    json arr = json::array();
    for (const auto& t : tables) {
      json rows = json::array();
      for (const auto& row : t.rows)
        rows.push_back(json{{"eps", row.eps}, {"error", row.error}});
      json tj{{"k", t.k},     {"r", t.r},         {"s", t.s},
              {"family", t.family}, {"exact", t.exact}, {"rows", rows}};
      if (t.slope) tj["slope"] = *t.slope;
      arr.push_back(tj);
    }
    json j{{"schema_version", kSchemaVersion},
           {"command", "limit"},
           {"pass", pass},
           {"tables", arr}};
    out.emit(j.dump(2) + "\n");
  } else {
    std::ostringstream text;
    text << "k,r,s,family,eps,error,slope\n";
    for (const auto& t : tables) {
      std::ostringstream slope;
      if (t.exact)
        slope << "exact";
      else
        slope << *t.slope;
      for (const auto& row : t.rows)
        text << t.k << "," << t.r << "," << t.s << "," << t.family << ","
             << row.eps << "," << row.error << "," << slope.str() << "\n";
    }
    out.emit(text.str());
  }
  return pass ? kExitOk : kExitVerificationFailed;
}

int cmd_normalize(const std::string& source, int k, const Output& out) {
  if (k < 2) throw CLI::ValidationError("normalize", "k must be >= 2");
  ExprPtr ast = parse(source);
  NormalForm nf = normal_order(ast, k);
  OpMatrix lhs = eval_matrix(ast, k);
  OpMatrix rhs = eval_matrix(nf);
  bool agrees = (lhs == rhs);

  if (out.format == "json") {
    json residuals = json::array();
    for (const auto& r : nf.residuals)
      residuals.push_back(json{{"term", r.term_index},
                               {"position", r.position},
                               {"left", gen_name(r.left)},
                               {"right", gen_name(r.right)}});
    json j{{"schema_version", kSchemaVersion},
           {"command", "normalize"},
           {"k", k},
           {"input", source},
           {"normal_form", render(nf)},
           {"residual_crossings", residuals},
           {"rewrite_steps", nf.rewrite_steps},
           {"oracle_agrees", agrees}};
    out.emit(j.dump(2) + "\n");
  } else {
    std::ostringstream text;
    text << render(nf) << "\n";
    for (const auto& r : nf.residuals)
      text << "residual crossing in term " << r.term_index << " at position "
           << r.position << ": " << gen_name(r.left) << "*"
           << gen_name(r.right) << "\n";
    text << "oracle: " << (agrees ? "agrees" : "DISAGREES") << "\n";
    out.emit(text.str());
  }
  return agrees ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification workbench for the k-deformed oscillator "
               "algebra, its Grassmann calculus and coherent states"};
  app.require_subcommand(1);
  app.fallthrough();  // --format/--output may follow the subcommand

  Output out;
  if (const char* env = std::getenv("SIGMAQ_FORMAT")) out.format = env;
  app.add_option("--format", out.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--output", out.path, "write output to a file");

  std::string krange = "2..8";
  auto* verify = app.add_subcommand(
      "verify", "run the exact relation suites over a k range");
  verify->add_option("--k", krange, "order or range, e.g. 3 or 2..8");

  int ik = 2;
  std::string convention;
  auto* identity = app.add_subcommand(
      "identity", "resolve the overcompleteness integral exactly");
  identity->add_option("--k", ik, "order, 2..6")->required();
  identity->add_option("--convention", convention,
                       "single convention id (default: sweep all)");

  int lk = 3, lr = 1, ls = 0;
  std::string eps_text = "1e-2,1e-3,1e-4";
  auto* limit = app.add_subcommand(
      "limit", "convergence tables for the root-of-unity limits");
  limit->add_option("--k", lk, "order")->required();
  limit->add_option("--r", lr, "boson block index")->required();
  limit->add_option("--s", ls, "k-fermion level")->required();
  limit->add_option("--eps", eps_text, "decreasing schedule, comma separated");

  std::string source;
  int nk = 3;
  auto* normalize = app.add_subcommand(
      "normalize", "normal-order an operator expression and check it "
                   "against the Fock representation");
  normalize->add_option("expr", source, "expression text")->required();
  normalize->add_option("--k", nk, "order")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(krange, out);
    if (*identity) return cmd_identity(ik, convention, out);
    if (*limit) return cmd_limit(lk, lr, ls, eps_text, out);
    if (*normalize) return cmd_normalize(source, nk, out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error at position " << e.position() << ": " << e.what()
              << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::range_error& e) {
    std::cerr << "range error: " << e.what() << "\n";
    return kExitRange;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  return kExitUsage;
}
