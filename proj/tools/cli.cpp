#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "criteria.hpp"
#include "indec/codifferent.hpp"
#include "indec/factor.hpp"
#include "indec/forms.hpp"
#include "indec/ideal.hpp"
#include "indec/norms.hpp"
#include "indec/oracle.hpp"
#include "indec/quadratic.hpp"
#include "json.hpp"

namespace indec::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kSchema = 1;

json num(const Int& x) {
  if (fits_i64(x)) return to_i64(x);
  return x.get_str();
}

json coords(const Coords& c) { return json::array({num(c[0]), num(c[1]), num(c[2])}); }

json element(const OrderElement& x) {
  return {{"coords", coords(x.coords())}, {"family", std::string(to_string(x.field()->family))}, {"a", x.field()->a}};
}

json codiff(const CodifferentElement& d) {
  return {{"numerator", coords(d.numerator().coords())}, {"denominator", "fprime"}};
}

json quad(const QuadElement& x) { return json::array({num(x.x), num(x.y)}); }

std::string str_coords(const Coords& c) { return str(c[0]) + "," + str(c[1]) + "," + str(c[2]); }

std::string fixed(const Rat& q, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << q.get_d();
  return os.str();
}

// What a command produced: human text, a JSON document, CSV rows.
struct Output {
  std::ostringstream text;
  json doc = json::object();
  std::vector<std::vector<std::string>> csv;
  int code = kExitOk;
};

std::string csv_text(const std::vector<std::vector<std::string>>& rows) {
  std::string s;
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + r[i];
    s += "\n";
  }
  return s;
}

struct Common {
  std::string json_path;
  std::string csv_path;
  int threads = 0;
};

Exec exec_mode() { return thread_count() > 1 ? Exec::Parallel : Exec::Serial; }

std::vector<long> parse_list(const std::string& s) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      std::size_t pos = 0;
      out.push_back(std::stol(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      fail(ErrorKind::IllegalParameter, "not an integer list: '" + s + "'");
    }
  }
  return out;
}

Field field_of(const std::string& family, long a) { return make_field(parse_family(family), a); }

// --- field-info ---

void field_info(const std::string& family, long a, Output& o) {
  const Field f = field_of(family, a);
  o.doc["command"] = "field-info";
  o.doc["family"] = std::string(to_string(f->family));
  o.doc["a"] = a;
  o.doc["polynomial"] = json::array({1, num(f->c2), num(f->c1), num(f->c0)});
  o.doc["discriminant"] = num(f->discriminant());
  json roots = json::array();
  for (const auto& r : f->roots.roots) roots.push_back(fixed(r.mid(), 12));
  o.doc["roots"] = roots;
  const auto units = unit_generators(f);
  o.doc["fundamental_units"] = json::array({element(units.fundamental[0]), element(units.fundamental[1])});
  o.doc["totally_positive_units"] =
      json::array({element(units.totally_positive[0]), element(units.totally_positive[1])});
  o.text << f->describe() << "\n"
         << "discriminant " << f->discriminant() << "\n"
         << "roots " << roots[0].get<std::string>() << ", " << roots[1].get<std::string>() << ", "
         << roots[2].get<std::string>() << "\n"
         << "fundamental units " << units.fundamental[0].to_string() << ", " << units.fundamental[1].to_string() << "\n"
         << "totally positive units " << units.totally_positive[0].to_string() << ", "
         << units.totally_positive[1].to_string() << "\n";
  if (f->family == Family::SimplestCubic) {
    const auto mono = monogenicity_certificate(*f);
    o.doc["monogenicity"] = std::string(to_string(mono));
    o.doc["power_basis_maximal"] = power_basis_is_maximal(a);
    o.text << "monogenicity " << to_string(mono) << "\n"
           << "power basis maximal " << (power_basis_is_maximal(a) ? "yes" : "no") << "\n";
  }
  o.csv = {{"key", "value"}, {"family", std::string(to_string(f->family))}, {"a", std::to_string(a)},
           {"discriminant", f->discriminant().get_str()}};
}

// --- indecomposables ---

void indecomposables_cmd(const std::string& family, long a, bool verify, Output& o) {
  const Field f = field_of(family, a);
  const auto recs = indecomposables(f);
  json arr = json::array();
  o.csv.push_back({"kind", "i", "j", "v1", "v2", "v3", "norm", "certificate_trace"});
  o.text << std::left << std::setw(12) << "kind" << std::setw(6) << "i" << std::setw(6) << "j" << std::setw(28)
         << "element" << std::setw(12) << "norm"
         << "trace\n";
  for (const auto& r : recs) {
    const Int n = norm(r.element);
    json e = {{"kind", std::string(to_string(r.kind))}, {"i", r.i}, {"j", r.j}, {"element", element(r.element)},
              {"norm", num(n)}};
    std::string tr;
    if (r.certificate) {
      json c = codiff(r.certificate->delta);
      c["trace"] = r.certificate->trace;
      e["certificate"] = c;
      tr = std::to_string(r.certificate->trace);
    } else {
      e["certificate"] = nullptr;
    }
    arr.push_back(e);
    o.csv.push_back({std::string(to_string(r.kind)), std::to_string(r.i), std::to_string(r.j), str(r.element[0]),
                     str(r.element[1]), str(r.element[2]), n.get_str(), tr});
    o.text << std::left << std::setw(12) << to_string(r.kind) << std::setw(6) << r.i << std::setw(6) << r.j
           << std::setw(28) << r.element.to_string() << std::setw(12) << n.get_str() << (tr.empty() ? "-" : tr)
           << "\n";
  }
  o.doc["command"] = "indecomposables";
  o.doc["family"] = std::string(to_string(f->family));
  o.doc["a"] = a;
  o.doc["count"] = recs.size();
  o.doc["records"] = arr;
  o.text << recs.size() << " records\n";
  if (verify) {
    std::set<IdealHNF> inv, found;
    for (const auto& r : recs) inv.insert(ideal_hnf(r.element));
    for (const auto& x : indecomposables_by_search(f, exec_mode())) found.insert(ideal_hnf(x));
    const bool ok = inv == found;
    o.doc["oracle"] = {{"inventory_classes", inv.size()}, {"oracle_classes", found.size()}, {"match", ok}};
    o.text << "oracle: " << inv.size() << " inventory classes, " << found.size() << " oracle classes, "
           << (ok ? "match" : "MISMATCH") << "\n";
    if (!ok) o.code = kExitVerification;
  }
}

// --- min-trace ---

void min_trace_cmd(const std::string& family, long a, const std::string& elem, long tmax, Output& o) {
  const Field f = field_of(family, a);
  const auto v = parse_list(elem);
  require(v.size() == 3, ErrorKind::IllegalParameter, "--elem takes three coordinates");
  const OrderElement x(f, v[0], v[1], v[2]);
  const auto t = min_trace(x, tmax, exec_mode());
  o.doc["command"] = "min-trace";
  o.doc["element"] = element(x);
  o.doc["tmax"] = tmax;
  if (t) {
    o.doc["t"] = t->t;
    o.doc["witness"] = codiff(t->witness);
    o.text << "min trace " << t->t << " witness " << t->witness.numerator().to_string() << " / f'(rho)\n";
    o.csv = {{"v1", "v2", "v3", "t", "w1", "w2", "w3"},
             {str(x[0]), str(x[1]), str(x[2]), std::to_string(t->t), str(t->witness.numerator()[0]),
              str(t->witness.numerator()[1]), str(t->witness.numerator()[2])}};
  } else {
    o.doc["t"] = nullptr;
    o.doc["witness"] = nullptr;
    o.text << "no totally positive delta of trace <= " << tmax << "\n";
    o.csv = {{"v1", "v2", "v3", "t"}, {str(x[0]), str(x[1]), str(x[2]), ""}};
  }
}

// --- count-norms ---

void count_norms_cmd(long a, long X, const std::string& method, bool include_unit, Output& o) {
  o.doc["command"] = "count-norms";
  o.doc["a"] = a;
  o.doc["x"] = X;
  o.doc["method"] = method;
  o.doc["include_unit"] = include_unit;
  std::size_t count = 0;
  if (method == "fast") {
    const auto fc = count_fast(a, X, include_unit, exec_mode());
    count = fc.count();
    o.doc["w_max"] = fc.w_max;
    json pairs = json::array();
    for (const auto& p : fc.pairs) pairs.push_back(json::array({p.k, p.w}));
    o.doc["pairs"] = pairs;
    o.text << "w_max " << fc.w_max << "\n";
  } else if (method == "exact") {
    count = count_exact(a, X, include_unit, exec_mode());
  } else if (method == "brute") {
    count = count_bruteforce(a, X, include_unit, exec_mode());
  } else {
    fail(ErrorKind::IllegalParameter, "unknown method '" + method + "'");
  }
  o.doc["count"] = count;
  o.text << method << " count " << count << "\n";
  o.csv = {{"a", "x", "method", "count"}, {std::to_string(a), std::to_string(X), method, std::to_string(count)}};
}

// --- checkpoints ---

json load_checkpoint(const std::string& path) {
  if (path.empty()) return json::object();
  std::ifstream in(path);
  if (!in) return json::object();
  try {
    json j = json::parse(in);
    if (j.value("schema", 0) == kSchema && j.contains("completed") && j["completed"].is_object()) return j;
  } catch (const json::exception&) {
  }
  fail(ErrorKind::IllegalParameter, "unreadable checkpoint '" + path + "'");
}

void save_checkpoint(const std::string& path, json& cp) {
  if (path.empty()) return;
  cp["schema"] = kSchema;
  std::ofstream out(path + ".tmp");
  out << cp.dump(1) << "\n";
  out.close();
  std::rename((path + ".tmp").c_str(), path.c_str());
}

// --- sq-table ---

void sq_table_cmd(long a_min, long a_max, bool all, const std::string& resume, Output& o) {
  require(a_min <= a_max, ErrorKind::IllegalParameter, "--a-min exceeds --a-max");
  json cp = load_checkpoint(resume);
  if (!cp.contains("completed")) cp["completed"] = json::object();
  std::vector<SqRow> rows;
  for (long a = a_min; a <= a_max; ++a) {
    const std::string key = std::to_string(a);
    if (cp["completed"].contains(key)) {
      const auto& c = cp["completed"][key];
      rows.push_back({a, c[0].get<long>(), c[1].get<long>(), c[2].get<bool>()});
      continue;
    }
    const auto r = sq_table(a, a, exec_mode()).at(0);
    rows.push_back(r);
    cp["completed"][key] = json::array({r.sq, r.records, r.maximal});
    save_checkpoint(resume, cp);
  }
  o.doc["command"] = "sq-table";
  o.doc["a_min"] = a_min;
  o.doc["a_max"] = a_max;
  json arr = json::array();
  if (all) {
    o.csv.push_back({"a", "sq", "records", "maximal"});
    o.text << std::left << std::setw(6) << "a" << std::setw(8) << "sq" << std::setw(9) << "records"
           << "maximal\n";
  } else {
    o.csv.push_back({"a", "sq"});
    o.text << std::left << std::setw(6) << "a"
           << "sq\n";
  }
  for (const auto& r : rows) {
    if (!all && !r.maximal) continue;
    arr.push_back({{"a", r.a}, {"sq", r.sq}, {"records", r.records}, {"maximal", r.maximal}});
    if (all) {
      o.csv.push_back({std::to_string(r.a), std::to_string(r.sq), std::to_string(r.records), r.maximal ? "1" : "0"});
      o.text << std::left << std::setw(6) << r.a << std::setw(8) << r.sq << std::setw(9) << r.records
             << (r.maximal ? "yes" : "no") << "\n";
    } else {
      o.csv.push_back({std::to_string(r.a), std::to_string(r.sq)});
      o.text << std::left << std::setw(6) << r.a << r.sq << "\n";
    }
  }
  o.doc["rows"] = arr;
}

// --- bounds ---

void bounds_cmd(const std::string& family, long a, Output& o) {
  const auto r = rank_report(field_of(family, a), exec_mode());
  auto opt = [](const std::optional<Int>& x) { return x ? num(*x) : json(nullptr); };
  o.doc["command"] = "bounds";
  o.doc["family"] = std::string(to_string(r.family));
  o.doc["a"] = a;
  o.doc["n"] = num(r.n);
  o.doc["m"] = opt(r.m);
  o.doc["m_quoted"] = opt(r.m_quoted);
  o.doc["s_count"] = num(r.s_count);
  o.doc["upper_diag"] = num(r.upper_diag);
  o.doc["lower_classical"] = num(r.lower_classical);
  o.doc["lower_diag"] = opt(r.lower_diag);
  o.doc["lower_diag_quoted"] = opt(r.lower_diag_quoted);
  o.doc["lower_nonclassical"] = {{"coefficient", r.lower_nonclassical.coefficient.get_str()},
                                 {"radicand", num(r.lower_nonclassical.radicand)},
                                 {"ceiling", num(r.lower_nonclassical.ceiling)},
                                 {"expression", r.lower_nonclassical.to_string()}};
  o.doc["enumerated"] = r.enumerated;
  auto s = [](const std::optional<Int>& x) { return x ? x->get_str() : std::string("-"); };
  o.text << "family " << to_string(r.family) << ", a = " << a << "\n"
         << "trace-one elements n          " << r.n << (r.enumerated ? " (enumerated)" : " (closed form)") << "\n"
         << "trace-two indecomposables m   " << s(r.m) << (r.m_quoted ? "  quoted " + s(r.m_quoted) : "") << "\n"
         << "classes mod unit squares      " << r.s_count << "\n"
         << "diagonal universal rank <=    " << r.upper_diag << "\n"
         << "classical rank >=             " << r.lower_classical << "\n"
         << "diagonal rank >=              " << s(r.lower_diag)
         << (r.lower_diag_quoted ? "  quoted " + s(r.lower_diag_quoted) : "") << "\n"
         << "non-classical rank >=         " << r.lower_nonclassical.to_string() << " -> "
         << r.lower_nonclassical.ceiling << "\n";
  o.csv = {{"family", "a", "n", "m", "s_count", "upper_diag", "lower_classical", "lower_diag", "lower_nonclassical"},
           {std::string(to_string(r.family)), std::to_string(a), r.n.get_str(), s(r.m), r.s_count.get_str(),
            r.upper_diag.get_str(), r.lower_classical.get_str(), s(r.lower_diag),
            r.lower_nonclassical.ceiling.get_str()}};
}

// --- quadratic ---

void quadratic_cmd(long D, bool certify, Output& o) {
  const auto cf = cf_expand(D);
  const auto& f = cf.field;
  const auto counts = quad_counts(cf);
  json period = json::array();
  std::string pstr;
  for (const auto& u : cf.period) {
    period.push_back(num(u));
    pstr += (pstr.empty() ? "" : ",") + u.get_str();
  }
  o.doc["command"] = "quadratic";
  o.doc["D"] = D;
  o.doc["u0"] = num(cf.u0);
  o.doc["period"] = period;
  o.doc["n"] = num(counts.n);
  o.doc["s_count"] = num(counts.s_count);
  o.doc["n_display"] = num(counts.n_display);
  o.doc["s_count_display"] = num(counts.s_count_display);
  o.text << "xi = [" << cf.u0 << "; " << pstr << "], s = " << cf.s() << "\n"
         << "n = " << counts.n << " (closed form " << counts.n_display << "), #S = " << counts.s_count
         << " (closed form " << counts.s_count_display << ")\n";
  json inv = json::array();
  o.csv.push_back({"i", "r", "conjugate", "x", "y", "norm"});
  for (const auto& r : indecomposables_quadratic(cf, f.discriminant())) {
    const Int n = norm(f, r.element);
    inv.push_back({{"i", r.i}, {"r", r.r}, {"conjugate", r.conjugate}, {"element", quad(r.element)}, {"norm", num(n)}});
    o.csv.push_back({std::to_string(r.i), std::to_string(r.r), r.conjugate ? "1" : "0", r.element.x.get_str(),
                     r.element.y.get_str(), n.get_str()});
    o.text << "  alpha(" << r.i << "," << r.r << ")" << (r.conjugate ? "'" : " ") << " = " << r.element.to_string()
           << "  norm " << n << "\n";
  }
  o.doc["inventory"] = inv;
  if (certify) {
    bool ok = true;
    json certs = json::array();
    for (long i = -1; i < 2 * cf.s(); i += 2) {
      const auto t = trace_one_delta(cf, i);
      bool good = is_totally_positive(f, t.delta);
      for (Int k = 0; k <= cf.u(i + 2); ++k) good = good && trace_pairing(f, t.delta, semiconvergent(cf, i, k)) == 1;
      ok = ok && good;
      certs.push_back({{"i", i}, {"gamma", quad(t.delta.gamma)}, {"scaling", t.scaling}, {"rejected", t.rejected},
                       {"pass", good}});
      o.text << "  delta_" << i << " = " << t.delta.gamma.to_string() << " / sqrt(disc)  [" << t.scaling << "] "
             << (good ? "ok" : "FAILED") << "\n";
    }
    std::set<QuadHNF> a, b;
    for (const auto& r : indecomposables_quadratic(cf, f.discriminant())) a.insert(quad_ideal_hnf(f, r.element));
    for (const auto& x : quad_indecomposables_by_search(cf, exec_mode()))
      if (norm(f, x) <= f.discriminant()) b.insert(quad_ideal_hnf(f, x));
    const bool match = a == b;
    ok = ok && match;
    o.doc["certificates"] = certs;
    o.doc["oracle_match"] = match;
    o.text << "oracle: " << (match ? "match" : "MISMATCH") << "\n";
    if (!ok) o.code = kExitVerification;
  }
}

// --- verify ---

using Runner = std::function<criteria::Result(const std::vector<long>&)>;

void verify_cmd(const std::string& suite, const std::string& a_list, const std::string& resume, Output& o) {
  namespace cr = criteria;
  const Exec ex = exec_mode();
  const std::vector<long> override = a_list.empty() ? std::vector<long>{} : parse_list(a_list);
  auto params = [&](const std::vector<long>& dflt) { return override.empty() ? dflt : override; };
  // (key, parameter list, runner); parametrised criteria run one value at a time
  struct Job {
    int id;
    std::vector<long> values;
    Runner run;
  };
  std::vector<Job> jobs;
  auto add_fixed = [&](int id, std::function<cr::Result()> f) {
    jobs.push_back({id, {}, [f](const std::vector<long>&) { return f(); }});
  };
  const std::set<std::string> suites = {"inventory", "traces", "counts", "quadratic", "forms", "identities", "all"};
  require(suites.count(suite) == 1, ErrorKind::IllegalParameter, "unknown suite '" + suite + "'");
  const bool all = suite == "all";
  if (all || suite == "counts") add_fixed(1, [ex] { return cr::sq_rows(ex); });
  if (all || suite == "inventory")
    jobs.push_back({2, params(cr::default_simplest_set()), [ex](const auto& v) { return cr::inventory_equivalence(v, ex); }});
  if (all || suite == "traces") {
    jobs.push_back({3, params(cr::default_simplest_set()), [ex](const auto& v) { return cr::trace_certificates(v, ex); }});
    add_fixed(4, [ex] { return cr::other_families(ex); });
  }
  if (all || suite == "counts") {
    jobs.push_back({5, params(cr::default_count_set()), [ex](const auto& v) { return cr::norm_counts(v, ex); }});
    add_fixed(6, [ex] { return cr::scaling(ex); });
  }
  if (all || suite == "forms") add_fixed(7, [] { return cr::rank_formulas(); });
  if (all || suite == "quadratic")
    jobs.push_back({8, params(cr::default_quadratic_set()), [ex](const auto& v) { return cr::quadratic_suite(v, ex); }});
  if (all || suite == "identities") add_fixed(9, [ex] { return cr::identities(ex); });
  if (all || suite == "forms") add_fixed(10, [ex] { return cr::universality(ex); });
  std::sort(jobs.begin(), jobs.end(), [](const Job& x, const Job& y) { return x.id < y.id; });

  json cp = load_checkpoint(resume);
  if (!cp.contains("completed")) cp["completed"] = json::object();
  json results = json::array();
  o.csv.push_back({"criterion", "parameter", "name", "pass", "detail"});
  auto record = [&](const std::string& key, const std::string& param, cr::Result r) {
    json entry = {{"criterion", r.id}, {"parameter", param}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}};
    results.push_back(entry);
    o.csv.push_back({std::to_string(r.id), param, r.name, r.pass ? "1" : "0", "\"" + r.detail + "\""});
    o.text << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << (param.empty() ? "" : " (" + param + ")") << " " << r.name
           << ": " << r.detail << "\n";
    if (!r.pass) o.code = kExitVerification;
    cp["completed"][key] = entry;
    save_checkpoint(resume, cp);
  };
  for (const auto& job : jobs) {
    std::vector<std::vector<long>> runs;
    if (job.values.empty()) runs.push_back({});
    for (long v : job.values) runs.push_back({v});
    for (const auto& run : runs) {
      const std::string param = run.empty() ? "" : std::to_string(run[0]);
      const std::string key = std::to_string(job.id) + (param.empty() ? "" : ":" + param);
      if (cp["completed"].contains(key)) {
        const auto& e = cp["completed"][key];
        cr::Result r;
        r.id = e["criterion"].get<int>();
        r.name = e["name"].get<std::string>();
        r.pass = e["pass"].get<bool>();
        r.detail = e["detail"].get<std::string>();
        record(key, param, r);
        continue;
      }
      record(key, param, job.run(run));
    }
  }
  o.doc["command"] = "verify";
  o.doc["suite"] = suite;
  o.doc["results"] = results;
  o.doc["pass"] = o.code == kExitOk;
}

std::string exit_code_help() {
  std::string s =
      "Exit codes:\n"
      "  0   success\n"
      "  1   a verification failed\n"
      "  2   usage error\n"
      "  3   cannot write an output file\n";
  for (int k = 0; k <= static_cast<int>(ErrorKind::Internal); ++k) {
    const std::string code = std::to_string(kExitLibraryBase + k);
    s += "  " + code + std::string(4 - code.size(), ' ') + std::string(to_string(static_cast<ErrorKind>(k))) + "\n";
  }
  s += "Environment:\n  INDEC_THREADS  worker count when --threads is not given\n";
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Indecomposable integers, norm counts and universal forms in cubic and quadratic orders", "indec"};
  app.footer(exit_code_help());
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--json", common.json_path, "write the result as JSON to this file");
  app.add_option("--csv", common.csv_path, "write the result as CSV to this file");
  app.add_option("--threads", common.threads, "worker threads (default: INDEC_THREADS or all cores)")
      ->check(CLI::PositiveNumber);

  std::string family = "simplest", elem, method = "fast", suite, a_list, resume;
  long a = 0, X = 0, tmax = kDefaultTraceCap, a_min = -1, a_max = 50, D = 0;
  bool verify_oracle = false, include_unit = false, all_rows = false, certify = false;
  const std::vector<std::string> families = {"simplest", "ennola", "thomas"};

  auto* fi = app.add_subcommand("field-info", "polynomial, roots, units and certificates of a family member");
  fi->add_option("--family", family)->check(CLI::IsMember(families));
  fi->add_option("--a", a, "family parameter")->required();

  auto* ind = app.add_subcommand("indecomposables", "closed-form indecomposables up to totally positive units");
  ind->add_option("--family", family)->check(CLI::IsMember(families));
  ind->add_option("--a", a)->required();
  ind->add_flag("--verify-oracle", verify_oracle, "compare with the brute-force enumeration");

  auto* mt = app.add_subcommand("min-trace", "least Tr(alpha delta) over totally positive codifferent elements");
  mt->add_option("--family", family)->check(CLI::IsMember(families));
  mt->add_option("--a", a)->required();
  mt->add_option("--elem", elem, "coordinates v1,v2,v3 in the basis 1, rho, rho^2")->required();
  mt->add_option("--tmax", tmax, "largest trace tried")->check(CLI::PositiveNumber);

  auto* cn = app.add_subcommand("count-norms", "principal ideals of norm <= X in the simplest cubic order");
  cn->add_option("--a", a)->required();
  cn->add_option("--x", X)->required();
  cn->add_option("--method", method)->check(CLI::IsMember({"fast", "exact", "brute"}));
  cn->add_flag("--include-unit", include_unit, "count the unit ideal too");

  auto* sq = app.add_subcommand("sq-table", "indecomposables of squarefree norm for a range of a");
  sq->add_option("--a-min", a_min);
  sq->add_option("--a-max", a_max);
  sq->add_flag("--all", all_rows, "include a where Z[rho] is not the maximal order");
  sq->add_option("--resume", resume, "checkpoint file of completed a values");

  auto* bd = app.add_subcommand("bounds", "rank bounds for universal quadratic forms");
  bd->add_option("--family", family)->check(CLI::IsMember(families));
  bd->add_option("--a", a)->required();

  auto* qd = app.add_subcommand("quadratic", "continued fraction, indecomposables and counts of Q(sqrt D)");
  qd->add_option("--d", D)->required();
  qd->add_flag("--certify", certify, "check the trace-one certificates and the enumeration");

  auto* vf = app.add_subcommand("verify", "run a verification suite");
  vf->add_option("--suite", suite)
      ->required()
      ->check(CLI::IsMember({"inventory", "traces", "counts", "quadratic", "forms", "identities", "all"}));
  vf->add_option("--a-list", a_list, "comma-separated parameters overriding the suite's defaults");
  vf->add_option("--resume", resume, "checkpoint file of completed checks");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int c = app.exit(e, out, err);
    return c == 0 ? kExitOk : kExitUsage;
  }

  if (common.threads > 0) set_thread_count(common.threads);

  Output o;
  try {
    if (fi->parsed()) field_info(family, a, o);
    else if (ind->parsed()) indecomposables_cmd(family, a, verify_oracle, o);
    else if (mt->parsed()) min_trace_cmd(family, a, elem, tmax, o);
    else if (cn->parsed()) count_norms_cmd(a, X, method, include_unit, o);
    else if (sq->parsed()) sq_table_cmd(a_min, a_max, all_rows, resume, o);
    else if (bd->parsed()) bounds_cmd(family, a, o);
    else if (qd->parsed()) quadratic_cmd(D, certify, o);
    else if (vf->parsed()) verify_cmd(suite, a_list, resume, o);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitLibraryBase + static_cast<int>(e.kind());
  }

  json doc = {{"schema", kSchema}};
  doc.update(o.doc);
  out << o.text.str();
  if (!common.json_path.empty()) {
    std::ofstream f(common.json_path);
    if (!(f << doc.dump(2) << "\n")) {
      err << "error: cannot write " << common.json_path << "\n";
      return kExitIO;
    }
  }
  if (!common.csv_path.empty()) {
    std::ofstream f(common.csv_path);
    if (!(f << csv_text(o.csv))) {
      err << "error: cannot write " << common.csv_path << "\n";
      return kExitIO;
    }
  }
  return o.code;
}

}  // namespace indec::cli
