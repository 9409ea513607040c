// riverlink: command-line surface for river words, class groups,
// intersection numbers, crossing geometry, the counting formula, loci,
// the C statistic, and the scan benchmark.

#include <cctype>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "riverlink/experiments.hpp"
#include "riverlink/forms.hpp"
#include "riverlink/geometry.hpp"
#include "riverlink/grosszagier.hpp"
#include "riverlink/intersect.hpp"
#include "riverlink/river.hpp"

namespace {

using nlohmann::json;
using namespace riverlink;

/// Argument-syntax problems; mapped to exit code 2 like parser errors.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Integer parse_integer(const std::string& token) {
  std::size_t i = (!token.empty() && (token[0] == '-' || token[0] == '+')) ? 1 : 0;
  if (i == token.size()) {
    throw usage_error("bad integer literal '" + token + "'");
  }
  for (std::size_t k = i; k < token.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(token[k]))) {
      throw usage_error("bad integer literal '" + token + "'");
    }
  }
  return Integer(token);
}

Pibqf parse_form(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
    throw usage_error("form literal must look like [A,B,C]: got '" + text + "'");
  }
  std::vector<std::string> parts(1);
  for (std::size_t k = 1; k + 1 < s.size(); ++k) {
    if (s[k] == ',') {
      parts.emplace_back();
    } else {
      parts.back().push_back(s[k]);
    }
  }
  if (parts.size() != 3) {
    throw usage_error("form literal must have three entries: got '" + text + "'");
  }
  return Pibqf{parse_integer(parts[0]), parse_integer(parts[1]),
               parse_integer(parts[2])};
}

std::string form_literal(const Pibqf& q) {
  return "[" + q.a.str() + "," + q.b.str() + "," + q.c.str() + "]";
}

std::string form_literal(const IntegerForm& f) {
  return "[" + f.a.str() + "," + f.b.str() + "," + f.c.str() + "]";
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

/// JSON value for a big integer: a number when it fits 64 bits, else a
/// decimal string.
json json_int(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream file(out_path);
  if (!file) {
    throw usage_error("cannot open output file '" + out_path + "'");
  }
  file << payload;
}

json sample_json(const LocusSample& s) {
  return json{{"class_rep", form_literal(s.partner_class)},
              {"bdelta", json_int(s.record.bdelta)},
              {"sign", s.record.sign},
              {"point_form", form_literal(s.record.point_form)},
              {"point",
               json{{"re", s.record.point.real()}, {"im", s.record.point.imag()}}},
              {"angle", s.record.angle},
              {"arc_distance", s.arc_distance}};
}

json cstat_json(const CStat& r) {
  return json{{"d1", json_int(r.d1)},   {"d2", json_int(r.d2)},
              {"int", r.int_total},     {"h1", r.h1},
              {"h2", r.h2},             {"r1", r.r1},
              {"r2", r.r2},             {"c", r.c}};
}

std::string cstat_csv_row(const CStat& r) {
  std::ostringstream os;
  os << r.d1 << "," << r.d2 << "," << r.int_total << "," << r.h1 << ","
     << r.h2 << "," << fmt(r.r1) << "," << fmt(r.r2) << "," << fmt(r.c)
     << "\n";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "riverlink: intersection numbers of closed modular geodesics from "
      "Conway-topograph river sequences"};
  app.require_subcommand(1);

  struct {
    std::string form;
    bool json = false;
    std::string out;
  } a_river;
  auto* c_river = app.add_subcommand(
      "river", "Cyclic river word of a form, e.g. river \"[1,2,-2]\"");
  c_river->add_option("form", a_river.form, "form literal [A,B,C]")->required();
  c_river->add_flag("--json", a_river.json, "JSON output");
  c_river->add_option("--out", a_river.out, "write output to a file");

  struct {
    std::string disc;
    bool json = false;
    bool csv = false;
    std::string out;
  } a_classgroup;
  auto* c_classgroup = app.add_subcommand(
      "classgroup", "Narrow class representatives of a discriminant");
  c_classgroup->add_option("discriminant", a_classgroup.disc, "discriminant D")
      ->required();
  c_classgroup->add_flag("--json", a_classgroup.json, "JSON output");
  c_classgroup->add_flag("--csv", a_classgroup.csv, "CSV output")
      ->excludes("--json");
  c_classgroup->add_option("--out", a_classgroup.out, "write output to a file");

  struct {
    std::string f1, f2;
    bool json = false;
    std::string out;
  } a_intersect;
  auto* c_intersect = app.add_subcommand(
      "intersect", "Intersection number of two closed geodesics");
  c_intersect->add_option("form1", a_intersect.f1, "first form literal")
      ->required();
  c_intersect->add_option("form2", a_intersect.f2, "second form literal")
      ->required();
  c_intersect->add_flag("--json", a_intersect.json, "JSON output");
  c_intersect->add_option("--out", a_intersect.out, "write output to a file");

  struct {
    std::string f1, f2;
    bool json = false;
    std::string out;
  } a_components;
  auto* c_components = app.add_subcommand(
      "components", "Intersection components (rs, ro, ls, lo)");
  c_components->add_option("form1", a_components.f1, "first form literal")
      ->required();
  c_components->add_option("form2", a_components.f2, "second form literal")
      ->required();
  c_components->add_flag("--json", a_components.json, "JSON output");
  c_components->add_option("--out", a_components.out, "write output to a file");

  struct {
    std::string f1, f2;
    bool json = false;
    std::string out;
  } a_cross;
  auto* c_cross = app.add_subcommand(
      "cross", "Crossing point, sign, and angle of two root geodesics");
  c_cross->add_option("form1", a_cross.f1, "first form literal")->required();
  c_cross->add_option("form2", a_cross.f2, "second form literal")->required();
  c_cross->add_flag("--json", a_cross.json, "JSON output");
  c_cross->add_option("--out", a_cross.out, "write output to a file");

  struct {
    std::string d1, d2;
    bool json = false;
    bool csv = false;
    std::string out;
  } a_pn;
  auto* c_pn = app.add_subcommand(
      "pn", "Table of p(n) counts over the admissible n range");
  c_pn->add_option("d1", a_pn.d1, "first discriminant")->required();
  c_pn->add_option("d2", a_pn.d2, "second discriminant")->required();
  c_pn->add_flag("--json", a_pn.json, "JSON output");
  c_pn->add_flag("--csv", a_pn.csv, "CSV output")->excludes("--json");
  c_pn->add_option("--out", a_pn.out, "write output to a file");

  struct {
    std::string d1, d2;
    std::string route = "auto";
    bool json = false;
    std::string out;
  } a_total;
  auto* c_total = app.add_subcommand(
      "total", "Total intersection number of two discriminants");
  c_total->add_option("d1", a_total.d1, "first discriminant")->required();
  c_total->add_option("d2", a_total.d2, "second discriminant")->required();
  c_total
      ->add_option("--route", a_total.route,
                   "auto (default), formula, or classes")
      ->check(CLI::IsMember({"auto", "formula", "classes"}));
  c_total->add_flag("--json", a_total.json, "JSON output");
  c_total->add_option("--out", a_total.out, "write output to a file");

  struct {
    std::string form, disc;
    std::size_t bins = 0;
    bool json = false;
    bool csv = false;
    std::string out;
  } a_locus;
  auto* c_locus = app.add_subcommand(
      "locus", "Realized crossings along one closed geodesic");
  c_locus->add_option("form", a_locus.form, "base form literal")->required();
  c_locus->add_option("discriminant", a_locus.disc, "partner discriminant")
      ->required();
  c_locus->add_option("--bins", a_locus.bins,
                      "emit an angle histogram with this many bins");
  c_locus->add_flag("--json", a_locus.json, "JSON output");
  c_locus->add_flag("--csv", a_locus.csv, "CSV output")->excludes("--json");
  c_locus->add_option("--out", a_locus.out, "write output to a file");

  struct {
    std::string d1, d2;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::int64_t d1_lo = 1, d1_hi = 2000;
    std::int64_t d2_lo = 1, d2_hi = 100000;
    bool json = false;
    bool csv = false;
    std::string out;
  } a_cstat;
  auto* c_cstat = app.add_subcommand(
      "cstat", "Normalized C statistic: single pair or a seeded batch");
  c_cstat->add_option("d1", a_cstat.d1, "first discriminant (single mode)");
  c_cstat->add_option("d2", a_cstat.d2, "second discriminant (single mode)");
  auto* o_trials = c_cstat->add_option("--trials", a_cstat.trials,
                                       "number of random pairs (batch mode)");
  auto* o_seed =
      c_cstat->add_option("--seed", a_cstat.seed, "generator seed (batch mode)");
  o_trials->needs(o_seed);
  c_cstat->add_option("--d1-lo", a_cstat.d1_lo, "batch D1 range lower bound");
  c_cstat->add_option("--d1-hi", a_cstat.d1_hi, "batch D1 range upper bound");
  c_cstat->add_option("--d2-lo", a_cstat.d2_lo, "batch D2 range lower bound");
  c_cstat->add_option("--d2-hi", a_cstat.d2_hi, "batch D2 range upper bound");
  c_cstat->add_flag("--json", a_cstat.json, "JSON output");
  c_cstat->add_flag("--csv", a_cstat.csv, "CSV output")->excludes("--json");
  c_cstat->add_option("--out", a_cstat.out, "write output to a file");

  struct {
    std::size_t pairs = 10;
    std::uint64_t seed = 0;
    std::int64_t d1_lo = 5, d1_hi = 5000;
    std::int64_t d2_lo = 5001, d2_hi = 50000;
    bool json = false;
    bool csv = false;
    std::string out;
  } a_bench;
  auto* c_bench = app.add_subcommand(
      "bench", "Time the naive and fast scans on seeded random pairs");
  c_bench->add_option("--seed", a_bench.seed, "generator seed")->required();
  c_bench->add_option("--pairs", a_bench.pairs, "number of form pairs");
  c_bench->add_option("--d1-lo", a_bench.d1_lo, "D1 range lower bound");
  c_bench->add_option("--d1-hi", a_bench.d1_hi, "D1 range upper bound");
  c_bench->add_option("--d2-lo", a_bench.d2_lo, "D2 range lower bound");
  c_bench->add_option("--d2-hi", a_bench.d2_hi, "D2 range upper bound");
  c_bench->add_flag("--json", a_bench.json, "JSON output");
  c_bench->add_flag("--csv", a_bench.csv, "CSV output")->excludes("--json");
  c_bench->add_option("--out", a_bench.out, "write output to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    std::string payload;
    std::string out_path;

    if (app.got_subcommand(c_river)) {
      out_path = a_river.out;
      Pibqf q = parse_form(a_river.form);
      RiverSequence word = river_of(q);
      if (a_river.json) {
        json j{{"form", form_literal(q)},
               {"discriminant", json_int(discriminant(q))},
               {"word", word.str()},
               {"period", word.period()}};
        payload = j.dump(2) + "\n";
      } else {
        payload = word.str() + "\n";
      }
    } else if (app.got_subcommand(c_classgroup)) {
      out_path = a_classgroup.out;
      Integer d = parse_integer(a_classgroup.disc);
      std::vector<Pibqf> reps = narrow_class_group(d);
      if (a_classgroup.json) {
        json list = json::array();
        for (const Pibqf& r : reps) list.push_back(form_literal(r));
        json j{{"discriminant", json_int(d)},
               {"class_number", reps.size()},
               {"representatives", list}};
        payload = j.dump(2) + "\n";
      } else if (a_classgroup.csv) {
        std::ostringstream os;
        os << "a,b,c\n";
        for (const Pibqf& r : reps) {
          os << r.a << "," << r.b << "," << r.c << "\n";
        }
        payload = os.str();
      } else {
        std::ostringstream os;
        os << "h+ " << reps.size() << "\n";
        for (const Pibqf& r : reps) os << form_literal(r) << "\n";
        payload = os.str();
      }
    } else if (app.got_subcommand(c_intersect)) {
      out_path = a_intersect.out;
      Pibqf q1 = parse_form(a_intersect.f1);
      Pibqf q2 = parse_form(a_intersect.f2);
      IntersectionComponents comp = components(q1, q2);
      std::int64_t total = comp.rs + comp.ro + comp.ls + comp.lo;
      if (a_intersect.json) {
        json j{{"q1", form_literal(q1)},
               {"q2", form_literal(q2)},
               {"d1", json_int(discriminant(q1))},
               {"d2", json_int(discriminant(q2))},
               {"components",
                json{{"rs", comp.rs},
                     {"ro", comp.ro},
                     {"ls", comp.ls},
                     {"lo", comp.lo}}},
               {"total", total}};
        payload = j.dump(2) + "\n";
      } else {
        payload = std::to_string(total) + "\n";
      }
    } else if (app.got_subcommand(c_components)) {
      out_path = a_components.out;
      Pibqf q1 = parse_form(a_components.f1);
      Pibqf q2 = parse_form(a_components.f2);
      IntersectionComponents comp = components(q1, q2);
      if (a_components.json) {
        json j{{"q1", form_literal(q1)},
               {"q2", form_literal(q2)},
               {"rs", comp.rs},
               {"ro", comp.ro},
               {"ls", comp.ls},
               {"lo", comp.lo},
               {"total", comp.rs + comp.ro + comp.ls + comp.lo}};
        payload = j.dump(2) + "\n";
      } else {
        std::ostringstream os;
        os << "rs " << comp.rs << "\nro " << comp.ro << "\nls " << comp.ls
           << "\nlo " << comp.lo << "\n";
        payload = os.str();
      }
    } else if (app.got_subcommand(c_cross)) {
      out_path = a_cross.out;
      Pibqf q1 = parse_form(a_cross.f1);
      Pibqf q2 = parse_form(a_cross.f2);
      IntersectionRecord rec = crossing_point(q1, q2);
      if (a_cross.json) {
        json j{{"bdelta", json_int(rec.bdelta)},
               {"sign", rec.sign},
               {"point_form", form_literal(rec.point_form)},
               {"point",
                json{{"re", rec.point.real()}, {"im", rec.point.imag()}}},
               {"angle", rec.angle}};
        payload = j.dump(2) + "\n";
      } else {
        std::ostringstream os;
        os << "bdelta " << rec.bdelta << "\n"
           << "sign " << rec.sign << "\n"
           << "point_form " << form_literal(rec.point_form) << "\n"
           << "point " << fmt(rec.point.real()) << " " << fmt(rec.point.imag())
           << "\n"
           << "angle " << fmt(rec.angle) << "\n";
        payload = os.str();
      }
    } else if (app.got_subcommand(c_pn)) {
      out_path = a_pn.out;
      Integer d1 = parse_integer(a_pn.d1);
      Integer d2 = parse_integer(a_pn.d2);
      std::vector<PnProfile> rows;
      for (const Integer& n : s_range(d1, d2)) {
        rows.push_back(p_count(d1, d2, n));
      }
      if (a_pn.json) {
        json list = json::array();
        for (const PnProfile& row : rows) {
          json factors = json::array();
          for (const PnPrimeClass& f : row.factor_classes) {
            factors.push_back(json{{"p", json_int(f.p)},
                                   {"e", f.e},
                                   {"eps", f.eps}});
          }
          list.push_back(json{{"n", json_int(row.n)},
                              {"m", json_int(row.m)},
                              {"value", row.value},
                              {"factors", factors}});
        }
        json j{{"d1", json_int(d1)}, {"d2", json_int(d2)}, {"table", list}};
        payload = j.dump(2) + "\n";
      } else if (a_pn.csv) {
        std::ostringstream os;
        os << "n,m,value\n";
        for (const PnProfile& row : rows) {
          os << row.n << "," << row.m << "," << row.value << "\n";
        }
        payload = os.str();
      } else {
        std::ostringstream os;
        for (const PnProfile& row : rows) {
          os << row.n << " " << row.value << "\n";
        }
        payload = os.str();
      }
    } else if (app.got_subcommand(c_total)) {
      out_path = a_total.out;
      Integer d1 = parse_integer(a_total.d1);
      Integer d2 = parse_integer(a_total.d2);
      std::string route = a_total.route;
      if (route == "auto") {
        bool formula_scope = d1 != d2 && gcd(d1, d2) == 1 &&
                             is_fundamental_discriminant(d1) &&
                             is_fundamental_discriminant(d2);
        route = formula_scope ? "formula" : "classes";
      }
      std::int64_t total = route == "formula"
                               ? total_intersection_formula(d1, d2)
                               : total_intersection_classes(d1, d2);
      if (a_total.json) {
        json j{{"d1", json_int(d1)},
               {"d2", json_int(d2)},
               {"route", route},
               {"total", total}};
        payload = j.dump(2) + "\n";
      } else {
        payload = std::to_string(total) + "\n";
      }
    } else if (app.got_subcommand(c_locus)) {
      out_path = a_locus.out;
      Pibqf q = parse_form(a_locus.form);
      Integer d = parse_integer(a_locus.disc);
      std::vector<LocusSample> samples = intersection_locus(q, d);
      if (a_locus.bins > 0) {
        std::vector<HistogramBin> hist = angle_histogram(samples, a_locus.bins);
        if (a_locus.json) {
          json list = json::array();
          for (const HistogramBin& b : hist) {
            list.push_back(json{{"lo", b.lo}, {"hi", b.hi}, {"mass", b.mass}});
          }
          json j{{"q", form_literal(q)},
                 {"d2", json_int(d)},
                 {"bins", a_locus.bins},
                 {"histogram", list}};
          payload = j.dump(2) + "\n";
        } else {
          std::ostringstream os;
          if (a_locus.csv) os << "bin_lo,bin_hi,mass\n";
          for (const HistogramBin& b : hist) {
            char sep = a_locus.csv ? ',' : ' ';
            os << fmt(b.lo) << sep << fmt(b.hi) << sep << fmt(b.mass) << "\n";
          }
          payload = os.str();
        }
      } else {
        if (a_locus.json) {
          json list = json::array();
          for (const LocusSample& s : samples) list.push_back(sample_json(s));
          json j{{"q", form_literal(q)},
                 {"d2", json_int(d)},
                 {"samples", list}};
          payload = j.dump(2) + "\n";
        } else if (a_locus.csv) {
          std::ostringstream os;
          os << "class_rep,bdelta,sign,re,im,angle,arc_distance\n";
          for (const LocusSample& s : samples) {
            os << "\"" << form_literal(s.partner_class) << "\","
               << s.record.bdelta << "," << s.record.sign << ","
               << fmt(s.record.point.real()) << ","
               << fmt(s.record.point.imag()) << "," << fmt(s.record.angle)
               << "," << fmt(s.arc_distance) << "\n";
          }
          payload = os.str();
        } else {
          std::ostringstream os;
          for (const LocusSample& s : samples) {
            os << form_literal(s.partner_class) << " " << s.record.bdelta
               << " " << s.record.sign << " " << fmt(s.record.point.real())
               << " " << fmt(s.record.point.imag()) << " "
               << fmt(s.record.angle) << " " << fmt(s.arc_distance) << "\n";
          }
          payload = os.str();
        }
      }
    } else if (app.got_subcommand(c_cstat)) {
      out_path = a_cstat.out;
      bool batch = o_trials->count() > 0;
      if (batch && (!a_cstat.d1.empty() || !a_cstat.d2.empty())) {
        throw usage_error(
            "cstat takes either two discriminants or --trials/--seed, not "
            "both");
      }
      if (!batch && (a_cstat.d1.empty() || a_cstat.d2.empty())) {
        throw usage_error(
            "cstat needs two discriminants, or --trials with --seed");
      }
      if (batch) {
        std::vector<CStat> recs =
            c_statistic_batch(a_cstat.trials, a_cstat.seed, a_cstat.d1_lo,
                              a_cstat.d1_hi, a_cstat.d2_lo, a_cstat.d2_hi);
        double mean = 0.0;
        for (const CStat& r : recs) mean += r.c;
        if (!recs.empty()) mean /= static_cast<double>(recs.size());
        if (a_cstat.json) {
          json list = json::array();
          for (const CStat& r : recs) list.push_back(cstat_json(r));
          json j{{"trials", a_cstat.trials},
                 {"seed", a_cstat.seed},
                 {"records", list},
                 {"mean_c", mean}};
          payload = j.dump(2) + "\n";
        } else {
          std::ostringstream os;
          if (a_cstat.csv) {
            os << "d1,d2,int,h1,h2,r1,r2,c\n";
            for (const CStat& r : recs) os << cstat_csv_row(r);
          } else {
            for (const CStat& r : recs) {
              os << r.d1 << " " << r.d2 << " " << r.int_total << " " << r.h1
                 << " " << r.h2 << " " << fmt(r.r1) << " " << fmt(r.r2) << " "
                 << fmt(r.c) << "\n";
            }
          }
          payload = os.str();
        }
      } else {
        CStat rec =
            c_statistic(parse_integer(a_cstat.d1), parse_integer(a_cstat.d2));
        if (a_cstat.json) {
          payload = cstat_json(rec).dump(2) + "\n";
        } else if (a_cstat.csv) {
          payload = "d1,d2,int,h1,h2,r1,r2,c\n" + cstat_csv_row(rec);
        } else {
          payload = fmt(rec.c) + "\n";
        }
      }
    } else if (app.got_subcommand(c_bench)) {
      out_path = a_bench.out;
      BenchResult res =
          bench_compare(a_bench.d1_lo, a_bench.d1_hi, a_bench.d2_lo,
                        a_bench.d2_hi, a_bench.pairs, a_bench.seed);
      if (a_bench.json) {
        json j{{"d1_lo", res.d1_lo},          {"d1_hi", res.d1_hi},
               {"d2_lo", res.d2_lo},          {"d2_hi", res.d2_hi},
               {"p1_avg", res.p1_avg},        {"p2_avg", res.p2_avg},
               {"intrs_avg", res.intrs_avg},  {"t_river_ms", res.t_river_ms},
               {"t_naive_ms", res.t_naive_ms}, {"t_fast_ms", res.t_fast_ms}};
        payload = j.dump(2) + "\n";
      } else if (a_bench.csv) {
        std::ostringstream os;
        os << "d1_lo,d1_hi,d2_lo,d2_hi,p1_avg,p2_avg,intrs_avg,t_river_ms,"
              "t_naive_ms,t_fast_ms\n"
           << res.d1_lo << "," << res.d1_hi << "," << res.d2_lo << ","
           << res.d2_hi << "," << fmt(res.p1_avg) << "," << fmt(res.p2_avg)
           << "," << fmt(res.intrs_avg) << "," << fmt(res.t_river_ms) << ","
           << fmt(res.t_naive_ms) << "," << fmt(res.t_fast_ms) << "\n";
        payload = os.str();
      } else {
        std::ostringstream os;
        os << "d1_range " << res.d1_lo << " " << res.d1_hi << "\n"
           << "d2_range " << res.d2_lo << " " << res.d2_hi << "\n"
           << "p1_avg " << fmt(res.p1_avg) << "\n"
           << "p2_avg " << fmt(res.p2_avg) << "\n"
           << "intrs_avg " << fmt(res.intrs_avg) << "\n"
           << "t_river_ms " << fmt(res.t_river_ms) << "\n"
           << "t_naive_ms " << fmt(res.t_naive_ms) << "\n"
           << "t_fast_ms " << fmt(res.t_fast_ms) << "\n";
        payload = os.str();
      }
    }

    emit(payload, out_path);
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
