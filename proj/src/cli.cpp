#include "sepinv/cli.hpp"

#include "sepinv/index_sets.hpp"
#include "sepinv/invariants.hpp"
#include "sepinv/matcher.hpp"
#include "sepinv/verifier.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace sepinv::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::uint64_t kDefaultSearchBudget = 200000;
constexpr const char* kDefaultSearchGrid = "-10,-9,-8,-7,-6,-5,-4,-3,-2,-1,0,1,2,3,4,5,6,7,8,9,10";

Json index_json(const BiIndex& idx) { return Json::array({idx.j(), idx.k()}); }

Json point_json(const PointPair& p) {
  Json xs = Json::array();
  Json ys = Json::array();
  for (const auto& v : p.xs()) xs.push_back(v.to_string());
  for (const auto& v : p.ys()) ys.push_back(v.to_string());
  return Json{{"n", p.n()}, {"x", std::move(xs)}, {"y", std::move(ys)}};
}

Json rationals_json(std::span<const Rational> values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

IndexSet build_set(unsigned n, const std::string& kind) {
  return kind == "M" ? build_M(n) : build_S(n);
}

struct Common {
  std::string format = "text";
  bool json() const { return format == "json"; }
};

void add_format(CLI::App* cmd, Common& common) {
  cmd->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

// Prints a found witness and optionally saves both points.
int report_witness(std::ostream& out, bool json, const WitnessPair& w, unsigned n, const std::string& prefix,
                   Json extra = Json::object()) {
  const Rational vp = eval_invariant(w.removed, w.p);
  const Rational vq = eval_invariant(w.removed, w.q);
  if (!prefix.empty()) {
    write_point_file(prefix + ".p.json", w.p);
    write_point_file(prefix + ".q.json", w.q);
  }
  if (json) {
    Json doc{{"found", true}, {"n", n}, {"removed", index_json(w.removed)}, {"p", point_json(w.p)},
             {"q", point_json(w.q)}, {"values", Json::array({vp.to_string(), vq.to_string()})}};
    for (auto& [key, value] : extra.items()) doc[key] = value;
    out << doc.dump() << '\n';
  } else {
    out << "witness: S(" << n << ")\\" << w.removed.to_string() << " is not separating\n";
    for (auto& [key, value] : extra.items()) out << key << " = " << value.dump() << '\n';
    out << "p = " << point_to_json(w.p) << '\n';
    out << "q = " << point_to_json(w.q) << '\n';
    out << w.removed.to_string() << ": " << vp.to_string() << " vs " << vq.to_string() << '\n';
  }
  return kExitWitness;
}

int report_inconclusive(std::ostream& out, bool json, unsigned n, const BiIndex& removed, const GridSpec& grid,
                        std::uint64_t budget) {
  if (json) {
    out << Json{{"found", false}, {"n", n}, {"removed", index_json(removed)}, {"verdict", "inconclusive"},
                {"grid", rationals_json(grid.values())}, {"budget", budget}}
               .dump()
        << '\n';
  } else {
    out << "inconclusive: no witness for dropping " << removed.to_string() << " found within grid "
        << grid.to_string() << " and budget " << budget << '\n';
  }
  return kExitClean;
}

}  // namespace

PointPair parse_point_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("point file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("x") || !doc.contains("y")) {
    throw std::invalid_argument("point file needs fields \"n\", \"x\" and \"y\"");
  }
  if (!doc["n"].is_number_unsigned() || doc["n"].get<std::uint64_t>() == 0) {
    throw std::invalid_argument("point file field \"n\" must be a positive integer");
  }
  const auto n = doc["n"].get<std::size_t>();
  auto coords = [&](const char* name) {
    const Json& arr = doc[name];
    if (!arr.is_array() || arr.size() != n) {
      throw std::invalid_argument(std::string("point file field \"") + name + "\" must be an array of " +
                                  std::to_string(n) + " rational strings");
    }
    std::vector<Rational> out;
    for (const auto& v : arr) {
      if (!v.is_string()) throw std::invalid_argument("coordinates must be rational strings like \"-3/4\"");
      out.push_back(Rational::parse(v.get<std::string>()));
    }
    return out;
  };
  return PointPair(coords("x"), coords("y"));
}

std::string point_to_json(const PointPair& p) { return point_json(p).dump(); }

PointPair read_point_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open point file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_point_json(buffer.str());
}

void write_point_file(const std::filesystem::path& path, const PointPair& p) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write point file " + path.string());
  out << point_to_json(p) << '\n';
}

GridSpec parse_grid(std::string_view csv) {
  std::vector<Rational> values;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const std::size_t comma = std::min(csv.find(',', start), csv.size());
    values.push_back(Rational::parse(csv.substr(start, comma - start)));
    start = comma + 1;
  }
  return GridSpec(std::move(values));
}

BiIndex parse_index(std::string_view text) {
  const auto comma = text.find(',');
  auto number = [&](std::string_view s) -> unsigned {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw std::invalid_argument("index must look like \"j,k\": '" + std::string(text) + "'");
    }
    return static_cast<unsigned>(std::stoul(std::string(s)));
  };
  if (comma == std::string_view::npos) {
    throw std::invalid_argument("index must look like \"j,k\": '" + std::string(text) + "'");
  }
  return BiIndex(number(text.substr(0, comma)), number(text.substr(comma + 1)));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Separating bisymmetric power-sum invariants for the diagonal S_n action", "sepinv"};
  app.require_subcommand(1);

  Common common;
  unsigned n = 0;
  std::string set_kind = "S";
  std::string grid_text;
  std::string drop_text;
  std::uint64_t budget = kDefaultSearchBudget;
  std::string out_prefix;
  std::size_t show = 10;

  auto* indexset = app.add_subcommand("indexset", "List the indices of M(n) or S(n)");
  indexset->add_option("--n", n, "Number of points")->required()->check(CLI::PositiveNumber);
  indexset->add_option("--set", set_kind, "M or S")->check(CLI::IsMember({"M", "S"}));
  add_format(indexset, common);

  std::uint64_t max_n = 0;
  auto* sizes = app.add_subcommand("sizes", "Tabulate |M(n)|, |S(n)| and D(n)");
  sizes->add_option("--max-n", max_n, "Largest n")->required()->check(CLI::PositiveNumber);
  add_format(sizes, common);

  std::string point_path;
  auto* fp_cmd = app.add_subcommand("fingerprint", "Evaluate M(n) or S(n) at a point");
  fp_cmd->add_option("--point", point_path, "Point file")->required();
  fp_cmd->add_option("--n", n, "Expected n (optional)");
  fp_cmd->add_option("--set", set_kind, "M or S")->check(CLI::IsMember({"M", "S"}));
  add_format(fp_cmd, common);

  auto* check = app.add_subcommand("check-separation", "Check a set against every orbit of a grid");
  check->add_option("--n", n, "Number of points")->required()->check(CLI::PositiveNumber);
  check->add_option("--grid", grid_text, "Comma-separated coordinate values")->required();
  check->add_option("--set", set_kind, "M or S")->check(CLI::IsMember({"M", "S"}));
  check->add_option("--drop", drop_text, "Remove index j,k from the set");
  check->add_option("--show", show, "Print at most this many collision pairs");
  add_format(check, common);

  std::string p_path;
  std::string q_path;
  auto* match_cmd = app.add_subcommand("match", "Find a permutation carrying q onto p, or a separating index");
  match_cmd->add_option("p", p_path, "Point file p")->required();
  match_cmd->add_option("q", q_path, "Point file q")->required();
  add_format(match_cmd, common);

  std::optional<std::size_t> tamper;
  auto* fixtures = app.add_subcommand("paper-witnesses", "Validate the built-in n = 3, 4 witness pairs");
  fixtures->add_option("--tamper", tamper, "Negative control: perturb fixture number i (1-based)");
  add_format(fixtures, common);

  auto* find = app.add_subcommand("find-witness", "Search a grid for a witness against S(n) minus one index");
  find->add_option("--n", n, "Number of points")->required()->check(CLI::PositiveNumber);
  find->add_option("--drop", drop_text, "Index j,k to remove from S(n)")->required();
  find->add_option("--grid", grid_text, "Comma-separated coordinate values");
  find->add_option("--budget", budget, "Maximum number of orbit representatives examined");
  find->add_option("--out-prefix", out_prefix, "Write PREFIX.p.json and PREFIX.q.json");
  add_format(find, common);

  std::string axis_text = "x";
  unsigned power = 0;
  auto* lemma1 = app.add_subcommand("lemma1", "Witness for dropping a pure power sum f_{j,0} or f_{0,j}");
  lemma1->add_option("--n", n, "Number of points")->required()->check(CLI::PositiveNumber);
  lemma1->add_option("--axis", axis_text, "x drops f_{j,0}, y drops f_{0,j}")->check(CLI::IsMember({"x", "y"}));
  lemma1->add_option("--j", power, "Degree of the dropped power sum")->required()->check(CLI::PositiveNumber);
  lemma1->add_option("--grid", grid_text, "Comma-separated coordinate values");
  lemma1->add_option("--budget", budget, "Maximum number of multisets examined");
  lemma1->add_option("--out-prefix", out_prefix, "Write PREFIX.p.json and PREFIX.q.json");
  add_format(lemma1, common);

  auto* lemma2 = app.add_subcommand("lemma2", "Witness for dropping f_{1,n/2} (n even)");
  lemma2->add_option("--n", n, "Number of points (even)")->required()->check(CLI::PositiveNumber);
  lemma2->add_option("--grid", grid_text, "Comma-separated coordinate values");
  lemma2->add_option("--budget", budget, "Maximum number of multisets examined");
  lemma2->add_option("--out-prefix", out_prefix, "Write PREFIX.p.json and PREFIX.q.json");
  add_format(lemma2, common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitClean : kExitError;
  }

  const bool json = common.json();
  try {
    if (*indexset) {
      const IndexSet set = build_set(n, set_kind);
      if (json) {
        Json arr = Json::array();
        for (const auto& idx : set.indices()) arr.push_back(index_json(idx));
        out << arr.dump() << '\n';
      } else {
        out << set.label() << ": size " << set.size() << '\n';
        for (std::size_t t = 0; t < set.size(); ++t) out << (t ? " " : "") << set.indices()[t].to_string();
        out << '\n';
      }
      return kExitClean;
    }

    if (*sizes) {
      Json rows = Json::array();
      if (!json) out << std::setw(8) << "n" << std::setw(14) << "|M|" << std::setw(10) << "|S|" << std::setw(10) << "D(n)" << '\n';
      for (std::uint64_t m = 1; m <= max_n; ++m) {
        const auto [size_m, size_s] = size_formulas(m);
        const std::uint64_t d = divisor_summatory(m);
        if (json) {
          rows.push_back(Json{{"n", m}, {"M", size_m}, {"S", size_s}, {"D", d}});
        } else {
          out << std::setw(8) << m << std::setw(14) << size_m << std::setw(10) << size_s << std::setw(10) << d << '\n';
        }
      }
      if (json) out << rows.dump() << '\n';
      return kExitClean;
    }

    if (*fp_cmd) {
      const PointPair p = read_point_file(point_path);
      if (n != 0 && n != p.n()) {
        err << "error: --n " << n << " does not match the point file (n = " << p.n() << ")\n";
        return kExitError;
      }
      const IndexSet set = build_set(static_cast<unsigned>(p.n()), set_kind);
      const Fingerprint fp = fingerprint(set, p);
      if (json) {
        Json indices = Json::array();
        for (const auto& idx : set.indices()) indices.push_back(index_json(idx));
        out << Json{{"n", p.n()}, {"set", set.label()}, {"indices", indices}, {"values", rationals_json(fp.values)}}.dump()
            << '\n';
      } else {
        for (std::size_t t = 0; t < set.size(); ++t) {
          out << set.indices()[t].to_string() << " → " << fp.values[t].to_string() << '\n';
        }
      }
      return kExitClean;
    }

    if (*check) {
      const GridSpec grid = parse_grid(grid_text);
      IndexSet set = build_set(n, set_kind);
      if (!drop_text.empty()) set = set.without(parse_index(drop_text));
      const SeparationReport report = verify_separation(set, n, grid);
      const std::size_t shown = std::min(show, report.collision_pairs.size());
      if (json) {
        Json pairs = Json::array();
        for (std::size_t t = 0; t < shown; ++t) {
          pairs.push_back(Json{{"p", point_json(report.collision_pairs[t].first)},
                               {"q", point_json(report.collision_pairs[t].second)}});
        }
        out << Json{{"n", n},
                    {"set", set.label()},
                    {"grid", rationals_json(grid.values())},
                    {"orbit_count", report.orbit_count},
                    {"collision_count", report.collision_pairs.size()},
                    {"collisions", pairs}}
                   .dump()
            << '\n';
      } else {
        out << set.label() << " on grid " << grid.to_string() << ": " << report.orbit_count << " orbits, "
            << report.collision_pairs.size() << " collision pairs\n";
        for (std::size_t t = 0; t < shown; ++t) {
          out << "collision\n  p = " << point_to_json(report.collision_pairs[t].first)
              << "\n  q = " << point_to_json(report.collision_pairs[t].second) << '\n';
        }
        if (report.separating_on_grid()) out << "separates every orbit of the grid\n";
      }
      return report.separating_on_grid() ? kExitClean : kExitWitness;
    }

    if (*match_cmd) {
      const PointPair p = read_point_file(p_path);
      const PointPair q = read_point_file(q_path);
      const MatchResult result = match(p, q);
      if (result.is_permutation()) {
        if (json) {
          Json images = Json::array();
          for (std::size_t img : result.sigma().images()) images.push_back(img + 1);
          out << Json{{"result", "permutation"}, {"sigma", images}}.dump() << '\n';
        } else {
          out << "permutation " << result.sigma().to_one_line() << '\n';
        }
        return kExitClean;
      }
      const BiIndex& w = result.witness();
      const Rational vp = eval_invariant(w, p);
      const Rational vq = eval_invariant(w, q);
      if (json) {
        out << Json{{"result", "witness"}, {"index", index_json(w)}, {"values", Json::array({vp.to_string(), vq.to_string()})}}
                   .dump()
            << '\n';
      } else {
        out << "witness " << w.to_string() << ": " << vp.to_string() << " vs " << vq.to_string() << '\n';
      }
      return kExitWitness;
    }

    if (*fixtures) {
      std::vector<PaperFixture> all = paper_fixtures();
      if (tamper) {
        if (*tamper < 1 || *tamper > all.size()) {
          err << "error: --tamper must lie in 1.." << all.size() << '\n';
          return kExitError;
        }
        // Shift the last y-coordinate of q; agreement on the kept invariants breaks.
        WitnessPair& w = all[*tamper - 1].pair;
        std::vector<Rational> ys(w.q.ys().begin(), w.q.ys().end());
        ys.back() += Rational(1);
        w.q = PointPair(std::vector<Rational>(w.q.xs().begin(), w.q.xs().end()), std::move(ys));
      }
      std::size_t valid = 0;
      Json verdicts = Json::array();
      for (const auto& f : all) {
        const bool ok = validate_witness(f.pair, f.n);
        valid += ok ? 1 : 0;
        const Rational vp = eval_invariant(f.pair.removed, f.pair.p);
        const Rational vq = eval_invariant(f.pair.removed, f.pair.q);
        if (json) {
          verdicts.push_back(Json{{"name", f.name},
                                  {"n", f.n},
                                  {"removed", index_json(f.pair.removed)},
                                  {"valid", ok},
                                  {"values", Json::array({vp.to_string(), vq.to_string()})}});
        } else {
          out << (ok ? "ok     " : "FAILED ") << f.name << ": " << vp.to_string() << " vs " << vq.to_string() << '\n';
        }
      }
      if (json) {
        out << Json{{"valid", valid}, {"total", all.size()}, {"fixtures", verdicts}}.dump() << '\n';
      } else {
        out << valid << "/" << all.size() << " fixtures valid\n";
      }
      return valid == all.size() ? kExitClean : kExitError;
    }

    const GridSpec grid = parse_grid(grid_text.empty() ? kDefaultSearchGrid : grid_text);

    if (*find) {
      const BiIndex removed = parse_index(drop_text);
      if (auto w = find_witness(n, removed, grid, budget)) return report_witness(out, json, *w, n, out_prefix);
      return report_inconclusive(out, json, n, removed, grid, budget);
    }

    if (*lemma1) {
      const Axis axis = axis_text == "x" ? Axis::X : Axis::Y;
      const BiIndex removed = axis == Axis::X ? BiIndex(power, 0) : BiIndex(0, power);
      if (auto w = lemma1_witness(n, axis, power, grid, budget)) return report_witness(out, json, *w, n, out_prefix);
      return report_inconclusive(out, json, n, removed, grid, budget);
    }

    if (*lemma2) {
      if (n % 2 != 0) {
        err << "error: lemma2 needs an even n\n";
        return kExitError;
      }
      if (auto w = lemma2_witness(n, grid, budget)) {
        return report_witness(out, json, w->pair, n, out_prefix,
                              Json{{"b", rationals_json(w->b)}, {"c", rationals_json(w->c)}});
      }
      return report_inconclusive(out, json, n, BiIndex(1, n / 2), grid, budget);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace sepinv::cli
