#include "uqpa/report.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "uqpa/appendix.hpp"
#include "uqpa/generators.hpp"
#include "uqpa/modules.hpp"

namespace uqpa {

using Json = nlohmann::ordered_json;

namespace {

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<Json> rows;
};

struct Tally {
  std::size_t executed = 0, failed = 0, skipped = 0;
  void check(bool ok) {
    ++executed;
    if (!ok) ++failed;
  }
};

Json big(const mpz_class& z) {
  if (z.fits_slong_p()) return Json(static_cast<long long>(z.get_si()));
  return Json(z.get_str());
}

std::string cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_object() && v.contains("text")) return v["text"].get<std::string>();
  return v.dump();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char c : s) {
    if (c == '"') r += '"';
    r += c;
  }
  return r + "\"";
}

std::string md_field(const std::string& s) {
  std::string r;
  for (char c : s) {
    if (c == '|') r += '\\';
    r += c == '\n' ? ' ' : c;
  }
  return r;
}

std::string emit(const std::vector<Table>& tables, Format fmt, bool single) {
  std::ostringstream os;
  switch (fmt) {
    case Format::Json: {
      if (single) {
        os << Json(tables.front().rows).dump(2) << '\n';
      } else {
        Json doc = Json::object();
        for (const auto& t : tables) doc[t.name] = t.rows;
        os << doc.dump(2) << '\n';
      }
      break;
    }
    case Format::Markdown: {
      bool first = true;
      for (const auto& t : tables) {
        if (!first) os << '\n';
        first = false;
        os << "## " << t.name << "\n\n|";
        for (const auto& c : t.columns) os << ' ' << c << " |";
        os << "\n|";
        for (std::size_t i = 0; i < t.columns.size(); ++i) os << "---|";
        os << '\n';
        for (const auto& row : t.rows) {
          os << '|';
          for (const auto& c : t.columns)
            os << ' ' << md_field(row.contains(c) ? cell(row[c]) : "") << " |";
          os << '\n';
        }
      }
      break;
    }
    case Format::Csv: {
      bool first = true;
      for (const auto& t : tables) {
        if (!single) {
          if (!first) os << '\n';
          os << "# " << t.name << '\n';
        }
        first = false;
        for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
        os << '\n';
        for (const auto& row : t.rows) {
          for (std::size_t i = 0; i < t.columns.size(); ++i) {
            const auto& c = t.columns[i];
            os << (i ? "," : "") << csv_field(row.contains(c) ? cell(row[c]) : "");
          }
          os << '\n';
        }
      }
      break;
    }
  }
  return os.str();
}

// ------------------------------------------------------------- sections

Table verify_table(const RunConfig& cfg, Tally& t) {
  std::vector<std::string> ids;
  const bool every = cfg.relations.empty() ||
                     std::find(cfg.relations.begin(), cfg.relations.end(), "all") != cfg.relations.end();
  for (const auto& id : relation_ids())
    if (every || std::find(cfg.relations.begin(), cfg.relations.end(), id) != cfg.relations.end())
      ids.push_back(id);

  std::vector<VerifyTask> tasks;
  for (const auto& id : ids)
    for (int p : cfg.ps) tasks.push_back({id, p});
  auto reports = verify_many(tasks, cfg.budget, cfg.threads);

  Table tab{"verify",
            {"relation_id", "p", "strands", "holds", "skip_reason", "witness", "detail", "elapsed_ms"},
            {}};
  for (const auto& r : reports) {
    Json row;
    row["relation_id"] = r.relation_id;
    row["p"] = r.p;
    row["strands"] = r.strands;
    if (r.skipped) {
      row["holds"] = nullptr;
      row["skipped"] = true;
      row["skip_reason"] = r.skip_reason;
      ++t.skipped;
    } else {
      row["holds"] = r.holds;
      t.check(r.holds);
    }
    if (r.witness) {
      row["witness"] = {{"input", word_label(r.witness->input, r.witness->strands)},
                        {"lhs", r.witness->lhs},
                        {"rhs", r.witness->rhs},
                        {"text", r.witness->str()}};
    }
    row["detail"] = r.detail;
    row["elapsed_ms"] = cfg.timing ? Json(r.elapsed_ms) : Json(nullptr);
    tab.rows.push_back(std::move(row));
  }
  return tab;
}

// Oracle value when it fits the configured limits, otherwise the reason.
Json oracle_cell(const RunConfig& cfg, int p, int n, std::string& reason) {
  if (n > cfg.oracle_max_n) {
    reason = "n > oracle max n " + std::to_string(cfg.oracle_max_n);
    return nullptr;
  }
  try {
    return Json(static_cast<unsigned long long>(commutant_dim(p, n, cfg.budget)));
  } catch (const InfeasibleSize& e) {
    reason = e.what();
    return nullptr;
  }
}

std::optional<mpz_class> prop1_prediction(int n, int p) {
  if (n < 2 * p - 1) return catalan(n);
  if (n == 2 * p - 1) return catalan(n) + 3;
  if (n == 2 * p) return catalan(n) + 12 * p - 6;
  return std::nullopt;
}

Table dims_table(const RunConfig& cfg, Tally& t) {
  const int max_n = cfg.max_n >= 0 ? cfg.max_n : 6;
  Table tab{"dims",
            {"p", "n", "catalan", "fusion", "oracle", "oracle_matches", "predicted",
             "prediction_holds", "total_dimension_ok", "decomposition", "oracle_skip_reason"},
            {}};
  for (int p : cfg.ps) {
    for (int n = 1; n <= max_n; ++n) {
      Json row;
      row["p"] = p;
      row["n"] = n;
      const mpz_class fusion = dimension(n, p);
      row["catalan"] = big(catalan(n));
      row["fusion"] = big(fusion);
      std::string reason;
      Json oracle = oracle_cell(cfg, p, n, reason);
      row["oracle"] = oracle;
      if (oracle.is_null()) {
        row["oracle_matches"] = nullptr;
        row["oracle_skip_reason"] = reason;
        ++t.skipped;
      } else {
        const bool ok = mpz_class(std::to_string(oracle.get<unsigned long long>())) == fusion;
        row["oracle_matches"] = ok;
        t.check(ok);
      }
      if (auto pred = prop1_prediction(n, p)) {
        row["predicted"] = big(*pred);
        row["prediction_holds"] = *pred == fusion;
        t.check(*pred == fusion);
      } else {
        row["predicted"] = nullptr;
        row["prediction_holds"] = nullptr;
      }
      const auto mult = multiplicities(n, p);
      const mpz_class total = total_dimension(mult, p);
      const bool total_ok = total == (mpz_class(1) << n);
      row["total_dimension_ok"] = total_ok;
      t.check(total_ok);
      row["decomposition"] = multiset_str(mult);
      tab.rows.push_back(std::move(row));
    }
  }
  return tab;
}

Table conjecture_table(const RunConfig& cfg, Tally& t) {
  const int max_n = cfg.max_n >= 0 ? cfg.max_n : 10;
  std::vector<FloorConvention> convs;
  if (cfg.convention) convs.push_back(*cfg.convention);
  else convs = all_conventions();

  Table tab{"conjecture", {"p", "n", "catalan", "fusion", "oracle"}, {}};
  for (auto c : convs) tab.columns.push_back("conjecture_" + convention_name(c));
  for (auto c : convs) tab.columns.push_back("matches_" + convention_name(c));

  for (int p : cfg.ps) {
    for (int n = 1; n <= max_n; ++n) {
      Json row;
      row["p"] = p;
      row["n"] = n;
      const mpz_class fusion = dimension(n, p);
      row["catalan"] = big(catalan(n));
      row["fusion"] = big(fusion);
      std::string reason;
      Json oracle = oracle_cell(cfg, p, n, reason);
      row["oracle"] = oracle;
      if (!oracle.is_null()) {
        t.check(mpz_class(std::to_string(oracle.get<unsigned long long>())) == fusion);
      }
      // Conjecture discrepancies are reported, not counted as failures.
      for (auto c : convs) row["conjecture_" + convention_name(c)] = big(conjecture_eval(n, p, c));
      for (auto c : convs) row["matches_" + convention_name(c)] = conjecture_eval(n, p, c) == fusion;
      tab.rows.push_back(std::move(row));
    }
  }
  return tab;
}

std::vector<Table> hom_tables(const RunConfig& cfg, Tally& t) {
  Table mods{"modules", {"p", "module", "dimension", "valid", "defects"}, {}};
  Table homs{"hom", {"p", "source", "target", "dim", "expected", "holds"}, {}};
  Table maps{"maps", {"p", "map", "intertwiner", "in_span", "independent_of_identity"}, {}};
  for (int p : cfg.ps) {
    Field f(p);
    std::vector<ModuleData> data;
    for (const auto& l : all_labels(p)) data.push_back(make_module(f, l));
    for (const auto& m : data) {
      const auto defects = module_defects(m);
      std::string joined;
      for (const auto& d : defects) joined += (joined.empty() ? "" : "; ") + d;
      mods.rows.push_back({{"p", p},
                           {"module", m.label.str()},
                           {"dimension", m.dimension},
                           {"valid", defects.empty()},
                           {"defects", joined}});
      t.check(defects.empty());
    }
    for (const auto& src : data) {
      for (const auto& tgt : data) {
        const int dim = static_cast<int>(intertwiner_space(src, tgt).maps.size());
        const int expected = expected_hom_dim(p, src.label, tgt.label);
        homs.rows.push_back({{"p", p},
                             {"source", src.label.str()},
                             {"target", tgt.label.str()},
                             {"dim", dim},
                             {"expected", expected},
                             {"holds", dim == expected}});
        t.check(dim == expected);
      }
    }
    for (const auto& h : verify_hom_forms(f)) {
      const bool ok = h.intertwiner && h.in_span && h.independent_of_identity;
      maps.rows.push_back({{"p", p},
                           {"map", h.name},
                           {"intertwiner", h.intertwiner},
                           {"in_span", h.in_span},
                           {"independent_of_identity", h.independent_of_identity}});
      t.check(ok);
    }
  }
  return {mods, homs, maps};
}

Table basis_table(const RunConfig& cfg, Tally& t) {
  Table tab{"basis",
            {"p", "tl_count", "word_count", "listed", "rank", "commutant", "all_commute", "holds",
             "dependent_words", "skip_reason"},
            {}};
  for (int p : cfg.ps) {
    Json row;
    row["p"] = p;
    try {
      const auto b = basis_check_2p(p, cfg.budget);
      const std::size_t listed = b.tl_count + b.word_count;
      const bool ok = b.all_commute && b.rank == listed && b.rank == b.commutant;
      row["tl_count"] = b.tl_count;
      row["word_count"] = b.word_count;
      row["listed"] = listed;
      row["rank"] = b.rank;
      row["commutant"] = b.commutant;
      row["all_commute"] = b.all_commute;
      row["holds"] = ok;
      std::string joined;
      for (const auto& w : b.dependent_words) joined += (joined.empty() ? "" : " ") + w;
      row["dependent_words"] = joined;
      t.check(ok);
    } catch (const InfeasibleSize& e) {
      row["holds"] = nullptr;
      row["skip_reason"] = e.what();
      ++t.skipped;
    }
    tab.rows.push_back(std::move(row));
  }
  return tab;
}

Table identities_table(const RunConfig& cfg, Tally& t) {
  Table tab{"identities", {"p", "group", "name", "holds", "detail"}, {}};
  for (int p : cfg.ps) {
    // The suites work on up to 2p strands.
    if (2 * p >= 63 || (std::size_t{1} << (2 * p)) > cfg.budget) {
      tab.rows.push_back({{"p", p},
                          {"group", "all"},
                          {"name", "all"},
                          {"holds", nullptr},
                          {"detail", "skipped: 2^" + std::to_string(2 * p) + " states exceed budget"}});
      ++t.skipped;
      continue;
    }
    Field f(p);
    auto add = [&](const char* group, const std::vector<CheckResult>& checks) {
      for (const auto& c : checks) {
        tab.rows.push_back(
            {{"p", p}, {"group", group}, {"name", c.name}, {"holds", c.holds}, {"detail", c.detail}});
        t.check(c.holds);
      }
    };
    add("appendix", appendix_suite(f));
    add("generators", generator_checks(f));
    add("jones_wenzl", jw_checks(f));
    const auto ci = coefficient_identity(f);
    const bool ok = ci.expanded_agree == ci.tuples;
    std::string detail = std::to_string(ci.expanded_agree) + "/" + std::to_string(ci.tuples) +
                         " tuples agree; final display agrees on " +
                         std::to_string(ci.literal_agree) + "/" + std::to_string(ci.tuples);
    if (!ci.first_literal_mismatch.empty()) detail += " (first mismatch " + ci.first_literal_mismatch + ")";
    tab.rows.push_back(
        {{"p", p}, {"group", "commutation"}, {"name", "coefficient identity"}, {"holds", ok}, {"detail", detail}});
    t.check(ok);
  }
  return tab;
}

}  // namespace

std::optional<Command> parse_command(const std::string& s) {
  if (s == "verify") return Command::Verify;
  if (s == "dims") return Command::Dims;
  if (s == "conjecture") return Command::Conjecture;
  if (s == "hom") return Command::Hom;
  if (s == "basis") return Command::Basis;
  if (s == "all") return Command::All;
  return std::nullopt;
}

std::optional<Format> parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "markdown" || s == "md") return Format::Markdown;
  if (s == "csv") return Format::Csv;
  return std::nullopt;
}

std::string command_name(Command c) {
  switch (c) {
    case Command::Verify: return "verify";
    case Command::Dims: return "dims";
    case Command::Conjecture: return "conjecture";
    case Command::Hom: return "hom";
    case Command::Basis: return "basis";
    case Command::All: return "all";
  }
  return "?";
}

std::string validate(const RunConfig& cfg) {
  if (cfg.ps.empty()) return "no p given";
  for (int p : cfg.ps)
    if (p < 2) return "p must be at least 2, got " + std::to_string(p);
  for (const auto& r : cfg.relations)
    if (r != "all" && !is_relation_id(r)) return "unknown relation id: " + r;
  if (cfg.budget == 0) return "budget must be positive";
  if (cfg.max_n < -1 || cfg.max_n == 0) return "max-n must be positive";
  if (cfg.oracle_max_n < 0) return "oracle-max-n must be non-negative";
  return {};
}

RunResult build_report(const RunConfig& cfg) {
  RunResult res;
  if (auto err = validate(cfg); !err.empty()) {
    res.exit_code = kExitUsage;
    res.text = err + "\n";
    return res;
  }
  Tally t;
  std::vector<Table> tables;
  const bool all = cfg.command == Command::All;
  if (all || cfg.command == Command::Verify) tables.push_back(verify_table(cfg, t));
  if (all || cfg.command == Command::Dims) tables.push_back(dims_table(cfg, t));
  if (all || cfg.command == Command::Conjecture) tables.push_back(conjecture_table(cfg, t));
  if (all || cfg.command == Command::Hom)
    for (auto& tab : hom_tables(cfg, t)) tables.push_back(std::move(tab));
  if (all || cfg.command == Command::Basis) tables.push_back(basis_table(cfg, t));
  if (all) tables.push_back(identities_table(cfg, t));

  res.text = emit(tables, cfg.format, tables.size() == 1);
  res.executed = t.executed;
  res.failed = t.failed;
  res.skipped = t.skipped;
  if (t.failed > 0) res.exit_code = kExitFailure;
  else if (t.executed == 0 && t.skipped > 0) res.exit_code = kExitSkipOnly;
  else res.exit_code = kExitOk;
  return res;
}

RunResult run(const RunConfig& cfg) {
  RunResult res = build_report(cfg);
  if (res.exit_code == kExitUsage) {
    std::cerr << res.text;
    return res;
  }
  if (cfg.out.empty()) {
    std::cout << res.text << std::flush;
  } else {
    std::ofstream os(cfg.out, std::ios::binary);
    if (!os) {
      std::cerr << "cannot write " << cfg.out << "\n";
      res.exit_code = kExitUsage;
      return res;
    }
    os << res.text;
  }
  return res;
}

}  // namespace uqpa
