#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "matroid/verify.hpp"

namespace matroid::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
}

inline Json params_json(const std::vector<std::pair<std::string, std::string>>& params) {
  Json j = Json::object();
  for (auto& [k, v] : params) {
    if (j.contains(k))
      j[k] = j[k].get<std::string>() + "," + v;
    else
      j[k] = v;
  }
  return j;
}

inline Json record_json(const CheckRecord& r, const Json& params) {
  return Json{{"check", r.check}, {"instance", r.instance}, {"verdict", r.verdict}, {"witnesses", r.witnesses},
              {"params", params}};
}

/// Output sink for one command: text lines, or a JSON document behind --json.
class Output {
 public:
  Output(std::ostream& out, bool json, std::size_t max_witnesses)
      : out_(out), json_(json), max_witnesses_(max_witnesses) {}

  bool json() const { return json_; }
  std::size_t max_witnesses() const { return max_witnesses_; }

  void line(const std::string& key, const std::string& value) {
    if (!json_) out_ << key << ' ' << value << '\n';
  }

  /// A single-instance check with its witnesses.
  void check(const std::string& check, const std::string& instance, bool holds, std::size_t violation_count,
             const std::vector<std::string>& witnesses, const Json& params = Json::object()) {
    if (json_) {
      doc_["command"] = check;
      doc_["verdict"] = holds ? "pass" : "fail";
      doc_["records"].push_back(
          Json{{"check", check}, {"instance", instance}, {"verdict", holds ? "pass" : "fail"},
               {"witnesses", witnesses}, {"params", params}, {"violation_count", violation_count}});
      return;
    }
    out_ << "check " << check << '\n' << "instance " << instance << '\n';
    for (auto& [k, v] : params.items()) out_ << k << ' ' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    out_ << "verdict " << (holds ? "pass" : "fail") << '\n';
    if (!holds || !witnesses.empty()) out_ << "violations " << violation_count << '\n';
    for (auto& w : witnesses) out_ << "witness " << w << '\n';
  }

  void report(const VerificationReport& r) {
    const Json params = params_json(r.parameters);
    if (json_) {
      Json summary = Json::object();
      for (auto& [k, v] : r.summary) summary[k] = v;
      Json records = Json::array();
      for (const auto& rec : r.records) records.push_back(record_json(rec, params));
      doc_["command"] = "verify";
      doc_["reports"].push_back(Json{{"check", r.check_name},
                                     {"verdict", r.passed() ? "pass" : "fail"},
                                     {"params", params},
                                     {"instances_tested", r.instances_tested},
                                     {"not_applicable", r.not_applicable},
                                     {"violation_count", r.violations.size()},
                                     {"summary", summary},
                                     {"elapsed_seconds", r.elapsed_seconds},
                                     {"records", records}});
      return;
    }
    out_ << "check " << r.check_name << '\n';
    for (auto& [k, v] : r.parameters) out_ << "param " << k << '=' << v << '\n';
    out_ << "instances_tested " << r.instances_tested << '\n'
         << "not_applicable " << r.not_applicable << '\n';
    for (auto& [k, v] : r.summary) out_ << k << ' ' << v << '\n';
    out_ << "violations " << r.violations.size() << '\n';
    for (std::size_t i = 0; i < r.violations.size() && i < max_witnesses_; ++i) {
      out_ << "violation " << r.violations[i].instance;
      for (auto& w : r.violations[i].witnesses) out_ << " | " << w;
      out_ << '\n';
    }
    out_ << "verdict " << (r.passed() ? "pass" : "fail") << "\n\n";
  }

  void set(const std::string& key, Json value) { doc_[key] = std::move(value); }

  void flush() {
    if (json_ && !doc_.is_null()) out_ << std::setw(2) << doc_ << '\n';
  }

 private:
  std::ostream& out_;
  bool json_;
  std::size_t max_witnesses_;
  Json doc_;
};

inline std::string classes_string(const ElementPartition& p) {
  std::string s;
  for (Subset b : p.blocks) s += b.to_string();
  return s;
}

struct PropertyOutcome {
  bool holds = false;
  std::size_t violation_count = 0;
  std::vector<std::string> witnesses;
};

inline PropertyOutcome check_property(const Matroid& m, const std::string& property, std::size_t max_witnesses) {
  PropertyOutcome out;
  if (property == "ssce") {
    auto r = ssce_check(m, max_witnesses);
    out.holds = r.holds;
    out.violation_count = r.violation_count;
    for (auto& w : r.violations) out.witnesses.push_back(matroid::detail::describe(w));
  } else if (property == "skew" || property.rfind("k-skew:", 0) == 0) {
    int k = 2;
    if (property != "skew") {
      try {
        std::size_t used = 0;
        k = std::stoi(property.substr(7), &used);
        if (used != property.size() - 7) throw std::invalid_argument(property);
      } catch (const std::exception&) {
        throw InputError("bad k in property " + property);
      }
      if (k < 1) throw InputError("k must be positive");
    }
    auto r = has_k_skew(m, k);
    out.holds = r.found;
    if (r.found) out.witnesses.push_back(matroid::detail::describe(*r.family));
  } else if (property == "unbreakable") {
    out.holds = is_unbreakable(m);
    if (!m.is_connected()) {
      out.witnesses.push_back("disconnected");
      out.violation_count = 1;
    } else {
      for (Subset f : m.flats()) {
        if (f == m.ground() || contract_elements(m, f).is_connected()) continue;
        ++out.violation_count;
        if (out.witnesses.size() < max_witnesses) out.witnesses.push_back("M/" + f.to_string() + " is disconnected");
      }
    }
  } else if (property == "circuit-difference") {
    const auto& cs = m.circuits().members();
    for (std::size_t i = 0; i < cs.size(); ++i)
      for (std::size_t j = i + 1; j < cs.size(); ++j)
        if (cs[i].intersects(cs[j]) && !m.is_circuit(cs[i] ^ cs[j])) {
          ++out.violation_count;
          if (out.witnesses.size() < max_witnesses)
            out.witnesses.push_back(cs[i].to_string() + " xor " + cs[j].to_string() + " = " + (cs[i] ^ cs[j]).to_string() +
                                    " is not a circuit");
        }
    out.holds = out.violation_count == 0;
  } else if (property == "binary") {
    out.holds = is_binary(m);
    out.witnesses.push_back(std::string("symmetric-difference cross-check ") +
                            (has_cycle_symmetric_difference_property(m) ? "agrees: binary" : "agrees: not binary"));
    if (out.holds != has_cycle_symmetric_difference_property(m)) out.witnesses.back() = "cross-check disagrees";
    if (!out.holds) out.violation_count = 1;
  } else {
    throw InputError("unknown property: " + property);
  }
  return out;
}

inline Json axiom_violation_json(const AxiomViolation& v) {
  Json j{{"c1", v.c1.to_string()}, {"c2", v.c2.to_string()}};
  if (v.e1) j["e1"] = *v.e1;
  if (v.e2) j["e2"] = *v.e2;
  if (v.e) j["e"] = *v.e;
  j["note"] = v.note;
  return j;
}

inline std::string axiom_violation_text(const AxiomViolation& v) {
  std::string s = "C1=" + v.c1.to_string() + " C2=" + v.c2.to_string();
  if (v.e1) s += " e1=" + std::to_string(*v.e1);
  if (v.e2) s += " e2=" + std::to_string(*v.e2);
  if (v.e) s += " e=" + std::to_string(*v.e);
  return s + " (" + v.note + ")";
}

}  // namespace detail

/// Runs the command line `args` (program name excluded) and returns the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matroid circuit-elimination toolkit", "matroid_cli"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  std::size_t max_witnesses = kDefaultMaxWitnesses;
  app.add_flag("--json", json, "structured output");
  app.add_option("--max-witnesses", max_witnesses, "witness cap per check")->check(CLI::NonNegativeNumber);

  std::string file, property, system, host_file, target_file, id, out_file, what, family, out_dir;
  bool pinned = false, connected_only = false;
  CatalogSpec bounds;
  bounds.max_edges = -1;
  bool allow_large = false;
  int clutter_n = -1;

  auto* info = app.add_subcommand("info", "basic invariants of a matroid");
  info->add_option("FILE", file)->required();

  auto* check = app.add_subcommand("check", "test one property");
  check->add_option("--property", property, "ssce|skew|k-skew:K|unbreakable|circuit-difference|binary")->required();
  check->add_option("FILE", file)->required();

  auto* axiom = app.add_subcommand("axiom", "test a circuit axiom system on a clutter");
  axiom->add_option("--system", system, "c3|c3s|c3pp|c3pp-unique|c3pp-weak")->required();
  axiom->add_option("FILE", file)->required();

  auto* minor_cmd = app.add_subcommand("minor", "series-minor containment");
  minor_cmd->add_flag("--series", "series minors (the only kind supported)")->required();
  minor_cmd->add_flag("--pin", pinned, "match the 'e' tags of host and target");
  minor_cmd->add_flag("--allow-large", allow_large, "lift the host size limit");
  minor_cmd->add_option("HOST", host_file)->required();
  minor_cmd->add_option("TARGET", target_file)->required();

  auto* named_cmd = app.add_subcommand("named", "emit a registry matroid");
  named_cmd->add_option("ID", id, "N5, MK4, K23, U:r,n, SU:k,l, G:i, L:i")->required();
  named_cmd->add_option("--out", out_file);

  auto add_bounds = [&](CLI::App* sub) {
    sub->add_option("--graphic-max-edges", bounds.max_edges);
    sub->add_option("--binary-max-cols", bounds.max_cols);
    sub->add_option("--binary-max-rank", bounds.max_rank);
    sub->add_option("--uniform-max", bounds.max_n);
    sub->add_option("--clutter-n", clutter_n);
    sub->add_flag("--allow-large", allow_large);
  };
  auto* verify = app.add_subcommand("verify", "run a verification sweep");
  verify->add_option("WHAT", what, "theorem1|theorem3|axiom|lemmas")
      ->required()
      ->check(CLI::IsMember({"theorem1", "theorem3", "axiom", "lemmas"}));
  add_bounds(verify);

  auto* catalog = app.add_subcommand("catalog", "write catalog instances to a directory");
  catalog->add_option("--family", family, "graphic|binary|uniform|named|clutter")->required();
  catalog->add_option("--out", out_dir)->required();
  catalog->add_flag("--connected", connected_only);
  add_bounds(catalog);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  detail::Output sink(out, json, max_witnesses);
  try {
    int code = kExitPass;
    if (info->parsed()) {
      const Matroid m = parse_input(detail::read_file(file)).to_matroid();
      const bool binary = is_binary(m);
      if (json) {
        Json params{{"n", m.size()},
                    {"rank", m.rank()},
                    {"connected", m.is_connected()},
                    {"circuits", m.circuits().size()},
                    {"series_classes", detail::classes_string(m.series_classes())},
                    {"binary", binary}};
        sink.set("command", "info");
        sink.set("records", Json::array({Json{{"check", "info"},
                                              {"instance", encode_instance(m)},
                                              {"verdict", "pass"},
                                              {"witnesses", Json::array()},
                                              {"params", params}}}));
      } else {
        out << "n " << m.size() << "\nrank " << m.rank() << "\nconnected " << (m.is_connected() ? "true" : "false")
            << "\ncircuits " << m.circuits().size() << "\nseries_classes "
            << detail::classes_string(m.series_classes()) << "\nbinary " << (binary ? "true" : "false") << '\n';
      }
    } else if (check->parsed()) {
      const Matroid m = parse_input(detail::read_file(file)).to_matroid();
      auto outcome = detail::check_property(m, property, max_witnesses);
      sink.check(property, encode_instance(m), outcome.holds, outcome.violation_count, outcome.witnesses,
                 Json{{"property", property}});
      code = outcome.holds ? kExitPass : kExitFail;
    } else if (axiom->parsed()) {
      const InputDocument doc = parse_input(detail::read_file(file), false);
      const CircuitFamily fam = doc.kind == InputDocument::Kind::matroid ? *doc.family : doc.to_matroid().circuits();
      const AxiomSystem sys = parse_axiom_system(system);
      AxiomOptions options;
      options.max_witnesses = max_witnesses;
      const auto result = axiom_check(fam, doc.ground_size, sys, options);
      std::string inst = "n=" + std::to_string(doc.ground_size) + ":";
      for (Subset c : fam) inst += c.to_string();
      std::vector<std::string> witnesses;
      for (auto& v : result.violations) witnesses.push_back(detail::axiom_violation_text(v));
      sink.check("axiom", inst, result.holds, result.violation_count, witnesses, Json{{"system", to_string(sys)}});
      code = result.holds ? kExitPass : kExitFail;
    } else if (minor_cmd->parsed()) {
      const InputDocument host = parse_input(detail::read_file(host_file));
      const InputDocument target = parse_input(detail::read_file(target_file));
      SeriesMinorOptions options;
      options.allow_large = allow_large;
      std::optional<int> target_pin;
      if (pinned) {
        if (!host.tags.count("e") || !target.tags.count("e")) throw InputError("--pin needs a 'tag e' line in both files");
        options.host_pin = host.tags.at("e");
        target_pin = target.tags.at("e");
      }
      const Matroid h = host.to_matroid(), t = target.to_matroid();
      auto result = find_series_minor(h, {{t, target_pin}}, options);
      std::vector<std::string> witnesses;
      if (result.found) witnesses.push_back(matroid::detail::describe(result.moves));
      if (json) {
        sink.check("series-minor", encode_instance(h), result.found, result.found ? 0 : 1, witnesses,
                   Json{{"target", encode_instance(t)}, {"states_explored", result.states_explored}});
      } else {
        out << "check series-minor\nverdict " << (result.found ? "pass" : "fail") << '\n';
        if (result.found) out << "moves " << witnesses[0] << '\n';
        out << "states_explored " << result.states_explored << '\n';
      }
      code = result.found ? kExitPass : kExitFail;
    } else if (named_cmd->parsed()) {
      const NamedMatroid nm = named(id);
      std::map<std::string, int> tags;
      if (nm.tag_e) tags["e"] = *nm.tag_e;
      const std::string text = emit_matroid(nm.matroid, tags);
      if (!out_file.empty())
        detail::write_file(out_file, text);
      else
        out << text;
    } else if (verify->parsed()) {
      SweepBounds b;
      if (bounds.max_edges > 0) b.graphic_max_edges = bounds.max_edges;
      b.binary_max_cols = bounds.max_cols;
      b.binary_max_rank = bounds.max_rank;
      b.uniform_max = bounds.max_n;
      b.allow_large = allow_large;
      std::vector<VerificationReport> reports;
      if (what == "theorem1") {
        reports.push_back(verify_theorem1(standard_catalogs(b)));
      } else if (what == "theorem3") {
        const int edges = bounds.max_edges > 0 ? bounds.max_edges : 9;
        if (edges > 9 && !allow_large) throw InputError("theorem3 above 9 edges needs --allow-large");
        auto specs = standard_catalogs(b);
        specs[0].max_edges = edges;
        reports.push_back(verify_theorem3(specs[0]));
        reports.push_back(verify_theorem3(specs[1]));
      } else if (what == "axiom") {
        const int top = clutter_n > 0 ? clutter_n : 5;
        if (top > kMaxClutterGround) throw InputError("--clutter-n is limited to 6");
        if (top > 5 && !allow_large) throw InputError("--clutter-n above 5 needs --allow-large");
        for (int n = 1; n <= top; ++n) reports.push_back(verify_axiom_equivalence(n, allow_large));
      } else {
        LemmaSuiteOptions options;
        options.bounds = b;
        reports = verify_lemma_suite(options);
      }
      for (const auto& r : reports) {
        sink.report(r);
        if (!r.passed()) code = kExitFail;
      }
      if (json) sink.set("verdict", code == kExitPass ? "pass" : "fail");
      else out << "overall " << (code == kExitPass ? "pass" : "fail") << '\n';
    } else if (catalog->parsed()) {
      CatalogSpec spec = bounds;
      spec.family = parse_catalog_family(family);
      if (spec.max_edges <= 0) spec.max_edges = 8;
      if (clutter_n > 0) spec.clutter_n = clutter_n;
      spec.connected_only = connected_only;
      spec.allow_large = allow_large;
      spec.validate();
      std::filesystem::create_directories(out_dir);
      std::size_t index = 0;
      for_each_catalog_matroid(spec, [&](const CatalogEntry& e) {
        std::map<std::string, int> tags;
        if (e.tag_e) tags["e"] = *e.tag_e;
        std::ostringstream name;
        name << to_string(spec.family) << '-' << std::setw(5) << std::setfill('0') << index++ << ".matroid";
        detail::write_file(std::filesystem::path(out_dir) / name.str(), "# " + e.source + "\n" + emit_matroid(e.matroid, tags));
      });
      if (json)
        sink.set("command", "catalog"), sink.set("family", to_string(spec.family)), sink.set("written", index);
      else
        out << "family " << to_string(spec.family) << "\nwritten " << index << '\n';
    }
    sink.flush();
    return code;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace matroid::cli
