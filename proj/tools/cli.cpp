#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "crcoh/cr_ring.hpp"
#include "crcoh/error.hpp"
#include "crcoh/io.hpp"
#include "crcoh/localization.hpp"
#include "crcoh/quotient.hpp"
#include "crcoh/selftest.hpp"

namespace crcoh::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { tsv, structured };

struct Options {
  std::string datum_path;
  Format format = Format::tsv;
  std::string out_path;
  std::string method = "direct";
  std::string t, t1, t2, t3;
  std::int64_t k1 = 0, k2 = 0, k3 = 0;
};

SectorLabel label_flag(const ValidatedDatum& d, const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string(flag) + " is required");
  try {
    return io::parse_label_flag(d, text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

BasisElement element(const ValidatedDatum& d, const std::string& label, std::int64_t k, const char* flag) {
  BasisElement b{label_flag(d, label, flag), k};
  check_basis_element(d, b);
  return b;
}

Triple triple_flags(const ValidatedDatum& d, const Options& o) {
  return {TripleEntry{label_flag(d, o.t1, "--t1"), o.k1}, TripleEntry{label_flag(d, o.t2, "--t2"), o.k2},
          TripleEntry{label_flag(d, o.t3, "--t3"), o.k3}};
}

// Each command writes its document to `out` and returns the exit code.
using Command = std::function<int(const ValidatedDatum&, const Options&, std::ostream&)>;

int cmd_sectors(const ValidatedDatum& d, const Options& o, std::ostream& out) {
  const auto sectors = enumerate_sectors(d);
  if (o.format == Format::tsv) {
    out << io::sectors_tsv(sectors);
  } else {
    io::Json list = io::Json::array();
    for (const auto& s : sectors) list.push_back(io::to_json(s));
    out << io::dump({{"sectors", list}});
  }
  return 0;
}

int cmd_shift(const ValidatedDatum& d, const Options& o, std::ostream& out) {
  const SectorInfo info = sector_info(d, label_flag(d, o.t.empty() ? o.t1 : o.t, "--t"));
  if (o.format == Format::tsv)
    out << info.shift << '\n';
  else
    out << io::dump(io::to_json(info));
  return 0;
}

int cmd_basis(const ValidatedDatum& d, const Options& o, std::ostream& out) {
  const auto elements = basis(d);
  std::vector<Rational> degrees;
  for (const auto& b : elements) degrees.push_back(cr_degree(d, b));
  if (o.format == Format::tsv) {
    out << io::basis_tsv(elements, degrees);
  } else {
    io::Json list = io::Json::array();
    for (std::size_t i = 0; i < elements.size(); ++i) {
      io::Json entry = io::to_json(elements[i]);
      entry["degree"] = degrees[i].str();
      list.push_back(entry);
    }
    out << io::dump({{"basis", list}});
  }
  return 0;
}

int cmd_pair(const ValidatedDatum& d, const Options& o, std::ostream& out) {
  const Rational value = pairing(d, element(d, o.t1, o.k1, "--t1"), element(d, o.t2, o.k2, "--t2"));
  if (o.format == Format::tsv)
    out << value << '\n';
  else
    out << io::dump({{"pairing", value.str()}});
  return 0;
}

int cmd_cup(const ValidatedDatum& d, const Options& o, std::ostream& out) {
  const CRClass product = cup(d, element(d, o.t1, o.k1, "--t1"), element(d, o.t2, o.k2, "--t2"));
  if (o.format == Format::tsv) {
    out << "sector\teta_power\tcoeff\n";
    for (const auto& [b, c] : product.terms()) out << to_string(b.sector) << '\t' << b.k << '\t' << c << '\n';
  } else {
    out << io::dump({{"product", io::to_json(product)}});
  }
  return 0;
}

int cmd_triple(const ValidatedDatum& d, const Options& o, std::ostream& out) {
  const Triple triple = triple_flags(d, o);
  if (o.method == "direct") {
    const Rational value = triple_direct(d, CRClass(element(d, o.t1, o.k1, "--t1")),
                                         CRClass(element(d, o.t2, o.k2, "--t2")),
                                         CRClass(element(d, o.t3, o.k3, "--t3")));
    if (o.format == Format::tsv)
      out << value << '\n';
    else
      out << io::dump({{"method", "direct"}, {"value", value.str()}});
  } else {
    const WallCrossingReport report = triple_localized(d, triple);
    if (o.format == Format::tsv) {
      out << report.value << '\n';
    } else {
      io::Json doc = io::to_json(report);
      doc["method"] = "localization";
      out << io::dump(doc);
    }
  }
  return 0;
}

int cmd_table(const ValidatedDatum& d, const Options& o, std::ostream& out) {
  const StructureTable table = structure_constants(d);
  if (o.format == Format::tsv)
    out << io::table_tsv(table);
  else
    out << io::dump(io::to_json(table));
  return 0;
}

int cmd_wallcross(const ValidatedDatum& d, const Options& o, std::ostream& out) {
  const WallCrossingReport report = wall_crossing_delta(d, triple_flags(d, o));
  if (o.format == Format::tsv) {
    out << "value\tdegree_check\tcollapsed\n"
        << report.value << '\t' << report.degree_check << '\t' << report.collapsed.str() << '\n'
        << "numerator\t" << report.numerator.str() << "\neuler\t" << report.euler.str() << '\n';
    for (std::size_t i = 0; i < 3; ++i)
      out << "t" << i + 1 << '\t' << to_string(report.triple[i].sector) << "\tpositive="
          << report.side_existence[i].positive << "\tnegative=" << report.side_existence[i].negative << '\n';
    if (!report.note.empty()) out << "note\t" << report.note << '\n';
  } else {
    out << io::dump(io::to_json(report));
  }
  return 0;
}

int cmd_selftest(const ValidatedDatum& d, const Options& o, std::ostream& out) {
  const SelftestReport report = selftest(d);
  if (o.format == Format::tsv) {
    out << "phase\tproperty\tstatus\tcases\tdetail\n";
    for (const auto& r : report.results)
      out << r.phase << '\t' << r.name << '\t' << (r.skipped ? "skip" : r.passed ? "pass" : "FAIL") << '\t'
          << r.cases << '\t' << r.detail << '\n';
  } else {
    out << io::dump(to_json(report));
  }
  return report.passed() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chen-Ruan cohomology of abelian quotient orbifolds, in exact arithmetic", "crcoh"};
  app.require_subcommand(1);

  Options o;
  std::string format = "tsv";
  std::map<CLI::App*, Command> commands;

  auto add = [&](const char* name, const char* help, Command fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("datum", o.datum_path, "Datum file")->required();
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"tsv", "structured"}));
    sub->add_option("--out", o.out_path, "Write output to this file instead of stdout");
    commands.emplace(sub, std::move(fn));
    return sub;
  };
  auto labels = [&](CLI::App* sub, int count) {
    std::string* targets[] = {&o.t1, &o.t2, &o.t3};
    std::int64_t* powers[] = {&o.k1, &o.k2, &o.k3};
    for (int i = 0; i < count; ++i) {
      const std::string n = std::to_string(i + 1);
      sub->add_option("--t" + n, *targets[i], "Sector label c=p/q[,a=k1:k2:...] or id");
      sub->add_option("--k" + n, *powers[i], "Power of eta on the sector");
    }
  };

  add("sectors", "List twisted sectors with fixed sets, angles and degree shifts", cmd_sectors);
  add("shift", "Degree shift of one sector", cmd_shift)->add_option("--t", o.t, "Sector label");
  add("basis", "Graded basis of the Chen-Ruan cohomology", cmd_basis);
  labels(add("pair", "Poincare pairing of two basis elements", cmd_pair), 2);
  labels(add("cup", "Chen-Ruan product of two basis elements", cmd_cup), 2);
  CLI::App* triple = add("triple", "3-point function of three basis elements", cmd_triple);
  labels(triple, 3);
  triple->add_option("--method", o.method, "direct or localization")
      ->check(CLI::IsMember({"direct", "localization"}));
  add("table", "Full structure-constant table", cmd_table);
  labels(add("wallcross", "Wall-crossing contribution of a triple at the origin", cmd_wallcross), 3);
  add("selftest", "Ring axioms, sector identities and two-path agreement", cmd_selftest);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }
  o.format = format == "structured" ? Format::structured : Format::tsv;

  auto selected = std::find_if(commands.begin(), commands.end(), [](const auto& c) { return c.first->parsed(); });
  if (selected == commands.end()) {
    err << "usage error: no command given\n";
    return 2;
  }

  std::ostringstream buffer;
  int code = 0;
  try {
    const ValidatedDatum d = validate_datum(io::read_datum_file(o.datum_path));
    code = selected->second(d, o, buffer);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.name() << ": " << e.what() << '\n';
    return 1;
  } catch (const std::overflow_error& e) {
    err << "error: Overflow: " << e.what() << '\n';
    return 1;
  }

  if (o.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << o.out_path << "'\n";
      return 1;
    }
    file << buffer.str();
  }
  if (code != 0) err << "error: SelftestFailed: at least one property failed\n";
  return code;
}

}  // namespace crcoh::cli
