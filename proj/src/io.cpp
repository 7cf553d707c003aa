#include "crcoh/io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "crcoh/error.hpp"

namespace crcoh::io {
namespace {

[[noreturn]] void bad_datum(const std::string& why) { throw Error(ErrorKind::InvalidDatum, why); }

std::int64_t get_int(const Json& doc, const char* what) {
  if (!doc.is_number_integer()) bad_datum(std::string(what) + " must be an integer");
  return doc.get<std::int64_t>();
}

Rational get_rational(const Json& doc, const char* what) {
  if (!doc.is_string()) throw std::invalid_argument(std::string(what) + " must be a \"p/q\" string");
  return Rational::parse(doc.get<std::string>());
}

std::vector<std::int64_t> get_int_list(const Json& doc, const char* what) {
  if (!doc.is_array()) bad_datum(std::string(what) + " must be a list of integers");
  std::vector<std::int64_t> out;
  for (const auto& x : doc) out.push_back(get_int(x, what));
  return out;
}

void reject_unknown_keys(const Json& doc, std::initializer_list<const char*> known, const char* where) {
  std::set<std::string> allowed(known.begin(), known.end());
  for (const auto& [key, value] : doc.items())
    if (!allowed.count(key)) bad_datum(std::string("unknown field '") + key + "' in " + where);
}

}  // namespace

QuotientDatum parse_datum(const Json& doc) {
  if (!doc.is_object()) bad_datum("datum must be a JSON object");
  reject_unknown_keys(doc, {"version", "n", "weights", "finite", "chamber"}, "datum");
  if (doc.contains("version") && get_int(doc["version"], "version") != kDatumFormatVersion)
    bad_datum("unsupported datum version " + doc["version"].dump());
  for (const char* key : {"n", "weights", "chamber"})
    if (!doc.contains(key)) bad_datum(std::string("datum is missing '") + key + "'");

  QuotientDatum d;
  const std::int64_t n = get_int(doc["n"], "n");
  if (n < 1) bad_datum("n must be at least 1");
  d.n = static_cast<std::size_t>(n);
  d.weights = get_int_list(doc["weights"], "weights");
  if (doc.contains("finite")) {
    if (!doc["finite"].is_array()) bad_datum("finite must be a list");
    for (const auto& f : doc["finite"]) {
      if (!f.is_object() || !f.contains("order") || !f.contains("phases"))
        bad_datum("finite factors need 'order' and 'phases'");
      reject_unknown_keys(f, {"order", "phases"}, "finite factor");
      d.finite.push_back({get_int(f["order"], "order"), get_int_list(f["phases"], "phases")});
    }
  }
  const Json& chamber = doc["chamber"];
  if (chamber == "positive")
    d.chamber = Chamber::positive;
  else if (chamber == "negative")
    d.chamber = Chamber::negative;
  else
    bad_datum("chamber must be \"positive\" or \"negative\"");
  return d;
}

QuotientDatum parse_datum_text(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad_datum(std::string("datum is not valid JSON: ") + e.what());
  }
  return parse_datum(doc);
}

QuotientDatum read_datum_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad_datum("cannot open datum file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_datum_text(buffer.str());
}

Json to_json(const QuotientDatum& d) {
  Json finite = Json::array();
  for (const auto& f : d.finite) finite.push_back({{"order", f.order}, {"phases", f.phases}});
  return {{"version", kDatumFormatVersion},
          {"n", d.n},
          {"weights", d.weights},
          {"finite", finite},
          {"chamber", to_string(d.chamber)}};
}

Json to_json(const SectorLabel& t) { return {{"c", t.c.str()}, {"finite", t.finite}}; }

SectorLabel parse_label(const ValidatedDatum& d, const Json& doc) {
  if (!doc.is_object() || !doc.contains("c"))
    throw Error(ErrorKind::InvalidLabel, "sector label needs a 'c' field");
  std::vector<std::int64_t> finite;
  if (doc.contains("finite")) finite = doc["finite"].get<std::vector<std::int64_t>>();
  return make_label(d, get_rational(doc["c"], "c"), std::move(finite));
}

SectorLabel parse_label_flag(const ValidatedDatum& d, std::string_view text) {
  if (text == "id") return identity(d);
  Rational c(0);
  std::vector<std::int64_t> finite;
  bool have_c = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (item.starts_with("c=") && !have_c) {
      c = Rational::parse(item.substr(2));
      have_c = true;
    } else if (item.starts_with("a=") && finite.empty()) {
      std::string_view rest = item.substr(2);
      std::size_t p = 0;
      while (true) {
        std::size_t colon = rest.find(':', p);
        std::string_view piece = rest.substr(p, colon == std::string_view::npos ? std::string_view::npos : colon - p);
        Rational value = Rational::parse(piece);
        if (!value.is_integer()) throw std::invalid_argument("finite components must be integers");
        finite.push_back(value.num());
        if (colon == std::string_view::npos) break;
        p = colon + 1;
      }
    } else {
      throw std::invalid_argument("malformed sector label '" + std::string(text) +
                                  "'; expected c=p/q[,a=k1:k2:...] or id");
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (!have_c) throw std::invalid_argument("sector label '" + std::string(text) + "' is missing c=");
  return make_label(d, c, std::move(finite));
}

Json to_json(const BasisElement& b) { return {{"sector", to_json(b.sector)}, {"eta_power", b.k}}; }

BasisElement parse_basis_element(const ValidatedDatum& d, const Json& doc) {
  return {parse_label(d, doc.at("sector")), doc.at("eta_power").get<std::int64_t>()};
}

Json to_json(const CRClass& cls) {
  Json out = Json::array();
  for (const auto& [b, c] : cls.terms())
    out.push_back({{"sector", to_json(b.sector)}, {"eta_power", b.k}, {"coeff", c.str()}});
  return out;
}

CRClass parse_class(const ValidatedDatum& d, const Json& doc) {
  CRClass out;
  for (const auto& term : doc) out.add(parse_basis_element(d, term), get_rational(term.at("coeff"), "coeff"));
  return out;
}

Json to_json(const StructureTable& table) {
  Json basis = Json::array();
  for (const auto& b : table.basis) basis.push_back(to_json(b));
  Json degrees = Json::array();
  for (const auto& deg : table.degrees) degrees.push_back(deg.str());
  Json pairing = Json::array();
  for (const auto& row : table.pairing) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(x.str());
    pairing.push_back(r);
  }
  Json products = Json::array();
  for (const auto& [key, cls] : table.products)
    if (!cls.is_zero()) products.push_back({{"left", key.first}, {"right", key.second}, {"value", to_json(cls)}});
  return {{"basis", basis}, {"degrees", degrees}, {"pairing", pairing}, {"products", products}};
}

StructureTable parse_table(const ValidatedDatum& d, const Json& doc) {
  StructureTable table;
  for (const auto& b : doc.at("basis")) table.basis.push_back(parse_basis_element(d, b));
  const std::size_t size = table.basis.size();
  for (const auto& deg : doc.at("degrees")) table.degrees.push_back(get_rational(deg, "degree"));
  for (const auto& row : doc.at("pairing")) {
    std::vector<Rational> r;
    for (const auto& x : row) r.push_back(get_rational(x, "pairing entry"));
    if (r.size() != size) throw std::invalid_argument("pairing row has the wrong length");
    table.pairing.push_back(std::move(r));
  }
  if (table.degrees.size() != size || table.pairing.size() != size)
    throw std::invalid_argument("table dimensions disagree with the basis");
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i; j < size; ++j) table.products[{i, j}] = CRClass();
  for (const auto& entry : doc.at("products")) {
    const auto i = entry.at("left").get<std::size_t>();
    const auto j = entry.at("right").get<std::size_t>();
    if (i > j || j >= size) throw std::invalid_argument("product index out of range");
    table.products[{i, j}] = parse_class(d, entry.at("value"));
  }
  return table;
}

Json to_json(const SectorInfo& info) {
  std::vector<std::size_t> fixed;
  for (auto j : info.fixed_set) fixed.push_back(j + 1);
  Json thetas = Json::array();
  for (const auto& th : info.thetas) thetas.push_back(th.str());
  return {{"label", to_json(info.label)},
          {"fixed_set", fixed},
          {"thetas", thetas},
          {"shift", info.shift.str()},
          {"dim", info.dim}};
}

Json to_json(const WallCrossingReport& report) {
  Json triple = Json::array();
  Json sides = Json::array();
  for (std::size_t i = 0; i < 3; ++i) {
    triple.push_back({{"sector", to_json(report.triple[i].sector)}, {"eta_power", report.triple[i].k}});
    sides.push_back({{"positive", report.side_existence[i].positive},
                     {"negative", report.side_existence[i].negative}});
  }
  auto term = [](const LaurentTerm& t) { return Json{{"coeff", t.coeff().str()}, {"power", t.power()}}; };
  Json out = {{"triple", triple},
              {"value", report.value.str()},
              {"degree_check", report.degree_check},
              {"numerator", term(report.numerator)},
              {"euler", term(report.euler)},
              {"collapsed", term(report.collapsed)},
              {"side_existence", sides}};
  if (!report.note.empty()) out["note"] = report.note;
  return out;
}

Json to_json(const AxiomReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json entry = {{"name", c.name}, {"passed", c.passed}};
    if (!c.passed) entry["counterexample"] = c.counterexample;
    checks.push_back(entry);
  }
  return {{"passed", report.passed()}, {"checks", checks}};
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

std::string index_set_string(const IndexSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(set[i] + 1);
  }
  return out + "}";
}

std::string sectors_tsv(const std::vector<SectorInfo>& sectors) {
  std::ostringstream out;
  out << "label\tfixed_set\tthetas\tshift\tdim\n";
  for (const auto& s : sectors) {
    out << to_string(s.label) << '\t' << index_set_string(s.fixed_set) << '\t';
    for (std::size_t j = 0; j < s.thetas.size(); ++j) out << (j ? " " : "") << s.thetas[j];
    out << '\t' << s.shift << '\t' << s.dim << '\n';
  }
  return out.str();
}

std::string basis_tsv(const std::vector<BasisElement>& basis, const std::vector<Rational>& degrees) {
  std::ostringstream out;
  out << "index\tsector\teta_power\tdegree\n";
  for (std::size_t i = 0; i < basis.size(); ++i)
    out << i << '\t' << to_string(basis[i].sector) << '\t' << basis[i].k << '\t' << degrees[i] << '\n';
  return out.str();
}

std::string table_tsv(const StructureTable& table) {
  std::ostringstream out;
  out << basis_tsv(table.basis, table.degrees);
  out << "\npairing\tleft\tright\tvalue\n";
  for (std::size_t i = 0; i < table.basis.size(); ++i)
    for (std::size_t j = 0; j < table.basis.size(); ++j)
      if (!table.pairing[i][j].is_zero()) out << "pairing\t" << i << '\t' << j << '\t' << table.pairing[i][j] << '\n';
  out << "\nproduct\tleft\tright\tvalue\n";
  for (const auto& [key, cls] : table.products)
    if (!cls.is_zero()) out << "product\t" << key.first << '\t' << key.second << '\t' << cls.str() << '\n';
  return out.str();
}

}  // namespace crcoh::io
