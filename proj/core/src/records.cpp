#include "nlhorn/records.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "nlhorn/errors.hpp"
#include "nlhorn/version.hpp"

namespace nlhorn {

namespace {

using json = nlohmann::json;

json set_to_json(const IndexSet& s) {
  json arr = json::array();
  for (int e : s.elems()) arr.push_back(e);
  return arr;
}

IndexSet set_from_json(const json& j, int n) {
  std::vector<int> elems;
  for (const auto& e : j) elems.push_back(e.get<int>());
  return IndexSet(std::move(elems), n);
}

json tuple_to_json(const GTuple& t) {
  return json{{"A", set_to_json(t.A)},   {"Ap", set_to_json(t.Ap)}, {"B", set_to_json(t.B)},
              {"Bp", set_to_json(t.Bp)}, {"C", set_to_json(t.C)},   {"Cp", set_to_json(t.Cp)}};
}

GTuple tuple_from_json(const json& j, int n) {
  return GTuple{set_from_json(j.at("A"), n),  set_from_json(j.at("Ap"), n),
                set_from_json(j.at("B"), n),  set_from_json(j.at("Bp"), n),
                set_from_json(j.at("C"), n),  set_from_json(j.at("Cp"), n)};
}

json witness_to_json(const GWitness& w) {
  return json{{"A1", set_to_json(w.A1)}, {"A2", set_to_json(w.A2)}, {"B1", set_to_json(w.B1)},
              {"B2", set_to_json(w.B2)}, {"C1", set_to_json(w.C1)}, {"C2", set_to_json(w.C2)}};
}

GWitness witness_from_json(const json& j, int n) {
  return GWitness{set_from_json(j.at("A1"), n), set_from_json(j.at("A2"), n),
                  set_from_json(j.at("B1"), n), set_from_json(j.at("B2"), n),
                  set_from_json(j.at("C1"), n), set_from_json(j.at("C2"), n)};
}

json verdict_to_json(const TripleVerdict& v, const char* kind) {
  json line{{"kind", kind},         {"mu", v.mu.str()},   {"nu", v.nu.str()},
            {"lambda", v.la.str()}, {"parity", v.parity}, {"nl_pos", v.nl_pos},
            {"violated", v.violated}};
  if (v.t) line["t"] = v.t;
  return line;
}

std::string tool_stamp() { return std::string(kToolName) + " " + kToolVersion; }

}  // namespace

std::string to_records(const InequalitySet& set) {
  std::ostringstream out;
  out << json{{"kind", "inequality-set"},
              {"format_version", kFormatVersion},
              {"tool", tool_stamp()},
              {"n", set.n},
              {"family", set.family},
              {"records", set.records.size()}}
             .dump()
      << '\n';
  for (const IneqRecord& r : set.records) {
    json coeffs = json::array();
    for (std::int8_t c : r.coeffs) coeffs.push_back(static_cast<int>(c));
    json prov = json::array();
    for (const GTuple& t : r.provenance) prov.push_back(tuple_to_json(t));
    out << json{{"coeffs", coeffs},
                {"family", set.family},
                {"n", set.n},
                {"provenance", prov},
                {"trivial", r.trivial},
                {"witness", witness_to_json(r.witness)}}
               .dump()
        << '\n';
  }
  return out.str();
}

InequalitySet set_from_records(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty record file");
  InequalitySet set;
  try {
    json header = json::parse(line);
    if (header.at("kind").get<std::string>() != "inequality-set")
      throw ParseError("not an inequality-set file");
    if (header.at("format_version").get<int>() != kFormatVersion)
      throw ParseError("unsupported format version");
    set.n = header.at("n").get<int>();
    set.family = header.at("family").get<std::string>();
    const std::size_t expected = header.at("records").get<std::size_t>();
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      json j = json::parse(line);
      IneqRecord rec;
      for (const auto& c : j.at("coeffs")) rec.coeffs.push_back(c.get<int>());
      if (rec.coeffs.size() != static_cast<std::size_t>(3 * set.n))
        throw ParseError("coefficient vector has wrong length");
      for (const auto& p : j.at("provenance")) rec.provenance.push_back(tuple_from_json(p, set.n));
      if (rec.provenance.empty()) throw ParseError("record without provenance");
      rec.witness = witness_from_json(j.at("witness"), set.n);
      rec.trivial = j.at("trivial").get<bool>();
      set.records.push_back(std::move(rec));
    }
    if (set.records.size() != expected) throw ParseError("record count does not match header");
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad record file: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad record file: ") + e.what());
  }
  return set;
}

std::string to_records(const ScanReport& r) {
  std::ostringstream out;
  out << json{{"kind", "scan-report"},
              {"format_version", kFormatVersion},
              {"tool", tool_stamp()},
              {"wall_seconds", r.wall_seconds}}
             .dump()
      << '\n';
  out << json{{"kind", r.kind},
              {"n", r.n},
              {"max_size", r.max_size},
              {"family", r.family},
              {"t_max", r.t_max},
              {"scanned", r.scanned},
              {"nl_positive", r.nl_positive_count},
              {"compatible", r.compatible},
              {"counterexamples", r.counterexamples.size()},
              {"breaches", r.breaches.size()}}
             .dump()
      << '\n';
  for (const TripleVerdict& v : r.breaches) out << verdict_to_json(v, "breach").dump() << '\n';
  for (const TripleVerdict& v : r.counterexamples)
    out << verdict_to_json(v, "counterexample").dump() << '\n';
  return out.str();
}

std::string to_csv(const InequalitySet& set) {
  std::ostringstream out;
  out << "n,family,trivial";
  for (int b = 0; b < 3; ++b)
    for (int i = 1; i <= set.n; ++i) out << ',' << "mnl"[b] << i;
  out << '\n';
  for (const IneqRecord& r : set.records) {
    out << set.n << ',' << set.family << ',' << (r.trivial ? 1 : 0);
    for (std::int8_t c : r.coeffs) out << ',' << static_cast<int>(c);
    out << '\n';
  }
  return out.str();
}

std::string to_csv(const ScanReport& r) {
  std::ostringstream out;
  out << "kind,mu,nu,lambda,parity,nl_pos,t,violated\n";
  auto row = [&](const TripleVerdict& v, const char* kind) {
    // partition strings contain commas, so they are always quoted
    out << kind << ",\"" << v.mu.str() << "\",\"" << v.nu.str() << "\",\"" << v.la.str() << '"';
    out << ',' << v.parity << ',' << v.nl_pos << ',' << v.t << ',';
    for (std::size_t i = 0; i < v.violated.size(); ++i) {
      if (i) out << ';';
      out << v.violated[i];
    }
    out << '\n';
  };
  for (const TripleVerdict& v : r.breaches) row(v, "breach");
  for (const TripleVerdict& v : r.counterexamples) row(v, "counterexample");
  return out.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace nlhorn
