#include "coxshuffle/tables.hpp"

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "coxshuffle/lattice.hpp"

namespace coxshuffle {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

template <class T>
std::string joined(const std::vector<T>& v, const char* sep = " ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

}  // namespace

std::string Table::csv() const {
  std::string out;
  const auto line = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out += ',';
      out += csv_field(fields[i]);
    }
    out += '\n';
  };
  line(columns);
  for (const auto& r : rows) line(r);
  return out;
}

nlohmann::ordered_json Table::json() const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json o = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < columns.size(); ++i) o[columns[i]] = r[i];
    arr.push_back(std::move(o));
  }
  return arr;
}

std::string Table::render(const std::string& format) const {
  if (format == "csv") return csv();
  if (format == "json") return json().dump(2) + "\n";
  throw std::invalid_argument("unknown format: " + format);
}

Table measure_table(std::shared_ptr<const GroupData> g, const std::vector<Rational>& xs, Method method) {
  if (xs.empty()) throw std::invalid_argument("measure_table: no x values");
  const auto& t = g->table();
  Table out;
  if (xs.size() == 1) {
    const auto by_descent = h_measure(g, xs[0], method).by_descent();
    if (!by_descent) throw std::logic_error("measure is not constant on descent classes");
    out.columns = {"descent_set", "value_num", "value_den", "class_label", "elements"};
    const auto classes = t.descent_classes();
    for (DescentSet D = 0; D < classes.size(); ++D) {
      std::map<int, int> per_class;  // class index -> elements
      for (int w : classes[D]) ++per_class[t.class_of[static_cast<std::size_t>(w)]];
      const Rational& v = (*by_descent)[D];
      for (const auto& [c, count] : per_class) {
        out.rows.push_back({descent_str(D, g->rank()), v.num().get_str(), v.den().get_str(),
                            t.classes[static_cast<std::size_t>(c)].label.str(), std::to_string(count)});
      }
    }
    return out;
  }
  out.columns = {"descent_set"};
  std::vector<std::vector<Rational>> values;
  for (const auto& x : xs) {
    out.columns.push_back("x=" + x.str());
    auto bd = h_measure(g, x, method).by_descent();
    if (!bd) throw std::logic_error("measure is not constant on descent classes");
    values.push_back(std::move(*bd));
  }
  for (DescentSet D = 0; D < values[0].size(); ++D) {
    std::vector<std::string> row{descent_str(D, g->rank())};
    for (const auto& v : values) row.push_back(v[D].str());
    out.rows.push_back(std::move(row));
  }
  return out;
}

Table lattice_table(const GroupData& g) {
  Table out;
  out.columns = {"flat_id", "dim", "moebius_from_V"};
  std::visit(
      [&](const auto& grp) {
        const auto lat = build_lattice(grp.root_system);
        const auto& mu = lat.mobius_from(0);
        for (int i = 0; i < lat.size(); ++i) {
          out.rows.push_back({std::to_string(i), std::to_string(lat.dim(i)), std::to_string(mu[static_cast<std::size_t>(i)])});
        }
      },
      g.group);
  return out;
}

Table orbit_table(const OrbitFamily& fam) {
  Table out;
  out.columns = {"poly", "factorization", "lambda", "mu"};
  for (const auto& f : enumerate_orbits(fam)) {
    const ClassLabel label = phi_map(fam, f);
    out.rows.push_back({f.str(), factor(f).str(), partition_str(label.lambda),
                        fam.tag == OrbitFamily::Tag::B ? partition_str(label.mu) : ""});
  }
  return out;
}

Table class_table(const GroupData& g) {
  Table out;
  out.columns = {"label", "size", "representative"};
  for (const auto& c : g.table().classes) {
    out.rows.push_back({c.label.str(), std::to_string(c.members.size()), std::to_string(*std::min_element(c.members.begin(), c.members.end()))});
  }
  return out;
}

Table element_table(const GroupData& g) {
  const auto& t = g.table();
  Table out;
  out.columns = {"index", "length", "descent_set", "word", "class_label", "one_line"};
  for (int w = 0; w < t.order(); ++w) {
    const auto i = static_cast<std::size_t>(w);
    std::vector<int> word = t.word(w);
    for (int& s : word) ++s;
    out.rows.push_back({std::to_string(w), std::to_string(t.length[i]), descent_str(t.descents[i], t.rank), joined(word),
                        t.classes[static_cast<std::size_t>(t.class_of[i])].label.str(),
                        t.one_line.empty() ? "" : joined(t.one_line[i])});
  }
  return out;
}

Table parabolic_table(const GroupData& g) {
  Table out;
  out.columns = {"K", "subgroup_order", "normalizer_order", "conjugates", "fixed_dim", "chi", "coexponents"};
  for (const auto& p : g.parabolics) {
    out.rows.push_back({descent_str(p.info.K, g.rank()), std::to_string(p.info.subgroup_order),
                        std::to_string(p.info.normalizer_order), std::to_string(p.info.lambda_count),
                        std::to_string(p.fixed_dim), p.chi.str(), joined(p.coexponents)});
  }
  return out;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw std::runtime_error("cannot write to standard output");
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error(path + ": cannot open for writing: " + std::strerror(errno));
  file << text;
  file.close();
  if (!file) throw std::runtime_error(path + ": write failed");
}

}  // namespace coxshuffle
