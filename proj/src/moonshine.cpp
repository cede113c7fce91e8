#include "fshape/moonshine.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "fshape/catalog.hpp"
#include "fshape/lattice.hpp"
#include "fshape/power_series.hpp"

namespace fshape {

namespace {

struct Component {
  char series;  // 'A', 'D', 'E'
  int l;
  int rank;
  FrameShape shape;
};

std::string combo_name(const std::vector<std::pair<Component, int>>& parts) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [comp, count] : parts) {
    if (!first) out << " ";
    first = false;
    out << comp.series << comp.l;
    if (count > 1) out << "^" << count;
  }
  return out.str();
}

FrameShape combo_shape(const std::vector<std::pair<Component, int>>& parts) {
  FrameShape shape;
  for (const auto& [comp, count] : parts)
    for (int i = 0; i < count; ++i) shape = shape * comp.shape;
  return shape;
}

// Multisets over `components` with total rank `target`; components are
// tried in order, so the resulting name lists them in the given order.
void knapsack(const std::vector<Component>& components, size_t index,
              int target, std::vector<std::pair<Component, int>>& chosen,
              int level, std::vector<ShapeCombo>& out) {
  if (target == 0) {
    if (!chosen.empty())
      out.push_back(ShapeCombo{combo_name(chosen), level, combo_shape(chosen)});
    return;
  }
  if (index == components.size()) return;
  const Component& comp = components[index];
  for (int count = target / comp.rank; count >= 1; --count) {
    chosen.emplace_back(comp, count);
    knapsack(components, index + 1, target - count * comp.rank, chosen, level,
             out);
    chosen.pop_back();
  }
  knapsack(components, index + 1, target, chosen, level, out);
}

FrameShape elliptic_shape(const std::string& name) {
  if (name == "D~5") return FrameShape::parse("2^4/1^2");
  if (name == "E~6") return FrameShape::parse("3^3/1");
  if (name == "E~7") return FrameShape::parse("2 4^2/1");
  if (name == "E~8") return FrameShape::parse("2 3 6/1");
  throw std::invalid_argument("unknown elliptic shape " + name);
}

FrameShape pi_pi_dual(const FrameShape& pi) { return pi * pi.saito_dual(); }

FrameShape branch_symbol(const Signature& sig) {
  std::map<int, int> chi;
  chi[1] = 2 - sig.branch_count();
  for (int a : sig.alpha) ++chi[a];
  return FrameShape(std::move(chi));
}

}  // namespace

std::vector<ShapeCombo> niemeier_combinations() {
  std::vector<ShapeCombo> out;
  for (int h = 2; h <= 46; ++h) {
    std::vector<Component> components;
    if (h - 1 <= 24)
      components.push_back(
          Component{'A', h - 1, h - 1, ade_coxeter_shape('A', h - 1)});
    if (h % 2 == 0 && (h + 2) / 2 >= 4 && (h + 2) / 2 <= 24) {
      const int l = (h + 2) / 2;
      components.push_back(Component{'D', l, l, ade_coxeter_shape('D', l)});
    }
    if (h == 12 || h == 18 || h == 30) {
      const int l = h == 12 ? 6 : (h == 18 ? 7 : 8);
      components.push_back(Component{'E', l, l, ade_coxeter_shape('E', l)});
    }
    std::vector<std::pair<Component, int>> chosen;
    knapsack(components, 0, 24, chosen, h, out);
  }
  return out;
}

std::vector<ShapeCombo> elliptic_combinations() {
  const std::vector<std::pair<std::string, int>> components = {
      {"D~5", 2}, {"E~6", 3}, {"E~7", 4}, {"E~8", 6}};
  std::vector<ShapeCombo> out;
  for (const auto& [name, order] : components) {
    const FrameShape shape = elliptic_shape(name);
    const long long deg = shape.degree();
    if (24 % deg != 0) continue;
    const int count = static_cast<int>(24 / deg);
    FrameShape total;
    for (int i = 0; i < count; ++i) total = total * shape;
    std::ostringstream label;
    label << name;
    if (count > 1) label << "^" << count;
    out.push_back(ShapeCombo{label.str(), order, total});
  }
  return out;
}

std::vector<MoonshineEntry> moonshine_entries() {
  std::vector<MoonshineEntry> out;
  for (const ShapeCombo& combo : niemeier_combinations())
    out.push_back(MoonshineEntry{"a", combo.name, combo.shape});
  for (const ShapeCombo& combo : elliptic_combinations())
    out.push_back(MoonshineEntry{"c", combo.name, pi_pi_dual(combo.shape)});
  for (const CatalogRecord& rec : Catalog::instance().records()) {
    if (rec.table <= 2 && rec.variant != "h")
      out.push_back(MoonshineEntry{"d", rec.display_name(),
                                   pi_pi_dual(moonshine_symbol_of(rec))});
    if (rec.flag_b)
      out.push_back(
          MoonshineEntry{"b", rec.display_name(), moonshine_symbol_of(rec)});
    if (rec.flag_e)
      out.push_back(MoonshineEntry{"e", rec.display_name(),
                                   pi_pi_dual(branch_symbol(rec.sig))});
  }
  return out;
}

std::vector<Table5Row> parse_table5(const std::string& text) {
  std::vector<Table5Row> out;
  for (const std::string& line : checked_dataset_lines(text)) {
    const size_t bar1 = line.find('|');
    const size_t bar2 = line.find('|', bar1 + 1);
    if (bar1 == std::string::npos || bar2 == std::string::npos)
      throw std::runtime_error("malformed correspondence line: " + line);
    Table5Row row;
    row.label = line.substr(0, bar1);
    row.shape = FrameShape::parse(line.substr(bar1 + 1, bar2 - bar1 - 1));
    std::string rest = line.substr(bar2 + 1);
    size_t pos = 0;
    while (pos < rest.size()) {
      size_t amp = rest.find(" & ", pos);
      if (amp == std::string::npos) amp = rest.size();
      row.realizers.push_back(rest.substr(pos, amp - pos));
      pos = amp + 3;
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<Table5Check> verify_table5() {
  const std::vector<Table5Row> rows = parse_table5(table5_text());
  const std::vector<MoonshineEntry> entries = moonshine_entries();

  std::map<FrameShape, std::set<std::string>> computed;
  for (const MoonshineEntry& entry : entries)
    computed[entry.shape].insert(entry.construction + ":" + entry.ref);

  const auto joined = [](const std::set<std::string>& tags) {
    std::string out;
    for (const std::string& tag : tags) {
      if (!out.empty()) out += ",";
      out += tag;
    }
    return out.empty() ? "(none)" : out;
  };

  std::vector<Table5Check> report;
  std::set<FrameShape> claimed;
  for (const Table5Row& row : rows) {
    claimed.insert(row.shape);
    const std::set<std::string> expected(row.realizers.begin(),
                                         row.realizers.end());
    std::set<std::string> got;
    if (auto it = computed.find(row.shape); it != computed.end())
      got = it->second;
    const bool pass = got == expected;
    report.push_back(Table5Check{
        row.label + " " + row.shape.str() + " expected=" + joined(expected) +
            " got=" + joined(got) + (pass ? " PASS" : " FAIL"),
        pass});
  }
  for (const auto& [shape, tags] : computed) {
    if (claimed.count(shape)) continue;
    report.push_back(Table5Check{
        "unmatched " + shape.str() + " got=" + joined(tags) + " FAIL", false});
  }
  return report;
}

long long eta_offset(const FrameShape& fs) {
  if (fs.degree() % 24 != 0)
    throw std::runtime_error("eta exponent is not integral");
  return fs.degree() / 24;
}

std::vector<BigInt> eta_expansion(const FrameShape& fs, int last) {
  std::vector<BigInt> out(static_cast<size_t>(last) + 1, BigInt(0));
  out[0] = 1;
  for (const auto& [m, e] : fs.exponents()) {
    const int reps = e > 0 ? e : -e;
    for (int rep = 0; rep < reps; ++rep)
      for (int k = 1; static_cast<long long>(m) * k <= last; ++k) {
        if (e > 0)
          series::mul_one_minus_power(out, m * k);
        else
          series::div_one_minus_power(out, m * k);
      }
  }
  return out;
}

}  // namespace fshape
