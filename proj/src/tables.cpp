#include "casimir/tables.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "casimir/casimir.hpp"
#include "casimir/cycles.hpp"
#include "casimir/errors.hpp"

namespace casimir {

namespace {

// Symbolic ring for order m: alpha_{i_k} is variable k, i_k is m + k, n is 2m.
struct SymbolicRing {
  int m;
  std::size_t nvars() const { return static_cast<std::size_t>(2 * m + 1); }
  MPoly alpha(int k) const { return MPoly::variable(nvars(), static_cast<std::size_t>(k)); }
  MPoly index(int k) const { return MPoly::variable(nvars(), static_cast<std::size_t>(m + k)); }
  MPoly rank() const { return MPoly::variable(nvars(), static_cast<std::size_t>(2 * m)); }
  MPoly constant(const Rat& c) const { return MPoly::constant(nvars(), c); }
  MPoly beta(int k) const {
    return alpha(k) + rank() * (Rat(1) / 2) + constant(Rat(1) / 2) - index(k);
  }
};

std::string subscript(int k) { return "i" + std::to_string(k + 1); }

std::string power_suffix(int e) {
  switch (e) {
    case 1: return "";
    case 2: return "²";
    case 3: return "³";
    default: return "^" + std::to_string(e);
  }
}

// Linear form sum_k c_k beta_{i_k} + constant, used only for rendering.
struct LinearForm {
  std::map<int, int> coeffs;
  int constant = 0;
  auto operator<=>(const LinearForm&) const = default;
};

std::string render(const LinearForm& f) {
  std::string out;
  bool first = true;
  auto emit = [&](int c, const std::string& symbol) {
    if (c == 0) return;
    if (first) {
      if (c < 0) out += "−";
    } else {
      out += c < 0 ? " − " : " + ";
    }
    const int mag = c < 0 ? -c : c;
    if (symbol.empty()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag);
      out += symbol;
    }
    first = false;
  };
  for (const auto& [k, c] : f.coeffs) emit(c, "β_{" + subscript(k) + "}");
  emit(f.constant, "");
  return first ? "0" : out;
}

std::string render_product(const ElementaryProduct& prod, const std::vector<int>& first_pos) {
  if (prod.zero) return "0";
  int sign = prod.sign;
  std::map<LinearForm, int> grouped;
  for (const auto& f : prod.factors) {
    LinearForm form;
    form.coeffs[first_pos[static_cast<std::size_t>(f.v1 - 1)]] -= 1;
    if (f.v2) form.coeffs[first_pos[static_cast<std::size_t>(*f.v2 - 1)]] += 1;
    if (f.plus_one) form.constant += 1;
    std::erase_if(form.coeffs, [](const auto& kv) { return kv.second == 0; });
    const int lead = form.coeffs.empty() ? form.constant : form.coeffs.begin()->second;
    if (lead < 0) {
      sign = -sign;
      for (auto& [k, c] : form.coeffs) c = -c;
      form.constant = -form.constant;
    }
    ++grouped[form];
  }
  std::string out = sign < 0 ? "−" : "";
  if (grouped.empty()) return sign < 0 ? "−1" : "1";
  for (const auto& [form, e] : grouped) {
    const bool bare = form.constant == 0 && form.coeffs.size() == 1 && form.coeffs.begin()->second == 1;
    const std::string body = render(form);
    out += (bare ? body : "(" + body + ")") + power_suffix(e);
  }
  return out;
}

struct RowSpec {
  std::string label;
  std::function<bool(const std::vector<int>&)> applies;
  MPoly reference;
  std::string reference_text;
};

std::vector<RowSpec> reference_rows(int m) {
  const SymbolicRing s{m};
  const MPoly zero(s.nvars());
  std::vector<RowSpec> rows;
  const std::string beta1_text = "(α_{i1} + (n+1)/2 − i1)";
  if (m == 2) {
    rows.push_back({"i1 > i2", [](const auto& i) { return i[0] > i[1]; }, zero, "0"});
    rows.push_back({"i1 = i2", [](const auto& i) { return i[0] == i[1]; }, pow(s.beta(0), 2),
                    beta1_text + "²"});
    rows.push_back({"i1 < i2", [](const auto& i) { return i[0] < i[1]; },
                    -s.alpha(0) + s.alpha(1) + s.index(0) - s.index(1),
                    "−α_{i1} + α_{i2} + i1 − i2"});
    return rows;
  }
  const MPoly d12 = s.alpha(0) - s.alpha(1) - s.index(0) + s.index(1);
  const MPoly d13 = s.alpha(0) - s.alpha(2) - s.index(0) + s.index(2);
  rows.push_back({"i1 > i2", [](const auto& i) { return i[0] > i[1]; }, zero, "0"});
  rows.push_back({"i1 > i3", [](const auto& i) { return i[0] > i[2]; }, zero, "0"});
  rows.push_back({"i1 < i2 < i3", [](const auto& i) { return i[0] < i[1] && i[1] < i[2]; }, d12,
                  "α_{i1} − α_{i2} − i1 + i2"});
  rows.push_back({"i1 < i3 < i2", [](const auto& i) { return i[0] < i[2] && i[2] < i[1]; }, d13,
                  "α_{i1} − α_{i3} − i1 + i3"});
  rows.push_back({"i1 = i2 < i3", [](const auto& i) { return i[0] == i[1] && i[1] < i[2]; },
                  s.beta(0) * -d13, beta1_text + "(−α_{i1} + α_{i3} + i1 − i3)"});
  rows.push_back({"i1 = i3 < i2", [](const auto& i) { return i[0] == i[2] && i[2] < i[1]; },
                  s.beta(0) * -d12, beta1_text + "(−α_{i1} + α_{i2} + i1 − i2)"});
  rows.push_back({"i1 < i2 = i3", [](const auto& i) { return i[0] < i[1] && i[1] == i[2]; },
                  d12 + s.beta(0) * -d12,
                  "α_{i1} − α_{i2} − i1 + i2 + " + beta1_text + "(−α_{i1} + α_{i2} + i1 − i2)"});
  rows.push_back({"i1 = i2 = i3", [](const auto& i) { return i[0] == i[1] && i[1] == i[2]; },
                  pow(s.beta(0), 3), beta1_text + "³"});
  return rows;
}

}  // namespace

std::vector<std::string> table_variable_names(int m) {
  std::vector<std::string> names;
  for (int k = 0; k < m; ++k) names.push_back("α_{" + subscript(k) + "}");
  for (int k = 0; k < m; ++k) names.push_back(subscript(k));
  names.push_back("n");
  return names;
}

std::vector<TableRow> elementary_table(int m) {
  if (m != 2 && m != 3) throw InputError("tables exist for m = 2 and m = 3 only");
  const SymbolicRing s{m};
  const auto patterns = relative_order_patterns(m, m);
  std::vector<bool> claimed(patterns.size(), false);

  std::vector<TableRow> rows;
  for (auto& entry : reference_rows(m)) {
    TableRow row;
    row.label = entry.label;
    row.reference = entry.reference;
    row.reference_text = entry.reference_text;
    row.applies = entry.applies;
    bool have_value = false;
    for (std::size_t p = 0; p < patterns.size(); ++p) {
      std::vector<int> values;
      for (int r : patterns[p]) values.push_back(r + 1);
      if (claimed[p] || !entry.applies(values)) continue;
      claimed[p] = true;
      const IndexTuple pattern_tuple(values, *std::max_element(values.begin(), values.end()));
      const auto prod = elementary_product(pattern_tuple, SignConvention::alternating);
      const auto first_pos = relative_order(pattern_tuple).first_pos;
      const MPoly value = expand(prod, s.nvars(), [&](int rank) {
        return s.beta(first_pos[static_cast<std::size_t>(rank - 1)]);
      });
      if (!have_value) {
        row.pattern = values;
        row.computed = value;
        row.computed_text = render_product(prod, first_pos);
        have_value = true;
      } else if (!(value == row.computed)) {
        throw std::logic_error("table case '" + row.label + "' mixes different eigenvalues");
      }
    }
    row.matches = row.computed == row.reference;
    rows.push_back(std::move(row));
  }
  return rows;
}

MPoly table_row_sum(const std::vector<TableRow>& rows, int m, int n, bool use_reference) {
  const auto nvars = static_cast<std::size_t>(n);
  MPoly total(nvars);
  for (const auto& t : all_tuples(m, n)) {
    const std::vector<int> values(t.entries().begin(), t.entries().end());
    const TableRow* row = nullptr;
    for (const auto& r : rows) {
      if (r.applies(values)) {
        row = &r;
        break;
      }
    }
    if (!row) throw std::logic_error("table does not cover every tuple");
    std::vector<MPoly> images;
    for (int k = 0; k < m; ++k)
      images.push_back(MPoly::variable(nvars, static_cast<std::size_t>(values[static_cast<std::size_t>(k)] - 1)));
    for (int k = 0; k < m; ++k) images.push_back(MPoly::constant(nvars, Rat(values[static_cast<std::size_t>(k)])));
    images.push_back(MPoly::constant(nvars, Rat(n)));
    total += (use_reference ? row->reference : row->computed).substitute(images);
  }
  return total;
}

}  // namespace casimir
