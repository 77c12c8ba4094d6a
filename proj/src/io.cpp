#include "casimir/io.hpp"

#include <numeric>

#include "casimir/errors.hpp"

namespace casimir {

std::vector<std::string> alpha_names(std::size_t n, VariableStyle style) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i)
    names.push_back(style == VariableStyle::latex ? "\\alpha_{" + std::to_string(i) + "}"
                                                  : "a" + std::to_string(i));
  return names;
}

std::string rat_text(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

// Joins signed terms: the first keeps a bare "-", later ones use " - " / " + ".
class TermWriter {
 public:
  void add(bool negative, const std::string& body) {
    if (out_.empty())
      out_ = negative ? "-" + body : body;
    else
      out_ += (negative ? " - " : " + ") + body;
  }
  std::string str() const { return out_.empty() ? "0" : out_; }

 private:
  std::string out_;
};

std::string monomial_text(const Exponents& e, const std::vector<std::string>& names,
                          VariableStyle style) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += style == VariableStyle::latex ? " " : "*";
    out += names.at(i);
    if (e[i] > 1)
      out += style == VariableStyle::latex ? "^{" + std::to_string(e[i]) + "}"
                                           : "^" + std::to_string(e[i]);
  }
  return out;
}

std::string coefficient_times(const Rat& magnitude, const std::string& monomial,
                              VariableStyle style) {
  if (monomial.empty()) return rat_text(magnitude);
  if (magnitude == 1) return monomial;
  return rat_text(magnitude) + (style == VariableStyle::latex ? " " : "*") + monomial;
}

std::string partition_text(const Partition& lambda) {
  std::string out;
  for (std::size_t k = 0; k < lambda.size();) {
    std::size_t run = k;
    while (run < lambda.size() && lambda[run] == lambda[k]) ++run;
    if (!out.empty()) out += "*";
    out += "p" + std::to_string(lambda[k]);
    if (run - k > 1) out += "^" + std::to_string(run - k);
    k = run;
  }
  return out;
}

mpz_class lcm_of_denominators(const UPoly& c) {
  mpz_class l = 1;
  for (const auto& r : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.get_den_mpz_t());
  return l;
}

// Integer polynomial in n, leading term first: "n^3 - n".
std::string integer_poly_text(const std::vector<mpz_class>& q) {
  TermWriter w;
  for (std::size_t k = q.size(); k-- > 0;) {
    if (q[k] == 0) continue;
    const mpz_class mag = abs(q[k]);
    std::string power = k == 0 ? "" : (k == 1 ? "n" : "n^" + std::to_string(k));
    std::string body = power.empty() ? mag.get_str()
                       : mag == 1    ? power
                                     : mag.get_str() + "*" + power;
    w.add(q[k] < 0, body);
  }
  return w.str();
}

}  // namespace

std::string format_mpoly(const MPoly& p, const std::vector<std::string>& names,
                         VariableStyle style) {
  TermWriter w;
  for (const auto& [e, c] : p.terms())
    w.add(sgn(c) < 0, coefficient_times(abs(c), monomial_text(e, names, style), style));
  return w.str();
}

std::string format_mpoly(const MPoly& p, VariableStyle style) {
  return format_mpoly(p, alpha_names(p.nvars(), style), style);
}

std::string format_power_sum(const PowerSumPoly& p) {
  TermWriter w;
  for (const auto& [lambda, c] : p.coeffs())
    w.add(sgn(c) < 0, coefficient_times(abs(c), partition_text(lambda), VariableStyle::plain));
  return w.str();
}

std::string format_closed_form(const ClosedForm& f) {
  TermWriter w;
  for (const auto& [lambda, c] : f.coeffs()) {
    // c(n) = q(n) / d with q integral; the sign of q's leading term is pulled out.
    const mpz_class d = lcm_of_denominators(c);
    std::vector<mpz_class> q;
    for (const auto& r : c) q.push_back(mpz_class(r * d));
    const bool negative = q.back() < 0;
    if (negative)
      for (auto& v : q) v = -v;
    std::size_t nonzero = 0;
    for (const auto& v : q) nonzero += v != 0;
    const std::string numerator = integer_poly_text(q);
    std::string coeff;
    if (d == 1)
      coeff = nonzero == 1 ? numerator : "(" + numerator + ")";
    else
      coeff = (nonzero == 1 ? numerator : "(" + numerator + ")") + "/" + d.get_str();

    if (lambda.empty()) {
      w.add(negative, coeff);
      continue;
    }
    const std::string ps = partition_text(lambda);
    if (d == 1 && nonzero == 1 && q.size() == 1 && q[0] == 1)
      w.add(negative, ps);
    else if (d == 1 && nonzero == 1)
      w.add(negative, coeff + "*" + ps);
    else
      w.add(negative, "(" + coeff + ")*" + ps);
  }
  return w.str();
}

Json to_json(const MPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json term;
    term["c"] = to_string(c);
    term["e"] = e;
    terms.push_back(std::move(term));
  }
  Json j;
  j["nvars"] = p.nvars();
  j["terms"] = std::move(terms);
  return j;
}

MPoly mpoly_from_json(const Json& j) {
  try {
    MPoly p(j.at("nvars").get<std::size_t>());
    for (const auto& term : j.at("terms"))
      p.add_term(term.at("e").get<Exponents>(), parse_rat(term.at("c").get<std::string>()));
    return p;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed polynomial JSON: ") + e.what());
  }
}

Json to_json(const ClosedForm& f) {
  Json parts = Json::array();
  for (const auto& [lambda, c] : f.coeffs()) {
    Json entry;
    entry["parts"] = lambda;
    Json coeffs = Json::array();
    for (const auto& r : c) coeffs.push_back(to_string(r));
    entry["coeff_n"] = std::move(coeffs);
    parts.push_back(std::move(entry));
  }
  Json j;
  j["partitions"] = std::move(parts);
  return j;
}

ClosedForm closed_form_from_json(const Json& j) {
  try {
    ClosedForm f;
    for (const auto& entry : j.at("partitions")) {
      UPoly c;
      for (const auto& r : entry.at("coeff_n")) c.push_back(parse_rat(r.get<std::string>()));
      f.set(entry.at("parts").get<Partition>(), std::move(c));
    }
    return f;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed closed-form JSON: ") + e.what());
  }
}

ClosedForm as_closed_form(const PowerSumPoly& p) {
  ClosedForm f;
  for (const auto& [lambda, c] : p.coeffs()) f.set(lambda, {c});
  return f;
}

Json to_json(const VerifyReport& r, SignConvention configured) {
  Json mismatch = Json::array();
  for (const auto& t : r.mismatches(configured))
    mismatch.push_back(std::vector<int>(t.entries().begin(), t.entries().end()));
  Json j;
  j["total"] = r.total;
  j["zero"] = r.zero;
  j["match_literal"] = r.match_literal;
  j["match_alternating"] = r.match_alternating;
  j["mismatch"] = std::move(mismatch);
  j["consistent_convention"] = r.consistent_convention();
  return j;
}

Json to_json(const Cycle& c) {
  Json j;
  j["start"] = c.start + 1;
  j["end"] = c.end + 1;
  j["base"] = c.base;
  j["proper"] = c.proper;
  j["v1"] = c.minima.first;
  if (c.minima.second)
    j["v2"] = *c.minima.second;
  else
    j["v2"] = "INF";
  return j;
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace casimir
