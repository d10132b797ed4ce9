#include "striphyp/specparse.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <vector>

namespace striphyp {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

// split on a delimiter at bracket depth zero
std::vector<std::string> split_top(const std::string& s, char delim) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (c == delim && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

double parse_number(const std::string& text) {
  std::string t = trim(text);
  if (t.empty()) throw ParseError("empty number");
  size_t pos = 0;
  double v;
  try {
    v = std::stod(t, &pos);
  } catch (const std::exception&) {
    throw ParseError("bad number: " + t);
  }
  if (pos != t.size()) throw ParseError("bad number: " + t);
  return v;
}

// key=value,key=value with required keys
std::map<std::string, std::string> parse_kv(const std::string& body) {
  std::map<std::string, std::string> out;
  for (const std::string& part : split_top(body, ',')) {
    size_t eq = part.find('=');
    if (eq == std::string::npos)
      throw ParseError("expected key=value, got: " + part);
    out[trim(part.substr(0, eq))] = trim(part.substr(eq + 1));
  }
  return out;
}

double require_num(const std::map<std::string, std::string>& kv,
                   const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end()) throw ParseError("missing parameter: " + key);
  return parse_number(it->second);
}

}  // namespace

complex parse_complex(const std::string& text) {
  std::string t = trim(text);
  if (t.empty()) throw ParseError("empty complex literal");
  if (t.back() == 'i') {
    // <re>+<im>i or <im>i; split at the sign separating the parts
    std::string body = t.substr(0, t.size() - 1);
    for (size_t i = body.size(); i-- > 1;) {
      if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' &&
          body[i - 1] != 'E') {
        double re = parse_number(body.substr(0, i));
        std::string im = body.substr(i);
        if (im == "+") im = "1";
        if (im == "-") im = "-1";
        return complex(re, parse_number(im));
      }
    }
    if (body.empty() || body == "+") return complex(0.0, 1.0);
    if (body == "-") return complex(0.0, -1.0);
    return complex(0.0, parse_number(body));
  }
  return complex(parse_number(t), 0.0);
}

WeightSequence parse_sequence(const std::string& spec) {
  std::string s = trim(spec);
  size_t colon = s.find(':');
  std::string head = colon == std::string::npos ? s : s.substr(0, colon);
  std::string body = colon == std::string::npos ? "" : s.substr(colon + 1);
  if (head == "factorial") {
    return WeightSequence::factorial_power(require_num(parse_kv(body), "s"));
  }
  if (head == "loglog") {
    auto kv = parse_kv(body);
    return WeightSequence::loglog_power(require_num(kv, "s"),
                                        require_num(kv, "r"));
  }
  if (head == "explicit") {
    std::string b = trim(body);
    if (b.size() < 2 || b.front() != '[' || b.back() != ']')
      throw ParseError("explicit sequence needs [v0, v1, ...]");
    std::vector<double> vals;
    for (const std::string& part : split_top(b.substr(1, b.size() - 2), ','))
      vals.push_back(parse_number(part));
    return WeightSequence::from_values(vals);
  }
  throw ParseError("unknown sequence: " + head);
}

Weight parse_weight(const std::string& spec) {
  std::string s = trim(spec);
  size_t colon = s.find(':');
  std::string head = colon == std::string::npos ? s : s.substr(0, colon);
  std::string body = colon == std::string::npos ? "" : s.substr(colon + 1);
  if (head == "zero") return Weight::zero();
  if (head == "exp") return Weight::exp_weight();
  if (head == "linear") return Weight::linear();
  if (head == "log1p") return Weight::log1p_weight();
  if (head == "twosqrt") return Weight::twosqrt();
  if (head == "power") return Weight::power(require_num(parse_kv(body), "s"));
  if (head == "explog") {
    auto kv = parse_kv(body);
    return Weight::explog(require_num(kv, "s"), require_num(kv, "r"));
  }
  if (head == "expoverlog")
    return Weight::expoverlog(require_num(parse_kv(body), "s"));
  if (head == "assoc") return Weight::assoc(parse_sequence(body));
  throw ParseError("unknown weight: " + head);
}

TestFunction parse_test_function(const std::string& spec) {
  std::string s = trim(spec);
  size_t colon = s.find(':');
  std::string head = colon == std::string::npos ? s : s.substr(0, colon);
  std::string body = colon == std::string::npos ? "" : s.substr(colon + 1);
  if (head == "zero") return TestFunction::zero();
  if (head == "gaussian") {
    auto kv = parse_kv(body);
    double a = require_num(kv, "a");
    complex shift = 0.0;
    if (kv.count("shift")) shift = parse_complex(kv.at("shift"));
    complex coef = 1.0;
    if (kv.count("coef")) coef = parse_complex(kv.at("coef"));
    return TestFunction::gaussian(a, shift, coef);
  }
  if (head == "recip") return make_test_function(parse_weight(body), 1.0);
  if (head == "product") {
    auto parts = split_top(body, ';');
    if (parts.size() != 2) throw ParseError("product needs two factors");
    return TestFunction::product(parse_test_function(parts[0]),
                                 parse_test_function(parts[1]));
  }
  throw ParseError("unknown test function: " + head);
}

Functional parse_functional(const std::string& spec) {
  Functional f;
  for (const std::string& piece : split_top(trim(spec), ';')) {
    std::string p = trim(piece);
    if (p.empty()) continue;
    size_t colon = p.find(':');
    std::string head = colon == std::string::npos ? p : p.substr(0, colon);
    std::string body = colon == std::string::npos ? "" : p.substr(colon + 1);
    if (head == "zero") continue;
    if (head == "atoms") {
      std::string b = trim(body);
      if (b.size() < 2 || b.front() != '[' || b.back() != ']')
        throw ParseError("atoms need [(loc, order, coef), ...]");
      std::string inner = trim(b.substr(1, b.size() - 2));
      if (inner.empty()) continue;
      for (const std::string& item : split_top(inner, ',')) {
        std::string t = trim(item);
        if (t.size() < 2 || t.front() != '(' || t.back() != ')')
          throw ParseError("atom must be (loc, order, coef): " + t);
        auto fields = split_top(t.substr(1, t.size() - 2), ',');
        if (fields.size() != 3) throw ParseError("atom needs 3 fields: " + t);
        Atom a;
        a.location = parse_complex(fields[0]);
        double ord = parse_number(fields[1]);
        if (ord < 0 || ord != std::floor(ord))
          throw ParseError("atom order must be a nonnegative integer");
        a.order = (int)ord;
        a.coefficient = parse_complex(fields[2]);
        f.add_atom(a);
      }
    } else if (head == "density") {
      std::string name = trim(body);
      LineDensity d;
      if (name == "gauss_decay") {
        d.d = [](double x) { return std::exp(-x * x); };
        d.coef = 1.0;
        d.rate = 1.0;
        d.name = name;
      } else if (name.rfind("exp_decay(", 0) == 0 && name.back() == ')') {
        double mu = parse_number(name.substr(10, name.size() - 11));
        if (mu <= 0.0) throw ParseError("exp_decay needs mu > 0");
        d.d = [mu](double x) { return std::exp(-mu * std::abs(x)); };
        d.coef = 1.0;
        d.rate = mu;
        d.name = name;
      } else {
        throw ParseError("unknown density: " + name);
      }
      f.set_density(d);
    } else {
      throw ParseError("unknown functional part: " + head);
    }
  }
  return f;
}

WeightCond parse_weight_cond(const std::string& name) {
  std::string n = trim(name);
  std::transform(n.begin(), n.end(), n.begin(), ::tolower);
  if (n == "gamma0") return WeightCond::Gamma0;
  if (n == "delta") return WeightCond::Delta;
  if (n == "epsilon") return WeightCond::Epsilon;
  if (n == "epsilon0") return WeightCond::Epsilon0;
  if (n == "epsiloninf") return WeightCond::EpsilonInf;
  if (n == "alpha") return WeightCond::Alpha;
  if (n == "gamma") return WeightCond::Gamma;
  if (n == "na") return WeightCond::NA;
  if (n == "zeta") return WeightCond::Zeta;
  throw ParseError("unknown weight condition: " + name);
}

SeqCondition parse_seq_cond(const std::string& name) {
  std::string n = trim(name);
  std::transform(n.begin(), n.end(), n.begin(), ::tolower);
  if (n == "logconvex") return SeqCondition::LogConvex;
  if (n == "m2") return SeqCondition::M2;
  if (n == "m5_0" || n == "m50") return SeqCondition::M5_0;
  if (n == "m5_inf" || n == "m5inf") return SeqCondition::M5_Inf;
  throw ParseError("unknown sequence condition: " + name);
}

}  // namespace striphyp
