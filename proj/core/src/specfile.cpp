#include "hwc/specfile.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace hwc {

SpecError::SpecError(int l, int c, const std::string& msg)
    : std::runtime_error(std::to_string(l) + ":" + std::to_string(c) + ": " + msg), line(l), col(c) {}

namespace {

struct Token {
  std::string text;
  int col;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    char ch = line[i];
    if (ch == '#') break;
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (ch == ',') {
      out.push_back({",", static_cast<int>(i) + 1});
      ++i;
      continue;
    }
    size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != ',' && line[j] != '#') ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

bool looks_numeric(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  bool slash = false;
  for (; i < s.size(); ++i) {
    if (s[i] == '/' && !slash && i + 1 < s.size()) slash = true;
    else if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

class Parser {
 public:
  BuiltAlgebra run(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int ln = 0;
    bool header = false;
    while (std::getline(in, raw)) {
      ++ln;
      auto toks = tokenize(raw);
      if (toks.empty()) continue;
      line_ = ln;
      const std::string& key = toks[0].text;
      if (!header) {
        if (key != "algspec") fail(toks[0], "expected header 'algspec 1'");
        if (toks.size() != 2 || toks[1].text != "1") fail(toks.size() > 1 ? toks[1] : toks[0], "unsupported format version");
        header = true;
        continue;
      }
      std::vector<Token> args(toks.begin() + 1, toks.end());
      if (key == "field") field_line(toks[0], args);
      else if (key == "basis") basis_line(toks[0], args);
      else if (key == "degree") degree_line(toks[0], args);
      else if (key == "product") product_line(toks[0], args);
      else if (key == "unit") unit_ = single_vec(toks[0], args);
      else if (key == "aminus" || key == "tpart" || key == "aplus") span_line(toks[0], args);
      else if (key == "tau") tau_line(toks[0], args);
      else if (key == "trace") trace_ = single_vec(toks[0], args);
      else if (key == "name") name_line(toks[0], args);
      else fail(toks[0], "unknown key '" + key + "'");
    }
    if (!header) throw SpecError(1, 1, "empty input, expected header 'algspec 1'");
    return finish(ln);
  }

 private:
  [[noreturn]] void fail(const Token& t, const std::string& msg) const { throw SpecError(line_, t.col, msg); }

  void need_basis(const Token& t) const {
    if (!A_) fail(t, "'basis' must come before this directive");
  }

  void field_line(const Token& k, const std::vector<Token>& a) {
    if (A_) fail(k, "'field' must precede 'basis'");
    if (a.size() == 1 && a[0].text == "rational") f_ = Field::rationals();
    else if (a.size() == 2 && a[0].text == "prime") {
      uint64_t p = 0;
      try {
        p = std::stoull(a[1].text);
      } catch (...) {
        fail(a[1], "bad prime");
      }
      if (!is_prime_u64(p)) fail(a[1], a[1].text + " is not prime");
      f_ = Field::prime(p);
    } else fail(k, "expected 'field rational' or 'field prime <p>'");
    have_field_ = true;
  }

  void basis_line(const Token& k, const std::vector<Token>& a) {
    if (A_) fail(k, "duplicate 'basis'");
    if (a.empty()) fail(k, "empty basis");
    for (const auto& t : a) {
      if (t.text == "," || t.text.find('*') != std::string::npos) fail(t, "bad label '" + t.text + "'");
      if (index_.count(t.text)) fail(t, "duplicate label '" + t.text + "'");
      index_[t.text] = static_cast<int>(labels_.size());
      labels_.push_back(t.text);
    }
    A_ = std::make_shared<Algebra>(f_, static_cast<int>(labels_.size()));
    A_->labels = labels_;
    tau_ = Matrix(f_, A_->dim(), A_->dim());
  }

  void degree_line(const Token& k, const std::vector<Token>& a) {
    need_basis(k);
    if (have_degree_) fail(k, "duplicate 'degree'");
    if (static_cast<int>(a.size()) != A_->dim()) fail(k, "expected " + std::to_string(A_->dim()) + " degrees");
    for (size_t i = 0; i < a.size(); ++i) {
      if (!looks_numeric(a[i].text) || a[i].text.find('/') != std::string::npos) fail(a[i], "bad degree");
      A_->deg[i] = std::stoi(a[i].text);
    }
    have_degree_ = true;
  }

  int label(const Token& t) const {
    auto it = index_.find(t.text);
    if (it == index_.end()) fail(t, "unknown label '" + t.text + "'");
    return it->second;
  }

  Scalar scalar(const Token& t, const std::string& s) const {
    if (!looks_numeric(s)) fail(t, "bad scalar '" + s + "'");
    try {
      return f_.parse(s);
    } catch (const std::exception& e) {
      fail(t, e.what());
    }
  }

  void product_line(const Token& k, const std::vector<Token>& a) {
    need_basis(k);
    if (a.size() != 4) fail(k, "expected 'product <i> <j> <k> <c>'");
    A_->add_prod(label(a[0]), label(a[1]), label(a[2]), scalar(a[3], a[3].text));
  }

  Vec vec(const std::vector<Token>& a, size_t from, size_t to) const {
    Vec v = zero_vec(f_, A_->dim());
    for (size_t i = from; i < to; ++i) {
      const std::string& s = a[i].text;
      auto star = s.find('*');
      if (star == std::string::npos) {
        v[label(a[i])] += f_.one();
      } else {
        Token lt{s.substr(star + 1), a[i].col + static_cast<int>(star) + 1};
        v[label(lt)] += scalar(a[i], s.substr(0, star));
      }
    }
    return v;
  }

  std::vector<Vec> vecs(const Token& k, const std::vector<Token>& a) const {
    need_basis(k);
    std::vector<Vec> out;
    size_t start = 0;
    for (size_t i = 0; i <= a.size(); ++i)
      if (i == a.size() || a[i].text == ",") {
        if (i == start) fail(i < a.size() ? a[i] : k, "empty vector");
        out.push_back(vec(a, start, i));
        start = i + 1;
      }
    return out;
  }

  Vec single_vec(const Token& k, const std::vector<Token>& a) const {
    auto v = vecs(k, a);
    if (v.size() != 1) fail(k, "expected a single vector");
    return v[0];
  }

  void span_line(const Token& k, const std::vector<Token>& a) {
    auto v = vecs(k, a);
    auto& dst = spans_[k.text];
    dst.insert(dst.end(), v.begin(), v.end());
  }

  void tau_line(const Token& k, const std::vector<Token>& a) {
    need_basis(k);
    if (a.size() != 3) fail(k, "expected 'tau <i> <j> <c>'");
    tau_(label(a[1]), label(a[0])) += scalar(a[2], a[2].text);
    have_tau_ = true;
  }

  void name_line(const Token& k, const std::vector<Token>& a) {
    if (a.size() < 2) fail(k, "expected 'name <word> <vec>'");
    if (named_.count(a[0].text)) fail(a[0], "duplicate name");
    std::vector<Token> rest(a.begin() + 1, a.end());
    named_[a[0].text] = single_vec(k, rest);
  }

  BuiltAlgebra finish(int last) {
    if (!A_) throw SpecError(last, 1, "missing 'basis'");
    if (!have_degree_) throw SpecError(last, 1, "missing 'degree'");
    if (!unit_) throw SpecError(last, 1, "missing 'unit'");
    for (const char* s : {"aminus", "tpart", "aplus"})
      if (!spans_.count(s)) throw SpecError(last, 1, std::string("missing '") + s + "'");
    (void)have_field_;
    A_->unit = *unit_;
    BuiltAlgebra B;
    B.A = A_;
    const int n = A_->dim();
    B.tri = {Subspace::span(f_, n, spans_["aminus"]), Subspace::span(f_, n, spans_["tpart"]), Subspace::span(f_, n, spans_["aplus"])};
    if (have_tau_) B.tau = tau_;
    B.trace = trace_;
    B.named = named_;
    B.description = "spec";
    return B;
  }

  int line_ = 0;
  Field f_ = Field::rationals();
  bool have_field_ = false, have_degree_ = false, have_tau_ = false;
  std::vector<std::string> labels_;
  std::map<std::string, int> index_;
  std::shared_ptr<Algebra> A_;
  std::optional<Vec> unit_, trace_;
  std::map<std::string, std::vector<Vec>> spans_;
  Matrix tau_;
  std::map<std::string, Vec> named_;
};

std::string vec_str(const Algebra& A, const Vec& v) {
  std::string s;
  for (int k = 0; k < A.dim(); ++k) {
    if (v[k].is_zero()) continue;
    if (!s.empty()) s += " ";
    s += v[k].is_one() ? A.label(k) : v[k].str() + "*" + A.label(k);
  }
  return s;
}

std::string span_str(const Algebra& A, const Subspace& S) {
  std::string s;
  for (const Vec& v : S.basis()) s += (s.empty() ? "" : ", ") + vec_str(A, v);
  return s;
}

}  // namespace

BuiltAlgebra parse_spec(const std::string& text) { return Parser().run(text); }

BuiltAlgebra load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

std::string write_spec(const BuiltAlgebra& B) {
  const Algebra& A = *B.A;
  std::ostringstream os;
  os << "algspec 1\n";
  const Field& f = A.field();
  os << "field " << (f.is_rational() ? "rational" : "prime " + std::to_string(f.characteristic())) << "\n";
  os << "basis";
  for (int k = 0; k < A.dim(); ++k) os << " " << A.label(k);
  os << "\ndegree";
  for (int k = 0; k < A.dim(); ++k) os << " " << A.deg[k];
  os << "\n";
  for (int i = 0; i < A.dim(); ++i)
    for (int j = 0; j < A.dim(); ++j)
      for (const auto& t : A.prod(i, j))
        os << "product " << A.label(i) << " " << A.label(j) << " " << A.label(t.k) << " " << t.c.str() << "\n";
  os << "unit " << vec_str(A, A.unit) << "\n";
  os << "aminus " << span_str(A, B.tri.aminus) << "\n";
  os << "tpart " << span_str(A, B.tri.tpart) << "\n";
  os << "aplus " << span_str(A, B.tri.aplus) << "\n";
  if (B.tau)
    for (int j = 0; j < A.dim(); ++j)
      for (int i = 0; i < A.dim(); ++i)
        if (!(*B.tau)(i, j).is_zero()) os << "tau " << A.label(j) << " " << A.label(i) << " " << (*B.tau)(i, j).str() << "\n";
  if (B.trace) os << "trace " << vec_str(A, *B.trace) << "\n";
  for (const auto& [k, v] : B.named) os << "name " << k << " " << vec_str(A, v) << "\n";
  return os.str();
}

}  // namespace hwc
