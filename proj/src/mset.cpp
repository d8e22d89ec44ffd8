#include "ap/mset.hpp"

#include <algorithm>
#include <sstream>

#include "ap/report.hpp"

namespace ap {

bool ivec_less(const IVec& a, const IVec& b) {
  for (int i = 0; i < a.size(); ++i) {
    if (a(i) < b(i)) return true;
    if (a(i) > b(i)) return false;
  }
  return false;
}

bool ivec_eq(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) return false;
  for (int i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

BoxD BoxD::interval(double a, double b) {
  BoxD box;
  box.lo = Eigen::VectorXd::Constant(1, a);
  box.hi = Eigen::VectorXd::Constant(1, b);
  return box;
}

BoxD BoxD::square(const Eigen::VectorXd& lo, const Eigen::VectorXd& hi) {
  BoxD box;
  box.lo = lo;
  box.hi = hi;
  return box;
}

bool BoxD::contains(const Eigen::VectorXd& p, double tol) const {
  for (int i = 0; i < lo.size(); ++i)
    if (p(i) < lo(i) - tol || p(i) > hi(i) + tol) return false;
  return true;
}

double BoxD::min_width() const {
  double w = hi(0) - lo(0);
  for (int i = 1; i < lo.size(); ++i) w = std::min(w, hi(i) - lo(i));
  return w;
}

BoxD BoxD::scaled_about_center(double factor) const {
  BoxD b = *this;
  for (int i = 0; i < lo.size(); ++i) {
    double c = (lo(i) + hi(i)) / 2, h = (hi(i) - lo(i)) / 2 * factor;
    b.lo(i) = c - h;
    b.hi(i) = c + h;
  }
  return b;
}

BoxD BoxD::inflated(double margin) const {
  BoxD b = *this;
  for (int i = 0; i < lo.size(); ++i) {
    b.lo(i) -= margin;
    b.hi(i) += margin;
  }
  return b;
}

std::shared_ptr<const ModuleFrame> ModuleFrame::create(FieldMatrix V) {
  if (V.rows < 1 || V.cols < V.rows)
    throw std::invalid_argument("frame: need rank s >= ambient dimension d >= 1");
  // Free generators: the stacked rational coordinate matrix must have full
  // column rank (this excludes every rational, hence integer, relation).
  int d = V.rows, s = V.cols, sk = V.field->degree();
  QMat A(d * sk, s);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < s; ++c)
      for (int k = 0; k < sk; ++k) A(r * sk + k, c) = V.at(r, c).coords[k];
  // Column rank by elimination.
  {
    QMat W = A;
    int rank = 0;
    for (int col = 0; col < s && rank < W.rows(); ++col) {
      int piv = -1;
      for (int r = rank; r < W.rows(); ++r)
        if (W(r, col) != 0) {
          piv = r;
          break;
        }
      if (piv < 0) continue;
      W.row(piv).swap(W.row(rank));
      Rational inv = Rational(1) / W(rank, col);
      for (int c = col; c < s; ++c) W(rank, c) *= inv;
      for (int r = rank + 1; r < W.rows(); ++r) {
        if (W(r, col) == 0) continue;
        Rational f = W(r, col);
        for (int c = col; c < s; ++c) W(r, c) -= f * W(rank, c);
      }
      ++rank;
    }
    if (rank < s)
      throw std::invalid_argument("frame: basis columns admit a rational relation");
  }
  auto f = std::shared_ptr<ModuleFrame>(new ModuleFrame());
  f->V_ = std::move(V);
  f->Vd_ = Eigen::MatrixXd(d, s);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < s; ++c) f->Vd_(r, c) = f->V_.at(r, c).to_double();
  return f;
}

std::shared_ptr<const ModuleFrame> ModuleFrame::lattice(int d) {
  auto q = NumberField::rationals();
  return create(FieldMatrix::identity(q, d));
}

std::shared_ptr<const ModuleFrame> ModuleFrame::power_basis(const FieldPtr& field) {
  int s = field->degree();
  FieldMatrix V = FieldMatrix::zero(field, 1, s);
  FieldElem p = field->one();
  for (int k = 0; k < s; ++k) {
    V.at(0, k) = p;
    if (k + 1 < s) p = p * field->gen();
  }
  return create(std::move(V));
}

Eigen::VectorXd ModuleFrame::position(const IVec& n) const {
  Eigen::VectorXd p = Eigen::VectorXd::Zero(d());
  for (int r = 0; r < d(); ++r)
    for (int c = 0; c < s(); ++c) p(r) += Vd_(r, c) * to_double(n(c));
  return p;
}

std::vector<FieldElem> ModuleFrame::position_exact(const IVec& n) const {
  std::vector<FieldElem> out(d(), field()->zero());
  for (int r = 0; r < d(); ++r)
    for (int c = 0; c < s(); ++c)
      if (n(c) != 0) out[r] = out[r] + Rational(n(c)) * V_.at(r, c);
  return out;
}

FieldElem ModuleFrame::value1(const IVec& n) const {
  if (d() != 1) throw std::logic_error("value1: frame is not one-dimensional");
  return position_exact(n)[0];
}

bool ModuleFrame::same_frame(const ModuleFrame& o) const {
  if (d() != o.d() || s() != o.s()) return false;
  for (int r = 0; r < d(); ++r)
    for (int c = 0; c < s(); ++c)
      if (!(V_.at(r, c) == o.V_.at(r, c))) return false;
  return field()->generator().minpoly == o.field()->generator().minpoly &&
         field()->selected_embedding() == o.field()->selected_embedding();
}

MSet MSet::empty(FramePtr frame, int colors) {
  MSet x;
  x.frame = std::move(frame);
  x.points.resize(colors);
  return x;
}

int MSet::total_points() const {
  int n = 0;
  for (auto& c : points) n += (int)c.size();
  return n;
}

void MSet::insert(int color, const IVec& n) {
  auto& list = points.at(color);
  auto it = std::lower_bound(list.begin(), list.end(), n, ivec_less);
  if (it != list.end() && ivec_eq(*it, n)) return;
  list.insert(it, n);
}

bool MSet::contains(int color, const IVec& n) const {
  const auto& list = points.at(color);
  auto it = std::lower_bound(list.begin(), list.end(), n, ivec_less);
  return it != list.end() && ivec_eq(*it, n);
}

std::vector<IVec> MSet::support() const {
  std::vector<IVec> all;
  for (auto& c : points) all.insert(all.end(), c.begin(), c.end());
  std::sort(all.begin(), all.end(), ivec_less);
  all.erase(std::unique(all.begin(), all.end(), ivec_eq), all.end());
  return all;
}

MSet MSet::restrict(const BoxD& box, double tol) const {
  MSet out = empty(frame, colors());
  for (int c = 0; c < colors(); ++c)
    for (const auto& n : points[c])
      if (box.contains(frame->position(n), tol)) out.points[c].push_back(n);
  return out;
}

MSet MSet::translate(const IVec& t) const {
  MSet out = *this;
  for (auto& c : out.points)
    for (auto& n : c) n += t;
  return out;
}

bool MSet::operator==(const MSet& o) const {
  if (colors() != o.colors()) return false;
  for (int c = 0; c < colors(); ++c) {
    if (points[c].size() != o.points[c].size()) return false;
    for (size_t i = 0; i < points[c].size(); ++i)
      if (!ivec_eq(points[c][i], o.points[c][i])) return false;
  }
  return true;
}

bool is_subcluster(const Cluster& c, const MSet& parent) {
  if (c.colors() != parent.colors()) return false;
  for (int i = 0; i < c.colors(); ++i)
    for (const auto& n : c.points[i])
      if (!parent.contains(i, n)) return false;
  return true;
}

std::optional<IVec> translation_between(const Cluster& a, const Cluster& b) {
  if (a.colors() != b.colors()) return std::nullopt;
  for (int c = 0; c < a.colors(); ++c)
    if (a.points[c].size() != b.points[c].size()) return std::nullopt;
  if (a.is_empty()) return IVec::Zero(a.frame->s());
  // Candidate translation from the first nonempty color, then verify all.
  int c0 = 0;
  while (a.points[c0].empty()) ++c0;
  IVec t = b.points[c0][0] - a.points[c0][0];
  for (int c = 0; c < a.colors(); ++c)
    for (size_t i = 0; i < a.points[c].size(); ++i)
      if (!ivec_eq(a.points[c][i] + t, b.points[c][i])) return std::nullopt;
  return t;
}

std::string rational_to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(s));
    Int num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational: " + s);
  }
}

std::string field_elem_to_string(const FieldElem& e) {
  std::string out = "(";
  for (size_t i = 0; i < e.coords.size(); ++i) {
    if (i) out += ",";
    out += rational_to_string(e.coords[i]);
  }
  return out + ")";
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

FieldElem parse_field_elem(const std::string& tok, const FieldPtr& field) {
  if (tok.size() < 2 || tok.front() != '(' || tok.back() != ')')
    throw std::invalid_argument("malformed field element: " + tok);
  std::vector<Rational> coords;
  std::string body = tok.substr(1, tok.size() - 2);
  std::string cur;
  for (char ch : body + ",") {
    if (ch == ',') {
      if (cur.empty()) throw std::invalid_argument("malformed field element: " + tok);
      coords.push_back(parse_rational(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if ((int)coords.size() != field->degree())
    throw std::invalid_argument("field element arity mismatch: " + tok);
  return field->elem(std::move(coords));
}

}  // namespace

std::string write_pointset(const MSet& x) {
  std::ostringstream os;
  os << "pointset\n";
  os << "d " << x.frame->d() << "\n";
  os << "s " << x.frame->s() << "\n";
  os << "m " << x.colors() << "\n";
  os << "field " << poly_to_string(x.frame->field()->generator().minpoly) << " root "
     << x.frame->field()->selected_embedding() << "\n";
  os << "V";
  for (int r = 0; r < x.frame->d(); ++r)
    for (int c = 0; c < x.frame->s(); ++c) os << " " << field_elem_to_string(x.frame->V().at(r, c));
  os << "\n";
  if (x.r) os << "r " << Report::format_double(*x.r) << "\n";
  if (x.R) os << "R " << Report::format_double(*x.R) << "\n";
  for (int c = 0; c < x.colors(); ++c)
    for (const auto& n : x.points[c]) {
      os << "point " << (c + 1);
      for (int i = 0; i < n.size(); ++i) os << " " << Int(n(i)).str();
      os << "\n";
    }
  return os.str();
}

MSet parse_pointset(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int d = -1, s = -1, m = -1;
  FieldPtr field;
  FramePtr frame;
  std::optional<double> rpar, Rpar;
  std::vector<std::pair<int, IVec>> pts;
  int lineno = 0;
  ZPoly fieldpoly;
  int fieldroot = 0;
  bool have_field = false;
  std::vector<std::string> vtokens;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    auto tok = split_ws(line);
    if (tok.empty()) continue;
    auto fail = [&](const std::string& msg) {
      throw std::invalid_argument("pointset line " + std::to_string(lineno) + ": " + msg);
    };
    if (tok[0] == "pointset") continue;
    if (tok[0] == "d" && tok.size() == 2) d = std::stoi(tok[1]);
    else if (tok[0] == "s" && tok.size() == 2) s = std::stoi(tok[1]);
    else if (tok[0] == "m" && tok.size() == 2) m = std::stoi(tok[1]);
    else if (tok[0] == "field" && tok.size() == 4 && tok[2] == "root") {
      fieldpoly = parse_poly(tok[1]);
      fieldroot = std::stoi(tok[3]);
      have_field = true;
    } else if (tok[0] == "V") {
      vtokens.assign(tok.begin() + 1, tok.end());
    } else if (tok[0] == "r" && tok.size() == 2) rpar = std::stod(tok[1]);
    else if (tok[0] == "R" && tok.size() == 2) Rpar = std::stod(tok[1]);
    else if (tok[0] == "point") {
      if (s < 0) fail("point before header");
      if ((int)tok.size() != s + 2) fail("point arity mismatch");
      int color = std::stoi(tok[1]);
      IVec n(s);
      for (int i = 0; i < s; ++i) n(i) = Int(tok[2 + i]);
      pts.push_back({color - 1, n});
    } else {
      fail("unknown directive: " + tok[0]);
    }
  }
  if (d < 1 || s < d || m < 1) throw std::invalid_argument("pointset: incomplete header");
  if (!have_field) throw std::invalid_argument("pointset: missing field line");
  field = NumberField::create(fieldpoly, fieldroot);
  if ((int)vtokens.size() != d * s) throw std::invalid_argument("pointset: V arity mismatch");
  FieldMatrix V = FieldMatrix::zero(field, d, s);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < s; ++c) V.at(r, c) = parse_field_elem(vtokens[r * s + c], field);
  frame = ModuleFrame::create(std::move(V));
  MSet x = MSet::empty(frame, m);
  x.r = rpar;
  x.R = Rpar;
  for (auto& [color, n] : pts) {
    if (color < 0 || color >= m) throw std::invalid_argument("pointset: color out of range");
    x.insert(color, n);
  }
  return x;
}

std::string pointset_csv(const MSet& x) {
  CsvWriter csv;
  std::vector<std::string> header{"color"};
  for (int i = 0; i < x.frame->s(); ++i) header.push_back("n" + std::to_string(i + 1));
  for (int i = 0; i < x.frame->d(); ++i) header.push_back("x" + std::to_string(i + 1));
  csv.row(header);
  for (int c = 0; c < x.colors(); ++c)
    for (const auto& n : x.points[c]) {
      std::vector<std::string> row{std::to_string(c + 1)};
      for (int i = 0; i < n.size(); ++i) row.push_back(Int(n(i)).str());
      Eigen::VectorXd p = x.frame->position(n);
      for (int i = 0; i < p.size(); ++i) row.push_back(Report::format_double(p(i)));
      csv.row(row);
    }
  return csv.str();
}

}  // namespace ap
