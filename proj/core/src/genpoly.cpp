#include "quintic/genpoly.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace quintic {

GenPoly::GenPoly(const Rat& c) {
  if (c != 0) t_[Mono{}] = c;
}

GenPoly GenPoly::mono(const Rat& c, int a, int b, int x1, int x2, int x3, int y) {
  if (b < 0 || x1 < 0 || x2 < 0 || x3 < 0 || y < 0)
    throw std::domain_error("GenPoly::mono: negative exponent");
  GenPoly p;
  if (c != 0) p.t_[Mono{{a, b, x1, x2, x3, y}}] = c;
  return p;
}

GenPoly GenPoly::var(Var v) {
  Mono m;
  m.e[v] = 1;
  GenPoly p;
  p.t_[m] = 1;
  return p;
}

Rat GenPoly::coeff(const Mono& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? Rat(0) : it->second;
}

Rat GenPoly::constant_term() const { return coeff(Mono{}); }

void GenPoly::add_term(const Mono& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = t_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

GenPoly GenPoly::operator-() const {
  GenPoly r(*this);
  for (auto& [m, c] : r.t_) c = -c;
  return r;
}

GenPoly& GenPoly::operator+=(const GenPoly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

GenPoly& GenPoly::operator-=(const GenPoly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

GenPoly operator*(const GenPoly& a, const GenPoly& b) {
  GenPoly r;
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_) {
      Mono m;
      for (int i = 0; i < 6; ++i) m.e[i] = ma.e[i] + mb.e[i];
      r.add_term(m, ca * cb);
    }
  return r;
}

GenPoly& GenPoly::operator*=(const GenPoly& o) { return *this = *this * o; }

GenPoly& GenPoly::operator*=(const Rat& c) {
  if (c == 0) {
    t_.clear();
    return *this;
  }
  for (auto& [m, x] : t_) x *= c;
  return *this;
}

GenPoly GenPoly::pow(int n) const {
  if (n < 0) throw std::domain_error("GenPoly::pow: negative exponent");
  GenPoly acc(Rat(1)), b = *this;
  while (n) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

std::set<int> GenPoly::degrees() const {
  std::set<int> d;
  for (const auto& [m, c] : t_) d.insert(m.degree());
  return d;
}

bool GenPoly::is_homogeneous(int d) const {
  for (const auto& [m, c] : t_)
    if (m.degree() != d) return false;
  return true;
}

int GenPoly::max_exponent(Var v) const {
  if (t_.empty()) return 0;
  int r = std::numeric_limits<int>::min();
  for (const auto& [m, c] : t_) r = std::max(r, m.e[v]);
  return r;
}

int GenPoly::min_exponent(Var v) const {
  if (t_.empty()) return 0;
  int r = std::numeric_limits<int>::max();
  for (const auto& [m, c] : t_) r = std::min(r, m.e[v]);
  return r;
}

bool GenPoly::free_of(Var v) const {
  for (const auto& [m, c] : t_)
    if (m.e[v] != 0) return false;
  return true;
}

namespace {

const char* kAscii[6] = {"Linv", "Z", "X", "X2", "X3", "Y"};
const char* kScript[6] = {"L^-1", "Z", "𝒳", "𝒳₂", "𝒳₃", "𝒴"};
const char* kYY[6] = {"L^-1", "Z", "𝒰", "𝒱₂", "𝒱₃", "𝒱"};

std::string render(const std::map<Mono, Rat>& t, const char* const* names) {
  if (t.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    const auto& [m, c] = *it;
    Rat mag = abs(c);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    first = false;
    bool any = false;
    if (mag != 1) {
      os << mag.get_str();
      any = true;
    }
    for (int i = 0; i < 6; ++i) {
      if (m.e[i] == 0) continue;
      if (any) os << "*";
      any = true;
      os << names[i];
      if (m.e[i] != 1) os << "^" << m.e[i];
    }
    if (!any) os << "1";
  }
  return os.str();
}

}  // namespace

std::string GenPoly::to_string() const { return render(t_, kAscii); }
std::string GenPoly::pretty() const { return render(t_, kScript); }
std::string pretty_yy(const GenPoly& g) { return render(g.terms(), kYY); }

GenPoly du_Y() {
  GenPoly X = GenPoly::var(kX1), X2 = GenPoly::var(kX2), Y = GenPoly::var(kY), Z = GenPoly::var(kZ);
  return Rat(-3) * X2 - Y * Y - X * X + rat(-3, 5) * GenPoly::linv(2) * Z * (Z - GenPoly(1));
}

GenPoly du_X3() {
  GenPoly X = GenPoly::var(kX1), X2 = GenPoly::var(kX2), X3 = GenPoly::var(kX3), Z = GenPoly::var(kZ);
  GenPoly zz = Z * (Z - GenPoly(1));
  GenPoly r = Rat(-4) * X * X3 - Rat(3) * X2 * X2 - Rat(6) * X * X * X2 - X.pow(4);
  r -= rat(3, 5) * GenPoly::linv(2) * zz * (X * X + X2);
  r -= rat(3, 25) * GenPoly::linv(3) * zz * (Rat(8) * Z - GenPoly(3)) * X;
  r += rat(1, 625) * GenPoly::linv(4) * Z *
       (Rat(-396) * Z.pow(3) + Rat(714) * Z * Z - Rat(341) * Z + GenPoly(23));
  return r;
}

GenPoly du(const GenPoly& f) {
  static const GenPoly dY = du_Y();
  static const GenPoly dX3 = du_X3();
  GenPoly r;
  for (const auto& [m, c] : f.terms()) {
    const auto& e = m.e;
    auto rest = [&](int v) {
      Mono k = m;
      --k.e[v];
      GenPoly p;
      p.add_term(k, c * e[v]);
      return p;
    };
    if (5 * e[kZ] - e[kLinv] != 0) {
      Mono k = m;
      ++k.e[kLinv];
      GenPoly p;
      p.add_term(k, c * rat(5 * e[kZ] - e[kLinv], 5));
      r += p * (GenPoly::var(kZ) - GenPoly(1));
    }
    if (e[kX1]) r += rest(kX1) * GenPoly::var(kX2);
    if (e[kX2]) r += rest(kX2) * GenPoly::var(kX3);
    if (e[kX3]) r += rest(kX3) * dX3;
    if (e[kY]) r += rest(kY) * dY;
  }
  return r;
}

GenPoly partial(const GenPoly& f, Var v) {
  GenPoly r;
  for (const auto& [m, c] : f.terms()) {
    if (m.e[v] == 0) continue;
    Mono k = m;
    --k.e[v];
    r.add_term(k, c * m.e[v]);
  }
  return r;
}

GenPoly substitute(const GenPoly& f, const std::array<GenPoly, 4>& images) {
  std::map<std::pair<int, int>, GenPoly> cache;
  GenPoly r;
  for (const auto& [m, c] : f.terms()) {
    GenPoly t = GenPoly::mono(c, m.e[kLinv], m.e[kZ]);
    for (int i = 0; i < 4; ++i) {
      int e = m.e[kX1 + i];
      if (!e) continue;
      auto key = std::make_pair(i, e);
      auto it = cache.find(key);
      if (it == cache.end()) it = cache.emplace(key, images[i].pow(e)).first;
      t *= it->second;
    }
    r += t;
  }
  return r;
}

GenPoly zcal(int k) {
  if (k < 1) throw std::domain_error("zcal: k must be positive");
  GenPoly z = GenPoly::mono(rat(1, 5), 1, 1);
  for (int i = 1; i < k; ++i) z = du(z);
  return z;
}

RMembership in_R(const GenPoly& f) {
  RMembership r;
  for (const auto& [m, c] : f.terms()) {
    int a = m.a(), b = m.b();
    if (!(b <= a && a <= 5 * b)) {
      r.ok = false;
      r.violations.push_back(m);
    }
  }
  return r;
}

GenPoly yy_U() { return GenPoly::var(kX1); }
GenPoly yy_V() { return GenPoly::var(kX1) + GenPoly::var(kY); }
GenPoly yy_V2() { return GenPoly::var(kX2) - GenPoly::var(kX1) * GenPoly::var(kY); }
GenPoly yy_V3() { return du(yy_V2()) + yy_V() * yy_V2(); }

GenPoly to_yy(const GenPoly& f) {
  // Express X, X2, X3, Y through U, V2, V3, V (slots x1, x2, x3, y).
  GenPoly U = GenPoly::var(kX1), V2 = GenPoly::var(kX2), V3 = GenPoly::var(kX3), V = GenPoly::var(kY);
  GenPoly Y = V - U;
  GenPoly X2 = V2 + U * Y;
  // X3 = V3 - V V2 + X2 Y + X du(Y)
  GenPoly dY = substitute(du_Y(), {U, X2, GenPoly(), Y});
  GenPoly X3 = V3 - V * V2 + X2 * Y + U * dY;
  return substitute(f, {U, X2, X3, Y});
}

GenPoly from_yy(const GenPoly& g) { return substitute(g, {yy_U(), yy_V2(), yy_V3(), yy_V()}); }

GenPoly yy_partial0(const GenPoly& g) {
  GenPoly U = GenPoly::var(kX1);
  return partial(g, kY) - U * partial(g, kX2) - U * U * partial(g, kX3);
}

GenPoly CoordDerivation::apply(const GenPoly& f) const {
  return cX * partial(f, kX1) + cX2 * partial(f, kX2) + cX3 * partial(f, kX3) + cY * partial(f, kY);
}

Derivation Derivation::basis(int i) {
  Derivation d;
  switch (i) {
    case 0: d.g0 = GenPoly(1); break;
    case 1: d.g1 = GenPoly(1); break;
    case 2: d.g2 = GenPoly(1); break;
    case 3: d.g3 = GenPoly(1); break;
    default: throw std::domain_error("Derivation::basis: index out of range");
  }
  return d;
}

namespace {
GenPoly d1_x3_coeff() {
  GenPoly X = GenPoly::var(kX1), X2 = GenPoly::var(kX2), Y = GenPoly::var(kY);
  return Rat(2) * X * Y + Rat(4) * X2 + rat(15, 4) * zcal(2);
}
}  // namespace

CoordDerivation Derivation::coords() const {
  GenPoly X = GenPoly::var(kX1), Y = GenPoly::var(kY);
  CoordDerivation c;
  c.cY = g0 - g1;
  c.cX = g1;
  c.cX2 = g2 - g1 * (X - Y);
  c.cX3 = g3 - g1 * d1_x3_coeff() - Rat(2) * X * g2;
  return c;
}

Derivation Derivation::from_coords(const CoordDerivation& c) {
  GenPoly X = GenPoly::var(kX1), Y = GenPoly::var(kY);
  Derivation d;
  d.g1 = c.cX;
  d.g0 = c.cX + c.cY;
  d.g2 = c.cX2 + c.cX * (X - Y);
  d.g3 = c.cX3 + Rat(2) * X * d.g2 + c.cX * d1_x3_coeff();
  return d;
}

Derivation bracket(const Derivation& d1, const Derivation& d2) {
  CoordDerivation a = d1.coords(), b = d2.coords(), r;
  auto comp = [&](const GenPoly& v) { return a.apply(b.apply(v)) - b.apply(a.apply(v)); };
  r.cX = comp(GenPoly::var(kX1));
  r.cX2 = comp(GenPoly::var(kX2));
  r.cX3 = comp(GenPoly::var(kX3));
  r.cY = comp(GenPoly::var(kY));
  return Derivation::from_coords(r);
}

GenPoly apply_derivation(const Derivation& d, const GenPoly& f) { return d.apply(f); }

}  // namespace quintic
